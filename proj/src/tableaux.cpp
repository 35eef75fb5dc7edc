// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

#include "spinchain/error.hpp"
#include "spinchain/partitions.hpp"

namespace spinchain {

std::vector<int> Tableau::row_reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
  return w;
}

int Tableau::height() const {
  std::map<int, std::pair<int, int>> span;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (int v : rows[static_cast<std::size_t>(r)]) {
      auto [it, fresh] = span.try_emplace(v, r, r);
      if (!fresh) {
        it->second.first = std::min(it->second.first, r);
        it->second.second = std::max(it->second.second, r);
      }
    }
  int h = 0;
  for (const auto& [label, rs] : span) h += rs.second - rs.first;
  return h;
}

namespace {

void check_weight(const SkewShape& shape, const std::vector<int>& weight) {
  long long total = 0;
  for (int w : weight) {
    if (w < 0) throw Error(ErrorKind::domain, "negative weight entry");
    total += w;
  }
  if (total != shape.size())
    throw Error(ErrorKind::size_mismatch, "shape " + shape.to_string() + " has " +
                                              std::to_string(shape.size()) +
                                              " cells but weight sums to " +
                                              std::to_string(total));
}

Tableau empty_filling(const SkewShape& shape, TableauKind kind) {
  Tableau t;
  t.shape = shape;
  t.kind = kind;
  t.rows.resize(static_cast<std::size_t>(shape.rows()));
  for (int r = 0; r < shape.rows(); ++r)
    t.rows[static_cast<std::size_t>(r)].assign(
        static_cast<std::size_t>(shape.outer()[r] - shape.inner()[r]), 0);
  return t;
}

// Semistandard backtracking over cells in row-reading order. Values are
// tried in increasing order, so fillings come out sorted by reading word.
class SsytWalker {
 public:
  SsytWalker(const SkewShape& shape, int max_entry, std::vector<int>* remaining,
             const std::function<bool(const Tableau&)>& visit)
      : t_(empty_filling(shape, TableauKind::semistandard)),
        max_entry_(max_entry),
        remaining_(remaining),
        visit_(visit) {
    for (int r = 0; r < shape.rows(); ++r)
      for (int c = shape.inner()[r]; c < shape.outer()[r]; ++c) cells_.emplace_back(r, c);
  }

  void run() { step(0); }

 private:
  int& cell(int r, int c) {
    return t_.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - t_.shape.inner()[r])];
  }

  bool step(std::size_t idx) {
    if (idx == cells_.size()) return visit_(t_);
    auto [r, c] = cells_[idx];
    const auto& in = t_.shape.inner();
    int lo = 1;
    if (c > in[r]) lo = std::max(lo, cell(r, c - 1));
    if (r > 0 && c >= in[r - 1]) lo = std::max(lo, cell(r - 1, c) + 1);
    for (int v = lo; v <= max_entry_; ++v) {
      if (remaining_) {
        auto& left = (*remaining_)[static_cast<std::size_t>(v - 1)];
        if (left == 0) continue;
        --left;
      }
      cell(r, c) = v;
      bool go_on = step(idx + 1);
      if (remaining_) ++(*remaining_)[static_cast<std::size_t>(v - 1)];
      if (!go_on) return false;
    }
    return true;
  }

  Tableau t_;
  int max_entry_;
  std::vector<int>* remaining_;
  const std::function<bool(const Tableau&)>& visit_;
  std::vector<std::pair<int, int>> cells_;
};

// Reverse reading word (rows top to bottom, each right to left) is a
// lattice word.
bool is_lattice(const Tableau& t) {
  std::vector<int> count;
  for (const auto& row : t.rows)
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      int v = *it;
      if (static_cast<int>(count.size()) < v) count.resize(static_cast<std::size_t>(v), 0);
      ++count[static_cast<std::size_t>(v - 1)];
      if (v > 1 && count[static_cast<std::size_t>(v - 1)] > count[static_cast<std::size_t>(v - 2)])
        return false;
    }
  return true;
}

using Cells = std::vector<std::pair<int, int>>;

Cells skew_cells(const std::vector<int>& upper, const std::vector<int>& lower) {
  Cells cells;
  for (std::size_t r = 0; r < upper.size(); ++r)
    for (int c = r < lower.size() ? lower[r] : 0; c < upper[r]; ++c)
      cells.emplace_back(static_cast<int>(r), c);
  return cells;
}

bool is_border_strip(const Cells& cells) {
  if (cells.empty()) return true;
  std::set<std::pair<int, int>> in(cells.begin(), cells.end());
  for (auto [r, c] : cells)
    if (in.count({r + 1, c}) && in.count({r, c + 1}) && in.count({r + 1, c + 1})) return false;
  std::set<std::pair<int, int>> seen{cells.front()};
  std::queue<std::pair<int, int>> todo;
  todo.push(cells.front());
  while (!todo.empty()) {
    auto [r, c] = todo.front();
    todo.pop();
    for (auto nb : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1}, std::pair{r, c - 1}})
      if (in.count(nb) && seen.insert(nb).second) todo.push(nb);
  }
  return seen.size() == in.size();
}

// Partitions kappa with lower <= kappa <= upper rowwise and |kappa| - |lower| = size.
void between(const std::vector<int>& lower, const std::vector<int>& upper, int size,
             std::size_t row, std::vector<int>& cur, const std::function<void()>& emit) {
  if (row == upper.size()) {
    if (size == 0) emit();
    return;
  }
  int lo = row < lower.size() ? lower[row] : 0;
  int hi = upper[row];
  if (row > 0) hi = std::min(hi, cur[row - 1]);
  for (int v = lo; v <= hi && v - lo <= size; ++v) {
    cur[row] = v;
    between(lower, upper, size - (v - lo), row + 1, cur, emit);
  }
}

std::vector<int> padded(const Partition& p, std::size_t len) {
  std::vector<int> v(len, 0);
  for (std::size_t i = 0; i < len; ++i) v[i] = p[static_cast<int>(i)];
  return v;
}

void grow_strips(const SkewShape& shape, const std::vector<int>& weight, std::size_t label,
                 const std::vector<int>& cur, Tableau& t, std::vector<Tableau>& out) {
  const auto upper = padded(shape.outer(), static_cast<std::size_t>(shape.rows()));
  if (label == weight.size()) {
    if (cur == upper) out.push_back(t);
    return;
  }
  std::vector<int> next(cur.size());
  between(cur, upper, weight[label], 0, next, [&] {
    Cells strip = skew_cells(next, cur);
    if (!is_border_strip(strip)) return;
    for (auto [r, c] : strip)
      t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - shape.inner()[r])] =
          static_cast<int>(label) + 1;
    grow_strips(shape, weight, label + 1, next, t, out);
  });
}

}  // namespace

void for_each_semistandard(const SkewShape& shape, int max_entry,
                           const std::function<bool(const Tableau&)>& visit) {
  SsytWalker(shape, max_entry, nullptr, visit).run();
}

std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, const std::vector<int>& weight,
                                        TableauKind kind) {
  check_weight(shape, weight);
  std::vector<Tableau> out;
  if (kind == TableauKind::border_strip) {
    Tableau t = empty_filling(shape, kind);
    grow_strips(shape, weight, 0, padded(shape.inner(), static_cast<std::size_t>(shape.rows())), t,
                out);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
      return a.row_reading_word() < b.row_reading_word();
    });
    return out;
  }
  std::vector<int> remaining = weight;
  std::function<bool(const Tableau&)> visit = [&](const Tableau& t) {
    if (kind == TableauKind::littlewood_richardson && !is_lattice(t)) return true;
    out.push_back(t);
    out.back().kind = kind;
    return true;
  };
  SsytWalker(shape, static_cast<int>(weight.size()), &remaining, visit).run();
  return out;
}

long long kostka_oracle(const SkewShape& shape, const std::vector<int>& weight) {
  check_weight(shape, weight);
  // Chains of horizontal strips inner = k0 < k1 < ... < km = outer.
  const std::size_t rows = static_cast<std::size_t>(shape.rows());
  const auto upper = padded(shape.outer(), rows);
  std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
  std::function<long long(const std::vector<int>&, std::size_t)> count =
      [&](const std::vector<int>& cur, std::size_t j) -> long long {
    if (j == weight.size()) return cur == upper ? 1 : 0;
    auto key = std::make_pair(cur, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long long total = 0;
    std::vector<int> next(rows);
    std::function<void(std::size_t, int)> rec = [&](std::size_t r, int left) {
      if (r == rows) {
        if (left == 0) total += count(next, j + 1);
        return;
      }
      int hi = upper[r];
      if (r > 0) hi = std::min(hi, cur[r - 1]);
      for (int v = cur[r]; v <= hi && v - cur[r] <= left; ++v) {
        next[r] = v;
        rec(r + 1, left - (v - cur[r]));
      }
    };
    rec(0, weight[j]);
    memo.emplace(std::move(key), total);
    return total;
  };
  return count(padded(shape.inner(), rows), 0);
}

long long mn_character_oracle(const SkewShape& shape, const Partition& alpha) {
  check_weight(shape, alpha.parts());
  // Peel border strips of size alpha_m, alpha_{m-1}, ... off the outer shape.
  const std::size_t rows = static_cast<std::size_t>(shape.rows());
  const auto lower = padded(shape.inner(), rows);
  std::map<std::pair<std::vector<int>, int>, long long> memo;
  std::function<long long(const std::vector<int>&, int)> chi =
      [&](const std::vector<int>& cur, int m) -> long long {
    if (m == 0) return cur == lower ? 1 : 0;
    auto key = std::make_pair(cur, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long long total = 0;
    int strip = alpha[m - 1];
    int cur_size = std::accumulate(cur.begin(), cur.end(), 0);
    int lower_size = std::accumulate(lower.begin(), lower.end(), 0);
    std::vector<int> next(rows);
    between(lower, cur, cur_size - strip - lower_size, 0, next, [&] {
      Cells cells = skew_cells(cur, next);
      if (static_cast<int>(cells.size()) != strip || !is_border_strip(cells)) return;
      int top = cells.front().first, bottom = cells.back().first;
      long long sub = chi(next, m - 1);
      total += ((bottom - top) % 2 == 0) ? sub : -sub;
    });
    memo.emplace(std::move(key), total);
    return total;
  };
  return chi(padded(shape.outer(), rows), alpha.length());
}

long long lr_oracle(const Partition& mu, const Partition& nu, const Partition& lambda) {
  if (lambda.size() != mu.size() + nu.size())
    throw Error(ErrorKind::size_mismatch, "|lambda| must equal |mu| + |nu|");
  if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
  // Fill rows top to bottom, each right to left, which is exactly the
  // reverse reading order, so the lattice condition prunes as we go.
  const SkewShape shape(lambda, mu);
  Cells order;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = lambda[r] - 1; c >= mu[r]; --c) order.emplace_back(r, c);
  std::map<std::pair<int, int>, int> val;
  std::vector<int> count(static_cast<std::size_t>(nu.length()) + 1, 0);
  long long total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == order.size()) {
      ++total;
      return;
    }
    auto [r, c] = order[idx];
    int hi = nu.length();
    if (c + 1 < lambda[r]) hi = std::min(hi, val[{r, c + 1}]);
    int lo = 1;
    if (r > 0 && c >= mu[r - 1]) lo = val[{r - 1, c}] + 1;
    for (int v = lo; v <= hi; ++v) {
      auto& cv = count[static_cast<std::size_t>(v)];
      if (cv == nu[v - 1]) continue;
      if (v > 1 && cv + 1 > count[static_cast<std::size_t>(v - 1)]) continue;
      ++cv;
      val[{r, c}] = v;
      rec(idx + 1);
      --cv;
    }
  };
  rec(0);
  return total;
}

}  // namespace spinchain
