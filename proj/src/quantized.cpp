// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchain/quantized.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

#include "spinchain/error.hpp"

namespace spinchain {

namespace {

using Word = std::vector<Factor>;

// Operators are immutable once built, so one cache serves all threads.
class OperatorCache {
 public:
  using Key = std::tuple<const FockSector*, int, int, int>;

  template <class Build>
  std::shared_ptr<const SectorOperator> get(const Key& key, Build&& build) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    auto op = std::make_shared<const SectorOperator>(build());
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(key, std::move(op)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, std::shared_ptr<const SectorOperator>> map_;
};

OperatorCache& cache() {
  static OperatorCache c;
  return c;
}

enum CacheTag { kElementary, kCompleteWords, kCurrent, kTransfer };

SectorOperator word_sum(const std::vector<Word>& words, const SectorPtr& s) {
  SectorOperator op(s);
  const int dim = s->dim();
#pragma omp parallel for schedule(dynamic, 8)
  for (int j = 0; j < dim; ++j) {
    std::vector<SectorOperator::Entry> col;
    for (const auto& w : words) {
      auto img = word_image(w, s->mask(j), s->n(), s->closed());
      if (img) col.emplace_back(s->index_of(img->mask), QPoly::monomial(img->sign, img->qpow));
    }
    op.set_column(j, std::move(col));
  }
  return op;
}

// Subsets of r hop indices, as masks over bits 0..m-1 (bit i-1 is x_i).
std::vector<std::uint64_t> subsets(int m, int r) {
  std::vector<std::uint64_t> out;
  if (r > m) return out;
  if (r == 0) return {0};
  std::uint64_t s = (std::uint64_t{1} << r) - 1;
  const std::uint64_t end = std::uint64_t{1} << m;
  while (s < end) {
    out.push_back(s);
    std::uint64_t c = s & -s, nx = s + c;
    s = (((nx ^ s) >> 2) / c) | nx;
  }
  return out;
}

// Arranges a proper subset of Z_n into a word: within each cyclic run of
// consecutive indices, increasing (j before j+1) or decreasing (j+1
// before j). Distinct runs commute, so their relative order is free.
Word cyclic_word(std::uint64_t subset, int n, bool increasing) {
  auto in = [&](int i) { return (subset >> (i - 1)) & 1u; };
  auto prev = [&](int i) { return i == 1 ? n : i - 1; };
  int start = 0;
  for (int i = 1; i <= n; ++i)
    if (in(i) && !in(prev(i))) {
      start = i;
      break;
    }
  Word word;
  if (start == 0) return word;
  std::vector<int> run;
  auto flush = [&] {
    if (!increasing) std::reverse(run.begin(), run.end());
    for (int i : run) word.push_back(Factor::hop(i));
    run.clear();
  };
  for (int step = 0, i = start; step < n; ++step, i = i == n ? 1 : i + 1) {
    if (in(i))
      run.push_back(i);
    else if (!run.empty())
      flush();
  }
  if (!run.empty()) flush();
  return word;
}

std::vector<Word> ordered_words(const FockSector& s, int r, bool increasing) {
  const int n = s.n();
  const int m = s.closed() ? n : n - 1;
  std::vector<Word> words;
  for (auto sub : subsets(std::max(m, 0), r)) words.push_back(cyclic_word(sub, s.closed() ? n : n + 1, increasing));
  return words;
}

// Signed multisets of Jacobi-Trudi indices, det(f_{outer_i - inner_j - i + j}).
// Terms with a negative index vanish; zeros are dropped as f_0 = 1.
std::map<std::vector<int>, std::int64_t> jacobi_trudi_terms(const Partition& outer, const Partition& inner) {
  const int l = outer.length();
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::vector<int>, std::int64_t> terms;
  do {
    std::vector<int> idx;
    bool dead = false;
    for (int i = 0; i < l && !dead; ++i) {
      int j = perm[static_cast<std::size_t>(i)];
      int r = outer[i] - inner[j] - i + j;
      if (r < 0) dead = true;
      else if (r > 0) idx.push_back(r);
    }
    if (dead) continue;
    int inv = 0;
    for (int a = 0; a < l; ++a)
      for (int b = a + 1; b < l; ++b) inv += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
    std::sort(idx.begin(), idx.end());
    terms[idx] += (inv % 2) ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(terms, [](const auto& t) { return t.second == 0; });
  return terms;
}

// All u^r coefficients come out of one monodromy pass; keep them together.
const std::vector<std::shared_ptr<const SectorOperator>>& transfer_coefficients(const SectorPtr& s) {
  static std::mutex mu;
  static std::map<const FockSector*, std::vector<std::shared_ptr<const SectorOperator>>> store;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = store.find(s.get()); it != store.end()) return it->second;
  }
  std::vector<std::shared_ptr<const SectorOperator>> ops;
  for (auto& op : fermionic_transfer_matrix(s, s->n())) ops.push_back(std::make_shared<const SectorOperator>(std::move(op)));
  std::lock_guard<std::mutex> lock(mu);
  return store.emplace(s.get(), std::move(ops)).first->second;
}

std::shared_ptr<const SectorOperator> elementary_ptr(int r, const SectorPtr& s) {
  if (r < 0) throw Error(ErrorKind::range, "negative degree");
  if (s->closed() && r >= s->n())
    throw Error(ErrorKind::range, "closed-chain e_r needs r < n");
  return cache().get({s.get(), kElementary, r, 0}, [&] {
    if (r == 0) return SectorOperator::identity(s);
    return word_sum(ordered_words(*s, r, true), s);
  });
}

std::shared_ptr<const SectorOperator> complete_ptr(int r, const SectorPtr& s, CompleteRoute route) {
  if (r < 0) throw Error(ErrorKind::range, "negative degree");
  if (route == CompleteRoute::automatic) route = s->closed() ? CompleteRoute::transfer_matrix : CompleteRoute::words;
  if (route == CompleteRoute::transfer_matrix) {
    if (!s->closed()) throw Error(ErrorKind::boundary, "transfer matrix needs a closed chain");
    if (r > s->n()) return cache().get({s.get(), kTransfer, r, 0}, [&] { return SectorOperator(s); });
    const auto& all = transfer_coefficients(s);
    return all[static_cast<std::size_t>(r)];
  }
  if (s->closed() && r >= s->n()) throw Error(ErrorKind::range, "closed-chain word form of h_r needs r < n");
  return cache().get({s.get(), kCompleteWords, r, 0}, [&] {
    if (r == 0) return SectorOperator::identity(s);
    return word_sum(ordered_words(*s, r, false), s);
  });
}

std::shared_ptr<const SectorOperator> current_ptr(int r, const SectorPtr& s) {
  if (r < 1) throw Error(ErrorKind::range, "currents start at r = 1");
  return cache().get({s.get(), kCurrent, r, 0}, [&] {
    const int n = s->n(), k = s->k();
    SectorOperator op(s);
    for (int j = 0; j < s->dim(); ++j) {
      std::vector<SectorOperator::Entry> col;
      for (int i = 1; i <= n; ++i) {
        int wraps = (i - 1 + r) / n;
        int to = (i - 1 + r) % n + 1;
        if (wraps > 0 && !s->closed()) continue;
        std::uint64_t image = 0;
        int sign = jw_bilinear_sign(s->mask(j), to, i, &image);
        if (sign == 0) continue;
        // Each boundary crossing carries q (-1)^(k-1), as the boundary hop does.
        if (wraps * (k - 1) % 2) sign = -sign;
        col.emplace_back(s->index_of(image), QPoly::monomial(sign, wraps));
      }
      op.set_column(j, std::move(col));
    }
    return op;
  });
}

SectorOperator product(const std::vector<std::shared_ptr<const SectorOperator>>& ops, const SectorPtr& s) {
  if (ops.empty()) return SectorOperator::identity(s);
  SectorOperator acc = *ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) acc = multiply(acc, *ops[i]);
  return acc;
}

std::shared_ptr<const SectorOperator> single(FunctionKind kind, int r, const SectorPtr& s) {
  switch (kind) {
    case FunctionKind::e: return elementary_ptr(r, s);
    case FunctionKind::h: return complete_ptr(r, s, CompleteRoute::automatic);
    case FunctionKind::p: return current_ptr(r, s);
    case FunctionKind::s: break;
  }
  throw Error(ErrorKind::domain, "no single-index Schur operator");
}

QState apply_chain(const std::vector<std::shared_ptr<const SectorOperator>>& ops, QState v) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) v = apply(**it, v);
  return v;
}

void accumulate(QState& into, const QState& v, std::int64_t c) {
  for (std::size_t i = 0; i < v.amp.size(); ++i) into.amp[i].add_scaled(v.amp[i], c, 0);
}

struct JtPlan {
  FunctionKind kind;
  std::map<std::vector<int>, std::int64_t> terms;
};

JtPlan plan(const SkewShape& shape, OperatorMethod method) {
  if (method == OperatorMethod::jacobi_trudi_e)
    return {FunctionKind::e, jacobi_trudi_terms(shape.outer().transpose(), shape.inner().transpose())};
  return {FunctionKind::h, jacobi_trudi_terms(shape.outer(), shape.inner())};
}

std::vector<std::shared_ptr<const SectorOperator>> factors(FunctionKind kind, const std::vector<int>& idx,
                                                           const SectorPtr& s) {
  std::vector<std::shared_ptr<const SectorOperator>> ops;
  for (int r : idx) ops.push_back(single(kind, r, s));
  return ops;
}

}  // namespace

const char* to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::e: return "e";
    case FunctionKind::h: return "h";
    case FunctionKind::p: return "p";
    case FunctionKind::s: return "s";
  }
  return "?";
}

FunctionKind function_kind_from(char c) {
  switch (c) {
    case 'e': return FunctionKind::e;
    case 'h': return FunctionKind::h;
    case 'p': return FunctionKind::p;
    case 's': return FunctionKind::s;
    default: throw Error(ErrorKind::parse, std::string("unknown function kind '") + c + "'");
  }
}

SectorOperator build_elementary(int r, const SectorPtr& sector) { return *elementary_ptr(r, sector); }

SectorOperator build_complete(int r, const SectorPtr& sector, CompleteRoute route) {
  return *complete_ptr(r, sector, route);
}

SectorOperator build_current(int r, const SectorPtr& sector) { return *current_ptr(r, sector); }

SectorOperator build_schur(const SkewShape& shape, const SectorPtr& sector, OperatorMethod method) {
  if (method == OperatorMethod::ssyt_sum) {
    const int max_entry = sector->closed() ? sector->n() : sector->n() - 1;
    std::vector<Word> words;
    for_each_semistandard(shape, std::max(max_entry, 0), [&](const Tableau& t) {
      // Last column first, each column read top to bottom.
      Word w;
      for (int c = shape.outer()[0] - 1; c >= 0; --c)
        for (int r = 0; r < shape.rows(); ++r)
          if (c >= shape.inner()[r] && c < shape.outer()[r]) w.push_back(Factor::hop(t.at(r, c)));
      words.push_back(std::move(w));
      return true;
    });
    return word_sum(words, sector);
  }
  JtPlan p = plan(shape, method);
  SectorOperator total(sector);
  for (const auto& [idx, c] : p.terms) total = add(total, scale(product(factors(p.kind, idx, sector), sector), QPoly(c)));
  return total;
}

SectorOperator build_function(const QuantizedFunctionSpec& spec, const SectorPtr& sector) {
  if (spec.kind == FunctionKind::s) return build_schur(SkewShape(spec.label), sector);
  return product(factors(spec.kind, spec.label.parts(), sector), sector);
}

QState apply_schur(const SkewShape& shape, const QState& v) {
  JtPlan p = plan(shape, OperatorMethod::jacobi_trudi_h);
  QState out(v.sector);
  for (const auto& [idx, c] : p.terms) accumulate(out, apply_chain(factors(p.kind, idx, v.sector), v), c);
  return out;
}

QState apply_function(const QuantizedFunctionSpec& spec, const QState& v) {
  if (spec.kind == FunctionKind::s) return apply_schur(SkewShape(spec.label), v);
  return apply_chain(factors(spec.kind, spec.label.parts(), v.sector), v);
}

MonodromyBlocks fermionic_monodromy(const SectorPtr& sector) {
  const FockSector& s = *sector;
  const int n = s.n();
  MonodromyBlocks out;
  out.a.assign(static_cast<std::size_t>(n) + 1, SectorOperator(sector));
  out.d.assign(static_cast<std::size_t>(n) + 1, SectorOperator(sector));
  // Per site, L(u) = [[u nu_i, a_i], [u a_i^dagger, 1]] in the auxiliary
  // basis; site 1 acts first. Paths through the auxiliary index are summed.
  for (int j = 0; j < s.dim(); ++j) {
    std::vector<std::vector<SectorOperator::Entry>> acol(static_cast<std::size_t>(n) + 1), dcol = acol;
    const int start[2] = {0, 1};
    for (int which = 0; which < 2; ++which) {
      auto& cols = which == 0 ? acol : dcol;
      auto walk = [&](auto&& self, int site, int aux, std::uint64_t mask, int sign, int upow) -> void {
        if (site > n) {
          if (aux == start[which]) cols[static_cast<std::size_t>(upow)].emplace_back(s.index_of(mask), QPoly(sign));
          return;
        }
        const std::uint64_t b = std::uint64_t{1} << (site - 1);
        const int string = (std::popcount(mask & (b - 1)) & 1) ? -1 : 1;
        const bool occ = mask & b;
        if (aux == 0) {
          if (!occ) self(self, site + 1, 0, mask, sign, upow + 1);               // u nu_i
          if (!occ) self(self, site + 1, 1, mask | b, sign * string, upow + 1);  // u a_i^dagger
        } else {
          if (occ) self(self, site + 1, 0, mask & ~b, sign * string, upow);  // a_i
          self(self, site + 1, 1, mask, sign, upow);                          // 1
        }
      };
      walk(walk, 1, start[which], s.mask(j), 1, 0);
    }
    for (int r = 0; r <= n; ++r) {
      out.a[static_cast<std::size_t>(r)].set_column(j, std::move(acol[static_cast<std::size_t>(r)]));
      out.d[static_cast<std::size_t>(r)].set_column(j, std::move(dcol[static_cast<std::size_t>(r)]));
    }
  }
  return out;
}

std::vector<SectorOperator> fermionic_transfer_matrix(const SectorPtr& sector, int truncation) {
  if (!sector->closed()) throw Error(ErrorKind::boundary, "transfer matrix needs a closed chain");
  if (truncation < 0) throw Error(ErrorKind::range, "negative truncation");
  MonodromyBlocks m = fermionic_monodromy(sector);
  const QPoly twist = QPoly::monomial(sector->k() % 2 ? -1 : 1, 1);
  std::vector<SectorOperator> out;
  for (int r = 0; r <= truncation; ++r) {
    if (r > sector->n()) {
      out.emplace_back(sector);
      continue;
    }
    out.push_back(add(scale(m.a[static_cast<std::size_t>(r)], twist), m.d[static_cast<std::size_t>(r)]));
  }
  return out;
}

QPoly CoefficientTable::at(const Partition& lambda) const {
  auto it = entries.find(lambda);
  return it == entries.end() ? QPoly{} : it->second;
}

bool CoefficientTable::nonnegative() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second.nonnegative(); });
}

bool CoefficientTable::graded() const {
  const int total = spec.label.size() + nu.size();
  for (const auto& [lam, poly] : entries)
    for (int d = 0; d <= poly.degree(); ++d) {
      if (poly.coeff(d) == 0) continue;
      if (boundary == Boundary::open && d != 0) return false;
      if (lam.size() != total - n * d) return false;
    }
  return true;
}

CoefficientTable extract_coefficients(const QuantizedFunctionSpec& spec, const Partition& nu, const SectorPtr& sector) {
  int idx = sector->index_of(nu);
  if (idx < 0) throw Error(ErrorKind::shape_overflow, "(" + nu.to_string() + ") does not fit the sector box");
  QState v = apply_function(spec, QState::basis(sector, idx));
  CoefficientTable t;
  t.spec = spec;
  t.nu = nu;
  t.n = sector->n();
  t.k = sector->k();
  t.boundary = sector->boundary();
  for (int i = 0; i < sector->dim(); ++i)
    if (!v.amp[static_cast<std::size_t>(i)].is_zero()) t.entries.emplace(sector->partition(i), v.amp[static_cast<std::size_t>(i)]);
  return t;
}

bool is_zero_operator(const SectorOperator& op, std::string* witness) {
  for (int j = 0; j < op.dim(); ++j)
    if (!op.column(j).empty()) {
      if (witness) {
        const auto& [r, v] = op.column(j).front();
        *witness = "(" + op.sector()->partition(r).to_string() + " <- " + op.sector()->partition(j).to_string() +
                   ") = " + v.to_string();
      }
      return false;
    }
  return true;
}

bool FominGreeneReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

namespace {

void expect_zero(IdentityCheck& check, const SectorOperator& op) {
  ++check.instances;
  std::string w;
  if (!is_zero_operator(op, &w) && check.pass) {
    check.pass = false;
    check.witness = w;
  }
}

std::int64_t centralizer(const Partition& lam) {
  std::int64_t z = 1;
  std::map<int, int> mult;
  for (int p : lam.parts()) ++mult[p];
  for (auto [part, m] : mult)
    for (int i = 1; i <= m; ++i) z *= static_cast<std::int64_t>(part) * i;
  return z;
}

}  // namespace

FominGreeneReport verify_fomin_greene(const SectorPtr& sector) {
  const FockSector& s = *sector;
  const int n = s.n();
  FominGreeneReport rep;
  rep.n = n;
  rep.k = s.k();
  rep.boundary = s.boundary();

  const int hops = s.closed() ? n : n - 1;
  std::vector<SectorOperator> x;
  for (int i = 1; i <= hops; ++i) x.push_back(hop_operator(i, sector));
  auto X = [&](int i) -> const SectorOperator& { return x[static_cast<std::size_t>(i - 1)]; };
  auto cyclic_distance = [&](int i, int j) {
    int d = std::abs(i - j);
    return s.closed() ? std::min(d, n - d) : d;
  };

  IdentityCheck nil{"nilpotency"}, nonlocal{"nonlocal-commutativity"}, local{"local-relation"};
  for (int i = 1; i <= hops; ++i) {
    expect_zero(nil, multiply(X(i), X(i)));
    for (int j = i + 1; j <= hops; ++j)
      if (cyclic_distance(i, j) >= 2) expect_zero(nonlocal, commutator(X(i), X(j)));
    int next = i + 1;
    if (next > hops) {
      if (!s.closed()) continue;
      next = 1;
    }
    if (next == i) continue;
    SectorOperator sum = add(X(i), X(next));
    SectorOperator pair = multiply(X(i), X(next));
    expect_zero(local, subtract(multiply(sum, pair), multiply(pair, sum)));
  }
  rep.checks.push_back(nil);
  rep.checks.push_back(nonlocal);
  rep.checks.push_back(local);

  // ê_r exists for r < n on either boundary (open ones vanish from n on).
  const int e_max = n - 1;
  IdentityCheck ecomm{"elementary-commute"};
  for (int a = 1; a <= e_max; ++a)
    for (int b = a + 1; b <= e_max; ++b) expect_zero(ecomm, commutator(*elementary_ptr(a, sector), *elementary_ptr(b, sector)));
  rep.checks.push_back(ecomm);

  const int order = s.closed() ? n - 1 : n;
  IdentityCheck eh{"E(t)H(-t)=1"};
  for (int m = 1; m <= order; ++m) {
    SectorOperator acc(sector);
    for (int i = 0; i <= m; ++i) {
      if (i > e_max && !s.closed()) continue;
      auto term = multiply(*elementary_ptr(i, sector), *complete_ptr(m - i, sector, CompleteRoute::automatic));
      acc = add(acc, (m - i) % 2 ? scale(term, QPoly(-1)) : term);
    }
    expect_zero(eh, acc);
  }
  rep.checks.push_back(eh);

  IdentityCheck jcomm{"currents-commute"};
  for (int a = 1; a <= std::min(n, 4); ++a)
    for (int b = a + 1; b <= std::min(n, 4); ++b) expect_zero(jcomm, commutator(*current_ptr(a, sector), *current_ptr(b, sector)));
  rep.checks.push_back(jcomm);

  // H(t) = exp(sum_r J_r t^r / r), coefficientwise h_m = sum_{lambda |- m} J_lambda / z_lambda.
  IdentityCheck vertex{"vertex-operator"};
  for (int m = 1; m <= order; ++m) {
    auto parts = partitions_of(m);
    std::int64_t l = 1;
    for (const auto& lam : parts) l = std::lcm(l, centralizer(lam));
    SectorOperator acc = scale(*complete_ptr(m, sector, CompleteRoute::automatic), QPoly(-l));
    for (const auto& lam : parts) acc = add(acc, scale(product(factors(FunctionKind::p, lam.parts(), sector), sector), QPoly(l / centralizer(lam))));
    expect_zero(vertex, acc);
  }
  rep.checks.push_back(vertex);

  IdentityCheck scomm{"schur-commute"};
  std::vector<Partition> labels;
  for (int d = 1; d <= 3; ++d)
    for (auto& p : partitions_of(d)) labels.push_back(p);
  std::vector<SectorOperator> schur;
  for (const auto& lam : labels) schur.push_back(build_schur(SkewShape(lam), sector));
  for (std::size_t a = 0; a < schur.size(); ++a)
    for (std::size_t b = a + 1; b < schur.size(); ++b) expect_zero(scomm, commutator(schur[a], schur[b]));
  rep.checks.push_back(scomm);
  return rep;
}

}  // namespace spinchain
