// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "spinchain/error.hpp"
#include "spinchain/fock.hpp"

namespace spinchain {

namespace {

bool zero(const QPoly& p) { return p.is_zero(); }
bool zero(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }

// acc += a * b
void fma_into(QPoly& acc, const QPoly& a, const QPoly& b) {
  if (b.coeffs().size() == 1) {
    acc.add_scaled(a, b.coeffs()[0], 0);
  } else if (a.coeffs().size() == 1) {
    acc.add_scaled(b, a.coeffs()[0], 0);
  } else {
    acc += a * b;
  }
}
void fma_into(std::complex<double>& acc, const std::complex<double>& a, const std::complex<double>& b) {
  acc += a * b;
}

template <class T>
void check_same(const SparseOperator<T>& a, const SparseOperator<T>& b) {
  if (a.sector() != b.sector()) throw Error(ErrorKind::sector_mismatch, "operators live on different sectors");
}

// Dense scratch column reused across columns by one thread.
template <class T>
struct Accumulator {
  std::vector<T> val;
  std::vector<char> hit;
  std::vector<int> rows;

  explicit Accumulator(int dim) : val(static_cast<std::size_t>(dim)), hit(static_cast<std::size_t>(dim), 0) {}

  T& at(int r) {
    if (!hit[static_cast<std::size_t>(r)]) {
      hit[static_cast<std::size_t>(r)] = 1;
      rows.push_back(r);
    }
    return val[static_cast<std::size_t>(r)];
  }

  std::vector<std::pair<int, T>> drain() {
    std::sort(rows.begin(), rows.end());
    std::vector<std::pair<int, T>> out;
    out.reserve(rows.size());
    for (int r : rows) {
      auto& v = val[static_cast<std::size_t>(r)];
      if (!zero(v)) out.emplace_back(r, std::move(v));
      v = T{};
      hit[static_cast<std::size_t>(r)] = 0;
    }
    rows.clear();
    return out;
  }
};

template <class T>
std::vector<std::pair<int, T>> product_column(const SparseOperator<T>& a, const SparseOperator<T>& b, int j,
                                              Accumulator<T>& acc) {
  for (const auto& [mid, bv] : b.column(j))
    for (const auto& [row, av] : a.column(mid)) fma_into(acc.at(row), av, bv);
  return acc.drain();
}

}  // namespace

template <class T>
SparseOperator<T> SparseOperator<T>::identity(SectorPtr s) {
  SparseOperator<T> op(std::move(s));
  for (int j = 0; j < op.dim(); ++j) op.cols_[static_cast<std::size_t>(j)].emplace_back(j, T(1));
  return op;
}

template <class T>
void SparseOperator<T>::set_column(int j, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
  std::vector<Entry> merged;
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const Entry& e) { return zero(e.second); });
  cols_[static_cast<std::size_t>(j)] = std::move(merged);
}

template <class T>
void SparseOperator<T>::add_entry(int row, int col, const T& value) {
  auto& c = cols_[static_cast<std::size_t>(col)];
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    it->second += value;
    if (zero(it->second)) c.erase(it);
  } else if (!zero(value)) {
    c.insert(it, Entry{row, value});
  }
}

template <class T>
T SparseOperator<T>::at(int row, int col) const {
  const auto& c = cols_[static_cast<std::size_t>(col)];
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, int r) { return e.first < r; });
  return (it != c.end() && it->first == row) ? it->second : T{};
}

template <class T>
std::size_t SparseOperator<T>::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : cols_) total += c.size();
  return total;
}

template <class T>
SparseOperator<T> add(const SparseOperator<T>& a, const SparseOperator<T>& b) {
  check_same(a, b);
  SparseOperator<T> out(a.sector());
  for (int j = 0; j < a.dim(); ++j) {
    auto col = a.column(j);
    col.insert(col.end(), b.column(j).begin(), b.column(j).end());
    out.set_column(j, std::move(col));
  }
  return out;
}

template <class T>
SparseOperator<T> scale(const SparseOperator<T>& a, const T& c) {
  SparseOperator<T> out(a.sector());
  if (zero(c)) return out;
  for (int j = 0; j < a.dim(); ++j) {
    auto col = a.column(j);
    for (auto& e : col) e.second *= c;
    out.set_column(j, std::move(col));
  }
  return out;
}

template <class T>
SparseOperator<T> subtract(const SparseOperator<T>& a, const SparseOperator<T>& b) {
  return add(a, scale(b, T(-1)));
}

template <class T>
SparseOperator<T> multiply(const SparseOperator<T>& a, const SparseOperator<T>& b) {
  check_same(a, b);
  SparseOperator<T> out(a.sector());
  const int dim = a.dim();
#pragma omp parallel
  {
    Accumulator<T> acc(dim);
#pragma omp for schedule(dynamic, 16)
    for (int j = 0; j < dim; ++j) out.set_column(j, product_column(a, b, j, acc));
  }
  return out;
}

template <class T>
SparseOperator<T> multiply_serial(const SparseOperator<T>& a, const SparseOperator<T>& b) {
  check_same(a, b);
  SparseOperator<T> out(a.sector());
  Accumulator<T> acc(a.dim());
  for (int j = 0; j < a.dim(); ++j) out.set_column(j, product_column(a, b, j, acc));
  return out;
}

template <class T>
SparseOperator<T> commutator(const SparseOperator<T>& a, const SparseOperator<T>& b) {
  return subtract(multiply(a, b), multiply(b, a));
}

template <class T>
SparseOperator<T> operator_algebra(const SparseOperator<T>& a, const SparseOperator<T>& b, AlgebraMode mode) {
  switch (mode) {
    case AlgebraMode::add: return add(a, b);
    case AlgebraMode::multiply: return multiply(a, b);
    case AlgebraMode::commutator: return commutator(a, b);
  }
  return {};
}

template <class T>
StateVector<T> apply(const SparseOperator<T>& a, const StateVector<T>& v) {
  if (a.sector() != v.sector) throw Error(ErrorKind::sector_mismatch, "state and operator sectors differ");
  StateVector<T> out(v.sector);
  for (int j = 0; j < a.dim(); ++j) {
    const T& x = v.amp[static_cast<std::size_t>(j)];
    if (zero(x)) continue;
    for (const auto& [r, av] : a.column(j)) fma_into(out.amp[static_cast<std::size_t>(r)], av, x);
  }
  return out;
}

NumericOperator evaluate(const SectorOperator& op, std::complex<double> q) {
  NumericOperator out(op.sector());
  for (int j = 0; j < op.dim(); ++j) {
    std::vector<NumericOperator::Entry> col;
    for (const auto& [r, p] : op.column(j)) col.emplace_back(r, p.eval(q));
    out.set_column(j, std::move(col));
  }
  return out;
}

NumericOperator adjoint(const NumericOperator& op) {
  NumericOperator out(op.sector());
  std::vector<std::vector<NumericOperator::Entry>> cols(static_cast<std::size_t>(op.dim()));
  for (int j = 0; j < op.dim(); ++j)
    for (const auto& [r, v] : op.column(j)) cols[static_cast<std::size_t>(r)].emplace_back(j, std::conj(v));
  for (int j = 0; j < op.dim(); ++j) out.set_column(j, std::move(cols[static_cast<std::size_t>(j)]));
  return out;
}

Eigen::MatrixXcd to_dense(const NumericOperator& op) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(op.dim(), op.dim());
  for (int j = 0; j < op.dim(); ++j)
    for (const auto& [r, v] : op.column(j)) m(r, j) = v;
  return m;
}

Eigen::MatrixXcd to_dense(const SectorOperator& op, std::complex<double> q) {
  return to_dense(evaluate(op, q));
}

#define SPINCHAIN_INSTANTIATE(T)                                                                    \
  template class SparseOperator<T>;                                                                 \
  template SparseOperator<T> add(const SparseOperator<T>&, const SparseOperator<T>&);               \
  template SparseOperator<T> subtract(const SparseOperator<T>&, const SparseOperator<T>&);          \
  template SparseOperator<T> scale(const SparseOperator<T>&, const T&);                             \
  template SparseOperator<T> multiply(const SparseOperator<T>&, const SparseOperator<T>&);          \
  template SparseOperator<T> multiply_serial(const SparseOperator<T>&, const SparseOperator<T>&);   \
  template SparseOperator<T> commutator(const SparseOperator<T>&, const SparseOperator<T>&);        \
  template SparseOperator<T> operator_algebra(const SparseOperator<T>&, const SparseOperator<T>&,   \
                                              AlgebraMode);                                         \
  template StateVector<T> apply(const SparseOperator<T>&, const StateVector<T>&);

SPINCHAIN_INSTANTIATE(QPoly)
SPINCHAIN_INSTANTIATE(std::complex<double>)

#undef SPINCHAIN_INSTANTIATE

}  // namespace spinchain
