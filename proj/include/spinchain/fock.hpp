// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "spinchain/partitions.hpp"
#include "spinchain/qpoly.hpp"

namespace spinchain {

enum class Boundary { open, closed };

// Occupation states of n sites with k fermions, ordered by decoded
// partition (size, then larger parts first).
class FockSector {
 public:
  // Sectors are cached and shared; identical (n, k, boundary) return the
  // same object.
  static std::shared_ptr<const FockSector> make(int n, int k, Boundary boundary);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  Boundary boundary() const noexcept { return boundary_; }
  bool closed() const noexcept { return boundary_ == Boundary::closed; }
  int dim() const noexcept { return static_cast<int>(masks_.size()); }
  BoxSpec box() const noexcept { return box_; }

  std::uint64_t mask(int idx) const { return masks_[static_cast<std::size_t>(idx)]; }
  const std::vector<std::uint64_t>& masks() const noexcept { return masks_; }
  const Partition& partition(int idx) const { return labels_[static_cast<std::size_t>(idx)]; }
  const std::vector<Partition>& partitions() const noexcept { return labels_; }
  // -1 when the mask is not in the sector.
  int index_of(std::uint64_t mask) const;
  int index_of(const Partition& p) const;

  FockSector(int n, int k, Boundary boundary);

 private:
  int n_, k_;
  Boundary boundary_;
  BoxSpec box_;
  std::vector<std::uint64_t> masks_;
  std::vector<Partition> labels_;
  std::unordered_map<std::uint64_t, int> index_;
};

using SectorPtr = std::shared_ptr<const FockSector>;

template <class T>
struct StateVector {
  SectorPtr sector;
  std::vector<T> amp;

  StateVector() = default;
  explicit StateVector(SectorPtr s) : sector(std::move(s)), amp(static_cast<std::size_t>(sector->dim())) {}
  static StateVector basis(SectorPtr s, int idx) {
    StateVector v(std::move(s));
    v.amp[static_cast<std::size_t>(idx)] = T(1);
    return v;
  }
};

using QState = StateVector<QPoly>;
using CState = StateVector<std::complex<double>>;

// Result of applying a fermionic product to one basis mask: the new mask
// and amplitude sign * q^qpow. Empty when the product annihilates it.
struct MaskImage {
  std::uint64_t mask;
  int sign;
  int qpow;
};

// Sign of a_to^dagger a_from on mask, with site 'from' occupied and 'to'
// empty (or equal). Signs follow the string count of occupied sites with
// smaller index. Returns 0 if the bilinear annihilates the mask.
int jw_bilinear_sign(std::uint64_t mask, int to, int from, std::uint64_t* out);

// x_i on mask. Adjacent for i < n; i = n is the boundary hop carrying q
// with the spin-chain sign (see README). Empty if it annihilates.
std::optional<MaskImage> hop_image(std::uint64_t mask, int n, int i);

struct Factor {
  enum class Kind { hop, number, vacancy, create, annihilate };
  Kind kind;
  int site;

  static Factor hop(int i) { return {Kind::hop, i}; }
  static Factor number(int i) { return {Kind::number, i}; }
  static Factor vacancy(int i) { return {Kind::vacancy, i}; }
  static Factor create(int i) { return {Kind::create, i}; }
  static Factor annihilate(int i) { return {Kind::annihilate, i}; }
};

// Applies the product of factors (rightmost acts first).
std::optional<MaskImage> word_image(const std::vector<Factor>& word, std::uint64_t mask, int n,
                                    bool closed);

// Column-sparse operator on one sector. Columns hold (row, amplitude)
// sorted by row with exact zeros removed.
template <class T>
class SparseOperator {
 public:
  using Entry = std::pair<int, T>;

  SparseOperator() = default;
  explicit SparseOperator(SectorPtr s) : sector_(std::move(s)), cols_(static_cast<std::size_t>(sector_->dim())) {}
  static SparseOperator identity(SectorPtr s);

  const SectorPtr& sector() const noexcept { return sector_; }
  int dim() const noexcept { return static_cast<int>(cols_.size()); }
  const std::vector<Entry>& column(int j) const { return cols_[static_cast<std::size_t>(j)]; }
  // Takes ownership; entries are sorted by row and zeros dropped.
  void set_column(int j, std::vector<Entry> entries);
  // Adds amplitude to (row, col). Keeps the column sorted.
  void add_entry(int row, int col, const T& value);
  T at(int row, int col) const;
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
    return a.sector_ == b.sector_ && a.cols_ == b.cols_;
  }

 private:
  SectorPtr sector_;
  std::vector<std::vector<Entry>> cols_;
};

using SectorOperator = SparseOperator<QPoly>;
using NumericOperator = SparseOperator<std::complex<double>>;

enum class AlgebraMode { add, multiply, commutator };

template <class T> SparseOperator<T> add(const SparseOperator<T>& a, const SparseOperator<T>& b);
template <class T> SparseOperator<T> subtract(const SparseOperator<T>& a, const SparseOperator<T>& b);
template <class T> SparseOperator<T> scale(const SparseOperator<T>& a, const T& c);
// a * b, b acting first. Columns are computed in parallel; each column is
// summed in a fixed order so the result does not depend on thread count.
template <class T> SparseOperator<T> multiply(const SparseOperator<T>& a, const SparseOperator<T>& b);
// Single-threaded reference for multiply.
template <class T> SparseOperator<T> multiply_serial(const SparseOperator<T>& a, const SparseOperator<T>& b);
template <class T> SparseOperator<T> commutator(const SparseOperator<T>& a, const SparseOperator<T>& b);
template <class T>
SparseOperator<T> operator_algebra(const SparseOperator<T>& a, const SparseOperator<T>& b, AlgebraMode mode);
template <class T> StateVector<T> apply(const SparseOperator<T>& a, const StateVector<T>& v);

NumericOperator evaluate(const SectorOperator& op, std::complex<double> q);
NumericOperator adjoint(const NumericOperator& op);
Eigen::MatrixXcd to_dense(const NumericOperator& op);
Eigen::MatrixXcd to_dense(const SectorOperator& op, std::complex<double> q);

SectorOperator build_word_operator(const std::vector<Factor>& word, const SectorPtr& sector);

// Single-mode maps into the neighbouring sector.
template <class T> StateVector<T> apply_annihilation(int site, const StateVector<T>& v);
template <class T> StateVector<T> apply_creation(int site, const StateVector<T>& v);
// x_i with the boundary hop weighted by twist. i = n needs a closed sector.
template <class T> StateVector<T> apply_hop(int site, const T& twist, const StateVector<T>& v);

// The operator x_i on the sector, wrap hop carrying formal q.
SectorOperator hop_operator(int site, const SectorPtr& sector);

}  // namespace spinchain
