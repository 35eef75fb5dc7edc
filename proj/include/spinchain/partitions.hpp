// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace spinchain {

// Weakly decreasing positive parts. The empty partition has no parts.
class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; anything else that is not weakly
  // decreasing and non-negative throws.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "2,1" or "" for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  // Zero past the last part, so callers can index freely.
  int operator[](int i) const noexcept {
    return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  Partition transpose() const;
  bool dominates(const Partition& other) const;
  bool contains(const Partition& other) const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Size first, then larger leading parts first. This is the sector basis order.
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {});
  // "2,2/1" or plain "2,1".
  static SkewShape parse(std::string_view text);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  int rows() const noexcept { return outer_.length(); }
  // Skew transpose, used by the dual Jacobi-Trudi determinant.
  SkewShape transpose() const { return {outer_.transpose(), inner_.transpose()}; }
  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

struct BoxSpec {
  int k = 0;  // rows, also the fermion number
  int n = 0;  // chain length; the box has n - k columns

  BoxSpec() = default;
  BoxSpec(int k_, int n_);
  bool fits(const Partition& p) const noexcept {
    return p.length() <= k && p[0] <= n - k;
  }
};

// Site s (1-based) is bit s-1 of mask and character s-1 of the text form.
struct BitCode {
  std::uint64_t mask = 0;
  int n = 0;

  int weight() const noexcept;
  bool occupied(int site) const noexcept { return (mask >> (site - 1)) & 1u; }
  std::string to_string() const;
  static BitCode parse(std::string_view text);

  friend bool operator==(const BitCode&, const BitCode&) = default;
};

BitCode partition_to_bits(const Partition& lambda, const BoxSpec& box);
Partition bits_to_partition(const BitCode& bits, const BoxSpec& box);

// All partitions fitting the box, in canonical order.
std::vector<Partition> partitions_in_box(const BoxSpec& box);
// All partitions of d, in canonical order.
std::vector<Partition> partitions_of(int d);

enum class TableauKind { semistandard, border_strip, littlewood_richardson };

struct Tableau {
  SkewShape shape;
  // rows[i] holds the entries of row i, cells inner[i] .. outer[i]-1.
  std::vector<std::vector<int>> rows;
  TableauKind kind = TableauKind::semistandard;

  int at(int row, int col) const {
    return rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - shape.inner()[row])];
  }
  // Rows top to bottom, each left to right.
  std::vector<int> row_reading_word() const;
  // Sum over labels of (rows spanned - 1). Meaningful for border strips.
  int height() const;
};

// weight[j] is the number of entries equal to j+1; zero entries are allowed.
// Output is sorted by row-reading word.
std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, const std::vector<int>& weight,
                                        TableauKind kind);

// Streams every semistandard filling with entries in 1..max_entry, in
// row-reading order. The callback may return false to stop early.
void for_each_semistandard(const SkewShape& shape, int max_entry,
                           const std::function<bool(const Tableau&)>& visit);

// Semistandard count of the given shape and weight, K[shape, weight].
long long kostka_oracle(const SkewShape& shape, const std::vector<int>& weight);
// Signed border-strip count.
long long mn_character_oracle(const SkewShape& shape, const Partition& alpha);
// Littlewood-Richardson tableaux of shape lambda/mu and weight nu.
long long lr_oracle(const Partition& mu, const Partition& nu, const Partition& lambda);

}  // namespace spinchain
