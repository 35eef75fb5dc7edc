// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchain/partitions.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "spinchain/error.hpp"

namespace spinchain {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw Error(ErrorKind::domain, "parts must be positive and weakly decreasing");
    size_ += parts_[i];
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return {};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = trim(text.substr(start, comma - start));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::parse, "bad partition '" + std::string(text) + "'");
    parts.push_back(v);
    start = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error&) {
    throw Error(ErrorKind::parse, "not a partition: '" + std::string(text) + "'");
  }
}

Partition Partition::transpose() const {
  std::vector<int> t(static_cast<std::size_t>(operator[](0)), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++t[static_cast<std::size_t>(c)];
  return Partition(std::move(t));
}

bool Partition::dominates(const Partition& other) const {
  if (size_ != other.size_) return false;
  int a = 0, b = 0;
  for (int i = 0; i < std::max(length(), other.length()); ++i) {
    a += operator[](i);
    b += other[i];
    if (a < b) return false;
  }
  return true;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other[i] > operator[](i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool canonical_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.parts() > b.parts();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw Error(ErrorKind::domain,
                "inner shape " + inner_.to_string() + " not inside " + outer_.to_string());
}

SkewShape SkewShape::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(Partition::parse(text));
  Partition outer = Partition::parse(text.substr(0, slash));
  Partition inner = Partition::parse(text.substr(slash + 1));
  if (!outer.contains(inner)) throw Error(ErrorKind::parse, "inner shape not inside outer");
  return {std::move(outer), std::move(inner)};
}

std::string SkewShape::to_string() const {
  if (inner_.empty()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

BoxSpec::BoxSpec(int k_, int n_) : k(k_), n(n_) {
  if (k < 0 || n < 0 || k > n || n > 64)
    throw Error(ErrorKind::range, "box needs 0 <= k <= n <= 64");
}

int BitCode::weight() const noexcept { return std::popcount(mask); }

std::string BitCode::to_string() const {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

BitCode BitCode::parse(std::string_view text) {
  if (text.size() > 64) throw Error(ErrorKind::parse, "bit string longer than 64");
  BitCode b;
  b.n = static_cast<int>(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      b.mask |= std::uint64_t{1} << i;
    else if (text[i] != '0')
      throw Error(ErrorKind::parse, "bit string must contain only 0 and 1");
  }
  return b;
}

BitCode partition_to_bits(const Partition& lambda, const BoxSpec& box) {
  if (!box.fits(lambda))
    throw Error(ErrorKind::shape_overflow, "(" + lambda.to_string() + ") does not fit a " +
                                               std::to_string(box.k) + "x" +
                                               std::to_string(box.n - box.k) + " box");
  BitCode b;
  b.n = box.n;
  // The r-th fermion from the left sits at lambda_{k+1-r} + r.
  for (int r = 1; r <= box.k; ++r) {
    int site = lambda[box.k - r] + r;
    b.mask |= std::uint64_t{1} << (site - 1);
  }
  return b;
}

Partition bits_to_partition(const BitCode& bits, const BoxSpec& box) {
  if (bits.n != box.n) throw Error(ErrorKind::dimension_mismatch, "code length differs from box");
  if (bits.weight() != box.k)
    throw Error(ErrorKind::weight_mismatch, "code " + bits.to_string() + " has weight " +
                                                std::to_string(bits.weight()) + ", expected " +
                                                std::to_string(box.k));
  std::vector<int> parts(static_cast<std::size_t>(box.k));
  int r = 0;
  for (int site = 1; site <= box.n; ++site) {
    if (!bits.occupied(site)) continue;
    ++r;
    parts[static_cast<std::size_t>(box.k - r)] = site - r;
  }
  return Partition(std::move(parts));
}

namespace {

void grow(std::vector<int>& cur, int remaining, int max_part, int max_len,
          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    cur.push_back(p);
    grow(cur, remaining - p, p, max_len, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(const BoxSpec& box) {
  std::vector<Partition> out;
  std::vector<int> cur;
  int cols = box.n - box.k;
  for (int d = 0; d <= box.k * cols; ++d) grow(cur, d, cols, box.k, out);
  std::stable_sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw Error(ErrorKind::range, "negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  grow(cur, d, d, d, out);
  return out;  // already descending lexicographic
}

}  // namespace spinchain
