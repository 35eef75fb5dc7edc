// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchain/fock.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <tuple>

#include "spinchain/error.hpp"

namespace spinchain {

namespace {

constexpr std::uint64_t bit(int site) { return std::uint64_t{1} << (site - 1); }
constexpr std::uint64_t below(int site) { return bit(site) - 1; }
int parity_sign(std::uint64_t m) { return (std::popcount(m) & 1) ? -1 : 1; }

void check_site(int site, int n) {
  if (site < 1 || site > n)
    throw Error(ErrorKind::site_range, "site " + std::to_string(site) + " outside 1.." + std::to_string(n));
}

}  // namespace

FockSector::FockSector(int n, int k, Boundary boundary)
    : n_(n), k_(k), boundary_(boundary), box_(k, n) {
  if (boundary == Boundary::closed && n < 2)
    throw Error(ErrorKind::boundary, "a closed chain needs at least two sites");
  labels_ = partitions_in_box(box_);
  masks_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    masks_.push_back(partition_to_bits(labels_[i], box_).mask);
    index_.emplace(masks_.back(), static_cast<int>(i));
  }
}

SectorPtr FockSector::make(int n, int k, Boundary boundary) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, Boundary>, SectorPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, k, boundary);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto s = std::make_shared<const FockSector>(n, k, boundary);
  cache.emplace(key, s);
  return s;
}

int FockSector::index_of(std::uint64_t mask) const {
  auto it = index_.find(mask);
  return it == index_.end() ? -1 : it->second;
}

int FockSector::index_of(const Partition& p) const {
  if (!box_.fits(p)) return -1;
  return index_of(partition_to_bits(p, box_).mask);
}

int jw_bilinear_sign(std::uint64_t mask, int to, int from, std::uint64_t* out) {
  if (!(mask & bit(from))) return 0;
  std::uint64_t m = mask & ~bit(from);
  int sign = parity_sign(m & below(from));
  if (m & bit(to)) return 0;
  sign *= parity_sign(m & below(to));
  *out = m | bit(to);
  return sign;
}

std::optional<MaskImage> hop_image(std::uint64_t mask, int n, int i) {
  int to = i < n ? i + 1 : 1;
  std::uint64_t image = 0;
  int sign = jw_bilinear_sign(mask, to, i, &image);
  if (sign == 0) return std::nullopt;
  if (i < n) return MaskImage{image, sign, 0};
  // Boundary hop: q times the spin operator sigma+_1 sigma-_n, which is
  // (-1)^(N-1) a_1^dagger a_n in fermionic language.
  if ((std::popcount(mask) - 1) % 2 != 0) sign = -sign;
  return MaskImage{image, sign, 1};
}

std::optional<MaskImage> word_image(const std::vector<Factor>& word, std::uint64_t mask, int n,
                                    bool closed) {
  MaskImage img{mask, 1, 0};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int s = it->site;
    check_site(s, n);
    const bool occ = img.mask & bit(s);
    switch (it->kind) {
      case Factor::Kind::hop: {
        if (s == n && !closed) throw Error(ErrorKind::boundary, "boundary hop on an open chain");
        auto h = hop_image(img.mask, n, s);
        if (!h) return std::nullopt;
        img = {h->mask, img.sign * h->sign, img.qpow + h->qpow};
        break;
      }
      case Factor::Kind::number:
        if (!occ) return std::nullopt;
        break;
      case Factor::Kind::vacancy:
        if (occ) return std::nullopt;
        break;
      case Factor::Kind::create:
        if (occ) return std::nullopt;
        img.sign *= parity_sign(img.mask & below(s));
        img.mask |= bit(s);
        break;
      case Factor::Kind::annihilate:
        if (!occ) return std::nullopt;
        img.sign *= parity_sign(img.mask & below(s));
        img.mask &= ~bit(s);
        break;
    }
  }
  return img;
}

SectorOperator build_word_operator(const std::vector<Factor>& word, const SectorPtr& sector) {
  int net = 0;
  for (const auto& f : word) {
    if (f.kind == Factor::Kind::create) ++net;
    if (f.kind == Factor::Kind::annihilate) --net;
  }
  if (net != 0) throw Error(ErrorKind::number_nonconserving, "word changes the fermion number");
  SectorOperator op(sector);
  for (int j = 0; j < sector->dim(); ++j) {
    auto img = word_image(word, sector->mask(j), sector->n(), sector->closed());
    if (!img) continue;
    op.set_column(j, {{sector->index_of(img->mask), QPoly::monomial(img->sign, img->qpow)}});
  }
  return op;
}

SectorOperator hop_operator(int site, const SectorPtr& sector) {
  return build_word_operator({Factor::hop(site)}, sector);
}

namespace {

template <class T>
StateVector<T> move_one(int site, const StateVector<T>& v, bool create) {
  const FockSector& s = *v.sector;
  check_site(site, s.n());
  int k2 = s.k() + (create ? 1 : -1);
  if (k2 < 0 || k2 > s.n()) throw Error(ErrorKind::range, "no sector with that fermion number");
  StateVector<T> out(FockSector::make(s.n(), k2, s.boundary()));
  for (int j = 0; j < s.dim(); ++j) {
    const T& a = v.amp[static_cast<std::size_t>(j)];
    auto img = word_image({create ? Factor::create(site) : Factor::annihilate(site)}, s.mask(j),
                          s.n(), s.closed());
    if (!img) continue;
    auto& slot = out.amp[static_cast<std::size_t>(out.sector->index_of(img->mask))];
    if (img->sign > 0)
      slot += a;
    else
      slot -= a;
  }
  return out;
}

}  // namespace

template <class T>
StateVector<T> apply_annihilation(int site, const StateVector<T>& v) {
  return move_one(site, v, false);
}

template <class T>
StateVector<T> apply_creation(int site, const StateVector<T>& v) {
  return move_one(site, v, true);
}

template <class T>
StateVector<T> apply_hop(int site, const T& twist, const StateVector<T>& v) {
  const FockSector& s = *v.sector;
  check_site(site, s.n());
  if (site == s.n() && !s.closed()) throw Error(ErrorKind::boundary, "boundary hop on an open chain");
  StateVector<T> out(v.sector);
  for (int j = 0; j < s.dim(); ++j) {
    auto img = hop_image(s.mask(j), s.n(), site);
    if (!img) continue;
    T a = v.amp[static_cast<std::size_t>(j)];
    if (img->qpow) a *= twist;
    auto& slot = out.amp[static_cast<std::size_t>(s.index_of(img->mask))];
    if (img->sign > 0)
      slot += a;
    else
      slot -= a;
  }
  return out;
}

template QState apply_annihilation(int, const QState&);
template CState apply_annihilation(int, const CState&);
template QState apply_creation(int, const QState&);
template CState apply_creation(int, const CState&);
template QState apply_hop(int, const QPoly&, const QState&);
template CState apply_hop(int, const std::complex<double>&, const CState&);

}  // namespace spinchain
