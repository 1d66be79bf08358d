#pragma once

#include <vector>

#include "rvdc/bin_matrix.hpp"
#include "rvdc/gf2m.hpp"

namespace rvdc {

// Length-n vector over GF(2^m) with the rank-metric operations: the phi
// expansion to an m x n binary matrix, rank weight, and the isometry
// Pi_{P,Q}(v) = phi^{-1}(Q * phi(v) * P).
class RankVector {
 public:
  RankVector(const Gf2m& field, std::size_t n) : field_(field), coords_(n) {}
  RankVector(const Gf2m& field, std::vector<Gf2mElem> coords)
      : field_(field), coords_(std::move(coords)) {}

  const Gf2m& field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  Gf2mElem& operator[](std::size_t i) { return coords_[i]; }
  Gf2mElem operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Gf2mElem>& coords() const { return coords_; }

  RankVector add(const RankVector& other) const;

  // Column j = basis expansion of coordinate j.
  BinMatrix expand_phi() const;
  static RankVector collapse_phi(const Gf2m& field, const BinMatrix& m);

  unsigned rank_weight() const { return expand_phi().rank(); }

  static RankVector sample(const Gf2m& field, std::size_t n, XofRng& rng);
  // Exact rank r via a full-rank factorization phi = U (m x r) * V (r x n).
  static RankVector sample_rank_exact(const Gf2m& field, std::size_t n, unsigned r,
                                      XofRng& rng);

  // n consecutive ceil(m/8)-byte element encodings.
  Bytes to_bytes() const;
  static RankVector from_bytes(const Gf2m& field, std::size_t n, ByteView data);
  void append_bits(BitWriter& w) const;  // tight m-bit packing per element
  static RankVector read_bits(const Gf2m& field, std::size_t n, BitReader& r);

  friend bool operator==(const RankVector& a, const RankVector& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }

 private:
  Gf2m field_;
  std::vector<Gf2mElem> coords_;
};

RankVector pi_map(const BinMatrix& P, const BinMatrix& Q, const RankVector& v);
// pi_inverse(P, Q, pi_map(P, Q, v)) == v; requires P, Q invertible.
RankVector pi_inverse(const BinMatrix& P, const BinMatrix& Q, const RankVector& v);

// Factored encoding of a rank-r vector: the support basis (the first r
// independent columns of phi(v), leftmost-pivot order) plus the r x n
// coordinate matrix expressing every column in that basis. r(m+n) bits.
struct CompressedRankVector {
  std::vector<Gf2mElem> support;  // r field elements
  BinMatrix coords;               // r x n
};

CompressedRankVector compress_rank_vector(const RankVector& v);
RankVector decompress_rank_vector(const Gf2m& field, const CompressedRankVector& c,
                                  std::size_t n);

}  // namespace rvdc
