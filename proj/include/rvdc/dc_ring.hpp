#pragma once

#include <cstdint>
#include <vector>

#include "rvdc/gf2m.hpp"
#include "rvdc/params.hpp"
#include "rvdc/rank_vector.hpp"

namespace rvdc {

// Element of R_k = F_{2^m}[X]/(X^k - p(X)): coefficient of X^(j-1) at
// position j.
struct RingElement {
  std::vector<Gf2mElem> c;
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

// First challenge of a protocol round: a = (alpha_1, ..., alpha_k) over F_2,
// components not all equal.
class ChallengeA {
 public:
  ChallengeA(unsigned k, std::uint64_t bits);  // InvalidChallenge if all equal
  static bool admissible(unsigned k, std::uint64_t bits) {
    return bits != 0 && bits != ((k == 63) ? ~0ULL >> 1 : (1ULL << k) - 1);
  }
  static ChallengeA sample(unsigned k, XofRng& rng);

  unsigned k() const { return k_; }
  std::uint64_t bits() const { return bits_; }
  bool alpha(unsigned i) const { return (bits_ >> (i - 1)) & 1u; }  // i in 1..k

  friend bool operator==(const ChallengeA&, const ChallengeA&) = default;

 private:
  unsigned k_;
  std::uint64_t bits_;
};

// The quotient ring R_k with the rotation maps and systematic double
// circulant encoding. The cyclic modulus X^k - 1 is the default; an
// irreducible X^k - p(X) may be supplied instead (no table row uses one).
class DcRing {
 public:
  DcRing(const Gf2m& field, unsigned k);
  DcRing(const Gf2m& field, unsigned k, std::uint64_t modulus_low);
  static DcRing from_params(const ParamSet& p) {
    return DcRing(p.field(), p.k, p.ring_modulus_low);
  }

  const Gf2m& field() const { return field_; }
  unsigned k() const { return k_; }
  unsigned n() const { return 2 * k_; }

  RingElement zero() const { return {std::vector<Gf2mElem>(k_)}; }
  RingElement one() const;
  RingElement sample(XofRng& rng) const;
  RingElement add(const RingElement& a, const RingElement& b) const;

  // Product in R_k: schoolbook convolution then reduction by X^k = p(X).
  RingElement mul(const RingElement& a, const RingElement& b) const;
  // Multiplication by an F_2 polynomial (bit i = coefficient of X^i).
  RingElement mul_f2poly(std::uint64_t poly, const RingElement& x) const;

  // Left rotation by i positions, 0 <= i <= k: (x_{i+1},...,x_k,x_1,...,x_i).
  RingElement rot(unsigned i, const RingElement& x) const;
  // Parallel left rotation of the two halves of a length-n vector.
  RankVector drot(unsigned i, const RankVector& y) const;

  // Gamma'_a(x) and Gamma_a(y): both act as multiplication by the polynomial
  // a(X) = sum alpha_i X^(i-1), on x and blockwise on y. The rotation-sum
  // definition is pinned to this convention by a k=3 brute-force test.
  RingElement gamma_prime(const ChallengeA& a, const RingElement& x) const;
  RankVector gamma(const ChallengeA& a, const RankVector& y) const;
  // Unconstrained variant used for analyzing inadmissible a.
  RankVector gamma_poly(std::uint64_t poly, const RankVector& y) const;

  // Systematic encoding x * [I_k | circ(g)] = (x, x*g).
  RankVector encode(const RingElement& x, const RingElement& g) const;

  // a(X) is a unit of R_k iff gcd(a, X^k - p) = 1; rank preservation of
  // Gamma_a is exact precisely for unit a.
  bool poly_is_unit(std::uint64_t poly) const;

  // All even-weight challenges share the null space spanned by the all-ones
  // polynomial in each block, so Gamma_a keeps w_R(e) = r for every such a
  // iff it does for one of them. Keys failing this cannot complete branch-1
  // rounds for half the challenge space.
  bool gamma_rank_safe(const RankVector& e) const;

  // Number of irreducible factors of X^k - 1 over F_2 (with multiplicity).
  static unsigned cyclic_factor_count(unsigned k);

  Bytes ring_to_bytes(const RingElement& x) const;

 private:
  Gf2m field_;
  unsigned k_;
  std::uint64_t modulus_low_;
  std::vector<std::uint64_t> power_reduction_;  // X^t for t in [k, 2k-2] as F_2 masks
};

struct SecretKey {
  RingElement x;
  RankVector e;
};

struct PublicKey {
  RankVector y;
  RingElement g;
  unsigned r = 0;
};

struct KeyPair {
  SecretKey sk;
  PublicKey pk;
};

// x uniform, e of exact rank r, g uniform, y = (x, x*g) + e.
KeyPair keygen(const ParamSet& params, XofRng& rng);

}  // namespace rvdc
