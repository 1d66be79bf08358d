#pragma once

#include <cstdint>

#include "rvdc/bits.hpp"
#include "rvdc/hash.hpp"

namespace rvdc {

// One element of GF(2^m), bit i = coefficient of X^i. Always kept reduced.
struct Gf2mElem {
  std::uint64_t bits = 0;
  friend bool operator==(Gf2mElem, Gf2mElem) = default;
};

// GF(2^m) in the polynomial basis {1, X, ..., X^(m-1)} modulo a fixed
// irreducible polynomial. Supports 2 <= m <= 63; the production degrees are
// 29, 31, 41 and 47.
class Gf2m {
 public:
  // reduction holds the full (m+1)-bit modulus, e.g. X^29+X^2+1 = (1<<29)|5.
  // Verifies degree, constant term and irreducibility.
  Gf2m(unsigned m, std::uint64_t reduction);

  // Minimal-weight modulus: a table of low-weight trinomials/pentanomials for
  // small and production degrees, lexicographic search elsewhere.
  static Gf2m with_default_reduction(unsigned m);

  unsigned degree() const { return m_; }
  std::uint64_t reduction() const { return red_; }
  std::uint64_t elem_mask() const { return mask_; }
  std::size_t elem_bytes() const { return (m_ + 7) / 8; }
  std::uint64_t order() const { return (std::uint64_t(1) << m_); }  // field size

  Gf2mElem zero() const { return {}; }
  Gf2mElem one() const { return {1}; }
  // basis_element(i) = X^(i-1), i in 1..m.
  Gf2mElem basis_element(unsigned i) const;

  Gf2mElem add(Gf2mElem a, Gf2mElem b) const { return {a.bits ^ b.bits}; }
  Gf2mElem mul(Gf2mElem a, Gf2mElem b) const;
  Gf2mElem sqr(Gf2mElem a) const { return mul(a, a); }
  Gf2mElem pow(Gf2mElem a, std::uint64_t e) const;
  Gf2mElem inv(Gf2mElem a) const;  // ZeroInverse on 0

  Gf2mElem sample(XofRng& rng) const { return {rng.bits(m_)}; }
  Gf2mElem from_bits(std::uint64_t bits) const;

  void to_bytes(Gf2mElem a, std::uint8_t* out) const;
  Gf2mElem from_bytes(const std::uint8_t* in) const;

  friend bool operator==(const Gf2m& a, const Gf2m& b) {
    return a.m_ == b.m_ && a.red_ == b.red_;
  }

 private:
  unsigned m_;
  std::uint64_t red_;
  std::uint64_t red_low_;  // reduction with the X^m term dropped
  std::uint64_t mask_;
};

// Carry-less product of two GF(2)[X] polynomials of degree < 64.
unsigned __int128 clmul64(std::uint64_t a, std::uint64_t b);

// Irreducibility over GF(2) of a degree-m polynomial, via
// gcd(X^(2^i) - X, f) = 1 for i = 1..m/2.
bool gf2_poly_irreducible(std::uint64_t poly, unsigned m);

}  // namespace rvdc
