#include "rvdc/gf2m.hpp"

#include <bit>

#include "rvdc/errors.hpp"

namespace rvdc {

unsigned __int128 clmul64(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 acc = 0;
  unsigned __int128 aa = a;
  while (b) {
    unsigned tz = std::countr_zero(b);
    acc ^= aa << tz;
    b &= b - 1;
  }
  return acc;
}

namespace {

unsigned gf2_poly_degree(unsigned __int128 p) {
  unsigned d = 0;
  while (p >> 1) {
    p >>= 1;
    ++d;
  }
  return d;
}

// Remainder of p modulo f over GF(2), f != 0.
unsigned __int128 gf2_poly_mod(unsigned __int128 p, std::uint64_t f) {
  unsigned df = gf2_poly_degree(f);
  while (p >> df) {
    unsigned dp = gf2_poly_degree(p);
    p ^= (unsigned __int128)f << (dp - df);
  }
  return p;
}

std::uint64_t gf2_poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t r = (std::uint64_t)gf2_poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t mulmod_poly(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  return (std::uint64_t)gf2_poly_mod(clmul64(a, b), f);
}

}  // namespace

bool gf2_poly_irreducible(std::uint64_t poly, unsigned m) {
  if (m == 0 || gf2_poly_degree(poly) != m) return false;
  if ((poly & 1) == 0) return false;  // divisible by X
  // x := X^(2^i) mod poly by repeated squaring
  std::uint64_t x = 2;
  for (unsigned i = 1; i <= m / 2; ++i) {
    x = mulmod_poly(x, x, poly);
    std::uint64_t g = gf2_poly_gcd(poly, x ^ 2 /* X^(2^i) - X */);
    if (g != 1) return false;
  }
  return true;
}

Gf2m::Gf2m(unsigned m, std::uint64_t reduction) : m_(m), red_(reduction) {
  if (m < 2 || m > 63)
    throw Error(Error::Kind::InvalidParams, "extension degree out of range");
  if (gf2_poly_degree(reduction) != m)
    throw Error(Error::Kind::InvalidParams, "reduction degree mismatch");
  if ((reduction & 1) == 0)
    throw Error(Error::Kind::InvalidParams, "reduction needs constant term 1");
  if (!gf2_poly_irreducible(reduction, m))
    throw Error(Error::Kind::InvalidParams, "reduction polynomial is reducible");
  mask_ = (m == 63) ? ~0ULL >> 1 : (1ULL << m) - 1;
  red_low_ = reduction & mask_;
}

Gf2m Gf2m::with_default_reduction(unsigned m) {
  struct Entry {
    unsigned m;
    std::uint64_t red;
  };
  // Lowest-weight moduli for degrees the schemes and tests use.
  static constexpr Entry kTable[] = {
      {2, (1ULL << 2) | 0x3},   {3, (1ULL << 3) | 0x3},
      {4, (1ULL << 4) | 0x3},   {5, (1ULL << 5) | 0x5},
      {6, (1ULL << 6) | 0x3},   {7, (1ULL << 7) | 0x3},
      {8, (1ULL << 8) | 0x1b},  {29, (1ULL << 29) | 0x5},
      {31, (1ULL << 31) | 0x9}, {41, (1ULL << 41) | 0x9},
      {47, (1ULL << 47) | 0x21}};
  for (const auto& e : kTable)
    if (e.m == m) return Gf2m(m, e.red);
  for (std::uint64_t low = 1; low < (1ULL << m); low += 2) {
    std::uint64_t cand = (1ULL << m) | low;
    if (gf2_poly_irreducible(cand, m)) return Gf2m(m, cand);
  }
  throw Error(Error::Kind::InvalidParams, "no irreducible polynomial found");
}

Gf2mElem Gf2m::basis_element(unsigned i) const {
  if (i < 1 || i > m_)
    throw Error(Error::Kind::IndexOutOfRange, "basis index out of range");
  return {1ULL << (i - 1)};
}

Gf2mElem Gf2m::mul(Gf2mElem a, Gf2mElem b) const {
  unsigned __int128 t = clmul64(a.bits, b.bits);
  // X^m == red_low, and red_low has low degree, so this folds in <= 3 passes.
  // The high part never exceeds 64 bits: deg t <= 2m-2 <= 124.
  while (t >> m_) {
    std::uint64_t hi = (std::uint64_t)(t >> m_);
    t &= mask_;
    t ^= clmul64(hi, red_low_);
  }
  return {(std::uint64_t)t};
}

Gf2mElem Gf2m::pow(Gf2mElem a, std::uint64_t e) const {
  Gf2mElem result = one();
  Gf2mElem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Gf2mElem Gf2m::inv(Gf2mElem a) const {
  if (a.bits == 0) throw Error(Error::Kind::ZeroInverse, "inverse of zero");
  // a^(2^m - 2)
  return pow(a, (order() - 2));
}

Gf2mElem Gf2m::from_bits(std::uint64_t bits) const {
  if (bits & ~mask_)
    throw Error(Error::Kind::IndexOutOfRange, "element bits exceed degree");
  return {bits};
}

void Gf2m::to_bytes(Gf2mElem a, std::uint8_t* out) const {
  for (std::size_t i = 0; i < elem_bytes(); ++i)
    out[i] = std::uint8_t(a.bits >> (8 * i));
}

Gf2mElem Gf2m::from_bytes(const std::uint8_t* in) const {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < elem_bytes(); ++i)
    v |= std::uint64_t(in[i]) << (8 * i);
  if (v & ~mask_)
    throw Error(Error::Kind::MalformedSignature, "unused element bits set");
  return {v};
}

}  // namespace rvdc
