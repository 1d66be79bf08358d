#include "rvdc/dc_ring.hpp"

#include "rvdc/errors.hpp"

namespace rvdc {

ChallengeA::ChallengeA(unsigned k, std::uint64_t bits) : k_(k), bits_(bits) {
  if (!admissible(k, bits))
    throw Error(Error::Kind::InvalidChallenge, "challenge components all equal");
}

ChallengeA ChallengeA::sample(unsigned k, XofRng& rng) {
  for (;;) {
    std::uint64_t bits = rng.bits(k);
    if (admissible(k, bits)) return ChallengeA(k, bits);
  }
}

DcRing::DcRing(const Gf2m& field, unsigned k) : DcRing(field, k, 1) {}

DcRing::DcRing(const Gf2m& field, unsigned k, std::uint64_t modulus_low)
    : field_(field), k_(k), modulus_low_(modulus_low) {
  if (k < 2 || k > 63) throw Error(Error::Kind::InvalidParams, "ring degree out of range");
  if (modulus_low == 0 || (modulus_low >> k) != 0)
    throw Error(Error::Kind::InvalidParams, "ring modulus low part out of range");
  // X^t mod (X^k - p) for t = k .. 2k-2; p has F_2 coefficients so each power
  // reduces to an F_2 mask over 1, X, ..., X^(k-1).
  power_reduction_.resize(k - 1);
  std::uint64_t cur = modulus_low;  // X^k
  std::uint64_t top = 1ULL << (k - 1);
  for (unsigned t = 0; t + 1 < k; ++t) {
    power_reduction_[t] = cur;
    bool carry = cur & top;
    cur = (cur << 1) & ((top << 1) - 1);
    if (carry) cur ^= modulus_low;
  }
}

RingElement DcRing::one() const {
  RingElement e{std::vector<Gf2mElem>(k_)};
  e.c[0] = field_.one();
  return e;
}

RingElement DcRing::sample(XofRng& rng) const {
  RingElement e{std::vector<Gf2mElem>(k_)};
  for (auto& c : e.c) c = field_.sample(rng);
  return e;
}

RingElement DcRing::add(const RingElement& a, const RingElement& b) const {
  if (a.c.size() != k_ || b.c.size() != k_)
    throw Error(Error::Kind::DimensionMismatch, "ring element length");
  RingElement out{std::vector<Gf2mElem>(k_)};
  for (unsigned i = 0; i < k_; ++i) out.c[i] = field_.add(a.c[i], b.c[i]);
  return out;
}

RingElement DcRing::mul(const RingElement& a, const RingElement& b) const {
  if (a.c.size() != k_ || b.c.size() != k_)
    throw Error(Error::Kind::DimensionMismatch, "ring element length");
  std::vector<Gf2mElem> tmp(2 * k_ - 1);
  for (unsigned i = 0; i < k_; ++i) {
    if (a.c[i].bits == 0) continue;
    for (unsigned j = 0; j < k_; ++j)
      tmp[i + j] = field_.add(tmp[i + j], field_.mul(a.c[i], b.c[j]));
  }
  RingElement out{std::vector<Gf2mElem>(tmp.begin(), tmp.begin() + k_)};
  for (unsigned t = k_; t < 2 * k_ - 1; ++t) {
    if (tmp[t].bits == 0) continue;
    std::uint64_t mask = power_reduction_[t - k_];
    while (mask) {
      unsigned j = std::countr_zero(mask);
      out.c[j] = field_.add(out.c[j], tmp[t]);
      mask &= mask - 1;
    }
  }
  return out;
}

RingElement DcRing::mul_f2poly(std::uint64_t poly, const RingElement& x) const {
  if (x.c.size() != k_)
    throw Error(Error::Kind::DimensionMismatch, "ring element length");
  std::vector<Gf2mElem> tmp(2 * k_ - 1);
  std::uint64_t p = poly;
  while (p) {
    unsigned i = std::countr_zero(p);
    p &= p - 1;
    for (unsigned j = 0; j < k_; ++j) tmp[i + j] = field_.add(tmp[i + j], x.c[j]);
  }
  RingElement out{std::vector<Gf2mElem>(tmp.begin(), tmp.begin() + k_)};
  for (unsigned t = k_; t < 2 * k_ - 1; ++t) {
    if (tmp[t].bits == 0) continue;
    std::uint64_t mask = power_reduction_[t - k_];
    while (mask) {
      unsigned j = std::countr_zero(mask);
      out.c[j] = field_.add(out.c[j], tmp[t]);
      mask &= mask - 1;
    }
  }
  return out;
}

RingElement DcRing::rot(unsigned i, const RingElement& x) const {
  if (i > k_) throw Error(Error::Kind::IndexOutOfRange, "rotation amount");
  if (x.c.size() != k_)
    throw Error(Error::Kind::DimensionMismatch, "ring element length");
  RingElement out{std::vector<Gf2mElem>(k_)};
  for (unsigned j = 0; j < k_; ++j) out.c[j] = x.c[(j + i) % k_];
  return out;
}

RankVector DcRing::drot(unsigned i, const RankVector& y) const {
  if (i > k_) throw Error(Error::Kind::IndexOutOfRange, "rotation amount");
  if (y.size() != n())
    throw Error(Error::Kind::DimensionMismatch, "codeword length");
  RankVector out(field_, n());
  for (unsigned j = 0; j < k_; ++j) {
    out[j] = y[(j + i) % k_];
    out[k_ + j] = y[k_ + (j + i) % k_];
  }
  return out;
}

RingElement DcRing::gamma_prime(const ChallengeA& a, const RingElement& x) const {
  if (a.k() != k_) throw Error(Error::Kind::InvalidChallenge, "challenge length");
  return mul_f2poly(a.bits(), x);
}

RankVector DcRing::gamma(const ChallengeA& a, const RankVector& y) const {
  if (a.k() != k_) throw Error(Error::Kind::InvalidChallenge, "challenge length");
  return gamma_poly(a.bits(), y);
}

RankVector DcRing::gamma_poly(std::uint64_t poly, const RankVector& y) const {
  if (y.size() != n())
    throw Error(Error::Kind::DimensionMismatch, "codeword length");
  RingElement left{std::vector<Gf2mElem>(y.coords().begin(), y.coords().begin() + k_)};
  RingElement right{std::vector<Gf2mElem>(y.coords().begin() + k_, y.coords().end())};
  RingElement l = mul_f2poly(poly, left);
  RingElement r = mul_f2poly(poly, right);
  std::vector<Gf2mElem> out;
  out.reserve(n());
  out.insert(out.end(), l.c.begin(), l.c.end());
  out.insert(out.end(), r.c.begin(), r.c.end());
  return RankVector(field_, std::move(out));
}

RankVector DcRing::encode(const RingElement& x, const RingElement& g) const {
  RingElement xg = mul(x, g);
  std::vector<Gf2mElem> out;
  out.reserve(n());
  out.insert(out.end(), x.c.begin(), x.c.end());
  out.insert(out.end(), xg.c.begin(), xg.c.end());
  return RankVector(field_, std::move(out));
}

bool DcRing::poly_is_unit(std::uint64_t poly) const {
  if (poly == 0) return false;
  // gcd over GF(2)[X] of a(X) and X^k - p(X).
  unsigned __int128 modulus = ((unsigned __int128)1 << k_) | modulus_low_;
  unsigned __int128 x = modulus, y = poly;
  while (y != 0) {
    // x mod y
    unsigned dy = 0;
    for (unsigned __int128 t = y; t >> 1; t >>= 1) ++dy;
    for (;;) {
      unsigned dx = 0;
      for (unsigned __int128 t = x; t >> 1; t >>= 1) ++dx;
      if (x == 0 || dx < dy) break;
      x ^= y << (dx - dy);
    }
    std::swap(x, y);
  }
  return x == 1;
}

bool DcRing::gamma_rank_safe(const RankVector& e) const {
  if (k_ < 3) return true;  // no even-weight challenge is admissible
  unsigned r = e.rank_weight();
  return gamma_poly(0b011, e).rank_weight() == r;
}

unsigned DcRing::cyclic_factor_count(unsigned k) {
  unsigned multiplicity = 1;
  while (k % 2 == 0) {
    k /= 2;
    multiplicity *= 2;
  }
  // Distinct irreducible factors of X^k - 1 (k odd) = number of 2-cyclotomic
  // cosets mod k.
  std::vector<bool> seen(k, false);
  unsigned cosets = 0;
  for (unsigned s = 0; s < k; ++s) {
    if (seen[s]) continue;
    ++cosets;
    unsigned t = s;
    do {
      seen[t] = true;
      t = (2 * t) % k;
    } while (t != s);
  }
  return cosets * multiplicity;
}

Bytes DcRing::ring_to_bytes(const RingElement& x) const {
  Bytes out(k_ * field_.elem_bytes());
  for (unsigned i = 0; i < k_; ++i)
    field_.to_bytes(x.c[i], out.data() + i * field_.elem_bytes());
  return out;
}

KeyPair keygen(const ParamSet& params, XofRng& rng) {
  Gf2m field = params.field();
  DcRing ring(field, params.k, params.ring_modulus_low);
  RingElement x = ring.sample(rng);
  // Errors whose coordinate row space meets the even-challenge null space
  // cannot answer branch 1 for half the challenges; resample those away
  // (a ~2^(r+2-n) fraction).
  RankVector e = RankVector::sample_rank_exact(field, params.n, params.r, rng);
  while (!ring.gamma_rank_safe(e))
    e = RankVector::sample_rank_exact(field, params.n, params.r, rng);
  RingElement g = ring.sample(rng);
  RankVector y = ring.encode(x, g).add(e);
  return KeyPair{SecretKey{x, e}, PublicKey{std::move(y), std::move(g), params.r}};
}

}  // namespace rvdc
