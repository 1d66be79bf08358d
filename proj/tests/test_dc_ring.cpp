#include <doctest.h>

#include "oracles.hpp"
#include "rvdc/dc_ring.hpp"
#include "rvdc/errors.hpp"
#include "rvdc/signature.hpp"

using namespace rvdc;

namespace {
XofRng test_rng(const char* tag) {
  Bytes seed(reinterpret_cast<const std::uint8_t*>(tag),
             reinterpret_cast<const std::uint8_t*>(tag) + std::char_traits<char>::length(tag));
  return XofRng(seed);
}
}  // namespace

TEST_CASE("challenge validity") {
  CHECK_THROWS_AS(ChallengeA(3, 0b000), Error);
  CHECK_THROWS_AS(ChallengeA(3, 0b111), Error);
  CHECK_NOTHROW(ChallengeA(3, 0b101));
  auto rng = test_rng("challenge");
  for (int i = 0; i < 100; ++i) {
    ChallengeA a = ChallengeA::sample(11, rng);
    CHECK(a.bits() != 0);
    CHECK(a.bits() != (1ULL << 11) - 1);
  }
}

TEST_CASE("ring multiplication") {
  Gf2m f = Gf2m::with_default_reduction(5);
  DcRing ring(f, 3);
  auto rng = test_rng("ring mul");

  RingElement x = ring.sample(rng);
  CHECK(ring.mul(ring.one(), x) == x);

  // X * (x1, x2, x3) = (x3, x1, x2)
  RingElement mono_x = ring.zero();
  mono_x.c[1] = f.one();
  RingElement shifted = ring.mul(mono_x, x);
  CHECK(shifted.c[0] == x.c[2]);
  CHECK(shifted.c[1] == x.c[0]);
  CHECK(shifted.c[2] == x.c[1]);

  for (unsigned k = 2; k <= 4; ++k) {
    DcRing rk(f, k);
    for (int i = 0; i < 500; ++i) {
      RingElement a = rk.sample(rng), b = rk.sample(rng);
      CHECK(rk.mul(a, b) == oracle::ring_mul(f, k, a, b));
    }
  }
}

TEST_CASE("ring with irreducible modulus") {
  Gf2m f = Gf2m::with_default_reduction(5);
  // X^3 - (X + 1): X^3 + X + 1 is irreducible over F_2.
  DcRing ring(f, 3, 0b011);
  auto rng = test_rng("ring modulus");
  RingElement x = ring.sample(rng);
  CHECK(ring.mul(ring.one(), x) == x);
  // X * X^2 = X + 1
  RingElement mono_x = ring.zero();
  mono_x.c[1] = f.one();
  RingElement mono_x2 = ring.zero();
  mono_x2.c[2] = f.one();
  RingElement got = ring.mul(mono_x, mono_x2);
  CHECK(got.c[0] == f.one());
  CHECK(got.c[1] == f.one());
  CHECK(got.c[2] == f.zero());
  // associativity spot check
  for (int i = 0; i < 200; ++i) {
    RingElement a = ring.sample(rng), b = ring.sample(rng), c = ring.sample(rng);
    CHECK(ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c)));
  }
}

TEST_CASE("rotations") {
  Gf2m f = Gf2m::with_default_reduction(5);
  DcRing ring(f, 3);
  auto rng = test_rng("rot");
  RingElement x = ring.sample(rng);

  CHECK(ring.rot(3, x) == x);
  CHECK(ring.rot(0, x) == x);
  RingElement r1 = ring.rot(1, x);
  CHECK(r1.c[0] == x.c[1]);
  CHECK(r1.c[1] == x.c[2]);
  CHECK(r1.c[2] == x.c[0]);
  CHECK_THROWS_AS(ring.rot(4, x), Error);

  RankVector y = RankVector::sample(f, 6, rng);
  for (unsigned i = 0; i <= 3; ++i) {
    RankVector d = ring.drot(i, y);
    RingElement left{std::vector<Gf2mElem>(y.coords().begin(), y.coords().begin() + 3)};
    RingElement right{std::vector<Gf2mElem>(y.coords().begin() + 3, y.coords().end())};
    RingElement dl = ring.rot(i, left), dr = ring.rot(i, right);
    for (unsigned j = 0; j < 3; ++j) {
      CHECK(d[j] == dl.c[j]);
      CHECK(d[3 + j] == dr.c[j]);
    }
  }
}

TEST_CASE("gamma maps") {
  Gf2m f = Gf2m::with_default_reduction(5);
  DcRing ring(f, 3);
  auto rng = test_rng("gamma");

  // A single nonzero alpha_j acts as one (parallel) rotation.
  for (unsigned j = 1; j <= 3; ++j) {
    ChallengeA a(3, 1ULL << (j - 1));
    RingElement x = ring.sample(rng);
    CHECK(ring.gamma_prime(a, x) == ring.rot((3 - j + 1) % 3, x));
    RankVector y = RankVector::sample(f, 6, rng);
    CHECK(ring.gamma(a, y) == ring.drot((3 - j + 1) % 3, y));
  }

  // Direct rotation-sum evaluation of the definition, under the pinned
  // index convention.
  for (int i = 0; i < 500; ++i) {
    ChallengeA a = ChallengeA::sample(3, rng);
    RingElement x = ring.sample(rng);
    RankVector y = RankVector::sample(f, 6, rng);
    CHECK(ring.gamma_prime(a, x) == oracle::gamma_prime_rotsum(ring, a, x));
    CHECK(ring.gamma(a, y) == oracle::gamma_rotsum(ring, a, y));
  }

  // F_{2^m}-linearity of Gamma_a.
  for (int i = 0; i < 200; ++i) {
    ChallengeA a = ChallengeA::sample(3, rng);
    RankVector y = RankVector::sample(f, 6, rng);
    RankVector z = RankVector::sample(f, 6, rng);
    CHECK(ring.gamma(a, y.add(z)) == ring.gamma(a, y).add(ring.gamma(a, z)));
  }
}

TEST_CASE("gamma never increases rank; all-equal a collapses it") {
  Gf2m f = Gf2m::with_default_reduction(29);
  DcRing ring(f, 11);
  auto rng = test_rng("gamma rank");
  for (int i = 0; i < 300; ++i) {
    RankVector e = RankVector::sample_rank_exact(f, 22, 7, rng);
    ChallengeA a = ChallengeA::sample(11, rng);
    CHECK(ring.gamma(a, e).rank_weight() <= e.rank_weight());
    // the unit polynomials preserve the rank exactly
    if (ring.poly_is_unit(a.bits()))
      CHECK(ring.gamma(a, e).rank_weight() == e.rank_weight());
  }
  // Inadmissible all-equal challenges, via the unchecked polynomial form:
  // a = 0 kills the vector, a = 1...1 leaves rank 0, 1, or 2.
  for (int i = 0; i < 200; ++i) {
    RankVector e = RankVector::sample_rank_exact(f, 22, 7, rng);
    CHECK(ring.gamma_poly(0, e).rank_weight() == 0);
    CHECK(ring.gamma_poly((1ULL << 11) - 1, e).rank_weight() <= 2);
  }
}

TEST_CASE("lemma: gamma commutes with encoding") {
  auto rng = test_rng("lemma");
  for (const ParamSet& params : builtin_param_sets()) {
    Gf2m f = params.field();
    DcRing ring = DcRing::from_params(params);
    for (int i = 0; i < 200; ++i) {
      ChallengeA a = ChallengeA::sample(params.k, rng);
      RingElement x = ring.sample(rng);
      RingElement g = ring.sample(rng);
      CHECK(ring.gamma(a, ring.encode(x, g)) == ring.encode(ring.gamma_prime(a, x), g));
    }
  }
}

TEST_CASE("systematic encoding") {
  Gf2m f = Gf2m::with_default_reduction(5);
  DcRing ring(f, 3);
  auto rng = test_rng("encode");
  RingElement g = ring.sample(rng);
  CHECK(ring.encode(ring.zero(), g) == RankVector(f, 6));

  RingElement x = ring.sample(rng);
  RankVector enc_x0 = ring.encode(x, ring.zero());
  for (unsigned j = 0; j < 3; ++j) {
    CHECK(enc_x0[j] == x.c[j]);
    CHECK(enc_x0[3 + j] == f.zero());
  }

  // Multiplying the message by X shifts both blocks simultaneously; this
  // pins the shift direction at k = 3.
  RingElement mono_x = ring.zero();
  mono_x.c[1] = f.one();
  RankVector lhs = ring.encode(ring.mul(mono_x, x), g);
  RankVector rhs = ring.drot(2, ring.encode(x, g));  // X * (.) = left rotation by k-1
  CHECK(lhs == rhs);
}

TEST_CASE("cyclic factor counts") {
  CHECK(DcRing::cyclic_factor_count(11) == 2);
  CHECK(DcRing::cyclic_factor_count(13) == 2);
  CHECK(DcRing::cyclic_factor_count(17) == 3);  // 2 has order 8 mod 17
  CHECK(DcRing::cyclic_factor_count(19) == 2);
  CHECK(DcRing::cyclic_factor_count(7) == 3);
  CHECK(DcRing::cyclic_factor_count(6) == 4);  // (X^3 - 1)^2
}

TEST_CASE("key generation") {
  auto rng = test_rng("keygen");
  for (const ParamSet& params : builtin_param_sets()) {
    DcRing ring = DcRing::from_params(params);
    KeyPair keys = keygen(params, rng);
    CHECK(keys.sk.e.rank_weight() == params.r);
    CHECK(keys.pk.r == params.r);
    CHECK(keys.pk.y.add(ring.encode(keys.sk.x, keys.pk.g)) == keys.sk.e);
  }
}

TEST_CASE("generated keys answer branch 1 for every even-weight challenge") {
  // The toy set has a ~14% raw chance of a degenerate error vector, so this
  // exercises the keygen resampling path.
  const ParamSet& params = param_set("toy");
  DcRing ring = DcRing::from_params(params);
  auto rng = test_rng("robust keys");
  for (int trial = 0; trial < 50; ++trial) {
    KeyPair keys = keygen(params, rng);
    CHECK(ring.gamma_rank_safe(keys.sk.e));
    for (std::uint64_t bits = 1; bits < (1ULL << params.k) - 1; ++bits)
      CHECK(ring.gamma(ChallengeA(params.k, bits), keys.sk.e).rank_weight() == params.r);
  }
  // Degenerate vectors exist and are detected: a block whose coordinate rows
  // sum to a constant vector collapses under a = 1 + X.
  Gf2m field = params.field();
  Gf2mElem one = field.one();
  RankVector bad(field, {one, one, one, field.zero(), field.zero(), field.zero()});
  CHECK(bad.rank_weight() == 1);
  CHECK_FALSE(ring.gamma_rank_safe(bad));
  RankVector flat(field, {one, one, field.basis_element(2), field.zero(), field.zero(),
                          field.zero()});
  CHECK(flat.rank_weight() == 2);
  CHECK_FALSE(ring.gamma_rank_safe(flat));
}

TEST_CASE("key sizes match the size model") {
  // sk = m(k+n); pk = m(n+k) + ceil(log2 r)
  struct Row {
    const char* name;
    std::uint64_t sk, pk;
  };
  for (const Row& row : {Row{"80", 957, 960}, Row{"128", 1209, 1212},
                         Row{"192", 2091, 2095}, Row{"256", 2679, 2683}}) {
    const ParamSet& p = param_set(row.name);
    SizeModel model = size_model(p, Scheme::Rvdc);
    CHECK(model.sk_bits == row.sk);
    CHECK(model.pk_bits == row.pk);
    CHECK(std::uint64_t(p.m) * (p.k + p.n) == row.sk);
  }
}

TEST_CASE("key serialization round trip") {
  auto rng = test_rng("key files");
  for (const char* name : {"toy", "80"}) {
    const ParamSet& params = param_set(name);
    KeyPair keys = keygen(params, rng);
    Bytes sk_bytes = serialize_secret_key(params, keys.sk);
    CHECK(sk_bytes.size() == (std::size_t(params.m) * (params.k + params.n) + 7) / 8);
    SecretKey sk2 = parse_secret_key(params, sk_bytes);
    CHECK(sk2.x == keys.sk.x);
    CHECK(sk2.e == keys.sk.e);

    Bytes pk_bytes = serialize_public_key(params, keys.pk);
    CHECK(pk_bytes.size() ==
          4 + (std::size_t(params.m) * (params.n + params.k) + params.r_field_bits() + 7) / 8);
    PublicKey pk2 = parse_public_key(params, pk_bytes);
    CHECK(pk2.y == keys.pk.y);
    CHECK(pk2.g == keys.pk.g);
    CHECK(pk2.r == keys.pk.r);

    CHECK_THROWS_AS(parse_secret_key(params, Bytes(sk_bytes.begin(), sk_bytes.end() - 1)),
                    Error);
    Bytes wrong = pk_bytes;
    wrong[0] ^= 0x40;
    CHECK_THROWS_AS(parse_public_key(params, wrong), Error);
  }
}
