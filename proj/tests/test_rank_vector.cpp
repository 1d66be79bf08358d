#include <doctest.h>

#include "oracles.hpp"
#include "rvdc/errors.hpp"
#include "rvdc/rank_vector.hpp"

using namespace rvdc;

namespace {
XofRng test_rng(const char* tag) {
  Bytes seed(reinterpret_cast<const std::uint8_t*>(tag),
             reinterpret_cast<const std::uint8_t*>(tag) + std::char_traits<char>::length(tag));
  return XofRng(seed);
}
}  // namespace

TEST_CASE("phi expansion") {
  Gf2m f2 = Gf2m::with_default_reduction(2);
  RankVector zero(f2, 4);
  CHECK(zero.expand_phi() == BinMatrix(2, 4));

  // (beta_1, beta_2) for m = n = 2 expands to the identity.
  RankVector basis(f2, {f2.basis_element(1), f2.basis_element(2)});
  CHECK(basis.expand_phi() == BinMatrix::identity(2));

  Gf2m f29 = Gf2m::with_default_reduction(29);
  auto rng = test_rng("phi");
  for (int i = 0; i < 200; ++i) {
    RankVector v = RankVector::sample(f29, 22, rng);
    CHECK(RankVector::collapse_phi(f29, v.expand_phi()) == v);
  }
  CHECK_THROWS_AS(RankVector::collapse_phi(f29, BinMatrix(5, 4)), Error);
}

TEST_CASE("rank weight") {
  Gf2m f3 = Gf2m::with_default_reduction(3);
  CHECK(RankVector(f3, 5).rank_weight() == 0);

  auto rng = test_rng("weight");
  Gf2mElem a = f3.sample(rng);
  while (a.bits == 0) a = f3.sample(rng);
  RankVector same(f3, {a, a, a, a});
  CHECK(same.rank_weight() == 1);

  RankVector v(f3, {f3.basis_element(1), f3.basis_element(2),
                    f3.add(f3.basis_element(1), f3.basis_element(2))});
  CHECK(v.rank_weight() == 2);
  CHECK(oracle::span_rank(v.expand_phi().transpose()) == 2);
}

TEST_CASE("pi map") {
  Gf2m f = Gf2m::with_default_reduction(29);
  auto rng = test_rng("pi");
  const unsigned n = 22;
  RankVector v = RankVector::sample(f, n, rng);
  CHECK(pi_map(BinMatrix::identity(n), BinMatrix::identity(29), v) == v);
  BinMatrix p = BinMatrix::sample_invertible(n, rng);
  BinMatrix q = BinMatrix::sample_invertible(29, rng);
  CHECK(pi_map(p, q, RankVector(f, n)) == RankVector(f, n));
  CHECK_THROWS_AS(pi_map(BinMatrix::identity(5), q, v), Error);

  for (int i = 0; i < 1000; ++i) {
    RankVector x = RankVector::sample(f, n, rng);
    CHECK(pi_map(p, q, x).rank_weight() == x.rank_weight());
  }

  // F_2-linearity.
  for (int i = 0; i < 200; ++i) {
    RankVector x = RankVector::sample(f, n, rng);
    RankVector y = RankVector::sample(f, n, rng);
    CHECK(pi_map(p, q, x.add(y)) == pi_map(p, q, x).add(pi_map(p, q, y)));
  }
}

TEST_CASE("pi inverse") {
  Gf2m f = Gf2m::with_default_reduction(31);
  auto rng = test_rng("pi inverse");
  const unsigned n = 26;
  for (int i = 0; i < 1000; ++i) {
    BinMatrix p = BinMatrix::sample_invertible(n, rng);
    BinMatrix q = BinMatrix::sample_invertible(31, rng);
    RankVector v = RankVector::sample(f, n, rng);
    CHECK(pi_inverse(p, q, pi_map(p, q, v)) == v);
    CHECK(pi_inverse(p, q, v) == pi_map(p.inverse(), q.inverse(), v));
  }
  BinMatrix singular(n, n);
  CHECK_THROWS_AS(pi_inverse(singular, BinMatrix::identity(31),
                             RankVector::sample(f, n, rng)),
                  Error);
}

TEST_CASE("transitivity at toy scale: any two equal-rank vectors are related") {
  // For (m, n) = (2, 2), exhaustive search over all (P, Q) pairs.
  Gf2m f = Gf2m::with_default_reduction(2);
  auto all_vectors = [&] {
    std::vector<RankVector> vs;
    for (unsigned a = 0; a < 4; ++a)
      for (unsigned b = 0; b < 4; ++b)
        vs.push_back(RankVector(f, {Gf2mElem{a}, Gf2mElem{b}}));
    return vs;
  }();
  std::vector<BinMatrix> all_mats;
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    BinMatrix m(2, 2);
    for (unsigned i = 0; i < 2; ++i)
      for (unsigned j = 0; j < 2; ++j)
        if ((bits >> (2 * i + j)) & 1u) m.set(i, j, true);
    all_mats.push_back(m);
  }
  for (const RankVector& x : all_vectors) {
    for (const RankVector& y : all_vectors) {
      if (x.rank_weight() != y.rank_weight()) continue;
      bool found = false;
      for (const BinMatrix& p : all_mats) {
        for (const BinMatrix& q : all_mats) {
          if (pi_map(p, q, y) == x) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("exact-rank sampling") {
  Gf2m f = Gf2m::with_default_reduction(29);
  auto rng = test_rng("exact rank");
  CHECK_THROWS_AS(RankVector::sample_rank_exact(f, 22, 0, rng), Error);
  CHECK_THROWS_AS(RankVector::sample_rank_exact(f, 22, 23, rng), Error);

  for (int i = 0; i < 1000; ++i)
    CHECK(RankVector::sample_rank_exact(f, 22, 7, rng).rank_weight() == 7);

  // Rank-1 outputs over (m, n) = (3, 3) lie in a single 1-dimensional span.
  Gf2m f3 = Gf2m::with_default_reduction(3);
  for (int i = 0; i < 200; ++i) {
    RankVector v = RankVector::sample_rank_exact(f3, 3, 1, rng);
    Gf2mElem base{};
    for (unsigned j = 0; j < 3; ++j)
      if (v[j].bits != 0) base = v[j];
    CHECK(base.bits != 0);
    for (unsigned j = 0; j < 3; ++j)
      CHECK((v[j].bits == 0 || v[j] == base));
  }
}

TEST_CASE("byte and bit serialization") {
  Gf2m f = Gf2m::with_default_reduction(29);
  auto rng = test_rng("vector bytes");
  RankVector v = RankVector::sample(f, 22, rng);
  Bytes b = v.to_bytes();
  CHECK(b.size() == 22 * 4);
  CHECK(RankVector::from_bytes(f, 22, b) == v);

  BitWriter w;
  v.append_bits(w);
  CHECK(w.bit_size() == 22 * 29);
  BitReader r(w.bytes());
  CHECK(RankVector::read_bits(f, 22, r) == v);
}

TEST_CASE("compressed rank-r encoding") {
  Gf2m f = Gf2m::with_default_reduction(29);
  auto rng = test_rng("compress");
  for (int i = 0; i < 200; ++i) {
    RankVector v = RankVector::sample_rank_exact(f, 22, 7, rng);
    CompressedRankVector c = compress_rank_vector(v);
    CHECK(c.support.size() == 7);
    CHECK(c.coords.rank() == 7);
    RankVector support(f, std::vector<Gf2mElem>(c.support));
    CHECK(support.rank_weight() == 7);
    CHECK(decompress_rank_vector(f, c, 22) == v);
  }

  // Deterministic: equal inputs give equal encodings.
  RankVector v = RankVector::sample_rank_exact(f, 22, 7, rng);
  CompressedRankVector c1 = compress_rank_vector(v);
  CompressedRankVector c2 = compress_rank_vector(v);
  CHECK(c1.support == c2.support);
  CHECK(c1.coords == c2.coords);

  // Support picks the leftmost independent columns.
  Gf2m f3 = Gf2m::with_default_reduction(3);
  RankVector w(f3, {Gf2mElem{0}, f3.basis_element(2), f3.basis_element(2),
                    f3.basis_element(3)});
  CompressedRankVector cw = compress_rank_vector(w);
  REQUIRE(cw.support.size() == 2);
  CHECK(cw.support[0] == f3.basis_element(2));
  CHECK(cw.support[1] == f3.basis_element(3));
  CHECK(decompress_rank_vector(f3, cw, 4) == w);
}
