#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "rvdc/bin_matrix.hpp"
#include "rvdc/errors.hpp"

using namespace rvdc;

namespace {
XofRng test_rng(const char* tag) {
  Bytes seed(reinterpret_cast<const std::uint8_t*>(tag),
             reinterpret_cast<const std::uint8_t*>(tag) + std::char_traits<char>::length(tag));
  return XofRng(seed);
}

BinMatrix matrix_from_bits(unsigned rows, unsigned cols, std::uint32_t bits) {
  BinMatrix m(rows, cols);
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned j = 0; j < cols; ++j)
      if ((bits >> (i * cols + j)) & 1u) m.set(i, j, true);
  return m;
}
}  // namespace

TEST_CASE("rank basics") {
  CHECK(BinMatrix::identity(7).rank() == 7);
  CHECK(BinMatrix(5, 9).rank() == 0);
}

TEST_CASE("rank agrees with the span-counting oracle on all 3x3 matrices") {
  for (std::uint32_t bits = 0; bits < 512; ++bits) {
    BinMatrix m = matrix_from_bits(3, 3, bits);
    CHECK(m.rank() == oracle::span_rank(m));
  }
}

TEST_CASE("invertibility iff full rank, exhaustively up to 3x3") {
  for (unsigned dim = 1; dim <= 3; ++dim) {
    for (std::uint32_t bits = 0; bits < (1u << (dim * dim)); ++bits) {
      BinMatrix m = matrix_from_bits(dim, dim, bits);
      if (m.rank() == dim) {
        BinMatrix inv = m.inverse();
        CHECK(m.mul(inv) == BinMatrix::identity(dim));
      } else {
        CHECK_THROWS_AS(m.inverse(), Error);
      }
    }
  }
}

TEST_CASE("product and inverse") {
  auto rng = test_rng("matmul");
  BinMatrix a = BinMatrix::sample(6, 9, rng);
  CHECK(a.mul(BinMatrix::identity(9)) == a);
  CHECK(BinMatrix::identity(4).inverse() == BinMatrix::identity(4));
  CHECK_THROWS_AS(a.mul(BinMatrix::identity(4)), Error);
  CHECK_THROWS_AS(a.inverse(), Error);

  for (int i = 0; i < 50; ++i) {
    BinMatrix m = BinMatrix::sample_invertible(4, rng);
    CHECK(m.mul(m.inverse()) == BinMatrix::identity(4));
  }
}

TEST_CASE("rank of a product never exceeds factor ranks") {
  auto rng = test_rng("rank product");
  for (int i = 0; i < 200; ++i) {
    BinMatrix a = BinMatrix::sample(5, 7, rng);
    BinMatrix b = BinMatrix::sample(7, 6, rng);
    CHECK(a.mul(b).rank() <= std::min(a.rank(), b.rank()));
  }
}

TEST_CASE("invertible factors preserve rank") {
  auto rng = test_rng("rank preservation");
  for (int i = 0; i < 1000; ++i) {
    BinMatrix m = BinMatrix::sample(8, 11, rng);
    BinMatrix q = BinMatrix::sample_invertible(8, rng);
    BinMatrix p = BinMatrix::sample_invertible(11, rng);
    CHECK(q.mul(m).mul(p).rank() == m.rank());
  }
}

TEST_CASE("sample_invertible") {
  auto rng = test_rng("sample invertible");
  BinMatrix one = BinMatrix::sample_invertible(1, rng);
  CHECK(one.get(0, 0));

  for (int i = 0; i < 1000; ++i)
    CHECK(BinMatrix::sample_invertible(8, rng).rank() == 8);

  // |GL(2,2)| = 6; each of the six should appear 1/6 +- 5 sigma of the time.
  std::map<Bytes, int> counts;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) ++counts[BinMatrix::sample_invertible(2, rng).to_bytes()];
  CHECK(counts.size() == 6);
  // mean 1667, sigma = sqrt(draws * (1/6)(5/6)) ~ 37.3
  for (const auto& [key, c] : counts) {
    CHECK(c > 1667 - 187);
    CHECK(c < 1667 + 187);
  }
}

TEST_CASE("from_bit_source") {
  struct FixedBits final : BitSource {
    Bytes data;
    std::size_t pos = 0;
    void refill(std::uint8_t* out, std::size_t len) override {
      for (std::size_t i = 0; i < len; ++i) out[i] = pos < data.size() ? data[pos++] : 0;
    }
  };

  FixedBits zeros;
  BinMatrix z = BinMatrix::from_bit_source(3, 3, zeros);
  CHECK(z == BinMatrix(3, 3));

  FixedBits id2;
  id2.data = {0b1001};  // row-major 1,0,0,1
  CHECK(BinMatrix::from_bit_source(2, 2, id2) == BinMatrix::identity(2));

  XofBitStream s1(Bytes{1, 2, 3});
  XofBitStream s2(Bytes{1, 2, 3});
  CHECK(BinMatrix::from_bit_source(5, 5, s1) == BinMatrix::from_bit_source(5, 5, s2));
}

TEST_CASE("serialization round trip") {
  auto rng = test_rng("matrix bytes");
  for (int i = 0; i < 100; ++i) {
    BinMatrix m = BinMatrix::sample(5, 11, rng);
    Bytes b = m.to_bytes();
    CHECK(b.size() == (5 * 11 + 7) / 8);
    CHECK(BinMatrix::from_bytes(5, 11, b) == m);
  }
  CHECK_THROWS_AS(BinMatrix::from_bytes(5, 11, Bytes(3)), Error);
}
