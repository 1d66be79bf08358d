#pragma once

#include <cstdint>
#include <vector>

#include "rvdc/bits.hpp"
#include "rvdc/hash.hpp"

namespace rvdc {

// Dense matrix over GF(2), rows packed into 64-bit words.
class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(unsigned rows, unsigned cols);

  static BinMatrix identity(unsigned dim);
  static BinMatrix sample(unsigned rows, unsigned cols, XofRng& rng);
  // Uniform over GL(dim, 2) by rejection; over GF(2) this takes ~3.5 tries.
  static BinMatrix sample_invertible(unsigned dim, XofRng& rng);
  // Row-major fill from a bit stream.
  static BinMatrix from_bit_source(unsigned rows, unsigned cols, BitSource& src);
  // Successive dim*dim-bit candidates from the stream until one is invertible.
  static BinMatrix first_invertible_from(unsigned dim, BitSource& src);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }

  bool get(unsigned i, unsigned j) const {
    return (word(i, j / 64) >> (j % 64)) & 1u;
  }
  void set(unsigned i, unsigned j, bool v) {
    std::uint64_t& w = words_[i * wpr_ + j / 64];
    if (v)
      w |= 1ULL << (j % 64);
    else
      w &= ~(1ULL << (j % 64));
  }

  BinMatrix mul(const BinMatrix& other) const;  // DimensionMismatch
  BinMatrix add(const BinMatrix& other) const;
  BinMatrix transpose() const;
  unsigned rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  BinMatrix inverse() const;  // Singular / DimensionMismatch

  // Row-major bits, little-endian packed: ceil(rows*cols/8) bytes.
  Bytes to_bytes() const;
  static BinMatrix from_bytes(unsigned rows, unsigned cols, ByteView data);
  void append_bits(BitWriter& w) const;
  static BinMatrix read_bits(unsigned rows, unsigned cols, BitReader& r);

  friend bool operator==(const BinMatrix& a, const BinMatrix& b) = default;

  std::uint64_t* row_data(unsigned i) { return words_.data() + i * wpr_; }
  const std::uint64_t* row_data(unsigned i) const { return words_.data() + i * wpr_; }
  unsigned words_per_row() const { return wpr_; }

 private:
  std::uint64_t word(unsigned i, unsigned w) const { return words_[i * wpr_ + w]; }

  unsigned rows_ = 0;
  unsigned cols_ = 0;
  unsigned wpr_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rvdc
