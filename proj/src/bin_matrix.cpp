#include "rvdc/bin_matrix.hpp"

#include <cstring>

#include "rvdc/errors.hpp"

namespace rvdc {

BinMatrix::BinMatrix(unsigned rows, unsigned cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(std::size_t(rows) * wpr_, 0) {}

BinMatrix BinMatrix::identity(unsigned dim) {
  BinMatrix m(dim, dim);
  for (unsigned i = 0; i < dim; ++i) m.set(i, i, true);
  return m;
}

BinMatrix BinMatrix::sample(unsigned rows, unsigned cols, XofRng& rng) {
  BinMatrix m(rows, cols);
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned j = 0; j < cols; ++j) m.set(i, j, rng.bit());
  return m;
}

BinMatrix BinMatrix::sample_invertible(unsigned dim, XofRng& rng) {
  if (dim < 1) throw Error(Error::Kind::InvalidParams, "empty matrix");
  for (;;) {
    BinMatrix m = sample(dim, dim, rng);
    if (m.is_invertible()) return m;
  }
}

BinMatrix BinMatrix::from_bit_source(unsigned rows, unsigned cols, BitSource& src) {
  BinMatrix m(rows, cols);
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned j = 0; j < cols; ++j) m.set(i, j, src.bit());
  return m;
}

BinMatrix BinMatrix::first_invertible_from(unsigned dim, BitSource& src) {
  for (;;) {
    BinMatrix m = from_bit_source(dim, dim, src);
    if (m.is_invertible()) return m;
  }
}

BinMatrix BinMatrix::mul(const BinMatrix& other) const {
  if (cols_ != other.rows_)
    throw Error(Error::Kind::DimensionMismatch, "matrix product shape");
  BinMatrix out(rows_, other.cols_);
  // Accumulate rows of `other` selected by the bits of each row of *this.
  for (unsigned i = 0; i < rows_; ++i) {
    std::uint64_t* dst = out.row_data(i);
    for (unsigned j = 0; j < cols_; ++j) {
      if (get(i, j)) {
        const std::uint64_t* src = other.row_data(j);
        for (unsigned w = 0; w < other.wpr_; ++w) dst[w] ^= src[w];
      }
    }
  }
  return out;
}

BinMatrix BinMatrix::add(const BinMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(Error::Kind::DimensionMismatch, "matrix sum shape");
  BinMatrix out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] ^= other.words_[i];
  return out;
}

BinMatrix BinMatrix::transpose() const {
  BinMatrix out(cols_, rows_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j)
      if (get(i, j)) out.set(j, i, true);
  return out;
}

unsigned BinMatrix::rank() const {
  BinMatrix work = *this;
  unsigned rank = 0;
  for (unsigned col = 0; col < cols_ && rank < rows_; ++col) {
    unsigned pivot = rank;
    while (pivot < rows_ && !work.get(pivot, col)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (unsigned w = 0; w < wpr_; ++w)
        std::swap(work.words_[pivot * wpr_ + w], work.words_[rank * wpr_ + w]);
    const std::uint64_t* prow = work.row_data(rank);
    for (unsigned i = rank + 1; i < rows_; ++i) {
      if (work.get(i, col)) {
        std::uint64_t* irow = work.row_data(i);
        for (unsigned w = 0; w < wpr_; ++w) irow[w] ^= prow[w];
      }
    }
    ++rank;
  }
  return rank;
}

BinMatrix BinMatrix::inverse() const {
  if (rows_ != cols_)
    throw Error(Error::Kind::DimensionMismatch, "inverse of non-square matrix");
  BinMatrix work = *this;
  BinMatrix inv = identity(rows_);
  for (unsigned col = 0; col < cols_; ++col) {
    unsigned pivot = col;
    while (pivot < rows_ && !work.get(pivot, col)) ++pivot;
    if (pivot == rows_) throw Error(Error::Kind::Singular, "singular matrix");
    if (pivot != col) {
      for (unsigned w = 0; w < wpr_; ++w) {
        std::swap(work.words_[pivot * wpr_ + w], work.words_[col * wpr_ + w]);
        std::swap(inv.words_[pivot * wpr_ + w], inv.words_[col * wpr_ + w]);
      }
    }
    for (unsigned i = 0; i < rows_; ++i) {
      if (i != col && work.get(i, col)) {
        for (unsigned w = 0; w < wpr_; ++w) {
          work.words_[i * wpr_ + w] ^= work.words_[col * wpr_ + w];
          inv.words_[i * wpr_ + w] ^= inv.words_[col * wpr_ + w];
        }
      }
    }
  }
  return inv;
}

Bytes BinMatrix::to_bytes() const {
  BitWriter w;
  append_bits(w);
  return w.take();
}

void BinMatrix::append_bits(BitWriter& w) const {
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) w.put_bit(get(i, j));
}

BinMatrix BinMatrix::from_bytes(unsigned rows, unsigned cols, ByteView data) {
  if (data.size() != (std::size_t(rows) * cols + 7) / 8)
    throw Error(Error::Kind::DimensionMismatch, "matrix byte length");
  BitReader r(data);
  BinMatrix m = read_bits(rows, cols, r);
  r.expect_end();
  return m;
}

BinMatrix BinMatrix::read_bits(unsigned rows, unsigned cols, BitReader& r) {
  BinMatrix m(rows, cols);
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned j = 0; j < cols; ++j) m.set(i, j, r.get_bit());
  return m;
}

}  // namespace rvdc
