#pragma once

#include <cstdint>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rvdc/errors.hpp"

namespace rvdc {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// All bit-level encodings in this project are little-endian within a byte:
// bit i of a stream lives in byte i/8 at position i%8.

class BitWriter {
 public:
  void put_bit(bool b) {
    if (bit_ == 0) buf_.push_back(0);
    if (b) buf_.back() |= std::uint8_t(1u << bit_);
    bit_ = (bit_ + 1) & 7;
    ++nbits_;
  }

  void put_bits(std::uint64_t value, unsigned count) {
    for (unsigned i = 0; i < count; ++i) put_bit((value >> i) & 1u);
  }

  // Appends whole bytes; only valid on a byte boundary elsewhere callers
  // would silently misalign fixed-width fields.
  void put_bytes(ByteView bytes) {
    for (std::uint8_t b : bytes) put_bits(b, 8);
  }

  std::size_t bit_size() const { return nbits_; }
  const Bytes& bytes() const { return buf_; }
  Bytes take() { return std::move(buf_); }

 private:
  Bytes buf_;
  unsigned bit_ = 0;
  std::size_t nbits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(ByteView data) : data_(data) {}

  bool get_bit() {
    if (pos_ >= 8 * data_.size())
      throw Error(Error::Kind::MalformedSignature, "input truncated", pos_ / 8);
    bool b = (data_[pos_ / 8] >> (pos_ % 8)) & 1u;
    ++pos_;
    return b;
  }

  std::uint64_t get_bits(unsigned count) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < count; ++i) v |= std::uint64_t(get_bit()) << i;
    return v;
  }

  Bytes get_bytes(std::size_t count) {
    Bytes out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = std::uint8_t(get_bits(8));
    return out;
  }

  std::size_t bit_pos() const { return pos_; }
  std::size_t bits_left() const { return 8 * data_.size() - pos_; }

  // Remaining bits must be padding zeros only.
  void expect_end() {
    while (pos_ < 8 * data_.size()) {
      if (get_bit())
        throw Error(Error::Kind::MalformedSignature, "trailing data", (pos_ - 1) / 8);
    }
  }

 private:
  ByteView data_;
  std::size_t pos_ = 0;
};

std::string to_hex(ByteView data);
Bytes from_hex(const std::string& hex);

}  // namespace rvdc
