#pragma once

#include <atomic>
#include <cstdint>
#include <memory>

#include "rvdc/bits.hpp"

namespace rvdc {

// Digest backend for the h-bit commitment hash.
enum class HashMode : std::uint8_t {
  Sha2 = 0,   // SHA-1/256/384/512 picked by output length (160 is legacy SHA-1)
  Shake = 1,  // SHAKE256 truncated to h bits
};

// How challenge bit streams are produced from (input) bytes.
enum class StreamMode : std::uint8_t {
  Xof = 0,      // one SHAKE256 stream
  Chunked = 1,  // hash(input || 1) || hash(input || 2) || ...  for fixed-digest builds
};

// hash_calls covers commitment digests and challenge-stream derivations; these
// are the operations the per-round cost accounting is stated in. Seed
// expansion and per-round randomness go to expand_calls.
struct HashCounters {
  std::atomic<std::uint64_t> hash_calls{0};
  std::atomic<std::uint64_t> expand_calls{0};

  void reset() {
    hash_calls = 0;
    expand_calls = 0;
  }
};

// Incremental SHAKE256: absorb, then squeeze arbitrarily many bytes.
class Shake256 {
 public:
  Shake256();
  void absorb(ByteView data);
  void squeeze(std::uint8_t* out, std::size_t len);  // finalizes on first call

 private:
  std::uint64_t state_[25];
  unsigned pos_ = 0;
  bool squeezing_ = false;
};

Bytes shake256(ByteView data, std::size_t out_len);
Bytes sha_digest(unsigned bits, ByteView data);  // 160/256/384/512

// An unbounded deterministic bit stream (LSB-first within each byte).
class BitSource {
 public:
  virtual ~BitSource() = default;
  bool bit();
  std::uint64_t bits(unsigned count);
  void bytes(std::uint8_t* out, std::size_t len);

 protected:
  virtual void refill(std::uint8_t* out, std::size_t len) = 0;

 private:
  std::uint8_t cur_ = 0;
  unsigned used_ = 8;
};

class XofBitStream final : public BitSource {
 public:
  explicit XofBitStream(ByteView input);
  XofBitStream(std::uint8_t domain, ByteView input);
  XofBitStream(std::uint8_t domain, ByteView input1, ByteView input2);

 protected:
  void refill(std::uint8_t* out, std::size_t len) override;

 private:
  Shake256 xof_;
};

// hash(input || ctr) chunks, ctr = 1, 2, ... (one byte each).
class ChunkedBitStream final : public BitSource {
 public:
  ChunkedBitStream(unsigned digest_bits, ByteView input, HashCounters* counters);

 protected:
  void refill(std::uint8_t* out, std::size_t len) override;

 private:
  unsigned digest_bits_;
  Bytes input_;
  unsigned counter_ = 0;
  Bytes chunk_;
  std::size_t chunk_pos_ = 0;
  HashCounters* counters_;
};

// The hash configuration a parameter set runs under.
struct HashSuite {
  unsigned h_bits = 256;
  HashMode mode = HashMode::Sha2;
  StreamMode stream_mode = StreamMode::Xof;
  HashCounters* counters = nullptr;

  std::size_t digest_bytes() const { return h_bits / 8; }

  Bytes digest(ByteView data) const;  // counted
  Bytes digest2(ByteView a, ByteView b) const;
  // Challenge streams carry domain byte 0x00 in Xof mode; counted as one call.
  std::unique_ptr<BitSource> challenge_stream(ByteView input) const;
  std::unique_ptr<BitSource> challenge_stream2(ByteView a, ByteView b) const;
  // Seed expansion (P/Q derivation etc.); not part of the hash-call accounting.
  std::unique_ptr<BitSource> expand_stream(std::uint8_t domain, ByteView input) const;
};

// Deterministic RNG: a SHAKE256 stream seeded with caller-provided bytes.
class XofRng {
 public:
  explicit XofRng(ByteView seed);
  XofRng(ByteView seed, std::uint64_t subindex);  // seed || u64le(subindex)

  bool bit() { return stream_.bit(); }
  std::uint64_t bits(unsigned count) { return stream_.bits(count); }
  void fill(std::uint8_t* out, std::size_t len) { stream_.bytes(out, len); }
  Bytes bytes(std::size_t len);
  // Uniform in [0, bound) by rejection on the next power of two.
  std::uint64_t below(std::uint64_t bound);

 private:
  XofBitStream stream_;
};

XofRng system_rng();  // seeded from std::random_device

}  // namespace rvdc
