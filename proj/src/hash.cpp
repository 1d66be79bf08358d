#include "rvdc/hash.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <random>

#include "rvdc/errors.hpp"

namespace rvdc {

// ---------------------------------------------------------------------------
// Keccak-f[1600] and SHAKE256 (rate 136 bytes, domain byte 0x1F).

namespace {

constexpr unsigned kShakeRate = 136;

constexpr std::uint64_t kRoundConstants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

inline std::uint64_t rotl64(std::uint64_t x, unsigned s) {
  return (x << s) | (x >> (64 - s));
}

void keccak_f1600(std::uint64_t st[25]) {
  for (unsigned round = 0; round < 24; ++round) {
    // theta
    std::uint64_t bc[5];
    for (unsigned i = 0; i < 5; ++i)
      bc[i] = st[i] ^ st[i + 5] ^ st[i + 10] ^ st[i + 15] ^ st[i + 20];
    for (unsigned i = 0; i < 5; ++i) {
      std::uint64_t t = bc[(i + 4) % 5] ^ rotl64(bc[(i + 1) % 5], 1);
      for (unsigned j = 0; j < 25; j += 5) st[j + i] ^= t;
    }
    // rho + pi
    std::uint64_t t = st[1];
    static constexpr unsigned kPi[24] = {10, 7,  11, 17, 18, 3,  5,  16,
                                         8,  21, 24, 4,  15, 23, 19, 13,
                                         12, 2,  20, 14, 22, 9,  6,  1};
    static constexpr unsigned kRho[24] = {1,  3,  6,  10, 15, 21, 28, 36,
                                          45, 55, 2,  14, 27, 41, 56, 8,
                                          25, 43, 62, 18, 39, 61, 20, 44};
    for (unsigned i = 0; i < 24; ++i) {
      std::uint64_t tmp = st[kPi[i]];
      st[kPi[i]] = rotl64(t, kRho[i]);
      t = tmp;
    }
    // chi
    for (unsigned j = 0; j < 25; j += 5) {
      std::uint64_t row[5];
      for (unsigned i = 0; i < 5; ++i) row[i] = st[j + i];
      for (unsigned i = 0; i < 5; ++i)
        st[j + i] = row[i] ^ (~row[(i + 1) % 5] & row[(i + 2) % 5]);
    }
    // iota
    st[0] ^= kRoundConstants[round];
  }
}

}  // namespace

Shake256::Shake256() { std::memset(state_, 0, sizeof(state_)); }

void Shake256::absorb(ByteView data) {
  if (squeezing_)
    throw Error(Error::Kind::PhaseViolation, "absorb after squeeze");
  auto* bytes = reinterpret_cast<std::uint8_t*>(state_);
  for (std::uint8_t b : data) {
    bytes[pos_++] ^= b;
    if (pos_ == kShakeRate) {
      keccak_f1600(state_);
      pos_ = 0;
    }
  }
}

void Shake256::squeeze(std::uint8_t* out, std::size_t len) {
  auto* bytes = reinterpret_cast<std::uint8_t*>(state_);
  if (!squeezing_) {
    bytes[pos_] ^= 0x1f;
    bytes[kShakeRate - 1] ^= 0x80;
    keccak_f1600(state_);
    pos_ = 0;
    squeezing_ = true;
  }
  while (len > 0) {
    if (pos_ == kShakeRate) {
      keccak_f1600(state_);
      pos_ = 0;
    }
    std::size_t take = std::min<std::size_t>(len, kShakeRate - pos_);
    std::memcpy(out, bytes + pos_, take);
    pos_ += static_cast<unsigned>(take);
    out += take;
    len -= take;
  }
}

Bytes shake256(ByteView data, std::size_t out_len) {
  Shake256 x;
  x.absorb(data);
  Bytes out(out_len);
  x.squeeze(out.data(), out_len);
  return out;
}

Bytes sha_digest(unsigned bits, ByteView data) {
  const EVP_MD* md = nullptr;
  switch (bits) {
    case 160: md = EVP_sha1(); break;
    case 256: md = EVP_sha256(); break;
    case 384: md = EVP_sha384(); break;
    case 512: md = EVP_sha512(); break;
    default:
      throw Error(Error::Kind::InvalidParams,
                  "no fixed digest of " + std::to_string(bits) + " bits");
  }
  Bytes out(EVP_MD_size(md));
  unsigned out_len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &out_len, md, nullptr) != 1)
    throw Error(Error::Kind::InvalidParams, "digest failure");
  out.resize(out_len);
  return out;
}

// ---------------------------------------------------------------------------
// Bit sources

bool BitSource::bit() {
  if (used_ == 8) {
    refill(&cur_, 1);
    used_ = 0;
  }
  bool b = (cur_ >> used_) & 1u;
  ++used_;
  return b;
}

std::uint64_t BitSource::bits(unsigned count) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < count; ++i) v |= std::uint64_t(bit()) << i;
  return v;
}

void BitSource::bytes(std::uint8_t* out, std::size_t len) {
  if (used_ == 8) {
    refill(out, len);  // aligned fast path
    return;
  }
  for (std::size_t i = 0; i < len; ++i) out[i] = std::uint8_t(bits(8));
}

XofBitStream::XofBitStream(ByteView input) { xof_.absorb(input); }

XofBitStream::XofBitStream(std::uint8_t domain, ByteView input) {
  xof_.absorb({&domain, 1});
  xof_.absorb(input);
}

XofBitStream::XofBitStream(std::uint8_t domain, ByteView input1, ByteView input2) {
  xof_.absorb({&domain, 1});
  xof_.absorb(input1);
  xof_.absorb(input2);
}

void XofBitStream::refill(std::uint8_t* out, std::size_t len) {
  xof_.squeeze(out, len);
}

ChunkedBitStream::ChunkedBitStream(unsigned digest_bits, ByteView input,
                                   HashCounters* counters)
    : digest_bits_(digest_bits),
      input_(input.begin(), input.end()),
      counters_(counters) {}

void ChunkedBitStream::refill(std::uint8_t* out, std::size_t len) {
  while (len > 0) {
    if (chunk_pos_ == chunk_.size()) {
      if (counter_ == 255)
        throw Error(Error::Kind::StreamExhausted, "chunk counter exhausted");
      ++counter_;
      Bytes in = input_;
      in.push_back(std::uint8_t(counter_));
      chunk_ = sha_digest(digest_bits_, in);
      chunk_pos_ = 0;
      // The first chunk is accounted to the stream's creation.
      if (counters_ && counter_ > 1) counters_->hash_calls++;
    }
    std::size_t take = std::min(len, chunk_.size() - chunk_pos_);
    std::memcpy(out, chunk_.data() + chunk_pos_, take);
    chunk_pos_ += take;
    out += take;
    len -= take;
  }
}

// ---------------------------------------------------------------------------
// HashSuite

Bytes HashSuite::digest(ByteView data) const {
  if (counters) counters->hash_calls++;
  if (mode == HashMode::Shake) return shake256(data, digest_bytes());
  Bytes full = sha_digest(h_bits, data);
  full.resize(digest_bytes());
  return full;
}

Bytes HashSuite::digest2(ByteView a, ByteView b) const {
  Bytes joined;
  joined.reserve(a.size() + b.size());
  joined.insert(joined.end(), a.begin(), a.end());
  joined.insert(joined.end(), b.begin(), b.end());
  return digest(joined);
}

std::unique_ptr<BitSource> HashSuite::challenge_stream(ByteView input) const {
  if (counters) counters->hash_calls++;
  if (stream_mode == StreamMode::Chunked)
    return std::make_unique<ChunkedBitStream>(h_bits, input, counters);
  return std::make_unique<XofBitStream>(std::uint8_t(0x00), input);
}

std::unique_ptr<BitSource> HashSuite::challenge_stream2(ByteView a, ByteView b) const {
  if (stream_mode == StreamMode::Chunked) {
    Bytes joined;
    joined.reserve(a.size() + b.size());
    joined.insert(joined.end(), a.begin(), a.end());
    joined.insert(joined.end(), b.begin(), b.end());
    return challenge_stream(joined);
  }
  if (counters) counters->hash_calls++;
  return std::make_unique<XofBitStream>(std::uint8_t(0x00), a, b);
}

std::unique_ptr<BitSource> HashSuite::expand_stream(std::uint8_t domain,
                                                    ByteView input) const {
  if (counters) counters->expand_calls++;
  return std::make_unique<XofBitStream>(domain, input);
}

// ---------------------------------------------------------------------------
// XofRng

XofRng::XofRng(ByteView seed) : stream_(seed) {}

XofRng::XofRng(ByteView seed, std::uint64_t subindex)
    : stream_([&] {
        Bytes s(seed.begin(), seed.end());
        for (int i = 0; i < 8; ++i) s.push_back(std::uint8_t(subindex >> (8 * i)));
        return s;
      }()) {}

Bytes XofRng::bytes(std::size_t len) {
  Bytes out(len);
  fill(out.data(), len);
  return out;
}

std::uint64_t XofRng::below(std::uint64_t bound) {
  if (bound < 2) return 0;
  unsigned width = 64 - unsigned(__builtin_clzll(bound - 1));
  for (;;) {
    std::uint64_t v = bits(width);
    if (v < bound) return v;
  }
}

XofRng system_rng() {
  std::random_device rd;
  Bytes seed(32);
  for (std::size_t i = 0; i < seed.size(); i += 4) {
    std::uint32_t w = rd();
    for (std::size_t j = 0; j < 4 && i + j < seed.size(); ++j)
      seed[i + j] = std::uint8_t(w >> (8 * j));
  }
  return XofRng(seed);
}

}  // namespace rvdc
