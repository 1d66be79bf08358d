#include <doctest.h>

#include "rvdc/hash.hpp"

using namespace rvdc;

namespace {
Bytes bytes_of(const char* s) {
  return Bytes(reinterpret_cast<const std::uint8_t*>(s),
               reinterpret_cast<const std::uint8_t*>(s) + std::char_traits<char>::length(s));
}
}  // namespace

TEST_CASE("shake256 matches reference vectors") {
  CHECK(to_hex(shake256({}, 16)) == "46b9dd2b0ba88d13233b3feb743eeb24");
  CHECK(to_hex(shake256(bytes_of("abc"), 16)) == "483366601360a8771c6863080cc4114d");
  CHECK(to_hex(shake256({}, 48)) ==
        "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f"
        "d75dc4ddd8c0f200cb05019d67b592f6");
  CHECK(to_hex(shake256(bytes_of("rvdc oracle seed"), 48)) ==
        "4362a440cdb166521806f89590f198400aff35b8e0d22e2651db7dcc341e9c8d"
        "83f62f163bdcd6fddb9f35c60dcfbad1");
}

TEST_CASE("sha digests match reference vectors") {
  Bytes abc = bytes_of("abc");
  CHECK(to_hex(sha_digest(160, abc)) == "a9993e364706816aba3e25717850c26c9cd0d89d");
  CHECK(to_hex(sha_digest(256, abc)) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(to_hex(sha_digest(384, abc)).substr(0, 32) == "cb00753f45a35e8bb5a03d699ac65007");
  CHECK(to_hex(sha_digest(512, abc)).substr(0, 32) == "ddaf35a193617abacc417349ae204131");
  CHECK_THROWS_AS(sha_digest(100, abc), Error);
}

TEST_CASE("xof output extends as a prefix") {
  Bytes input = bytes_of("stream prefix");
  Bytes short_out = shake256(input, 40);
  Bytes long_out = shake256(input, 400);
  CHECK(std::equal(short_out.begin(), short_out.end(), long_out.begin()));

  // Incremental squeeze agrees with one-shot output across block boundaries.
  Shake256 x;
  x.absorb(input);
  Bytes pieces(400);
  x.squeeze(pieces.data(), 100);
  x.squeeze(pieces.data() + 100, 300);
  CHECK(pieces == long_out);
}

TEST_CASE("bit sources read LSB-first") {
  XofBitStream s(bytes_of("bit order"));
  Bytes raw = shake256(bytes_of("bit order"), 2);
  for (unsigned byte = 0; byte < 2; ++byte)
    for (unsigned i = 0; i < 8; ++i)
      CHECK(unsigned(s.bit()) == ((raw[byte] >> i) & 1u));
}

TEST_CASE("chunked stream is deterministic and counts extra chunks") {
  HashCounters counters;
  Bytes input = bytes_of("chunks");
  ChunkedBitStream a(256, input, &counters);
  ChunkedBitStream b(256, input, nullptr);
  Bytes av(100), bv(100);
  a.bytes(av.data(), 100);  // 100 bytes > three 32-byte digests
  b.bytes(bv.data(), 100);
  CHECK(av == bv);
  CHECK(counters.hash_calls.load() == 3);  // chunks beyond the first

  // First chunk equals hash(input || 0x01).
  Bytes tagged = input;
  tagged.push_back(0x01);
  Bytes first = sha_digest(256, tagged);
  CHECK(std::equal(first.begin(), first.end(), av.begin()));
}

TEST_CASE("hash suite modes and counters") {
  HashCounters counters;
  HashSuite sha{256, HashMode::Sha2, StreamMode::Xof, &counters};
  HashSuite shake{256, HashMode::Shake, StreamMode::Xof, nullptr};
  Bytes msg = bytes_of("abc");
  CHECK(sha.digest(msg) == sha_digest(256, msg));
  CHECK(shake.digest(msg) == shake256(msg, 32));
  CHECK(sha.digest(msg).size() == 32);
  auto stream = sha.challenge_stream(msg);
  (void)stream->bits(16);
  CHECK(counters.hash_calls.load() == 3);  // two digests + one stream
  CHECK(counters.expand_calls.load() == 0);
  auto expand = sha.expand_stream(0x01, msg);
  (void)expand->bits(8);
  CHECK(counters.hash_calls.load() == 3);
  CHECK(counters.expand_calls.load() == 1);

  // Domain bytes separate the streams.
  auto p = sha.expand_stream(0x01, msg);
  auto q = sha.expand_stream(0x02, msg);
  CHECK(p->bits(64) != q->bits(64));
}

TEST_CASE("xof rng determinism and rejection bound") {
  Bytes seed = bytes_of("rng seed");
  XofRng a(seed), b(seed);
  CHECK(a.bits(64) == b.bits(64));
  XofRng c(seed, 1), d(seed, 2);
  CHECK(c.bits(64) != d.bits(64));
  XofRng e(seed);
  for (int i = 0; i < 1000; ++i) CHECK(e.below(6) < 6);
}
