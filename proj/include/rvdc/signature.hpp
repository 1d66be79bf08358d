#pragma once

#include <variant>

#include "rvdc/id_protocol.hpp"

namespace rvdc {

enum class Scheme : std::uint8_t { Rvdc = 0, Crvdc = 1 };

// Plain Fiat-Shamir signature: all 2*delta commitments, the delta second
// commitments, and one branch payload per round.
struct RvdcSignature {
  Bytes cmt0;  // c_{1,1} || c_{1,2} || ... (2 delta digests)
  Bytes cmt1;  // c_{1,3} || ... (delta digests)
  std::vector<Response> responses;
};

// Compressed form: cmt0 is a single digest over all first commitments; each
// response carries the seed (branch 0) or the compressed error (branch 1)
// plus the commitment the verifier cannot recompute.
struct CrvdcResponse0 {
  RingElement masked_secret;  // u + Gamma'_a(x)
  Bytes seed;                 // lambda bits; P, Q are re-derived from it
  Bytes missing_c2;
};

struct CrvdcResponse1 {
  RankVector masked_codeword;        // Pi(u * G)
  CompressedRankVector masked_error; // factored Pi(Gamma_a(e)), r(m+n) bits
  Bytes missing_c1;
};

using CrvdcResponse = std::variant<CrvdcResponse0, CrvdcResponse1>;

struct CrvdcSignature {
  Bytes cmt0;  // one digest
  Bytes cmt1;  // delta digests
  std::vector<CrvdcResponse> responses;
};

// Deterministic first-challenge derivation: read the challenge stream of
// (cmt0, msg) in k-bit blocks, skip all-equal blocks, stop after delta
// challenges. Sign and verify share this exact procedure.
std::vector<ChallengeA> derive_challenge1(const ParamSet& params, ByteView cmt0,
                                          ByteView msg, HashCounters* counters = nullptr,
                                          unsigned* skipped_blocks = nullptr);
// First delta bits of the challenge stream of cmt1.
std::vector<std::uint8_t> derive_challenge2(const ParamSet& params, ByteView cmt1,
                                            HashCounters* counters = nullptr);

// P from domain byte 0x01, Q from 0x02: successive candidates from the seed
// stream until invertible.
std::pair<BinMatrix, BinMatrix> derive_pq_from_seed(const ParamSet& params,
                                                    ByteView seed,
                                                    HashCounters* counters = nullptr);

// Signing is deterministic in (keys, msg, master_seed); round randomness is
// derived per round so any round schedule gives identical output.
RvdcSignature sign_rvdc(const ParamSet& params, const SecretKey& sk,
                        const PublicKey& pk, ByteView msg, ByteView master_seed,
                        unsigned threads = 1, HashCounters* counters = nullptr);
bool verify_rvdc(const ParamSet& params, const PublicKey& pk, ByteView msg,
                 const RvdcSignature& sgn, unsigned threads = 1,
                 HashCounters* counters = nullptr);

CrvdcSignature sign_crvdc(const ParamSet& params, const SecretKey& sk,
                          const PublicKey& pk, ByteView msg, ByteView master_seed,
                          unsigned threads = 1, HashCounters* counters = nullptr);
bool verify_crvdc(const ParamSet& params, const PublicKey& pk, ByteView msg,
                  const CrvdcSignature& sgn, unsigned threads = 1,
                  HashCounters* counters = nullptr);

// Closed-form bit sizes; signature sizes are expectations over the branch
// coin flips.
struct SizeModel {
  std::uint64_t sk_bits = 0;
  std::uint64_t pk_bits = 0;
  std::uint64_t expected_sgn_bits = 0;
  std::uint64_t rsp_bits_b0 = 0;  // per-round payload, branch 0
  std::uint64_t rsp_bits_b1 = 0;
};

SizeModel size_model(const ParamSet& params, Scheme scheme);

std::size_t signature_bit_size(const ParamSet& params, const RvdcSignature& sgn);
std::size_t signature_bit_size(const ParamSet& params, const CrvdcSignature& sgn);

// File format: 4-byte parameter identifier, 1-byte scheme, tight bit-packed
// body padded with zeros to a byte boundary.
Bytes serialize_signature(const ParamSet& params, const RvdcSignature& sgn);
Bytes serialize_signature(const ParamSet& params, const CrvdcSignature& sgn);

using AnySignature = std::variant<RvdcSignature, CrvdcSignature>;
// MalformedSignature (with a byte offset) on any structural problem.
AnySignature parse_signature(const ParamSet& params, ByteView data);
Scheme peek_signature_scheme(ByteView data);
std::array<std::uint8_t, 4> peek_param_identifier(ByteView data);

// Key files. The secret key is the bare bit string x || e; the public key is
// the 4-byte parameter identifier then y || g || (r - 1).
Bytes serialize_secret_key(const ParamSet& params, const SecretKey& sk);
SecretKey parse_secret_key(const ParamSet& params, ByteView data);
Bytes serialize_public_key(const ParamSet& params, const PublicKey& pk);
PublicKey parse_public_key(const ParamSet& params, ByteView data);

}  // namespace rvdc
