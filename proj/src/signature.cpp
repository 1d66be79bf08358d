#include "rvdc/signature.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "rvdc/errors.hpp"

namespace rvdc {

namespace {

constexpr std::uint8_t kDomainChallenge = 0x00;
constexpr std::uint8_t kDomainP = 0x01;
constexpr std::uint8_t kDomainQ = 0x02;
constexpr std::uint8_t kDomainRoundRng = 0x03;

void run_rounds(unsigned delta, unsigned threads, const std::function<void(unsigned)>& fn) {
  if (threads <= 1) {
    for (unsigned i = 0; i < delta; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<unsigned> next{0};
  unsigned count = std::min(threads, delta);
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        unsigned i = next.fetch_add(1);
        if (i >= delta) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

// Round randomness: XOF(0x03 || master_seed || u32le(attempt) || u32le(round)),
// so rounds are schedule-independent and a re-sign attempt refreshes all of
// them deterministically.
XofRng round_rng(ByteView master_seed, unsigned attempt, unsigned round) {
  Bytes seed;
  seed.reserve(master_seed.size() + 9);
  seed.push_back(kDomainRoundRng);
  seed.insert(seed.end(), master_seed.begin(), master_seed.end());
  for (int i = 0; i < 4; ++i) seed.push_back(std::uint8_t(attempt >> (8 * i)));
  for (int i = 0; i < 4; ++i) seed.push_back(std::uint8_t(round >> (8 * i)));
  return XofRng(seed);
}

ByteView slice(ByteView data, std::size_t offset, std::size_t len) {
  return data.subspan(offset, len);
}

}  // namespace

std::vector<ChallengeA> derive_challenge1(const ParamSet& params, ByteView cmt0,
                                          ByteView msg, HashCounters* counters,
                                          unsigned* skipped_blocks) {
  HashSuite hash = params.hash(counters);
  auto stream = hash.challenge_stream2(cmt0, msg);
  std::vector<ChallengeA> out;
  out.reserve(params.delta);
  unsigned skipped = 0;
  while (out.size() < params.delta) {
    std::uint64_t block = stream->bits(params.k);
    if (!ChallengeA::admissible(params.k, block)) {
      ++skipped;
      continue;
    }
    out.emplace_back(params.k, block);
  }
  if (skipped_blocks) *skipped_blocks = skipped;
  return out;
}

std::vector<std::uint8_t> derive_challenge2(const ParamSet& params, ByteView cmt1,
                                            HashCounters* counters) {
  HashSuite hash = params.hash(counters);
  auto stream = hash.challenge_stream(cmt1);
  std::vector<std::uint8_t> out(params.delta);
  for (auto& b : out) b = std::uint8_t(stream->bit());
  return out;
}

std::pair<BinMatrix, BinMatrix> derive_pq_from_seed(const ParamSet& params,
                                                    ByteView seed,
                                                    HashCounters* counters) {
  HashSuite hash = params.hash(counters);
  auto p_stream = hash.expand_stream(kDomainP, seed);
  auto q_stream = hash.expand_stream(kDomainQ, seed);
  return {BinMatrix::first_invertible_from(params.n, *p_stream),
          BinMatrix::first_invertible_from(params.m, *q_stream)};
}

// ---------------------------------------------------------------------------
// RVDC

RvdcSignature sign_rvdc(const ParamSet& params, const SecretKey& sk,
                        const PublicKey& pk, ByteView msg, ByteView master_seed,
                        unsigned threads, HashCounters* counters) {
  const unsigned delta = params.delta;
  HashSuite hash = params.hash(counters);
  Gf2m field = params.field();
  DcRing ring = DcRing::from_params(params);
  const std::size_t hB = hash.digest_bytes();

  struct Round {
    RingElement u;
    BinMatrix p, q;
    RankVector enc_u{Gf2m(2, 0x7), 0};  // placeholder, assigned in phase 1
    Digest c1, c2, c3;
    RankVector masked_error{Gf2m(2, 0x7), 0};
  };

  for (unsigned attempt = 0;; ++attempt) {
    std::vector<Round> rounds(delta);

    run_rounds(delta, threads, [&](unsigned i) {
      Round& rd = rounds[i];
      XofRng rng = round_rng(master_seed, attempt, i);
      rd.u = ring.sample(rng);
      rd.p = BinMatrix::sample_invertible(params.n, rng);
      rd.q = BinMatrix::sample_invertible(params.m, rng);
      rd.enc_u = ring.encode(rd.u, pk.g);
      rd.c1 = hash.digest2(rd.p.to_bytes(), rd.q.to_bytes());
      rd.c2 = hash.digest(pi_map(rd.p, rd.q, rd.enc_u).to_bytes());
    });

    Bytes cmt0;
    cmt0.reserve(2 * delta * hB);
    for (const Round& rd : rounds) {
      cmt0.insert(cmt0.end(), rd.c1.begin(), rd.c1.end());
      cmt0.insert(cmt0.end(), rd.c2.begin(), rd.c2.end());
    }
    std::vector<ChallengeA> ch1 = derive_challenge1(params, cmt0, msg, counters);

    run_rounds(delta, threads, [&](unsigned i) {
      Round& rd = rounds[i];
      rd.masked_error = ring.gamma(ch1[i], sk.e);
      rd.c3 = hash.digest(pi_map(rd.p, rd.q, rd.enc_u.add(rd.masked_error)).to_bytes());
    });

    Bytes cmt1;
    cmt1.reserve(delta * hB);
    for (const Round& rd : rounds) cmt1.insert(cmt1.end(), rd.c3.begin(), rd.c3.end());
    std::vector<std::uint8_t> ch2 = derive_challenge2(params, cmt1, counters);

    // Gamma_a drops the error rank for a tiny fraction of non-unit a(X); a
    // branch-1 round hit by that cannot verify, so re-sign with fresh
    // randomness. The signer checks this before emitting anything.
    bool ok = true;
    for (unsigned i = 0; i < delta && ok; ++i)
      if (ch2[i] == 1 && rounds[i].masked_error.rank_weight() != params.r) ok = false;
    if (!ok) continue;

    RvdcSignature sgn;
    sgn.cmt0 = std::move(cmt0);
    sgn.cmt1 = std::move(cmt1);
    sgn.responses.resize(delta, Response{ResponseB0{}});
    run_rounds(delta, threads, [&](unsigned i) {
      Round& rd = rounds[i];
      if (ch2[i] == 0) {
        sgn.responses[i] =
            ResponseB0{std::move(rd.p), std::move(rd.q),
                       ring.add(rd.u, ring.gamma_prime(ch1[i], sk.x))};
      } else {
        sgn.responses[i] = ResponseB1{pi_map(rd.p, rd.q, rd.enc_u),
                                      pi_map(rd.p, rd.q, rd.masked_error)};
      }
    });
    return sgn;
  }
}

bool verify_rvdc(const ParamSet& params, const PublicKey& pk, ByteView msg,
                 const RvdcSignature& sgn, unsigned threads, HashCounters* counters) {
  const unsigned delta = params.delta;
  HashSuite hash = params.hash(counters);
  DcRing ring = DcRing::from_params(params);
  const std::size_t hB = hash.digest_bytes();
  if (sgn.cmt0.size() != 2 * delta * hB || sgn.cmt1.size() != delta * hB ||
      sgn.responses.size() != delta)
    throw Error(Error::Kind::MalformedSignature, "signature field lengths");

  std::vector<ChallengeA> ch1 = derive_challenge1(params, sgn.cmt0, msg, counters);
  std::vector<std::uint8_t> ch2 = derive_challenge2(params, sgn.cmt1, counters);

  std::atomic<bool> ok{true};
  run_rounds(delta, threads, [&](unsigned i) {
    if (!ok.load(std::memory_order_relaxed)) return;
    ByteView c3 = slice(sgn.cmt1, i * hB, hB);
    bool round_ok = false;
    if (ch2[i] == 0) {
      const auto* rsp = std::get_if<ResponseB0>(&sgn.responses[i]);
      if (rsp && rsp->P.rows() == params.n && rsp->P.cols() == params.n &&
          rsp->Q.rows() == params.m && rsp->Q.cols() == params.m &&
          rsp->masked_secret.c.size() == params.k) {
        ByteView c1 = slice(sgn.cmt0, 2 * i * hB, hB);
        Digest c1_check = hash.digest2(rsp->P.to_bytes(), rsp->Q.to_bytes());
        if (std::equal(c1.begin(), c1.end(), c1_check.begin())) {
          RankVector rebuilt =
              ring.encode(rsp->masked_secret, pk.g).add(ring.gamma(ch1[i], pk.y));
          Digest c3_check = hash.digest(pi_map(rsp->P, rsp->Q, rebuilt).to_bytes());
          round_ok = std::equal(c3.begin(), c3.end(), c3_check.begin());
        }
      }
    } else {
      const auto* rsp = std::get_if<ResponseB1>(&sgn.responses[i]);
      if (rsp && rsp->masked_codeword.size() == params.n &&
          rsp->masked_error.size() == params.n) {
        ByteView c2 = slice(sgn.cmt0, (2 * i + 1) * hB, hB);
        Digest c2_check = hash.digest(rsp->masked_codeword.to_bytes());
        if (std::equal(c2.begin(), c2.end(), c2_check.begin())) {
          Digest c3_check =
              hash.digest(rsp->masked_codeword.add(rsp->masked_error).to_bytes());
          round_ok = std::equal(c3.begin(), c3.end(), c3_check.begin()) &&
                     rsp->masked_error.rank_weight() == pk.r;
        }
      }
    }
    if (!round_ok) ok.store(false, std::memory_order_relaxed);
  });
  return ok.load();
}

// ---------------------------------------------------------------------------
// cRVDC

CrvdcSignature sign_crvdc(const ParamSet& params, const SecretKey& sk,
                          const PublicKey& pk, ByteView msg, ByteView master_seed,
                          unsigned threads, HashCounters* counters) {
  const unsigned delta = params.delta;
  HashSuite hash = params.hash(counters);
  Gf2m field = params.field();
  DcRing ring = DcRing::from_params(params);
  const std::size_t hB = hash.digest_bytes();

  struct Round {
    RingElement u;
    Bytes seed;
    BinMatrix p, q;
    RankVector enc_u{Gf2m(2, 0x7), 0};
    Digest c1, c2, c3;
    RankVector masked_error{Gf2m(2, 0x7), 0};
  };

  for (unsigned attempt = 0;; ++attempt) {
    std::vector<Round> rounds(delta);

    run_rounds(delta, threads, [&](unsigned i) {
      Round& rd = rounds[i];
      XofRng rng = round_rng(master_seed, attempt, i);
      rd.u = ring.sample(rng);
      rd.seed = rng.bytes(params.lambda_bytes());
      auto pq = derive_pq_from_seed(params, rd.seed, counters);
      rd.p = std::move(pq.first);
      rd.q = std::move(pq.second);
      rd.enc_u = ring.encode(rd.u, pk.g);
      rd.c1 = hash.digest2(rd.p.to_bytes(), rd.q.to_bytes());
      rd.c2 = hash.digest(pi_map(rd.p, rd.q, rd.enc_u).to_bytes());
    });

    Bytes all_commitments;
    all_commitments.reserve(2 * delta * hB);
    for (const Round& rd : rounds) {
      all_commitments.insert(all_commitments.end(), rd.c1.begin(), rd.c1.end());
      all_commitments.insert(all_commitments.end(), rd.c2.begin(), rd.c2.end());
    }
    Bytes cmt0 = hash.digest(all_commitments);
    std::vector<ChallengeA> ch1 = derive_challenge1(params, cmt0, msg, counters);

    run_rounds(delta, threads, [&](unsigned i) {
      Round& rd = rounds[i];
      rd.masked_error = pi_map(rd.p, rd.q, ring.gamma(ch1[i], sk.e));
      rd.c3 = hash.digest(
          pi_map(rd.p, rd.q, rd.enc_u).add(rd.masked_error).to_bytes());
    });

    Bytes cmt1;
    cmt1.reserve(delta * hB);
    for (const Round& rd : rounds) cmt1.insert(cmt1.end(), rd.c3.begin(), rd.c3.end());
    std::vector<std::uint8_t> ch2 = derive_challenge2(params, cmt1, counters);

    bool ok = true;
    for (unsigned i = 0; i < delta && ok; ++i)
      if (ch2[i] == 1 && rounds[i].masked_error.rank_weight() != params.r) ok = false;
    if (!ok) continue;

    CrvdcSignature sgn;
    sgn.cmt0 = std::move(cmt0);
    sgn.cmt1 = std::move(cmt1);
    sgn.responses.resize(delta, CrvdcResponse{CrvdcResponse0{}});
    run_rounds(delta, threads, [&](unsigned i) {
      Round& rd = rounds[i];
      if (ch2[i] == 0) {
        sgn.responses[i] = CrvdcResponse0{
            ring.add(rd.u, ring.gamma_prime(ch1[i], sk.x)), std::move(rd.seed),
            std::move(rd.c2)};
      } else {
        sgn.responses[i] =
            CrvdcResponse1{pi_map(rd.p, rd.q, rd.enc_u),
                           compress_rank_vector(rd.masked_error), std::move(rd.c1)};
      }
    });
    return sgn;
  }
}

bool verify_crvdc(const ParamSet& params, const PublicKey& pk, ByteView msg,
                  const CrvdcSignature& sgn, unsigned threads, HashCounters* counters) {
  const unsigned delta = params.delta;
  HashSuite hash = params.hash(counters);
  Gf2m field = params.field();
  DcRing ring = DcRing::from_params(params);
  const std::size_t hB = hash.digest_bytes();
  if (sgn.cmt0.size() != hB || sgn.cmt1.size() != delta * hB ||
      sgn.responses.size() != delta)
    throw Error(Error::Kind::MalformedSignature, "signature field lengths");

  std::vector<ChallengeA> ch1 = derive_challenge1(params, sgn.cmt0, msg, counters);
  std::vector<std::uint8_t> ch2 = derive_challenge2(params, sgn.cmt1, counters);

  // Reconstituted first commitments, checked against cmt0 at the end.
  Bytes all_commitments(2 * delta * hB);
  std::atomic<bool> ok{true};
  run_rounds(delta, threads, [&](unsigned i) {
    if (!ok.load(std::memory_order_relaxed)) return;
    ByteView c3 = slice(sgn.cmt1, i * hB, hB);
    Digest c1, c2;
    bool round_ok = false;
    if (ch2[i] == 0) {
      const auto* rsp = std::get_if<CrvdcResponse0>(&sgn.responses[i]);
      if (rsp && rsp->masked_secret.c.size() == params.k &&
          rsp->seed.size() == params.lambda_bytes() && rsp->missing_c2.size() == hB) {
        auto [p, q] = derive_pq_from_seed(params, rsp->seed, counters);
        c1 = hash.digest2(p.to_bytes(), q.to_bytes());
        c2 = rsp->missing_c2;
        RankVector rebuilt =
            ring.encode(rsp->masked_secret, pk.g).add(ring.gamma(ch1[i], pk.y));
        Digest c3_check = hash.digest(pi_map(p, q, rebuilt).to_bytes());
        round_ok = std::equal(c3.begin(), c3.end(), c3_check.begin());
      }
    } else {
      const auto* rsp = std::get_if<CrvdcResponse1>(&sgn.responses[i]);
      if (rsp && rsp->masked_codeword.size() == params.n &&
          rsp->masked_error.support.size() == params.r &&
          rsp->masked_error.coords.rows() == params.r &&
          rsp->masked_error.coords.cols() == params.n &&
          rsp->missing_c1.size() == hB) {
        c1 = rsp->missing_c1;
        c2 = hash.digest(rsp->masked_codeword.to_bytes());
        // Both factors of the compressed error must have rank r; together
        // that is exactly w_R = r.
        RankVector support(field, std::vector<Gf2mElem>(rsp->masked_error.support));
        if (support.rank_weight() == params.r &&
            rsp->masked_error.coords.rank() == params.r) {
          RankVector masked_error =
              decompress_rank_vector(field, rsp->masked_error, params.n);
          Digest c3_check =
              hash.digest(rsp->masked_codeword.add(masked_error).to_bytes());
          round_ok = std::equal(c3.begin(), c3.end(), c3_check.begin());
        }
      }
    }
    if (!round_ok) {
      ok.store(false, std::memory_order_relaxed);
      return;
    }
    std::copy(c1.begin(), c1.end(), all_commitments.begin() + 2 * i * hB);
    std::copy(c2.begin(), c2.end(), all_commitments.begin() + (2 * i + 1) * hB);
  });
  if (!ok.load()) return false;
  Digest cmt0_check = hash.digest(all_commitments);
  return std::equal(sgn.cmt0.begin(), sgn.cmt0.end(), cmt0_check.begin());
}

// ---------------------------------------------------------------------------
// Size model and serialization

SizeModel size_model(const ParamSet& params, Scheme scheme) {
  const std::uint64_t m = params.m, n = params.n, k = params.k, r = params.r,
                      delta = params.delta, h = params.h_bits,
                      lambda = params.lambda_bits();
  SizeModel out;
  out.sk_bits = m * (k + n);
  out.pk_bits = m * (n + k) + params.r_field_bits();
  if (scheme == Scheme::Rvdc) {
    out.rsp_bits_b0 = n * n + m * m + m * k;
    out.rsp_bits_b1 = 2 * m * n;
    out.expected_sgn_bits =
        3 * delta * h + delta * (out.rsp_bits_b0 + out.rsp_bits_b1) / 2;
  } else {
    out.rsp_bits_b0 = m * k + lambda + 2 * lambda;
    out.rsp_bits_b1 = m * n + r * (m + n) + 2 * lambda;
    out.expected_sgn_bits =
        2 * lambda + delta * 2 * lambda +
        delta * (out.rsp_bits_b0 + out.rsp_bits_b1) / 2;
  }
  return out;
}

namespace {

std::size_t count_b0(const std::vector<std::uint8_t>& ch2) {
  std::size_t c = 0;
  for (auto b : ch2) c += (b == 0);
  return c;
}

void append_ring(BitWriter& w, const Gf2m& field, const RingElement& x) {
  for (const Gf2mElem& c : x.c) w.put_bits(c.bits, field.degree());
}

RingElement read_ring(const Gf2m& field, unsigned k, BitReader& r) {
  RingElement out{std::vector<Gf2mElem>(k)};
  for (unsigned i = 0; i < k; ++i) out.c[i] = {r.get_bits(field.degree())};
  return out;
}

void write_header(Bytes& out, const ParamSet& params, Scheme scheme) {
  auto ident = params.identifier();
  out.insert(out.end(), ident.begin(), ident.end());
  out.push_back(std::uint8_t(scheme));
}

void check_header(const ParamSet& params, ByteView data, Scheme expected) {
  if (data.size() < 5)
    throw Error(Error::Kind::MalformedSignature, "missing header", data.size());
  auto ident = params.identifier();
  for (int i = 0; i < 4; ++i)
    if (data[i] != ident[i])
      throw Error(Error::Kind::MalformedSignature, "parameter identifier mismatch", i);
  if (data[4] != std::uint8_t(expected))
    throw Error(Error::Kind::MalformedSignature, "scheme id mismatch", 4);
}

}  // namespace

std::size_t signature_bit_size(const ParamSet& params, const RvdcSignature& sgn) {
  SizeModel model = size_model(params, Scheme::Rvdc);
  std::size_t bits = 8 * (sgn.cmt0.size() + sgn.cmt1.size());
  for (const Response& rsp : sgn.responses)
    bits += std::holds_alternative<ResponseB0>(rsp) ? model.rsp_bits_b0
                                                    : model.rsp_bits_b1;
  return bits;
}

std::size_t signature_bit_size(const ParamSet& params, const CrvdcSignature& sgn) {
  SizeModel model = size_model(params, Scheme::Crvdc);
  std::size_t bits = 8 * (sgn.cmt0.size() + sgn.cmt1.size());
  for (const CrvdcResponse& rsp : sgn.responses)
    bits += std::holds_alternative<CrvdcResponse0>(rsp) ? model.rsp_bits_b0
                                                        : model.rsp_bits_b1;
  return bits;
}

Bytes serialize_signature(const ParamSet& params, const RvdcSignature& sgn) {
  Gf2m field = params.field();
  Bytes out;
  write_header(out, params, Scheme::Rvdc);
  BitWriter w;
  w.put_bytes(sgn.cmt0);
  w.put_bytes(sgn.cmt1);
  for (const Response& rsp : sgn.responses) {
    if (const auto* r0 = std::get_if<ResponseB0>(&rsp)) {
      r0->P.append_bits(w);
      r0->Q.append_bits(w);
      append_ring(w, field, r0->masked_secret);
    } else {
      const auto& r1 = std::get<ResponseB1>(rsp);
      r1.masked_codeword.append_bits(w);
      r1.masked_error.append_bits(w);
    }
  }
  Bytes body = w.take();
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

Bytes serialize_signature(const ParamSet& params, const CrvdcSignature& sgn) {
  Gf2m field = params.field();
  Bytes out;
  write_header(out, params, Scheme::Crvdc);
  BitWriter w;
  w.put_bytes(sgn.cmt0);
  w.put_bytes(sgn.cmt1);
  for (const CrvdcResponse& rsp : sgn.responses) {
    if (const auto* r0 = std::get_if<CrvdcResponse0>(&rsp)) {
      append_ring(w, field, r0->masked_secret);
      w.put_bytes(r0->seed);
      w.put_bytes(r0->missing_c2);
    } else {
      const auto& r1 = std::get<CrvdcResponse1>(rsp);
      if (r1.masked_error.support.size() != params.r)
        throw Error(Error::Kind::InvalidRank, "compressed error rank mismatch");
      r1.masked_codeword.append_bits(w);
      for (const Gf2mElem& e : r1.masked_error.support)
        w.put_bits(e.bits, field.degree());
      r1.masked_error.coords.append_bits(w);
      w.put_bytes(r1.missing_c1);
    }
  }
  Bytes body = w.take();
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

Scheme peek_signature_scheme(ByteView data) {
  if (data.size() < 5)
    throw Error(Error::Kind::MalformedSignature, "missing header", data.size());
  if (data[4] > 1)
    throw Error(Error::Kind::MalformedSignature, "unknown scheme id", 4);
  return Scheme(data[4]);
}

std::array<std::uint8_t, 4> peek_param_identifier(ByteView data) {
  if (data.size() < 4)
    throw Error(Error::Kind::MalformedSignature, "missing header", data.size());
  return {data[0], data[1], data[2], data[3]};
}

AnySignature parse_signature(const ParamSet& params, ByteView data) {
  Scheme scheme = peek_signature_scheme(data);
  check_header(params, data, scheme);
  Gf2m field = params.field();
  const unsigned delta = params.delta;
  const std::size_t hB = params.h_bits / 8;
  BitReader reader(data.subspan(5));
  // Challenge re-derivation during parsing is layout work, not part of the
  // verification algorithm's hash accounting.
  if (scheme == Scheme::Rvdc) {
    RvdcSignature sgn;
    sgn.cmt0 = reader.get_bytes(2 * delta * hB);
    sgn.cmt1 = reader.get_bytes(delta * hB);
    std::vector<std::uint8_t> ch2 = derive_challenge2(params, sgn.cmt1);
    for (unsigned i = 0; i < delta; ++i) {
      if (ch2[i] == 0) {
        BinMatrix p = BinMatrix::read_bits(params.n, params.n, reader);
        BinMatrix q = BinMatrix::read_bits(params.m, params.m, reader);
        RingElement s = read_ring(field, params.k, reader);
        sgn.responses.push_back(ResponseB0{std::move(p), std::move(q), std::move(s)});
      } else {
        RankVector v1 = RankVector::read_bits(field, params.n, reader);
        RankVector v2 = RankVector::read_bits(field, params.n, reader);
        sgn.responses.push_back(ResponseB1{std::move(v1), std::move(v2)});
      }
    }
    reader.expect_end();
    return sgn;
  }
  CrvdcSignature sgn;
  sgn.cmt0 = reader.get_bytes(hB);
  sgn.cmt1 = reader.get_bytes(delta * hB);
  std::vector<std::uint8_t> ch2 = derive_challenge2(params, sgn.cmt1);
  for (unsigned i = 0; i < delta; ++i) {
    if (ch2[i] == 0) {
      RingElement s = read_ring(field, params.k, reader);
      Bytes seed = reader.get_bytes(params.lambda_bytes());
      Bytes c2 = reader.get_bytes(hB);
      sgn.responses.push_back(
          CrvdcResponse0{std::move(s), std::move(seed), std::move(c2)});
    } else {
      RankVector v1 = RankVector::read_bits(field, params.n, reader);
      CompressedRankVector comp;
      comp.support.resize(params.r);
      for (unsigned t = 0; t < params.r; ++t)
        comp.support[t] = {reader.get_bits(field.degree())};
      comp.coords = BinMatrix::read_bits(params.r, params.n, reader);
      Bytes c1 = reader.get_bytes(hB);
      sgn.responses.push_back(
          CrvdcResponse1{std::move(v1), std::move(comp), std::move(c1)});
    }
  }
  reader.expect_end();
  return sgn;
}

// ---------------------------------------------------------------------------
// Key files

Bytes serialize_secret_key(const ParamSet& params, const SecretKey& sk) {
  Gf2m field = params.field();
  BitWriter w;
  append_ring(w, field, sk.x);
  sk.e.append_bits(w);
  return w.take();
}

SecretKey parse_secret_key(const ParamSet& params, ByteView data) {
  Gf2m field = params.field();
  std::size_t expect = (std::size_t(params.m) * (params.k + params.n) + 7) / 8;
  if (data.size() != expect)
    throw Error(Error::Kind::MalformedSignature, "secret key length", data.size());
  BitReader reader(data);
  RingElement x = read_ring(field, params.k, reader);
  RankVector e = RankVector::read_bits(field, params.n, reader);
  reader.expect_end();
  return SecretKey{std::move(x), std::move(e)};
}

Bytes serialize_public_key(const ParamSet& params, const PublicKey& pk) {
  Gf2m field = params.field();
  auto ident = params.identifier();
  Bytes out(ident.begin(), ident.end());
  BitWriter w;
  pk.y.append_bits(w);
  append_ring(w, field, pk.g);
  w.put_bits(pk.r - 1, params.r_field_bits());
  Bytes body = w.take();
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

PublicKey parse_public_key(const ParamSet& params, ByteView data) {
  Gf2m field = params.field();
  auto ident = params.identifier();
  if (data.size() < 4)
    throw Error(Error::Kind::MalformedSignature, "missing header", data.size());
  for (int i = 0; i < 4; ++i)
    if (data[i] != ident[i])
      throw Error(Error::Kind::MalformedSignature, "parameter identifier mismatch", i);
  std::size_t body_bits =
      std::size_t(params.m) * (params.n + params.k) + params.r_field_bits();
  if (data.size() != 4 + (body_bits + 7) / 8)
    throw Error(Error::Kind::MalformedSignature, "public key length", data.size());
  BitReader reader(data.subspan(4));
  RankVector y = RankVector::read_bits(field, params.n, reader);
  RingElement g = read_ring(field, params.k, reader);
  unsigned r = unsigned(reader.get_bits(params.r_field_bits())) + 1;
  reader.expect_end();
  if (r != params.r)
    throw Error(Error::Kind::MalformedSignature, "stored rank disagrees with parameters",
                data.size() - 1);
  return PublicKey{std::move(y), std::move(g), r};
}

}  // namespace rvdc
