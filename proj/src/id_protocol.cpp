#include "rvdc/id_protocol.hpp"

#include "rvdc/errors.hpp"

namespace rvdc {

namespace {

Digest hash_matrices(const HashSuite& hash, const BinMatrix& p, const BinMatrix& q) {
  return hash.digest2(p.to_bytes(), q.to_bytes());
}

Digest hash_vector(const HashSuite& hash, const RankVector& v) {
  return hash.digest(v.to_bytes());
}

}  // namespace

Prover::Prover(const ParamSet& params, const SecretKey& sk, const PublicKey& pk,
               HashCounters* counters)
    : params_(params),
      sk_(sk),
      pk_(pk),
      hash_(params.hash(counters)),
      field_(params.field()),
      ring_(DcRing::from_params(params)),
      masked_codeword_(field_, params.n) {}

Commitments Prover::commit(XofRng& rng) {
  u_ = ring_.sample(rng);
  p_ = BinMatrix::sample_invertible(params_.n, rng);
  q_ = BinMatrix::sample_invertible(params_.m, rng);
  masked_codeword_ = pi_map(p_, q_, ring_.encode(u_, pk_.g));
  phase_ = Phase::Committed;
  a_.reset();
  return Commitments{hash_matrices(hash_, p_, q_), hash_vector(hash_, masked_codeword_)};
}

Digest Prover::commit2(const ChallengeA& a) {
  if (phase_ != Phase::Committed)
    throw Error(Error::Kind::PhaseViolation, "commit2 before commit");
  a_ = a;
  phase_ = Phase::Challenged;
  RankVector masked = ring_.encode(u_, pk_.g).add(ring_.gamma(a, sk_.e));
  return hash_vector(hash_, pi_map(p_, q_, masked));
}

Response Prover::respond(int b) {
  if (phase_ != Phase::Challenged)
    throw Error(Error::Kind::PhaseViolation, "respond before second challenge");
  if (b != 0 && b != 1)
    throw Error(Error::Kind::MalformedTranscript, "challenge bit out of range");
  phase_ = Phase::Start;
  if (b == 0)
    return ResponseB0{p_, q_, ring_.add(u_, ring_.gamma_prime(*a_, sk_.x))};
  return ResponseB1{masked_codeword_, pi_map(p_, q_, ring_.gamma(*a_, sk_.e))};
}

ChallengeA verifier_challenge_a(const ParamSet& params, XofRng& rng) {
  return ChallengeA::sample(params.k, rng);
}

int verifier_challenge_b(XofRng& rng) { return rng.bit() ? 1 : 0; }

bool verifier_check(const ParamSet& params, const PublicKey& pk, const Transcript& t,
                    HashCounters* counters) {
  HashSuite hash = params.hash(counters);
  Gf2m field = params.field();
  DcRing ring = DcRing::from_params(params);
  if (t.a.k() != params.k)
    throw Error(Error::Kind::MalformedTranscript, "challenge length");
  if (t.b == 0) {
    const auto* rsp = std::get_if<ResponseB0>(&t.rsp);
    if (!rsp) throw Error(Error::Kind::MalformedTranscript, "branch 0 payload expected");
    if (rsp->P.rows() != params.n || rsp->P.cols() != params.n ||
        rsp->Q.rows() != params.m || rsp->Q.cols() != params.m ||
        rsp->masked_secret.c.size() != params.k)
      throw Error(Error::Kind::MalformedTranscript, "branch 0 payload shape");
    if (hash_matrices(hash, rsp->P, rsp->Q) != t.c1) return false;
    RankVector rebuilt =
        ring.encode(rsp->masked_secret, pk.g).add(ring.gamma(t.a, pk.y));
    return hash_vector(hash, pi_map(rsp->P, rsp->Q, rebuilt)) == t.c3;
  }
  if (t.b == 1) {
    const auto* rsp = std::get_if<ResponseB1>(&t.rsp);
    if (!rsp) throw Error(Error::Kind::MalformedTranscript, "branch 1 payload expected");
    if (rsp->masked_codeword.size() != params.n || rsp->masked_error.size() != params.n)
      throw Error(Error::Kind::MalformedTranscript, "branch 1 payload shape");
    if (hash_vector(hash, rsp->masked_codeword) != t.c2) return false;
    if (hash_vector(hash, rsp->masked_codeword.add(rsp->masked_error)) != t.c3)
      return false;
    return rsp->masked_error.rank_weight() == pk.r;
  }
  throw Error(Error::Kind::MalformedTranscript, "challenge bit out of range");
}

Transcript zk_simulate(const ParamSet& params, const PublicKey& pk, int branch,
                       XofRng& rng) {
  HashSuite hash = params.hash();
  Gf2m field = params.field();
  DcRing ring = DcRing::from_params(params);
  ChallengeA a = ChallengeA::sample(params.k, rng);
  if (branch == 0) {
    BinMatrix p = BinMatrix::sample_invertible(params.n, rng);
    BinMatrix q = BinMatrix::sample_invertible(params.m, rng);
    RingElement v = ring.sample(rng);
    Digest c1 = hash_matrices(hash, p, q);
    Digest c3 = hash_vector(hash, pi_map(p, q, ring.encode(v, pk.g).add(ring.gamma(a, pk.y))));
    Digest c2 = rng.bytes(hash.digest_bytes());  // never opened on this branch
    return Transcript{std::move(c1), std::move(c2), a, std::move(c3), 0,
                      ResponseB0{std::move(p), std::move(q), std::move(v)}};
  }
  BinMatrix p = BinMatrix::sample_invertible(params.n, rng);
  BinMatrix q = BinMatrix::sample_invertible(params.m, rng);
  RankVector v = RankVector::sample(field, params.n, rng);
  RankVector z = RankVector::sample_rank_exact(field, params.n, params.r, rng);
  RankVector masked = pi_map(p, q, v);
  Digest c2 = hash_vector(hash, masked);
  Digest c3 = hash_vector(hash, masked.add(z));
  Digest c1 = rng.bytes(hash.digest_bytes());
  return Transcript{std::move(c1), std::move(c2), a, std::move(c3), 1,
                    ResponseB1{std::move(masked), std::move(z)}};
}

CheatingProver::CheatingProver(const ParamSet& params, const PublicKey& pk, int guess,
                               XofRng& rng)
    : params_(params),
      pk_(pk),
      hash_(params.hash()),
      field_(params.field()),
      ring_(DcRing::from_params(params)),
      guess_(guess),
      masked_codeword_(field_, params.n),
      fake_masked_error_(field_, params.n) {
  u_ = ring_.sample(rng);
  p_ = BinMatrix::sample_invertible(params_.n, rng);
  q_ = BinMatrix::sample_invertible(params_.m, rng);
  masked_codeword_ = pi_map(p_, q_, ring_.encode(u_, pk_.g));
  if (guess_ == 0) {
    // Consistent pair (x~, e~ = y - x~ G); e~ almost surely has the wrong rank.
    fake_secret_ = ring_.sample(rng);
  } else {
    // Substitute a fresh rank-r vector for Pi(Gamma_a(e)).
    fake_masked_error_ =
        pi_map(p_, q_, RankVector::sample_rank_exact(field_, params_.n, params_.r, rng));
  }
}

Commitments CheatingProver::commit() {
  return Commitments{hash_matrices(hash_, p_, q_), hash_vector(hash_, masked_codeword_)};
}

Digest CheatingProver::commit2(const ChallengeA& a) {
  a_ = a;
  if (guess_ == 0) {
    // Computable from the public key alone via the completeness identity.
    RankVector rebuilt = ring_.encode(ring_.add(u_, ring_.gamma_prime(a, fake_secret_)), pk_.g)
                             .add(ring_.gamma(a, pk_.y));
    return hash_vector(hash_, pi_map(p_, q_, rebuilt));
  }
  return hash_vector(hash_, masked_codeword_.add(fake_masked_error_));
}

Response CheatingProver::respond(int b) {
  if (b == 0) {
    // When the guess was 1 there is nothing consistent to reveal; this
    // best-effort payload passes the c1 check and fails the c3 equation.
    RingElement s = guess_ == 0 ? ring_.add(u_, ring_.gamma_prime(*a_, fake_secret_)) : u_;
    return ResponseB0{p_, q_, std::move(s)};
  }
  if (guess_ == 1) return ResponseB1{masked_codeword_, fake_masked_error_};
  // Forced by the hash bindings: reveal Pi(Gamma_a(e~)) for the wrong-rank e~.
  RankVector fake_error = pk_.y.add(ring_.encode(fake_secret_, pk_.g));
  return ResponseB1{masked_codeword_, pi_map(p_, q_, ring_.gamma(*a_, fake_error))};
}

CheatOutcome run_cheating_experiment(const ParamSet& params, std::uint64_t trials,
                                     XofRng& rng) {
  KeyPair keys = keygen(params, rng);
  CheatOutcome out;
  for (std::uint64_t t = 0; t < trials; ++t) {
    int guess = verifier_challenge_b(rng);
    CheatingProver adversary(params, keys.pk, guess, rng);
    Commitments cmt = adversary.commit();
    ChallengeA a = verifier_challenge_a(params, rng);
    Digest c3 = adversary.commit2(a);
    int b = verifier_challenge_b(rng);
    Transcript tr{cmt.c1, cmt.c2, a, c3, b, adversary.respond(b)};
    ++out.trials;
    if (verifier_check(params, keys.pk, tr)) ++out.successes;
  }
  return out;
}

HonestRunStats run_honest_rounds(const ParamSet& params, std::uint64_t runs,
                                 XofRng& rng) {
  KeyPair keys = keygen(params, rng);
  Prover prover(params, keys.sk, keys.pk);
  HonestRunStats stats;
  for (std::uint64_t i = 0; i < runs; ++i) {
    Commitments cmt = prover.commit(rng);
    ChallengeA a = verifier_challenge_a(params, rng);
    Digest c3 = prover.commit2(a);
    int b = verifier_challenge_b(rng);
    Transcript tr{cmt.c1, cmt.c2, a, c3, b, prover.respond(b)};
    ++stats.runs;
    if (verifier_check(params, keys.pk, tr))
      ++stats.accepts;
    else
      stats.rejected_challenges.push_back(a.bits());
  }
  return stats;
}

}  // namespace rvdc
