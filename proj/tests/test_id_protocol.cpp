#include <doctest.h>

#include <map>
#include <set>

#include "rvdc/errors.hpp"
#include "rvdc/id_protocol.hpp"
#include "rvdc/signature.hpp"

using namespace rvdc;

namespace {
XofRng test_rng(const char* tag) {
  Bytes seed(reinterpret_cast<const std::uint8_t*>(tag),
             reinterpret_cast<const std::uint8_t*>(tag) + std::char_traits<char>::length(tag));
  return XofRng(seed);
}

Transcript honest_round(const ParamSet& params, Prover& prover, XofRng& rng) {
  Commitments cmt = prover.commit(rng);
  ChallengeA a = verifier_challenge_a(params, rng);
  Digest c3 = prover.commit2(a);
  int b = verifier_challenge_b(rng);
  Response rsp = prover.respond(b);
  return Transcript{cmt.c1, cmt.c2, a, c3, b, std::move(rsp)};
}
}  // namespace

TEST_CASE("commitments are deterministic in the rng and h bits long") {
  const ParamSet& params = param_set("80");
  auto krng = test_rng("id keys");
  KeyPair keys = keygen(params, krng);
  Prover p1(params, keys.sk, keys.pk), p2(params, keys.sk, keys.pk);
  auto r1 = test_rng("round rng");
  auto r2 = test_rng("round rng");
  Commitments c1 = p1.commit(r1);
  Commitments c2 = p2.commit(r2);
  CHECK(c1.c1 == c2.c1);
  CHECK(c1.c2 == c2.c2);
  CHECK(c1.c1.size() * 8 == 160);
  CHECK(c1.c2.size() * 8 == 160);
}

TEST_CASE("fresh masks per round") {
  const ParamSet& params = param_set("toy");
  auto rng = test_rng("fresh masks");
  KeyPair keys = keygen(params, rng);
  Prover prover(params, keys.sk, keys.pk);
  std::set<Bytes> seen;
  for (int i = 0; i < 1000; ++i) {
    Commitments cmt = prover.commit(rng);
    seen.insert(cmt.c2);
    ChallengeA a = verifier_challenge_a(params, rng);
    prover.commit2(a);
    prover.respond(0);
  }
  CHECK(seen.size() == 1000);
}

TEST_CASE("phase order is enforced") {
  const ParamSet& params = param_set("toy");
  auto rng = test_rng("phases");
  KeyPair keys = keygen(params, rng);
  Prover prover(params, keys.sk, keys.pk);
  ChallengeA a = verifier_challenge_a(params, rng);
  CHECK_THROWS_AS(prover.commit2(a), Error);
  prover.commit(rng);
  CHECK_THROWS_AS(prover.respond(0), Error);
  prover.commit2(a);
  CHECK_THROWS_AS(prover.commit2(a), Error);
  CHECK_NOTHROW(prover.respond(1));
}

TEST_CASE("challenge a stays admissible and covers all values") {
  auto rng = test_rng("challenge a");
  ParamSet p2 = param_set("toy");
  p2.k = 2;
  p2.n = 4;
  for (int i = 0; i < 200; ++i) {
    ChallengeA a = verifier_challenge_a(p2, rng);
    CHECK((a.bits() == 0b01 || a.bits() == 0b10));
  }

  // k = 3: all six admissible values, none forbidden, roughly uniform.
  std::map<std::uint64_t, int> counts;
  ParamSet p3 = param_set("toy");
  for (int i = 0; i < 10000; ++i) ++counts[verifier_challenge_a(p3, rng).bits()];
  CHECK(counts.size() == 6);
  CHECK(counts.find(0) == counts.end());
  CHECK(counts.find(7) == counts.end());
  for (const auto& [v, c] : counts) {
    CHECK(c > 1667 - 187);  // 5 sigma as in the matrix sampling test
    CHECK(c < 1667 + 187);
  }

  int ones = 0;
  for (int i = 0; i < 10000; ++i) ones += verifier_challenge_b(rng);
  CHECK(ones > 5000 - 250);  // 5 sigma
  CHECK(ones < 5000 + 250);
}

TEST_CASE("second commitment equals its public-key rewriting") {
  // u G + Gamma_a(e) = (u + Gamma'_a(x)) G + Gamma_a(y)
  const ParamSet& params = param_set("80");
  auto rng = test_rng("c3 identity");
  KeyPair keys = keygen(params, rng);
  DcRing ring = DcRing::from_params(params);
  for (int i = 0; i < 100; ++i) {
    RingElement u = ring.sample(rng);
    ChallengeA a = verifier_challenge_a(params, rng);
    RankVector via_secret = ring.encode(u, keys.pk.g).add(ring.gamma(a, keys.sk.e));
    RankVector via_public =
        ring.encode(ring.add(u, ring.gamma_prime(a, keys.sk.x)), keys.pk.g)
            .add(ring.gamma(a, keys.pk.y));
    CHECK(via_secret == via_public);
  }
}

TEST_CASE("commit2 determinism and challenge sensitivity") {
  const ParamSet& params = param_set("toy");
  auto rng = test_rng("c3 sensitivity");
  KeyPair keys = keygen(params, rng);
  int diffs = 0;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    Prover prover(params, keys.sk, keys.pk);
    auto fixed = test_rng("c3 fixed rng");
    prover.commit(fixed);
    ChallengeA a = verifier_challenge_a(params, rng);
    Digest c3 = prover.commit2(a);

    Prover prover2(params, keys.sk, keys.pk);
    auto fixed2 = test_rng("c3 fixed rng");
    prover2.commit(fixed2);
    CHECK(prover2.commit2(a) == c3);

    // flip one challenge component (keeping it admissible)
    std::uint64_t flipped = a.bits() ^ 1u;
    if (!ChallengeA::admissible(params.k, flipped)) continue;
    Prover prover3(params, keys.sk, keys.pk);
    auto fixed3 = test_rng("c3 fixed rng");
    prover3.commit(fixed3);
    if (prover3.commit2(ChallengeA(params.k, flipped)) != c3) ++diffs;
    else continue;
  }
  CHECK(diffs > 0);
  // every admissible flip must change the digest
  CHECK(diffs >= trials * 5 / 10);
}

TEST_CASE("honest rounds accept on every parameter set") {
  auto rng = test_rng("honest rounds");
  for (const ParamSet& params : builtin_param_sets()) {
    KeyPair keys = keygen(params, rng);
    Prover prover(params, keys.sk, keys.pk);
    int accepted = 0;
    const int rounds = 50;
    for (int i = 0; i < rounds; ++i) {
      Transcript t = honest_round(params, prover, rng);
      if (verifier_check(params, keys.pk, t)) ++accepted;
    }
    CHECK(accepted == rounds);
  }
}

TEST_CASE("forged payloads are rejected") {
  const ParamSet& params = param_set("toy");
  auto rng = test_rng("forgeries");
  KeyPair keys = keygen(params, rng);
  Gf2m field = params.field();
  Prover prover(params, keys.sk, keys.pk);

  // b = 1 with an inflated-rank error
  for (int i = 0; i < 200; ++i) {
    Commitments cmt = prover.commit(rng);
    ChallengeA a = verifier_challenge_a(params, rng);
    Digest c3 = prover.commit2(a);
    Response rsp = prover.respond(1);
    auto& r1 = std::get<ResponseB1>(rsp);
    r1.masked_error = RankVector::sample_rank_exact(field, params.n, params.r + 1, rng);
    Transcript t{cmt.c1, cmt.c2, a, c3, 1, rsp};
    CHECK_FALSE(verifier_check(params, keys.pk, t));
  }

  // b = 0 with one perturbed response coefficient
  int rejected = 0;
  for (int i = 0; i < 1000; ++i) {
    Commitments cmt = prover.commit(rng);
    ChallengeA a = verifier_challenge_a(params, rng);
    Digest c3 = prover.commit2(a);
    Response rsp = prover.respond(0);
    auto& r0 = std::get<ResponseB0>(rsp);
    unsigned pos = unsigned(rng.below(params.k));
    std::uint64_t delta_bits = 1ULL << rng.below(params.m);
    r0.masked_secret.c[pos].bits ^= delta_bits;
    Transcript t{cmt.c1, cmt.c2, a, c3, 0, rsp};
    if (!verifier_check(params, keys.pk, t)) ++rejected;
  }
  CHECK(rejected == 1000);
}

TEST_CASE("malformed transcripts throw") {
  const ParamSet& params = param_set("toy");
  auto rng = test_rng("malformed");
  KeyPair keys = keygen(params, rng);
  Prover prover(params, keys.sk, keys.pk);
  Transcript t = honest_round(params, prover, rng);
  Transcript wrong_branch = t;
  wrong_branch.b = 1 - wrong_branch.b;
  CHECK_THROWS_AS(verifier_check(params, keys.pk, wrong_branch), Error);
  Transcript bad_bit = t;
  bad_bit.b = 2;
  CHECK_THROWS_AS(verifier_check(params, keys.pk, bad_bit), Error);
}

TEST_CASE("matched-guess cheaters always pass, the experiment sits near 1/2") {
  const ParamSet& params = param_set("toy");
  auto rng = test_rng("cheat");
  KeyPair keys = keygen(params, rng);

  for (int guess : {0, 1}) {
    for (int i = 0; i < 100; ++i) {
      CheatingProver adv(params, keys.pk, guess, rng);
      Commitments cmt = adv.commit();
      ChallengeA a = verifier_challenge_a(params, rng);
      Digest c3 = adv.commit2(a);
      Transcript t{cmt.c1, cmt.c2, a, c3, guess, adv.respond(guess)};
      CHECK(verifier_check(params, keys.pk, t));
    }
  }

  CheatOutcome outcome = run_cheating_experiment(params, 2000, rng);
  CHECK(outcome.rate() > 0.44);
  CHECK(outcome.rate() < 0.56);
}

TEST_CASE("simulated transcripts verify without the secret key") {
  auto rng = test_rng("zk");
  for (const char* name : {"toy", "80"}) {
    const ParamSet& params = param_set(name);
    KeyPair keys = keygen(params, rng);
    for (int branch : {0, 1}) {
      for (int i = 0; i < 50; ++i) {
        Transcript t = zk_simulate(params, keys.pk, branch, rng);
        CHECK(t.b == branch);
        CHECK(verifier_check(params, keys.pk, t));
        if (branch == 1)
          CHECK(std::get<ResponseB1>(t.rsp).masked_error.rank_weight() == params.r);
      }
    }
  }
}

TEST_CASE("response payload bit sizes match the size model terms") {
  const ParamSet& params = param_set("80");
  auto rng = test_rng("payload sizes");
  KeyPair keys = keygen(params, rng);
  Prover prover(params, keys.sk, keys.pk);
  Transcript t0 = honest_round(params, prover, rng);
  while (t0.b != 0) t0 = honest_round(params, prover, rng);
  Transcript t1 = honest_round(params, prover, rng);
  while (t1.b != 1) t1 = honest_round(params, prover, rng);

  const auto& r0 = std::get<ResponseB0>(t0.rsp);
  std::size_t b0_bits = std::size_t(r0.P.rows()) * r0.P.cols() +
                        std::size_t(r0.Q.rows()) * r0.Q.cols() +
                        r0.masked_secret.c.size() * params.m;
  CHECK(b0_bits == std::size_t(params.n) * params.n + params.m * params.m +
                       params.m * params.k);  // 1644 at the first row
  CHECK(b0_bits == 1644);

  const auto& r1 = std::get<ResponseB1>(t1.rsp);
  std::size_t b1_bits =
      (r1.masked_codeword.size() + r1.masked_error.size()) * params.m;
  CHECK(b1_bits == 2 * std::size_t(params.m) * params.n);
  CHECK(b1_bits == 1276);
}
