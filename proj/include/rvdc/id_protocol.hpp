#pragma once

#include <optional>
#include <variant>

#include "rvdc/dc_ring.hpp"
#include "rvdc/hash.hpp"
#include "rvdc/params.hpp"

namespace rvdc {

using Digest = Bytes;

struct Commitments {
  Digest c1, c2;
};

// b = 0 reveals the masking pair and the rotated-masked secret.
struct ResponseB0 {
  BinMatrix P, Q;
  RingElement masked_secret;  // u + Gamma'_a(x)
};

// b = 1 reveals the masked codeword and the masked rotated error.
struct ResponseB1 {
  RankVector masked_codeword;  // Pi_{P,Q}(u * G)
  RankVector masked_error;     // Pi_{P,Q}(Gamma_a(e))
};

using Response = std::variant<ResponseB0, ResponseB1>;

struct Transcript {
  Digest c1, c2;
  ChallengeA a;
  Digest c3;
  int b = 0;
  Response rsp;
};

// One protocol round from the prover side; the phase order
// commit -> commit2 -> respond is enforced.
class Prover {
 public:
  Prover(const ParamSet& params, const SecretKey& sk, const PublicKey& pk,
         HashCounters* counters = nullptr);

  Commitments commit(XofRng& rng);
  Digest commit2(const ChallengeA& a);
  Response respond(int b);

 private:
  enum class Phase { Start, Committed, Challenged };

  const ParamSet& params_;
  SecretKey sk_;
  PublicKey pk_;
  HashSuite hash_;
  Gf2m field_;
  DcRing ring_;
  Phase phase_ = Phase::Start;
  RingElement u_;
  BinMatrix p_, q_;
  RankVector masked_codeword_;  // Pi(u * G)
  std::optional<ChallengeA> a_;
};

ChallengeA verifier_challenge_a(const ParamSet& params, XofRng& rng);
int verifier_challenge_b(XofRng& rng);

// The Fig.-style per-branch checks; MalformedTranscript on shape errors.
bool verifier_check(const ParamSet& params, const PublicKey& pk, const Transcript& t,
                    HashCounters* counters = nullptr);

// Accepting transcript for the chosen branch built from the public key only.
Transcript zk_simulate(const ParamSet& params, const PublicKey& pk, int branch,
                       XofRng& rng);

// Prover without the secret key that pre-commits for one guessed branch.
class CheatingProver {
 public:
  CheatingProver(const ParamSet& params, const PublicKey& pk, int guess, XofRng& rng);

  Commitments commit();
  Digest commit2(const ChallengeA& a);
  Response respond(int b);
  int guess() const { return guess_; }

 private:
  const ParamSet& params_;
  PublicKey pk_;
  HashSuite hash_;
  Gf2m field_;
  DcRing ring_;
  int guess_;
  RingElement u_, fake_secret_;
  BinMatrix p_, q_;
  RankVector masked_codeword_, fake_masked_error_;
  std::optional<ChallengeA> a_;
};

struct CheatOutcome {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double rate() const { return trials ? double(successes) / double(trials) : 0.0; }
};

// Uniform-guess cheating adversary against an honest verifier.
CheatOutcome run_cheating_experiment(const ParamSet& params, std::uint64_t trials,
                                     XofRng& rng);

struct HonestRunStats {
  std::uint64_t runs = 0;
  std::uint64_t accepts = 0;
  // Challenges of rejected rounds, all expected to have non-unit a(X).
  std::vector<std::uint64_t> rejected_challenges;
};

// Full honest rounds with fresh keys every `rekey_every` runs.
HonestRunStats run_honest_rounds(const ParamSet& params, std::uint64_t runs,
                                 XofRng& rng);

}  // namespace rvdc
