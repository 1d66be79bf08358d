#include "rvdc/analysis.hpp"

#include <cmath>

#include "rvdc/dc_ring.hpp"
#include "rvdc/errors.hpp"

namespace rvdc {

namespace {

void check_attack_params(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r) {
  if (q < 2 || m < 1 || n < 1 || k < 1 || r < 1 || k >= n)
    throw Error(Error::Kind::InvalidParams, "attack formula parameters");
}

long ceil_div(long a, long b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

double log2_mpz(const mpz_class& v) {
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log2(mant) + double(exp2);
}

unsigned ceil_level(double v) { return unsigned(std::ceil(v - 1e-9)); }

bool is_prime(unsigned v) {
  if (v < 2) return false;
  for (unsigned d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

}  // namespace

double wf_algebraic(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r) {
  check_attack_params(q, m, n, k, r);
  long exp_steps = ceil_div(long(r + 1) * long(k + 1) - long(n + 1), long(r));
  return double(r) * double(exp_steps) * std::log2(double(q)) +
         3.0 * std::log2(double(r)) + 3.0 * std::log2(double(k));
}

double wf_combinatorial(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r) {
  check_attack_params(q, m, n, k, r);
  double exponent = double(r) * double(k + 1) * double(m) / double(n) - double(m);
  return exponent * std::log2(double(q)) + 3.0 * std::log2(double(n - k)) +
         3.0 * std::log2(double(m));
}

QuantumWf wf_quantum(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r) {
  check_attack_params(q, m, n, k, r);
  long exp_c = ceil_div(long(r + 1) * long(k + 1) - long(n + 1), 2L * long(r));
  double log2_c = double(r) * double(exp_c) * std::log2(double(q)) +
                  3.0 * std::log2(double(r)) + 3.0 * std::log2(double(k));
  double exp_d = double(r) * double(k + 1) * double(m) / (2.0 * double(n)) - double(m);
  double log2_d = exp_d * std::log2(double(q)) + 3.0 * std::log2(double(n - k)) +
                  3.0 * std::log2(double(m));
  return {log2_c, log2_d};
}

unsigned rounds_for_security(unsigned l, unsigned q, unsigned k, unsigned rho) {
  if (q < 2 || k < 1 || l < 1)
    throw Error(Error::Kind::InvalidParams, "round count parameters");
  long double qk = std::pow((long double)q, (long double)k);
  if ((long double)rho >= qk)
    throw Error(Error::Kind::InvalidParams, "need rho < q^k");
  // p = (q^k + rho) / (2 q^k); -log2 p = 1 - log2(1 + rho/q^k)
  long double neg_log2_p = 1.0L - std::log2(1.0L + (long double)rho / qk);
  return unsigned(std::ceil((long double)l / neg_log2_p - 1e-12L));
}

mpz_class gaussian_binomial(unsigned n, unsigned r, unsigned q) {
  if (r > n) throw Error(Error::Kind::IndexOutOfRange, "subspace dimension exceeds n");
  if (q < 2) throw Error(Error::Kind::InvalidParams, "q must be a prime power >= 2");
  mpz_class num = 1, den = 1, qn, qr, qi;
  for (unsigned i = 0; i < r; ++i) {
    mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
    mpz_ui_pow_ui(qr.get_mpz_t(), q, r);
    mpz_ui_pow_ui(qi.get_mpz_t(), q, i);
    num *= qn - qi;
    den *= qr - qi;
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

double log2_uniqueness_failure(unsigned q, unsigned m, unsigned n, unsigned k,
                               unsigned r, unsigned rho) {
  check_attack_params(q, m, n, k, r);
  if (rho < 1) throw Error(Error::Kind::InvalidParams, "rho must be positive");
  double log2_gauss = log2_mpz(gaussian_binomial(n, r, q));
  return double(rho) * log2_gauss -
         double(m) * double(n - k) * double(rho - 1) * std::log2(double(q));
}

double uniqueness_probability(unsigned q, unsigned m, unsigned n, unsigned k,
                              unsigned r, unsigned rho) {
  double lf = log2_uniqueness_failure(q, m, n, k, r, rho);
  if (lf >= 0) return 0.0;  // approximation leaves the unit interval; clamp
  if (lf < -60) return 1.0;
  return 1.0 - std::exp2(lf);
}

unsigned rank_gv_distance(unsigned q, unsigned m, unsigned n, unsigned k) {
  if (q < 2 || m < 1 || n < 1 || k > n)
    throw Error(Error::Kind::InvalidParams, "GV bound parameters");
  mpz_class target;
  mpz_ui_pow_ui(target.get_mpz_t(), q, std::size_t(m) * (n - k));
  mpz_class ball = 1;  // rank-0 term
  unsigned max_rank = std::min(m, n);
  for (unsigned d = 0; d <= max_rank; ++d) {
    if (d > 0) {
      mpz_class count = gaussian_binomial(n, d, q), qm, qj;
      mpz_ui_pow_ui(qm.get_mpz_t(), q, m);
      for (unsigned j = 0; j < d; ++j) {
        mpz_ui_pow_ui(qj.get_mpz_t(), q, j);
        count *= qm - qj;
      }
      ball += count;
    }
    if (ball >= target) return d;
  }
  throw Error(Error::Kind::InvalidParams, "ball volume never covers the syndrome space");
}

SecurityReport validate(const ParamSet& params) {
  params.check();
  SecurityReport rep;
  rep.log2_a = wf_algebraic(params.q, params.m, params.n, params.k, params.r);
  rep.log2_b = wf_combinatorial(params.q, params.m, params.n, params.k, params.r);
  QuantumWf qw = wf_quantum(params.q, params.m, params.n, params.k, params.r);
  rep.log2_c = qw.log2_c;
  rep.log2_d = qw.log2_d;
  rep.classical_level = ceil_level(std::min(rep.log2_a, rep.log2_b));
  rep.quantum_level = ceil_level(std::min(rep.log2_c, rep.log2_d));
  rep.gv_distance = rank_gv_distance(params.q, params.m, params.n, params.k);
  rep.rounds = rounds_for_security(params.target_level, params.q, params.k, params.rho);

  if (params.n <= params.r * (params.k + 1))
    rep.warnings.push_back("n <= r(k+1): the algebraic attack applies (its cost is A)");
  if (params.r >= rep.gv_distance)
    rep.warnings.push_back("r is not below the rank GV distance d=" +
                           std::to_string(rep.gv_distance));
  if (!is_prime(params.m))
    rep.warnings.push_back("m is composite: F_2^m has proper subfields");
  unsigned factors = DcRing::cyclic_factor_count(params.k);
  if (factors > 2)
    rep.warnings.push_back("X^k - 1 has " + std::to_string(factors) +
                           " factors over F_2: structural attacks improve");
  if (params.h_bits == 160 && params.hash_mode == HashMode::Sha2)
    rep.warnings.push_back("160-bit fixed digest (SHA-1 class) is legacy-only");
  if (rep.rounds != params.delta)
    rep.warnings.push_back("delta=" + std::to_string(params.delta) +
                           " but target level " + std::to_string(params.target_level) +
                           " needs " + std::to_string(rep.rounds));
  return rep;
}

}  // namespace rvdc
