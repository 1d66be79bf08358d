#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rvdc/params.hpp"

namespace rvdc {

// Work factors of the best known attacks, in log2. A is the algebraic
// (Groebner-style) attack, B the generic combinatorial one; C and D are
// their quantum versions with the exponential term square-rooted.
double wf_algebraic(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r);
double wf_combinatorial(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r);
struct QuantumWf {
  double log2_c;
  double log2_d;
};
QuantumWf wf_quantum(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r);

// Rounds needed for security level l against per-round impersonation
// probability p = (q^k + rho) / (2 q^k): ceil(l / -log2 p).
unsigned rounds_for_security(unsigned l, unsigned q, unsigned k, unsigned rho);

// Number of r-dimensional subspaces of F_q^n, exact.
mpz_class gaussian_binomial(unsigned n, unsigned r, unsigned q);

// Probability that the differential decoding instance behind the soundness
// argument has a unique solution: 1 - [n r]^rho / q^(m(n-k)(rho-1)).
double uniqueness_probability(unsigned q, unsigned m, unsigned n, unsigned k,
                              unsigned r, unsigned rho);
// log2 of the complement 1 - epsilon (a large negative number).
double log2_uniqueness_failure(unsigned q, unsigned m, unsigned n, unsigned k,
                               unsigned r, unsigned rho);

// Smallest d with sum_{i<=d} [n i]_q * prod_{j<i}(q^m - q^j) >= q^(m(n-k)).
unsigned rank_gv_distance(unsigned q, unsigned m, unsigned n, unsigned k);

struct SecurityReport {
  double log2_a = 0, log2_b = 0, log2_c = 0, log2_d = 0;
  unsigned classical_level = 0;  // ceil(min(A, B))
  unsigned quantum_level = 0;    // ceil(min(C, D))
  unsigned gv_distance = 0;
  unsigned rounds = 0;  // rounds_for_security at the target level
  std::vector<std::string> warnings;
};

SecurityReport validate(const ParamSet& params);

}  // namespace rvdc
