#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rvdc/gf2m.hpp"
#include "rvdc/hash.hpp"

namespace rvdc {

enum class ParamSetId : std::uint8_t {
  L80 = 1,
  L128 = 2,
  L192 = 3,
  L256 = 4,
  Toy = 0x7f,
  Custom = 0xff,
};

// One row of the scheme's parameter table, plus the field modulus and the
// hash configuration. q is fixed to 2; it appears explicitly only in the
// security analysis formulas.
struct ParamSet {
  std::string name;
  ParamSetId id = ParamSetId::Custom;
  unsigned q = 2;
  unsigned m = 0;         // field extension degree
  unsigned n = 0;         // code length, n = 2k
  unsigned k = 0;         // code dimension / ring degree
  unsigned r = 0;         // secret error rank
  unsigned rho = 0;       // soundness slack parameter
  unsigned delta = 0;     // number of protocol rounds
  unsigned h_bits = 0;    // commitment digest length
  unsigned target_level = 0;  // classical security target l (sets delta)
  std::uint64_t reduction = 0;        // field modulus, (m+1) bits
  std::uint64_t ring_modulus_low = 1; // ring is F_{2^m}[X]/(X^k - p); p = 1 is cyclic
  HashMode hash_mode = HashMode::Sha2;
  StreamMode stream_mode = StreamMode::Xof;

  unsigned lambda_bits() const { return h_bits / 2; }  // seed length, h = 2*lambda
  std::size_t lambda_bytes() const { return lambda_bits() / 8; }
  unsigned r_field_bits() const;  // ceil(log2 r), width of the stored rank

  Gf2m field() const { return Gf2m(m, reduction); }
  HashSuite hash(HashCounters* counters = nullptr) const {
    return HashSuite{h_bits, hash_mode, stream_mode, counters};
  }

  // 4-byte identifier carried by public-key and signature files:
  // {set id, hash mode, stream mode, 0}.
  std::array<std::uint8_t, 4> identifier() const;

  void check() const;  // InvalidParams on structural violations

  friend bool operator==(const ParamSet& a, const ParamSet& b) = default;
};

const std::vector<ParamSet>& builtin_param_sets();
// Resolves "80", "128", "192", "256", "toy"; InvalidParams otherwise.
const ParamSet& param_set(const std::string& name);
// nullptr when the identifier does not name a builtin set.
const ParamSet* find_param_set(const std::array<std::uint8_t, 4>& ident);

}  // namespace rvdc
