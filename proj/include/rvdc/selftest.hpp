#pragma once

#include <string>
#include <vector>

#include "rvdc/params.hpp"

namespace rvdc {

// A frozen sign/verify vector: keys from master_seed, one signature over msg.
struct TestVector {
  std::string params;
  std::string master_seed_hex;
  std::string msg_hex;
  std::string sk_hex;
  std::string pk_hex;
  std::string sgn_hex;
};

const std::vector<TestVector>& embedded_test_vectors();

struct SelftestResult {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;
  bool ok() const { return passed == total && total > 0; }
};

// Re-derives keys and the signature for each vector and compares byte-exact,
// then verifies the signature.
SelftestResult run_selftest(const std::vector<TestVector>& vectors);
SelftestResult run_selftest();  // embedded vectors

// Regenerates a vector from (params, seed, msg); used to produce the
// embedded table and external vector files.
TestVector make_test_vector(const std::string& params_name, ByteView master_seed,
                            ByteView msg, bool compressed);

}  // namespace rvdc
