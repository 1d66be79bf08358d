#include "rvdc/selftest.hpp"

#include "rvdc/errors.hpp"
#include "rvdc/signature.hpp"

namespace rvdc {

const std::vector<TestVector>& embedded_test_vectors() {
  // Generated under fixed seeds by `rvdc selftest --regen`.
  static const std::vector<TestVector> kVectors = {
#include "selftest_vectors.inc"
  };
  return kVectors;
}

TestVector make_test_vector(const std::string& params_name, ByteView master_seed,
                            ByteView msg, bool compressed) {
  const ParamSet& params = param_set(params_name);
  XofRng rng(master_seed);
  KeyPair keys = keygen(params, rng);
  TestVector v;
  v.params = params_name;
  v.master_seed_hex = to_hex(master_seed);
  v.msg_hex = to_hex(msg);
  v.sk_hex = to_hex(serialize_secret_key(params, keys.sk));
  v.pk_hex = to_hex(serialize_public_key(params, keys.pk));
  if (compressed) {
    CrvdcSignature sgn = sign_crvdc(params, keys.sk, keys.pk, msg, master_seed);
    v.sgn_hex = to_hex(serialize_signature(params, sgn));
  } else {
    RvdcSignature sgn = sign_rvdc(params, keys.sk, keys.pk, msg, master_seed);
    v.sgn_hex = to_hex(serialize_signature(params, sgn));
  }
  return v;
}

SelftestResult run_selftest(const std::vector<TestVector>& vectors) {
  SelftestResult result;
  result.total = vectors.size();
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const TestVector& v = vectors[i];
    auto fail = [&](const std::string& what) {
      result.failures.push_back("vector " + std::to_string(i) + " (" + v.params +
                                "): " + what);
    };
    try {
      const ParamSet& params = param_set(v.params);
      Bytes seed = from_hex(v.master_seed_hex);
      Bytes msg = from_hex(v.msg_hex);
      Bytes sgn_bytes = from_hex(v.sgn_hex);
      bool compressed = peek_signature_scheme(sgn_bytes) == Scheme::Crvdc;
      TestVector regen = make_test_vector(v.params, seed, msg, compressed);
      if (regen.sk_hex != v.sk_hex) {
        fail("secret key mismatch");
        continue;
      }
      if (regen.pk_hex != v.pk_hex) {
        fail("public key mismatch");
        continue;
      }
      if (regen.sgn_hex != v.sgn_hex) {
        fail("signature mismatch");
        continue;
      }
      PublicKey pk = parse_public_key(params, from_hex(v.pk_hex));
      AnySignature sgn = parse_signature(params, sgn_bytes);
      bool accept =
          compressed
              ? verify_crvdc(params, pk, msg, std::get<CrvdcSignature>(sgn))
              : verify_rvdc(params, pk, msg, std::get<RvdcSignature>(sgn));
      if (!accept) {
        fail("verification rejected");
        continue;
      }
      ++result.passed;
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return result;
}

SelftestResult run_selftest() { return run_selftest(embedded_test_vectors()); }

}  // namespace rvdc
