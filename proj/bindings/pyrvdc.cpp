// Python bindings for the main operations: parameter sets, key generation,
// signing/verification for both schemes, the size model and the security
// analyzer. Byte-oriented: keys and signatures cross the boundary in their
// file encodings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rvdc/analysis.hpp"
#include "rvdc/errors.hpp"
#include "rvdc/selftest.hpp"
#include "rvdc/signature.hpp"

namespace py = pybind11;
using namespace rvdc;

namespace {

Bytes to_bytes(const py::bytes& b) {
  std::string s = b;
  return Bytes(s.begin(), s.end());
}

py::bytes from_bytes(ByteView b) {
  return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

ParamSet resolve(const std::string& name) { return param_set(name); }

Scheme parse_scheme(const std::string& s) {
  if (s == "rvdc") return Scheme::Rvdc;
  if (s == "crvdc") return Scheme::Crvdc;
  throw Error(Error::Kind::InvalidParams, "scheme must be rvdc or crvdc");
}

}  // namespace

PYBIND11_MODULE(_rvdc, m) {
  m.doc() = "Rank-metric double circulant identification and signature schemes";

  py::register_exception<Error>(m, "RvdcError");

  m.def("param_sets", [] {
    std::vector<std::string> names;
    for (const ParamSet& p : builtin_param_sets()) names.push_back(p.name);
    return names;
  });

  m.def("param_info", [](const std::string& name) {
    const ParamSet& p = param_set(name);
    py::dict d;
    d["name"] = p.name;
    d["q"] = p.q;
    d["m"] = p.m;
    d["n"] = p.n;
    d["k"] = p.k;
    d["r"] = p.r;
    d["rho"] = p.rho;
    d["delta"] = p.delta;
    d["h"] = p.h_bits;
    d["lambda"] = p.lambda_bits();
    return d;
  });

  m.def(
      "keygen",
      [](const std::string& params_name, const py::bytes& seed) {
        ParamSet params = resolve(params_name);
        Bytes seed_bytes = to_bytes(seed);
        XofRng rng(seed_bytes);
        KeyPair keys = keygen(params, rng);
        return py::make_tuple(from_bytes(serialize_secret_key(params, keys.sk)),
                              from_bytes(serialize_public_key(params, keys.pk)));
      },
      py::arg("params"), py::arg("seed"),
      "Deterministic key generation; returns (secret_key, public_key) bytes.");

  m.def(
      "sign",
      [](const std::string& params_name, const std::string& scheme,
         const py::bytes& sk, const py::bytes& pk, const py::bytes& msg,
         const py::bytes& seed, unsigned threads) {
        ParamSet params = resolve(params_name);
        SecretKey secret = parse_secret_key(params, to_bytes(sk));
        PublicKey pub = parse_public_key(params, to_bytes(pk));
        Bytes msg_b = to_bytes(msg), seed_b = to_bytes(seed);
        if (parse_scheme(scheme) == Scheme::Rvdc)
          return from_bytes(serialize_signature(
              params, sign_rvdc(params, secret, pub, msg_b, seed_b, threads)));
        return from_bytes(serialize_signature(
            params, sign_crvdc(params, secret, pub, msg_b, seed_b, threads)));
      },
      py::arg("params"), py::arg("scheme"), py::arg("sk"), py::arg("pk"),
      py::arg("msg"), py::arg("seed"), py::arg("threads") = 1);

  m.def(
      "verify",
      [](const std::string& params_name, const py::bytes& pk, const py::bytes& msg,
         const py::bytes& sgn, unsigned threads) {
        ParamSet params = resolve(params_name);
        PublicKey pub = parse_public_key(params, to_bytes(pk));
        Bytes msg_b = to_bytes(msg);
        AnySignature sig = parse_signature(params, to_bytes(sgn));
        if (const auto* r = std::get_if<RvdcSignature>(&sig))
          return verify_rvdc(params, pub, msg_b, *r, threads);
        return verify_crvdc(params, pub, msg_b, std::get<CrvdcSignature>(sig), threads);
      },
      py::arg("params"), py::arg("pk"), py::arg("msg"), py::arg("sgn"),
      py::arg("threads") = 1);

  m.def("signature_scheme", [](const py::bytes& sgn) {
    return peek_signature_scheme(to_bytes(sgn)) == Scheme::Rvdc ? "rvdc" : "crvdc";
  });

  m.def(
      "size_model",
      [](const std::string& params_name, const std::string& scheme) {
        SizeModel model = size_model(resolve(params_name), parse_scheme(scheme));
        py::dict d;
        d["sk_bits"] = model.sk_bits;
        d["pk_bits"] = model.pk_bits;
        d["expected_sgn_bits"] = model.expected_sgn_bits;
        d["rsp_bits_b0"] = model.rsp_bits_b0;
        d["rsp_bits_b1"] = model.rsp_bits_b1;
        return d;
      },
      py::arg("params"), py::arg("scheme"));

  m.def("security_report", [](const std::string& params_name) {
    SecurityReport rep = validate(param_set(params_name));
    py::dict d;
    d["log2_A"] = rep.log2_a;
    d["log2_B"] = rep.log2_b;
    d["log2_C"] = rep.log2_c;
    d["log2_D"] = rep.log2_d;
    d["classical_level"] = rep.classical_level;
    d["quantum_level"] = rep.quantum_level;
    d["gv_distance"] = rep.gv_distance;
    d["rounds"] = rep.rounds;
    d["warnings"] = rep.warnings;
    return d;
  });

  m.def("rounds_for_security", &rounds_for_security, py::arg("l"), py::arg("q"),
        py::arg("k"), py::arg("rho"));

  m.def(
      "gaussian_binomial",
      [](unsigned n, unsigned r, unsigned q) {
        return py::int_(py::module_::import("builtins").attr("int")(
            gaussian_binomial(n, r, q).get_str()));
      },
      py::arg("n"), py::arg("r"), py::arg("q") = 2);

  m.def("selftest", [] {
    SelftestResult res = run_selftest();
    py::dict d;
    d["total"] = res.total;
    d["passed"] = res.passed;
    d["failures"] = res.failures;
    return d;
  });
}
