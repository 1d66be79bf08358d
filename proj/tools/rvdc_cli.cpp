// Command-line front end: key generation, signing, verification, the
// interactive-protocol demo, parameter tables, benchmarks and self tests.
//
// Exit codes: 0 success/accept, 1 reject, 2 malformed input or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "rvdc/analysis.hpp"
#include "rvdc/errors.hpp"
#include "rvdc/id_protocol.hpp"
#include "rvdc/selftest.hpp"
#include "rvdc/signature.hpp"

using json = nlohmann::json;
using namespace rvdc;

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitMalformed = 2;

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Kind::InvalidParams, "cannot open '" + path + "'");
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Error::Kind::InvalidParams, "cannot write '" + path + "'");
  out.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
}

ParamSet params_from_json_file(const std::string& path) {
  json j = json::parse(read_file(path));
  ParamSet p;
  p.name = j.value("name", std::string("custom"));
  p.id = ParamSetId::Custom;
  p.q = j.value("q", 2u);
  p.m = j.at("m").get<unsigned>();
  p.n = j.at("n").get<unsigned>();
  p.k = j.at("k").get<unsigned>();
  p.r = j.at("r").get<unsigned>();
  p.rho = j.at("rho").get<unsigned>();
  p.delta = j.at("delta").get<unsigned>();
  p.h_bits = j.at("h").get<unsigned>();
  p.target_level = j.value("target_level", p.delta);
  if (j.contains("reduction_hex"))
    p.reduction = std::stoull(j.at("reduction_hex").get<std::string>(), nullptr, 16);
  else
    p.reduction = Gf2m::with_default_reduction(p.m).reduction();
  if (j.contains("ring_modulus_low_hex"))
    p.ring_modulus_low =
        std::stoull(j.at("ring_modulus_low_hex").get<std::string>(), nullptr, 16);
  p.hash_mode = j.value("hash_mode", std::string("sha2")) == "shake" ? HashMode::Shake
                                                                     : HashMode::Sha2;
  p.stream_mode = j.value("stream_mode", std::string("xof")) == "chunked"
                      ? StreamMode::Chunked
                      : StreamMode::Xof;
  p.check();
  return p;
}

// --params accepts a builtin name or a JSON file path.
ParamSet resolve_params(const std::string& arg) {
  if (arg.empty()) {
    const char* env = std::getenv("RVDC_DEFAULT_PARAMS");
    return param_set(env && *env ? env : "128");
  }
  for (const ParamSet& p : builtin_param_sets())
    if (p.name == arg) return p;
  return params_from_json_file(arg);
}

Bytes seed_or_random(const std::string& hex) {
  if (!hex.empty()) return from_hex(hex);
  XofRng rng = system_rng();
  return rng.bytes(32);
}

Scheme parse_scheme(const std::string& s) {
  if (s == "rvdc") return Scheme::Rvdc;
  if (s == "crvdc") return Scheme::Crvdc;
  throw Error(Error::Kind::InvalidParams, "scheme must be rvdc or crvdc");
}

std::string key_base(const std::string& key) {
  // Accepts a base path or a path ending in .sk/.pk.
  if (key.size() > 3 && (key.ends_with(".sk") || key.ends_with(".pk")))
    return key.substr(0, key.size() - 3);
  return key;
}

int cmd_keygen(const std::string& params_arg, const std::string& seed_hex,
               const std::string& out) {
  ParamSet params = resolve_params(params_arg);
  Bytes seed = seed_or_random(seed_hex);
  XofRng rng(seed);
  KeyPair keys = keygen(params, rng);
  write_file(out + ".sk", serialize_secret_key(params, keys.sk));
  write_file(out + ".pk", serialize_public_key(params, keys.pk));
  std::cerr << "wrote " << out << ".sk (" << size_model(params, Scheme::Rvdc).sk_bits
            << " bits) and " << out << ".pk ("
            << size_model(params, Scheme::Rvdc).pk_bits << " bits)\n";
  return kExitAccept;
}

int cmd_sign(const std::string& params_arg, const std::string& scheme_arg,
             const std::string& key, const std::string& msg_path,
             const std::string& out, const std::string& seed_hex, unsigned threads) {
  ParamSet params = resolve_params(params_arg);
  Scheme scheme = parse_scheme(scheme_arg);
  std::string base = key_base(key);
  SecretKey sk = parse_secret_key(params, read_file(base + ".sk"));
  PublicKey pk = parse_public_key(params, read_file(base + ".pk"));
  Bytes msg = read_file(msg_path);
  Bytes seed = seed_or_random(seed_hex);
  Bytes sgn_bytes;
  if (scheme == Scheme::Rvdc) {
    RvdcSignature sgn = sign_rvdc(params, sk, pk, msg, seed, threads);
    sgn_bytes = serialize_signature(params, sgn);
  } else {
    CrvdcSignature sgn = sign_crvdc(params, sk, pk, msg, seed, threads);
    sgn_bytes = serialize_signature(params, sgn);
  }
  write_file(out, sgn_bytes);
  std::cerr << "wrote " << out << " (" << sgn_bytes.size() << " bytes)\n";
  return kExitAccept;
}

int cmd_verify(const std::string& params_arg, const std::string& key,
               const std::string& msg_path, const std::string& sig_path,
               unsigned threads) {
  Bytes sgn_bytes = read_file(sig_path);
  ParamSet params = [&] {
    if (!params_arg.empty()) return resolve_params(params_arg);
    const ParamSet* found = find_param_set(peek_param_identifier(sgn_bytes));
    if (!found)
      throw Error(Error::Kind::MalformedSignature,
                  "signature carries a non-builtin parameter id; pass --params", 0);
    return *found;
  }();
  PublicKey pk = parse_public_key(params, read_file(key_base(key) + ".pk"));
  Bytes msg = read_file(msg_path);
  AnySignature sgn = parse_signature(params, sgn_bytes);
  bool accept = std::holds_alternative<RvdcSignature>(sgn)
                    ? verify_rvdc(params, pk, msg, std::get<RvdcSignature>(sgn), threads)
                    : verify_crvdc(params, pk, msg, std::get<CrvdcSignature>(sgn), threads);
  std::cout << (accept ? "accept" : "reject") << "\n";
  return accept ? kExitAccept : kExitReject;
}

void dump_pass(std::ostream& out, int pass, ByteView payload) {
  json line;
  line["pass"] = pass;
  line["payload_hex"] = to_hex(payload);
  out << line.dump() << "\n";
}

Bytes response_payload(const ParamSet& params, const Response& rsp) {
  BitWriter w;
  Gf2m field = params.field();
  if (const auto* r0 = std::get_if<ResponseB0>(&rsp)) {
    r0->P.append_bits(w);
    r0->Q.append_bits(w);
    for (const Gf2mElem& c : r0->masked_secret.c) w.put_bits(c.bits, field.degree());
  } else {
    const auto& r1 = std::get<ResponseB1>(rsp);
    r1.masked_codeword.append_bits(w);
    r1.masked_error.append_bits(w);
  }
  return w.take();
}

int cmd_id_demo(const std::string& params_arg, unsigned rounds,
                const std::string& seed_hex, bool cheat, std::uint64_t trials) {
  ParamSet params = resolve_params(params_arg);
  Bytes seed = seed_or_random(seed_hex);
  XofRng rng(seed);
  if (cheat) {
    CheatOutcome outcome = run_cheating_experiment(params, trials, rng);
    json summary;
    summary["trials"] = outcome.trials;
    summary["successes"] = outcome.successes;
    summary["rate"] = outcome.rate();
    std::cout << summary.dump() << "\n";
    std::cerr << "cheating acceptance rate " << outcome.rate() << " over "
              << outcome.trials << " trials\n";
    return kExitAccept;
  }

  if (rounds == 0) rounds = params.delta;
  KeyPair keys = keygen(params, rng);
  Prover prover(params, keys.sk, keys.pk);
  unsigned accepted = 0;
  for (unsigned i = 0; i < rounds; ++i) {
    Commitments cmt = prover.commit(rng);
    Bytes pass1 = cmt.c1;
    pass1.insert(pass1.end(), cmt.c2.begin(), cmt.c2.end());
    dump_pass(std::cout, 1, pass1);

    ChallengeA a = verifier_challenge_a(params, rng);
    BitWriter aw;
    aw.put_bits(a.bits(), params.k);
    dump_pass(std::cout, 2, aw.bytes());

    Digest c3 = prover.commit2(a);
    dump_pass(std::cout, 3, c3);

    int b = verifier_challenge_b(rng);
    dump_pass(std::cout, 4, Bytes{std::uint8_t(b)});

    Response rsp = prover.respond(b);
    dump_pass(std::cout, 5, response_payload(params, rsp));

    Transcript t{cmt.c1, cmt.c2, a, c3, b, std::move(rsp)};
    bool ok = verifier_check(params, keys.pk, t);
    accepted += ok;
    std::cerr << "round " << (i + 1) << ": a=0x" << std::hex << a.bits() << std::dec
              << " b=" << b << " " << (ok ? "accept" : "REJECT") << "\n";
  }
  std::cerr << "accepted " << accepted << "/" << rounds << " rounds\n";
  return accepted == rounds ? kExitAccept : kExitReject;
}

int cmd_params(const std::string& format, const std::string& params_arg) {
  std::vector<ParamSet> sets;
  if (params_arg.empty())
    for (const ParamSet& p : builtin_param_sets()) {
      if (p.id != ParamSetId::Toy) sets.push_back(p);
    }
  else
    sets.push_back(resolve_params(params_arg));

  struct Line {
    const ParamSet* p;
    SecurityReport rep;
    SizeModel rvdc, crvdc;
  };
  std::vector<Line> lines;
  for (const ParamSet& p : sets)
    lines.push_back({&p, validate(p), size_model(p, Scheme::Rvdc),
                     size_model(p, Scheme::Crvdc)});

  if (format == "json") {
    json out = json::array();
    for (const Line& l : lines) {
      json row;
      row["set"] = l.p->name;
      row["q"] = l.p->q;
      row["m"] = l.p->m;
      row["n"] = l.p->n;
      row["k"] = l.p->k;
      row["r"] = l.p->r;
      row["rho"] = l.p->rho;
      row["delta"] = l.p->delta;
      row["h"] = l.p->h_bits;
      row["log2_A"] = l.rep.log2_a;
      row["log2_B"] = l.rep.log2_b;
      row["log2_C"] = l.rep.log2_c;
      row["log2_D"] = l.rep.log2_d;
      row["classical_level"] = l.rep.classical_level;
      row["quantum_level"] = l.rep.quantum_level;
      row["gv_distance"] = l.rep.gv_distance;
      row["sk_bits"] = l.rvdc.sk_bits;
      row["pk_bits"] = l.rvdc.pk_bits;
      row["rvdc_sgn_bits"] = l.rvdc.expected_sgn_bits;
      row["crvdc_sgn_bits"] = l.crvdc.expected_sgn_bits;
      row["warnings"] = l.rep.warnings;
      out.push_back(std::move(row));
    }
    std::cout << out.dump(2) << "\n";
    return kExitAccept;
  }

  const char* sep = format == "csv" ? "," : " | ";
  auto emit_row = [&](const std::vector<std::string>& cells) {
    if (format == "md") std::cout << "| ";
    for (std::size_t i = 0; i < cells.size(); ++i)
      std::cout << cells[i] << (i + 1 < cells.size() ? sep : "");
    if (format == "md") std::cout << " |";
    std::cout << "\n";
  };
  std::vector<std::string> header = {"set",    "q",      "m",      "n",      "k",
                                     "r",      "rho",    "delta",  "h",      "log2_A",
                                     "log2_B", "log2_C", "log2_D", "level",  "q_level",
                                     "gv_d",   "sk_bits", "pk_bits", "rvdc_sgn",
                                     "crvdc_sgn"};
  emit_row(header);
  if (format == "md") {
    std::cout << "|";
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << "---|";
    std::cout << "\n";
  }
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  for (const Line& l : lines) {
    emit_row({l.p->name, std::to_string(l.p->q), std::to_string(l.p->m),
              std::to_string(l.p->n), std::to_string(l.p->k), std::to_string(l.p->r),
              std::to_string(l.p->rho), std::to_string(l.p->delta),
              std::to_string(l.p->h_bits), fmt(l.rep.log2_a), fmt(l.rep.log2_b),
              fmt(l.rep.log2_c), fmt(l.rep.log2_d), std::to_string(l.rep.classical_level),
              std::to_string(l.rep.quantum_level), std::to_string(l.rep.gv_distance),
              std::to_string(l.rvdc.sk_bits), std::to_string(l.rvdc.pk_bits),
              std::to_string(l.rvdc.expected_sgn_bits),
              std::to_string(l.crvdc.expected_sgn_bits)});
  }
  for (const Line& l : lines)
    for (const std::string& w : l.rep.warnings)
      std::cerr << "note [" << l.p->name << "]: " << w << "\n";
  return kExitAccept;
}

int cmd_bench(const std::string& params_arg, unsigned iterations, unsigned threads) {
  ParamSet params = resolve_params(params_arg);
  iterations = std::max(iterations, 30u);
  XofRng rng = system_rng();
  Bytes msg = rng.bytes(64);
  Bytes seed = rng.bytes(32);

  auto median_seconds = [&](auto&& op, unsigned iters, unsigned warmup) {
    for (unsigned i = 0; i < warmup; ++i) op(i);
    std::vector<double> samples;
    samples.reserve(iters);
    for (unsigned i = 0; i < iters; ++i) {
      auto start = std::chrono::steady_clock::now();
      op(i + warmup);
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      samples.push_back(dt.count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
  };

  KeyPair keys = keygen(params, rng);
  double t_keygen = median_seconds([&](unsigned) { keygen(params, rng); }, iterations, 3);

  HashCounters counters;
  RvdcSignature rvdc_sgn =
      sign_rvdc(params, keys.sk, keys.pk, msg, seed, threads, &counters);
  std::uint64_t sign_hashes = counters.hash_calls.load();
  counters.reset();
  verify_rvdc(params, keys.pk, msg, rvdc_sgn, threads, &counters);
  std::uint64_t verify_hashes = counters.hash_calls.load();

  double t_sign = median_seconds(
      [&](unsigned i) {
        Bytes s = seed;
        s.push_back(std::uint8_t(i));
        sign_rvdc(params, keys.sk, keys.pk, msg, s, threads);
      },
      iterations, 2);
  double t_verify = median_seconds(
      [&](unsigned) { verify_rvdc(params, keys.pk, msg, rvdc_sgn, threads); },
      iterations, 2);

  counters.reset();
  CrvdcSignature crvdc_sgn =
      sign_crvdc(params, keys.sk, keys.pk, msg, seed, threads, &counters);
  std::uint64_t csign_hashes = counters.hash_calls.load();
  counters.reset();
  verify_crvdc(params, keys.pk, msg, crvdc_sgn, threads, &counters);
  std::uint64_t cverify_hashes = counters.hash_calls.load();
  double t_csign = median_seconds(
      [&](unsigned i) {
        Bytes s = seed;
        s.push_back(std::uint8_t(i));
        sign_crvdc(params, keys.sk, keys.pk, msg, s, threads);
      },
      iterations, 2);
  double t_cverify = median_seconds(
      [&](unsigned) { verify_crvdc(params, keys.pk, msg, crvdc_sgn, threads); },
      iterations, 2);

  json out;
  out["params"] = params.name;
  out["iterations"] = iterations;
  out["threads"] = threads;
  out["keygen_ops_per_sec"] = 1.0 / t_keygen;
  out["rvdc"] = {{"sign_ops_per_sec", 1.0 / t_sign},
                 {"verify_ops_per_sec", 1.0 / t_verify},
                 {"sign_hash_calls", sign_hashes},
                 {"verify_hash_calls", verify_hashes}};
  out["crvdc"] = {{"sign_ops_per_sec", 1.0 / t_csign},
                  {"verify_ops_per_sec", 1.0 / t_cverify},
                  {"sign_hash_calls", csign_hashes},
                  {"verify_hash_calls", cverify_hashes}};
  std::cout << out.dump(2) << "\n";
  return kExitAccept;
}

int cmd_selftest(const std::string& vectors_path, bool regen,
                 const std::string& export_path) {
  if (regen) {
    // Emit the embedded-vector initializer: fixed seeds, one vector per
    // scheme on the toy and 80-bit sets.
    struct Spec {
      const char* params;
      const char* seed;
      const char* msg;
      bool compressed;
    };
    const Spec specs[] = {
        {"toy", "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
         "73656c66746573742d746f79", false},
        {"toy", "202122232425262728292a2b2c2d2e2f303132333435363738393a3b3c3d3e3f",
         "73656c66746573742d746f79", true},
        {"80", "404142434445464748494a4b4c4d4e4f505152535455565758595a5b5c5d5e5f",
         "73656c66746573742d3830", false},
        {"80", "606162636465666768696a6b6c6d6e6f707172737475767778797a7b7c7d7e7f",
         "73656c66746573742d3830", true},
    };
    for (const Spec& s : specs) {
      TestVector v = make_test_vector(s.params, from_hex(s.seed), from_hex(s.msg),
                                      s.compressed);
      std::cout << "TestVector{\"" << v.params << "\",\n  \"" << v.master_seed_hex
                << "\",\n  \"" << v.msg_hex << "\",\n  \"" << v.sk_hex << "\",\n  \""
                << v.pk_hex << "\",\n  \"" << v.sgn_hex << "\"},\n";
    }
    return kExitAccept;
  }

  if (!export_path.empty()) {
    std::ofstream out(export_path, std::ios::trunc);
    for (const TestVector& v : embedded_test_vectors()) {
      json line;
      line["params"] = v.params;
      line["master_seed_hex"] = v.master_seed_hex;
      line["msg_hex"] = v.msg_hex;
      line["sk_hex"] = v.sk_hex;
      line["pk_hex"] = v.pk_hex;
      line["sgn_hex"] = v.sgn_hex;
      out << line.dump() << "\n";
    }
    std::cerr << "exported " << embedded_test_vectors().size() << " vectors\n";
    return kExitAccept;
  }

  std::vector<TestVector> vectors;
  if (!vectors_path.empty()) {
    std::ifstream in(vectors_path);
    if (!in) throw Error(Error::Kind::InvalidParams, "cannot open vectors file");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json j = json::parse(line);
      vectors.push_back(TestVector{j.at("params"), j.at("master_seed_hex"),
                                   j.at("msg_hex"), j.at("sk_hex"), j.at("pk_hex"),
                                   j.at("sgn_hex")});
    }
  } else {
    vectors = embedded_test_vectors();
  }
  SelftestResult result = run_selftest(vectors);
  std::cout << "selftest: " << result.passed << "/" << result.total << " vectors\n";
  for (const std::string& f : result.failures) std::cerr << "  " << f << "\n";
  return result.ok() ? kExitAccept : kExitReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-metric double circulant identification and signatures"};
  app.require_subcommand(1);

  std::string params_arg, seed_hex, scheme_arg = "rvdc", key, msg_path, sig_path,
              out_path, format = "md", vectors_path, export_path;
  unsigned threads = 1, rounds = 0, bench_iters = 30;
  std::uint64_t trials = 10000;
  bool cheat = false, regen = false;

  auto* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
  keygen_cmd->add_option("--params", params_arg, "parameter set name or JSON file");
  keygen_cmd->add_option("--seed", seed_hex, "hex master seed (deterministic)");
  keygen_cmd->add_option("--out", out_path, "output base path")->required();

  auto* sign_cmd = app.add_subcommand("sign", "sign a message file");
  sign_cmd->add_option("--params", params_arg, "parameter set name or JSON file");
  sign_cmd->add_option("--scheme", scheme_arg, "rvdc|crvdc");
  sign_cmd->add_option("--key", key, "key base path (expects .sk and .pk)")->required();
  sign_cmd->add_option("--msg", msg_path, "message file")->required();
  sign_cmd->add_option("--out,--sig", out_path, "signature output path")->required();
  sign_cmd->add_option("--seed", seed_hex, "hex master seed (deterministic)");
  sign_cmd->add_option("--threads", threads, "parallel rounds");

  auto* verify_cmd = app.add_subcommand("verify", "verify a signature file");
  verify_cmd->add_option("--params", params_arg, "parameter set name or JSON file");
  verify_cmd->add_option("--key", key, "key base path or .pk file")->required();
  verify_cmd->add_option("--msg", msg_path, "message file")->required();
  verify_cmd->add_option("--sig", sig_path, "signature file")->required();
  verify_cmd->add_option("--threads", threads, "parallel rounds");

  auto* demo_cmd = app.add_subcommand("id-demo", "run the 5-pass protocol in-process");
  demo_cmd->add_option("--params", params_arg, "parameter set name or JSON file");
  demo_cmd->add_option("--rounds", rounds, "rounds to run (default: delta)");
  demo_cmd->add_option("--seed", seed_hex, "hex seed (deterministic)");
  demo_cmd->add_flag("--cheat", cheat, "run the cheating-adversary experiment");
  demo_cmd->add_option("--trials", trials, "cheating experiment trials");

  auto* params_cmd = app.add_subcommand("params", "print parameter and size tables");
  params_cmd->add_option("--format", format, "md|csv|json");
  params_cmd->add_option("--params", params_arg, "restrict to one set");

  auto* bench_cmd = app.add_subcommand("bench", "measure ops/sec");
  bench_cmd->add_option("--params", params_arg, "parameter set name or JSON file");
  bench_cmd->add_option("--iterations", bench_iters, "iterations (>= 30)");
  bench_cmd->add_option("--threads", threads, "parallel rounds");

  auto* selftest_cmd = app.add_subcommand("selftest", "run embedded test vectors");
  selftest_cmd->add_option("--vectors", vectors_path, "JSON-lines vector file");
  selftest_cmd->add_flag("--regen", regen, "print regenerated embedded vectors");
  selftest_cmd->add_option("--export", export_path, "write vectors as JSON-lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (keygen_cmd->parsed()) return cmd_keygen(params_arg, seed_hex, out_path);
    if (sign_cmd->parsed())
      return cmd_sign(params_arg, scheme_arg, key, msg_path, out_path, seed_hex, threads);
    if (verify_cmd->parsed())
      return cmd_verify(params_arg, key, msg_path, sig_path, threads);
    if (demo_cmd->parsed())
      return cmd_id_demo(params_arg, rounds, seed_hex, cheat, trials);
    if (params_cmd->parsed()) return cmd_params(format, params_arg);
    if (bench_cmd->parsed()) return cmd_bench(params_arg, bench_iters, threads);
    if (selftest_cmd->parsed()) return cmd_selftest(vectors_path, regen, export_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
