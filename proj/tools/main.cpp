// Copyright 2026 The sigmakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sigmakit command-line tool: prove, verify and bench the demo scenarios.
//
// Exit codes: 0 success, 1 proof rejected, 2 configuration or malformed input,
// 3 proving failed.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scenarios.hpp"
#include "sigmakit/errors.hpp"
#include "sigmakit/nizk.hpp"

namespace sk = sigmakit;
namespace sc = sigmakit::scenarios;

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kConfig = 2;
constexpr int kProving = 3;

sk::Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sc::ConfigError("cannot open " + path);
  return sk::Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const sk::Bytes& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw sc::ConfigError("cannot write " + path);
}

std::unique_ptr<sk::RandomSource> make_rng(
    const std::optional<uint64_t>& seed) {
  if (!seed) return std::make_unique<sk::SystemRandom>();
  std::cerr << "warning: --seed makes proofs deterministic and insecure; "
               "use it for tests and demos only\n";
  return std::make_unique<sk::SeededRandom>(*seed);
}

struct ProveArgs {
  std::string scenario;
  std::string backend = "curve";
  std::optional<uint64_t> seed;
  std::string out;
  std::string pub;
  bool dangerous_or = false;
};

int cmd_prove(const ProveArgs& a) {
  sk::GroupPtr group;
  try {
    group = sc::parse_backend(a.backend);
  } catch (const sk::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  }
  auto rng = make_rng(a.seed);
  std::optional<sc::Instance> inst;
  try {
    inst = sc::make_prover(a.scenario, group, *rng, a.dangerous_or);
  } catch (const sc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const sk::Error& e) {
    std::cerr << "statement error: " << e.what() << "\n";
    return kConfig;
  }
  sk::Bytes proof;
  try {
    proof = sk::serialize(sk::prove(inst->statement, *rng));
  } catch (const sk::Error& e) {
    std::cerr << "proving error: " << e.what() << "\n";
    return kProving;
  }
  const std::string pub_path = a.pub.empty() ? a.out + ".pub" : a.pub;
  try {
    write_file(a.out, proof);
    write_file(pub_path,
               sc::encode_public({a.scenario, a.backend, inst->publics}));
  } catch (const sk::Error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kConfig;
  }
  std::cout << "wrote " << a.out << " (" << proof.size() << " bytes) and "
            << pub_path << "\n";
  return kOk;
}

int cmd_verify(const std::string& proof_path, const std::string& pub_path) {
  sc::PublicFile pub;
  sk::Bytes proof_bytes;
  try {
    pub = sc::decode_public(read_file(pub_path));
    proof_bytes = read_file(proof_path);
  } catch (const sk::Error& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kConfig;
  }
  try {
    sk::GroupPtr group = sc::parse_backend(pub.backend);
    sk::Statement stmt = sc::make_verifier(pub.scenario, group, pub.publics);
    sk::NIProof proof = sk::deserialize(proof_bytes, stmt);
    switch (sk::check(stmt, proof)) {
      case sk::Verdict::kAccepted:
        std::cout << "accepted\n";
        return kOk;
      case sk::Verdict::kRejected:
        std::cout << "rejected: challenge hash mismatch\n";
        return kRejected;
      case sk::Verdict::kInvalidPrecommitment:
        std::cout << "rejected: precommitment validation failed\n";
        return kRejected;
    }
  } catch (const sk::ShapeError& e) {
    std::cout << "rejected: proof does not fit the statement (" << e.what()
              << ")\n";
    return kRejected;
  } catch (const sk::Error& e) {
    std::cerr << "malformed proof: " << e.what() << "\n";
    return kConfig;
  }
  return kRejected;
}

double median_ms(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_one(const std::string& label, const sc::Instance& inst,
               const sk::Statement& verifier_stmt, int n,
               sk::RandomSource& rng) {
  std::vector<double> prove_t, verify_t;
  for (int i = 0; i < n; ++i) {
    std::optional<sk::NIProof> proof;
    prove_t.push_back(time_ms([&] { proof = sk::prove(inst.statement, rng); }));
    bool ok = false;
    verify_t.push_back(
        time_ms([&] { ok = sk::verify(verifier_stmt, *proof); }));
    if (!ok) throw sk::ProvingError("bench proof for " + label + " rejected");
  }
  std::printf("%s,prove,%.4f,%d\n", label.c_str(), median_ms(prove_t), n);
  std::printf("%s,verify,%.4f,%d\n", label.c_str(), median_ms(verify_t), n);
}

struct BenchArgs {
  std::vector<std::string> scenarios;
  std::string backend = "curve";
  std::optional<uint64_t> seed;
  int n = 30;
  bool or_k = false;
};

int cmd_bench(const BenchArgs& a) {
  try {
    sk::GroupPtr group = sc::parse_backend(a.backend);
    auto rng = make_rng(a.seed);
    std::vector<std::string> names =
        a.scenarios.empty() && !a.or_k ? sc::names() : a.scenarios;
    std::printf("scenario,op,median_ms,n\n");
    for (const std::string& name : names) {
      sc::Instance inst = sc::make_prover(name, group, *rng);
      bench_one(name, inst, sc::make_verifier(name, group, inst.publics), a.n,
                *rng);
    }
    if (a.or_k) {
      for (int k : {2, 4, 8}) {
        sc::Instance inst = sc::make_or_k(group, k, *rng);
        bench_one("or-" + std::to_string(k), inst, inst.statement, a.n, *rng);
      }
    }
  } catch (const sc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const sk::Error& e) {
    std::cerr << "bench error: " << e.what() << "\n";
    return kProving;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma-protocol proofs for the sigmakit demo scenarios"};
  app.require_subcommand(1);

  ProveArgs prove;
  auto* p =
      app.add_subcommand("prove", "produce a proof and public-inputs file");
  p->add_option("--scenario", prove.scenario, "scenario name")
      ->required()
      ->check(CLI::IsMember(sc::names()));
  p->add_option("--backend", prove.backend, "curve or toy:p,q,g")
      ->capture_default_str();
  p->add_option("--seed", prove.seed, "deterministic entropy (insecure)");
  p->add_option("-o,--out", prove.out, "proof file")->required();
  p->add_option("--public", prove.pub,
                "public-inputs file (default <out>.pub)");
  p->add_flag("--dangerous-or", prove.dangerous_or,
              "enc-bit-or only: share the randomness across the OR");

  std::string proof_path, pub_path;
  auto* v = app.add_subcommand("verify", "check a proof against public inputs");
  v->add_option("--proof", proof_path, "proof file")->required();
  v->add_option("--public", pub_path, "public-inputs file")->required();

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "median prove/verify times as CSV");
  b->add_option("--scenario", bench.scenarios, "scenarios (default: all)")
      ->check(CLI::IsMember(sc::names()));
  b->add_option("--backend", bench.backend, "curve or toy:p,q,g")
      ->capture_default_str();
  b->add_option("--seed", bench.seed, "deterministic entropy (insecure)");
  b->add_option("--n", bench.n, "iterations per measurement")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  b->add_flag("--or-k", bench.or_k, "add the OR-of-k sweep, k in {2,4,8}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }
  if (*p) return cmd_prove(prove);
  if (*v) return cmd_verify(proof_path, pub_path);
  return cmd_bench(bench);
}
