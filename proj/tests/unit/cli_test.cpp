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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "sigmakit/bytes.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sigmakit_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  CliRun run(const std::string& args) const {
    const std::string out = path("stdout.txt"), err = path("stderr.txt");
    const std::string cmd =
        std::string(SIGMAKIT_CLI) + " " + args + " >" + out + " 2>" + err;
    int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp_text(out),
            slurp_text(err)};
  }

  static std::string slurp_text(const std::string& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  static sigmakit::Bytes slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return sigmakit::Bytes(std::istreambuf_iterator<char>(in), {});
  }
  static void dump(const std::string& p, const sigmakit::Bytes& b) {
    std::ofstream(p, std::ios::binary)
        .write(reinterpret_cast<const char*>(b.data()),
               static_cast<std::streamsize>(b.size()));
  }

  fs::path dir_;
};

TEST_F(CliTest, EveryScenarioRoundtripsOnBothBackends) {
  for (const char* backend : {"curve", "toy:23,11,2"}) {
    for (const char* scenario :
         {"schnorr", "equal-dl", "enc-bit-or", "dlne", "range", "vote5"}) {
      const std::string proof = path(std::string(scenario) + ".bin");
      CliRun p = run(std::string("prove --scenario ") + scenario +
                     " --backend " + backend + " -o " + proof);
      ASSERT_EQ(p.code, 0) << scenario << " " << backend << ": " << p.err;
      CliRun v = run("verify --proof " + proof + " --public " + proof + ".pub");
      EXPECT_EQ(v.code, 0) << scenario << " " << backend << ": " << v.out;
    }
  }
}

TEST_F(CliTest, SeededProofIsGolden) {
  CliRun a =
      run("prove --scenario schnorr --backend toy:23,11,2 --seed 42 -o " +
          path("a.bin"));
  CliRun b =
      run("prove --scenario schnorr --backend toy:23,11,2 --seed 42 -o " +
          path("b.bin") + " --public " + path("b.pub"));
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(a.err.find("insecure"), std::string::npos);
  EXPECT_EQ(slurp(path("a.bin")), slurp(path("b.bin")));
  EXPECT_EQ(slurp(path("a.bin.pub")), slurp(path("b.pub")));

  const std::string golden =
      std::string(SIGMAKIT_GOLDEN_DIR) + "/cli_schnorr_toy_seed42.hex";
  if (std::getenv("SIGMAKIT_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(golden) << sigmakit::to_hex(slurp(path("a.bin"))) << "\n";
  }
  std::string hex;
  std::ifstream(golden) >> hex;
  EXPECT_EQ(sigmakit::to_hex(slurp(path("a.bin"))), hex);
}

TEST_F(CliTest, DangerousOrVariantFailsAtProving) {
  CliRun r =
      run("prove --scenario enc-bit-or --dangerous-or -o " + path("d.bin"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("secret appears outside OR"), std::string::npos)
      << r.err;
}

TEST_F(CliTest, ProofIsBoundToItsStatement) {
  ASSERT_EQ(run("prove --scenario schnorr -o " + path("s.bin")).code, 0);
  ASSERT_EQ(run("prove --scenario equal-dl -o " + path("e.bin")).code, 0);
  CliRun r =
      run("verify --proof " + path("s.bin") + " --public " + path("e.bin.pub"));
  EXPECT_EQ(r.code, 1);

  // Same scenario, different public values.
  ASSERT_EQ(run("prove --scenario schnorr -o " + path("t.bin")).code, 0);
  r = run("verify --proof " + path("s.bin") + " --public " + path("t.bin.pub"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("hash mismatch"), std::string::npos) << r.out;
}

TEST_F(CliTest, ConfigErrors) {
  EXPECT_EQ(run("prove --scenario nope -o " + path("x")).code, 2);
  EXPECT_EQ(
      run("prove --scenario schnorr --backend toy:23,12,2 -o " + path("x"))
          .code,
      2);
  EXPECT_EQ(
      run("prove --scenario schnorr --backend toy:23,11 -o " + path("x")).code,
      2);
  EXPECT_EQ(run("prove --scenario schnorr --backend moon -o " + path("x")).code,
            2);
  EXPECT_EQ(
      run("prove --scenario range --backend toy:7,3,2 -o " + path("x")).code,
      2);
  EXPECT_EQ(
      run("verify --proof " + path("none") + " --public " + path("none")).code,
      2);
  EXPECT_EQ(run("").code, 2);
}

TEST_F(CliTest, MalformedPublicFile) {
  ASSERT_EQ(run("prove --scenario schnorr -o " + path("s.bin")).code, 0);
  sigmakit::Bytes pub = slurp(path("s.bin.pub"));
  sigmakit::Bytes bad = pub;
  bad[0] ^= 0x01;
  dump(path("bad.pub"), bad);
  EXPECT_EQ(
      run("verify --proof " + path("s.bin") + " --public " + path("bad.pub"))
          .code,
      2);
  dump(path("short.pub"), sigmakit::Bytes(pub.begin(), pub.end() - 1));
  EXPECT_EQ(
      run("verify --proof " + path("s.bin") + " --public " + path("short.pub"))
          .code,
      2);
}

TEST_F(CliTest, CorruptedProofNeverCrashes) {
  ASSERT_EQ(run("prove --scenario enc-bit-or --backend toy:23,11,2 -o " +
                path("p.bin"))
                .code,
            0);
  sigmakit::Bytes proof = slurp(path("p.bin"));
  for (size_t i = 0; i < proof.size(); ++i) {
    sigmakit::Bytes bad = proof;
    bad[i] ^= 0x5a;
    dump(path("bad.bin"), bad);
    CliRun r = run("verify --proof " + path("bad.bin") + " --public " +
                   path("p.bin.pub"));
    EXPECT_TRUE(r.code == 1 || r.code == 2)
        << "byte " << i << " exit " << r.code;
  }
}

TEST_F(CliTest, BenchPrintsCsv) {
  CliRun r = run("bench --scenario schnorr --backend toy:23,11,2");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, prove_row, verify_row;
  std::getline(lines, header);
  std::getline(lines, prove_row);
  std::getline(lines, verify_row);
  EXPECT_EQ(header, "scenario,op,median_ms,n");
  EXPECT_EQ(prove_row.rfind("schnorr,prove,", 0), 0u) << prove_row;
  EXPECT_EQ(verify_row.rfind("schnorr,verify,", 0), 0u) << verify_row;
  EXPECT_EQ(prove_row.substr(prove_row.size() - 3), ",30");

  r = run("bench --scenario schnorr --n 3 --or-k");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("schnorr,prove,"), std::string::npos);
  EXPECT_NE(r.out.find("or-8,prove,"), std::string::npos);
  EXPECT_NE(r.out.find(",3\n"), std::string::npos);
}

}  // namespace
