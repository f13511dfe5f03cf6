#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#ifndef FMCA_CLI_PATH
#error "FMCA_CLI_PATH must point at the fmca-cli binary"
#endif
#ifndef FMCA_DATA_DIR
#error "FMCA_DATA_DIR must point at the data directory"
#endif

namespace fs = std::filesystem;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

// Runs the CLI with the given arguments; stderr is discarded.
Result run(const std::string& args) {
  const std::string cmd = std::string(FMCA_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fmca_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string read(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  fs::path dir_;
};

std::string random_grid(int n, std::mt19937_64& rng) {
  std::string s = std::to_string(n) + "\n";
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < n; ++i) s += rng() % 10 < 6 ? '-' : '+';
    s += '\n';
  }
  return s;
}

}  // namespace

TEST_F(CliTest, SimulateTrivialGrids) {
  const std::string minus = "4\n----\n----\n----\n----\n";
  const auto g = write("m.txt", minus);
  const Result r = run("simulate --grid " + g + " --north 1 --east 1 --steps 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, minus);
  const std::string plus = "3\n+++\n+++\n+++\n";
  const auto out = (dir_ / "p.out").string();
  EXPECT_EQ(run("simulate --grid " + write("p.txt", plus) + " --steps 3 --out " + out).status, 0);
  EXPECT_EQ(read(out), plus);
}

TEST_F(CliTest, SimulateToFixedPoint) {
  std::mt19937_64 rng(16);
  const auto g = write("r.txt", random_grid(16, rng));
  const std::string cmd = std::string(FMCA_CLI_PATH) + " simulate --grid " + g +
                          " --to-fixed-point --out " + (dir_ / "fp.txt").string() + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  char buf[256] = {0};
  const size_t got = fread(buf, 1, sizeof buf - 1, p);
  buf[got] = 0;
  EXPECT_EQ(WEXITSTATUS(pclose(p)), 0);
  unsigned long steps = 0;
  ASSERT_EQ(std::sscanf(buf, "steps to fixed point: %lu", &steps), 1) << buf;
  EXPECT_LE(steps, 256u);
}

TEST_F(CliTest, SimulateEmitEvery) {
  const auto g = write("c.txt", "4\n++++\n++++\n+--+\n++++\n");
  const auto out = (dir_ / "o.txt").string();
  EXPECT_EQ(run("simulate --grid " + g + " --steps 2 --emit-every 1 --out " + out).status, 0);
  EXPECT_TRUE(fs::exists(out + ".1"));
  EXPECT_TRUE(fs::exists(out + ".2"));
}

TEST_F(CliTest, UsageErrors) {
  const auto g = write("m.txt", "2\n--\n--\n");
  EXPECT_EQ(run("simulate --grid " + g).status, 2);
  EXPECT_EQ(run("simulate --grid " + g + " --steps 1 --bogus").status, 2);
  EXPECT_EQ(run("simulate --grid " + g + " --north 0 --steps 1").status, 2);
  EXPECT_EQ(run("simulate --grid " + write("bad.txt", "2\n-x\n--\n") + " --steps 1").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("").status, 2);
}

TEST_F(CliTest, PredictWords) {
  const auto g = write("g.txt", "4\n++++\n-+++\n+-++\n++++\n");
  for (const char* m : {"auto", "sim", "graph", "matrix"}) {
    EXPECT_EQ(run("predict --grid " + g + " --cell 0,0 --time 3 --method " + m).out, "UNCHANGED\n");
    // (1,1) has north (1,2) = '+' and east (2,1) = '+'.
    const Result r = run("predict --grid " + g + " --cell 1,1 --time 1 --method " + std::string(m));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "CHANGED\n");
  }
  EXPECT_EQ(run("predict --grid " + g + " --north 1,2 --cell 1,1 --time 1 --method graph").status, 2);
  EXPECT_EQ(run("predict --grid " + g + " --cell 1,1 --time 1 --method magic").status, 2);
  EXPECT_EQ(run("predict --grid " + g + " --cell 9,9 --time 1").status, 2);
  EXPECT_EQ(run("predict --grid " + g + " --cell 1 --time 1").status, 2);
}

TEST_F(CliTest, PredictGraphMatchesSim) {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 100; ++k) {
    const int n = 5 + static_cast<int>(rng() % 8);
    const auto g = write("g" + std::to_string(k) + ".txt", random_grid(n, rng));
    const std::string cell = " --cell " + std::to_string(rng() % n) + "," + std::to_string(rng() % n);
    const std::string t = " --time " + std::to_string(1 + rng() % (n * 2));
    const std::string nb = " --north " + std::to_string(1 + rng() % 3) + " --east " + std::to_string(1 + rng() % 3);
    const Result a = run("predict --grid " + g + nb + cell + t + " --method sim");
    const Result b = run("predict --grid " + g + nb + cell + t + " --method graph");
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST_F(CliTest, CompileCheck) {
  const auto out = (dir_ / "inst.txt").string();
  EXPECT_EQ(run("compile --circuit " + write("id.txt", "input a 1\noutput a\n") +
                " --family contiguous:2,2 --check --out " + out).status, 0);
  EXPECT_NE(read(out).find("neighborhood N=1,2 E=1,2"), std::string::npos);
  EXPECT_EQ(run("compile --circuit " + write("and.txt", "input a 1\ninput b 0\nand g a b\noutput g\n") +
                " --family contiguous:2,2 --check --out " + out).status, 0);
  EXPECT_EQ(run("compile --circuit " + write("bad.txt", "input a 1\nand g a\noutput g\n") +
                " --family contiguous:2,2 --out " + out).status, 2);
  EXPECT_EQ(run("compile --circuit " + write("id2.txt", "input a 1\noutput a\n") +
                " --family contiguous:1,2 --out " + out).status, 2);
}

TEST_F(CliTest, VerifyGadgets) {
  const Result r = run("verify-gadgets --family contiguous:2,2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("containment"), std::string::npos);
  EXPECT_EQ(run("verify-gadgets --family contiguous:2,2 --dump").out.rfind("family contiguous 2 2", 0), 0u);
  // Swap the AND and OR tiles so each is judged by the other's truth table.
  std::ifstream in(std::string(FMCA_DATA_DIR) + "/gadgets/contiguous_2_2.gadgets");
  std::string text((std::istreambuf_iterator<char>(in)), {});
  ASSERT_NE(text.find("tile and "), std::string::npos);
  text.replace(text.find("tile or "), 8, "tile tmp ");
  text.replace(text.find("tile and "), 9, "tile or ");
  text.replace(text.find("tile tmp "), 9, "tile and ");
  EXPECT_EQ(run("verify-gadgets --file " + write("swapped.gadgets", text)).status, 1);
  EXPECT_EQ(run("verify-gadgets").status, 2);
}

TEST_F(CliTest, GenCircuitIsDeterministic) {
  const Result a = run("gen-circuit --inputs 3 --gates 7 --seed 9");
  const Result b = run("gen-circuit --inputs 3 --gates 7 --seed 9");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("output "), std::string::npos);
  EXPECT_EQ(run("gen-circuit --inputs 0 --gates 7").status, 2);
}

TEST_F(CliTest, BenchSmall) {
  const Result r = run("bench --sizes 16,32 --seed 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("n,method,wall_ms,answer_hash\n", 0), 0u);
  size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  EXPECT_EQ(lines, 5u);
}
