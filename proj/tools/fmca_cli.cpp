// fmca-cli: simulate, predict, compile, verify-gadgets, gen-circuit, bench.
// Data goes to stdout or --out, messages to stderr.
// Exit codes: 0 success, 1 check or verification failure, 2 usage or parse error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fmca/fmca.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Carries a library failure up to main.
struct CliError : std::runtime_error {
  explicit CliError(const std::string& m) : std::runtime_error(m) {}
};

void check(fmca_status s, const std::string& what) {
  if (s != FMCA_OK)
    throw CliError(what + ": " + fmca_status_name(s) + ": " + fmca_last_error());
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Grid = std::unique_ptr<fmca_grid, Deleter<fmca_grid, fmca_grid_free>>;
using Nb = std::unique_ptr<fmca_neighborhood, Deleter<fmca_neighborhood, fmca_neighborhood_free>>;
using Circuit = std::unique_ptr<fmca_circuit, Deleter<fmca_circuit, fmca_circuit_free>>;
using GadgetSet = std::unique_ptr<fmca_gadget_set, Deleter<fmca_gadget_set, fmca_gadget_set_free>>;
using Instance = std::unique_ptr<fmca_instance, Deleter<fmca_instance, fmca_instance_free>>;

std::string take_string(char* s) {
  std::string out(s);
  fmca_string_free(s);
  return out;
}

Grid read_grid(const std::string& path) {
  fmca_grid* g = nullptr;
  check(fmca_grid_read(path.c_str(), &g), "reading " + path);
  return Grid(g);
}

Nb make_nb(const std::string& north, const std::string& east) {
  fmca_neighborhood* nb = nullptr;
  check(fmca_neighborhood_parse(north.c_str(), east.c_str(), &nb), "neighborhood");
  return Nb(nb);
}

std::string grid_text(const fmca_grid* g) {
  char* s = nullptr;
  check(fmca_grid_format(g, &s), "formatting grid");
  return take_string(s);
}

void emit_grid(const fmca_grid* g, const std::string& path) {
  if (path.empty())
    std::cout << grid_text(g);
  else
    check(fmca_grid_write(g, path.c_str()), "writing " + path);
}

struct SimulateArgs {
  std::string grid, north = "1", east = "1", out;
  uint64_t steps = 0;
  bool to_fixed_point = false;
  uint64_t emit_every = 0;
  int threads = 1;
};

int run_simulate(const SimulateArgs& a) {
  Grid g = read_grid(a.grid);
  Nb nb = make_nb(a.north, a.east);
  int n = 0;
  check(fmca_grid_size(g.get(), &n), "grid size");
  const uint64_t cap = static_cast<uint64_t>(n) * static_cast<uint64_t>(n);
  if (a.to_fixed_point && a.emit_every == 0) {
    fmca_grid* fp = nullptr;
    uint64_t steps = 0;
    check(fmca_run_to_fixed_point(g.get(), nb.get(), a.threads, &fp, &steps), "simulate");
    Grid result(fp);
    std::cerr << "steps to fixed point: " << steps << '\n';
    emit_grid(result.get(), a.out);
    return kExitOk;
  }
  if (a.emit_every == 0) {
    fmca_grid* r = nullptr;
    check(fmca_simulate(g.get(), nb.get(), a.steps, a.threads, &r), "simulate");
    Grid result(r);
    emit_grid(result.get(), a.out);
    return kExitOk;
  }
  // Step by step so intermediate grids can be written; with --out they go to
  // <out>.<t>, otherwise to stdout ahead of the final grid.
  const uint64_t limit = a.to_fixed_point ? cap : std::min(a.steps, cap);
  Grid cur = std::move(g);
  uint64_t t = 0;
  for (; t < limit; ++t) {
    fmca_grid* next = nullptr;
    check(fmca_step(cur.get(), nb.get(), a.threads, &next), "step");
    Grid nx(next);
    int same = 0;
    check(fmca_grid_equal(cur.get(), nx.get(), &same), "compare");
    if (same && a.to_fixed_point) break;
    cur = std::move(nx);
    if ((t + 1) % a.emit_every == 0)
      emit_grid(cur.get(), a.out.empty() ? "" : a.out + "." + std::to_string(t + 1));
  }
  if (a.to_fixed_point) std::cerr << "steps to fixed point: " << t << '\n';
  emit_grid(cur.get(), a.out);
  return kExitOk;
}

struct PredictArgs {
  std::string grid, north = "1", east = "1", cell, method = "auto";
  uint64_t time = 0;
};

std::pair<int, int> parse_cell(const std::string& s) {
  const size_t comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    size_t a = 0, b = 0;
    const std::string left = s.substr(0, comma), right = s.substr(comma + 1);
    const int i = std::stoi(left, &a);
    const int j = std::stoi(right, &b);
    if (a != left.size() || b != right.size()) throw std::invalid_argument(s);
    return {i, j};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--cell", "expected i,j, got '" + s + "'");
  }
}

int run_predict(const PredictArgs& a) {
  static const std::map<std::string, fmca_method> methods = {
      {"auto", FMCA_METHOD_AUTO},
      {"sim", FMCA_METHOD_SIM},
      {"graph", FMCA_METHOD_GRAPH},
      {"matrix", FMCA_METHOD_MATRIX}};
  const auto [i, j] = parse_cell(a.cell);
  Grid g = read_grid(a.grid);
  Nb nb = make_nb(a.north, a.east);
  int changed = 0;
  check(fmca_predict(g.get(), nb.get(), i, j, a.time, methods.at(a.method), &changed), "predict");
  std::cout << (changed ? "CHANGED" : "UNCHANGED") << '\n';
  return kExitOk;
}

struct CompileArgs {
  std::string circuit, family, out;
  bool check_result = false;
  int max_side = 0;
  int threads = 1;
};

int run_compile(const CompileArgs& a) {
  fmca_circuit* c = nullptr;
  check(fmca_circuit_read(a.circuit.c_str(), &c), "reading " + a.circuit);
  Circuit circuit(c);
  fmca_instance* inst = nullptr;
  check(fmca_compile(circuit.get(), a.family.c_str(), a.max_side, &inst), "compile");
  Instance instance(inst);
  if (a.out.empty()) {
    char* text = nullptr;
    check(fmca_instance_format(instance.get(), &text), "formatting instance");
    std::cout << take_string(text);
  } else {
    check(fmca_instance_write(instance.get(), a.out.c_str()), "writing " + a.out);
  }
  int oi = 0, oj = 0, n = 0;
  check(fmca_instance_output_cell(instance.get(), &oi, &oj), "output cell");
  fmca_grid* g = nullptr;
  check(fmca_instance_grid(instance.get(), &g), "instance grid");
  check(fmca_grid_size(Grid(g).get(), &n), "grid size");
  std::cerr << "compiled: n=" << n << " output cell " << oi << ',' << oj << '\n';
  if (!a.check_result) return kExitOk;
  int expected = 0, got = 0;
  check(fmca_circuit_evaluate(circuit.get(), &expected), "evaluate");
  check(fmca_instance_run(instance.get(), a.threads, &got), "run");
  std::cerr << "circuit " << (expected ? "TRUE" : "FALSE") << ", output cell "
            << (got ? "CHANGED" : "UNCHANGED") << '\n';
  if (got != expected) {
    std::cerr << "check failed: output cell disagrees with the circuit\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string family, file;
  bool dump = false;
};

int run_verify(const VerifyArgs& a) {
  fmca_gadget_set* raw = nullptr;
  if (!a.file.empty())
    check(fmca_gadget_set_read(a.file.c_str(), &raw), "reading " + a.file);
  else
    check(fmca_gadget_set_load(a.family.c_str(), &raw), "loading gadgets");
  GadgetSet gs(raw);
  if (a.dump) {
    char* text = nullptr;
    check(fmca_gadget_set_format(gs.get(), &text), "formatting gadgets");
    std::cout << take_string(text);
  }
  int passed = 0;
  char* report = nullptr;
  check(fmca_gadget_set_verify(gs.get(), &passed, &report), "verify");
  std::cout << take_string(report);
  std::cerr << (passed ? "all contracts pass" : "verification FAILED") << '\n';
  return passed ? kExitOk : kExitCheckFailed;
}

struct GenArgs {
  int inputs = 4, gates = 10;
  uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  fmca_circuit* c = nullptr;
  check(fmca_circuit_random(a.inputs, a.gates, a.seed, &c), "gen-circuit");
  Circuit circuit(c);
  char* text = nullptr;
  check(fmca_circuit_format(circuit.get(), &text), "formatting circuit");
  const std::string s = take_string(text);
  if (a.out.empty()) {
    std::cout << s;
  } else {
    std::FILE* f = std::fopen(a.out.c_str(), "wb");
    if (!f || std::fwrite(s.data(), 1, s.size(), f) != s.size() || std::fclose(f) != 0)
      throw CliError("cannot write " + a.out);
  }
  return kExitOk;
}

struct BenchArgs {
  std::vector<int> sizes{128, 256, 512};
  uint64_t seed = 1;
  int threads = 1;
};

uint64_t hash_times(const std::vector<int64_t>& v) {
  uint64_t h = 1469598103934665603ull;
  for (int64_t x : v)
    for (int b = 0; b < 8; ++b) {
      h ^= (static_cast<uint64_t>(x) >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  return h;
}

int run_bench(const BenchArgs& a) {
  Nb nb = make_nb("1", "1");
  std::cout << "n,method,wall_ms,answer_hash\n";
  bool agree = true;
  for (int n : a.sizes) {
    fmca_grid* raw = nullptr;
    check(fmca_grid_long_chain(n, a.seed + static_cast<uint64_t>(n), &raw), "long-chain grid");
    Grid g(raw);
    std::vector<int64_t> times(static_cast<size_t>(n) * n);
    uint64_t hashes[2] = {0, 0};
    const std::pair<const char*, fmca_method> methods[2] = {{"sim", FMCA_METHOD_SIM},
                                                            {"graph", FMCA_METHOD_GRAPH}};
    for (int m = 0; m < 2; ++m) {
      const auto start = std::chrono::steady_clock::now();
      check(fmca_flip_schedule(g.get(), nb.get(), methods[m].second, a.threads, times.data(),
                               times.size()),
            "flip schedule");
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      hashes[m] = hash_times(times);
      char line[128];
      std::snprintf(line, sizeof line, "%d,%s,%.3f,%016llx\n", n, methods[m].first, ms,
                    static_cast<unsigned long long>(hashes[m]));
      std::cout << line << std::flush;
    }
    if (hashes[0] != hashes[1]) {
      std::cerr << "n=" << n << ": sim and graph answers differ\n";
      agree = false;
    }
  }
  return agree ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Freezing majority cellular automata on the torus"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Run the dynamics for a number of steps or to the fixed point");
  s->add_option("--grid", sim.grid, "Grid file")->required()->check(CLI::ExistingFile);
  s->add_option("--north", sim.north, "North offsets S_N, comma separated")->capture_default_str();
  s->add_option("--east", sim.east, "East offsets S_E, comma separated")->capture_default_str();
  auto* steps = s->add_option("--steps", sim.steps, "Number of steps");
  auto* fixed = s->add_flag("--to-fixed-point", sim.to_fixed_point, "Run until nothing changes; prints the step count");
  steps->excludes(fixed);
  s->add_option("--out", sim.out, "Output grid file (default stdout)");
  s->add_option("--emit-every", sim.emit_every, "Also write every k-th intermediate grid")->check(CLI::PositiveNumber);
  s->add_option("--threads", sim.threads, "Worker threads")->check(CLI::Range(1, 256));
  s->callback([&] {
    if (!steps->count() && !sim.to_fixed_point)
      throw CLI::RequiredError("--steps or --to-fixed-point");
  });

  PredictArgs pred;
  auto* p = app.add_subcommand("predict", "Decide whether a cell has changed by time t");
  p->add_option("--grid", pred.grid, "Grid file")->required()->check(CLI::ExistingFile);
  p->add_option("--north", pred.north, "North offsets S_N")->capture_default_str();
  p->add_option("--east", pred.east, "East offsets S_E")->capture_default_str();
  p->add_option("--cell", pred.cell, "Cell i,j (0-based, i east, j north)")->required();
  p->add_option("--time", pred.time, "Time t")->required();
  p->add_option("--method", pred.method, "auto, sim, graph or matrix")
      ->check(CLI::IsMember({"auto", "sim", "graph", "matrix"}))
      ->capture_default_str();

  CompileArgs comp;
  auto* c = app.add_subcommand("compile", "Compile a monotone circuit into an initial configuration");
  c->add_option("--circuit", comp.circuit, "Netlist file")->required()->check(CLI::ExistingFile);
  c->add_option("--family", comp.family,
                "contiguous:kE,kN | periodic:p,p',sE,sN | sparse2:iE,jE,iN,jN")
      ->required();
  c->add_option("--out", comp.out, "Instance file (default stdout)");
  c->add_flag("--check", comp.check_result, "Simulate and compare with the circuit value");
  c->add_option("--max-side", comp.max_side, "Largest grid side allowed")->check(CLI::PositiveNumber);
  c->add_option("--threads", comp.threads, "Worker threads for --check")->check(CLI::Range(1, 256));

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify-gadgets", "Check every tile of a family against its contracts");
  auto* fam = v->add_option("--family", ver.family, "Family, as for compile");
  auto* file = v->add_option("--file", ver.file, "Gadget-set file to verify instead")->check(CLI::ExistingFile);
  fam->excludes(file);
  v->add_flag("--dump", ver.dump, "Print the gadget set before the report");
  v->callback([&] {
    if (!fam->count() && !file->count()) throw CLI::RequiredError("--family or --file");
  });

  GenArgs gen;
  auto* g = app.add_subcommand("gen-circuit", "Write a seeded random monotone circuit");
  g->add_option("--inputs", gen.inputs, "Number of inputs")->check(CLI::Range(1, 1 << 20))->capture_default_str();
  g->add_option("--gates", gen.gates, "Number of gates")->check(CLI::Range(1, 1 << 20))->capture_default_str();
  g->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  g->add_option("--out", gen.out, "Netlist file (default stdout)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time the simulation and graph predictors on long-chain grids");
  b->add_option("--sizes", bench.sizes, "Grid sides")->delimiter(',')->check(CLI::Range(2, 1 << 15));
  b->add_option("--seed", bench.seed, "Seed")->capture_default_str();
  b->add_option("--threads", bench.threads, "Threads for the simulation")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kExitUsage;
  }

  try {
    if (*s) return run_simulate(sim);
    if (*p) return run_predict(pred);
    if (*c) return run_compile(comp);
    if (*v) return run_verify(ver);
    if (*g) return run_gen(gen);
    if (*b) return run_bench(bench);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
