#include "fmca/fmca.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "circuit/circuit.hpp"
#include "compile/compiler.hpp"
#include "compile/gadgets.hpp"
#include "compile/verify.hpp"
#include "core/error.hpp"
#include "core/grid_io.hpp"
#include "core/rule.hpp"
#include "predict/fast.hpp"

struct fmca_grid {
  fmca::Configuration x;
};
struct fmca_neighborhood {
  fmca::LNeighborhood nb;
};
struct fmca_circuit {
  fmca::circuit::MonotoneCircuit c;
};
struct fmca_gadget_set {
  fmca::compile::GadgetSet gs;
};
struct fmca_instance {
  fmca::compile::CompiledInstance inst;
};

namespace {

thread_local std::string g_last_error;

fmca_status fail(fmca_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs body and maps exceptions to status codes.
template <class F>
fmca_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return FMCA_OK;
  } catch (const fmca::Error& e) {
    return fail(static_cast<fmca_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FMCA_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FMCA_E_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw fmca::Error(fmca::ErrorCode::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

int clamp_threads(int threads) { return threads < 1 ? 1 : threads; }

std::vector<int> parse_offsets(const char* text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw fmca::Error(fmca::ErrorCode::kInvalidArgument, "bad offset '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

fmca_method resolve(fmca_method m, const fmca::LNeighborhood& nb) {
  if (m != FMCA_METHOD_AUTO) return m;
  return nb.is_singleton() ? FMCA_METHOD_GRAPH : FMCA_METHOD_SIM;
}

}  // namespace

extern "C" {

const char* fmca_last_error(void) { return g_last_error.c_str(); }

const char* fmca_status_name(fmca_status status) {
  if (status == FMCA_OK) return "Ok";
  if (status < FMCA_E_INVALID_ARGUMENT || status > FMCA_E_INTERNAL) return "Unknown";
  return fmca::error_code_name(static_cast<fmca::ErrorCode>(static_cast<int>(status)));
}

void fmca_string_free(char* s) { std::free(s); }

fmca_status fmca_grid_new(int n, int fill, fmca_grid** out) {
  return guarded([&] {
    require(out && n >= 1, "grid needs n >= 1 and an out pointer");
    require(fill == 1 || fill == -1, "fill must be -1 or +1");
    *out = new fmca_grid{fmca::Configuration(n, fill == 1 ? fmca::State::kPlus : fmca::State::kMinus)};
  });
}

fmca_status fmca_grid_random(int n, uint64_t seed, double plus_density, fmca_grid** out) {
  return guarded([&] {
    require(out && n >= 1, "grid needs n >= 1 and an out pointer");
    require(plus_density >= 0.0 && plus_density <= 1.0, "density must lie in [0, 1]");
    *out = new fmca_grid{fmca::Configuration::random(n, seed, plus_density)};
  });
}

fmca_status fmca_grid_long_chain(int n, uint64_t seed, fmca_grid** out) {
  return guarded([&] {
    require(out, "null out pointer");
    *out = new fmca_grid{fmca::predict::long_chain_configuration(n, seed)};
  });
}

fmca_status fmca_grid_parse(const char* text, fmca_grid** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new fmca_grid{fmca::parse_grid(text)};
  });
}

fmca_status fmca_grid_read(const char* path, fmca_grid** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new fmca_grid{fmca::read_grid_file(path)};
  });
}

fmca_status fmca_grid_write(const fmca_grid* g, const char* path) {
  return guarded([&] {
    require(g && path, "null argument");
    fmca::write_grid_file(g->x, path);
  });
}

fmca_status fmca_grid_format(const fmca_grid* g, char** out_text) {
  return guarded([&] {
    require(g && out_text, "null argument");
    *out_text = dup_string(fmca::format_grid(g->x));
  });
}

fmca_status fmca_grid_copy(const fmca_grid* g, fmca_grid** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new fmca_grid{g->x};
  });
}

fmca_status fmca_grid_size(const fmca_grid* g, int* n) {
  return guarded([&] {
    require(g && n, "null argument");
    *n = g->x.n();
  });
}

fmca_status fmca_grid_get(const fmca_grid* g, int i, int j, int* state) {
  return guarded([&] {
    require(g && state, "null argument");
    *state = static_cast<int>(g->x.at({i, j}));
  });
}

fmca_status fmca_grid_set(fmca_grid* g, int i, int j, int state) {
  return guarded([&] {
    require(g, "null argument");
    require(state == 1 || state == -1, "state must be -1 or +1");
    g->x.set({i, j}, state == 1 ? fmca::State::kPlus : fmca::State::kMinus);
  });
}

fmca_status fmca_grid_count_plus(const fmca_grid* g, uint64_t* count) {
  return guarded([&] {
    require(g && count, "null argument");
    *count = g->x.count_plus();
  });
}

fmca_status fmca_grid_equal(const fmca_grid* a, const fmca_grid* b, int* equal) {
  return guarded([&] {
    require(a && b && equal, "null argument");
    *equal = a->x == b->x ? 1 : 0;
  });
}

fmca_status fmca_grid_hash(const fmca_grid* g, uint64_t* hash) {
  return guarded([&] {
    require(g && hash, "null argument");
    *hash = g->x.hash();
  });
}

void fmca_grid_free(fmca_grid* g) { delete g; }

fmca_status fmca_neighborhood_new(const int* north, size_t north_count, const int* east,
                                  size_t east_count, fmca_neighborhood** out) {
  return guarded([&] {
    require(out && (north || north_count == 0) && (east || east_count == 0), "null argument");
    *out = new fmca_neighborhood{fmca::LNeighborhood(std::vector<int>(north, north + north_count),
                                                     std::vector<int>(east, east + east_count))};
  });
}

fmca_status fmca_neighborhood_parse(const char* north, const char* east, fmca_neighborhood** out) {
  return guarded([&] {
    require(north && east && out, "null argument");
    *out = new fmca_neighborhood{fmca::LNeighborhood(parse_offsets(north), parse_offsets(east))};
  });
}

fmca_status fmca_neighborhood_format(const fmca_neighborhood* nb, char** out_text) {
  return guarded([&] {
    require(nb && out_text, "null argument");
    *out_text = dup_string(nb->nb.to_string());
  });
}

void fmca_neighborhood_free(fmca_neighborhood* nb) { delete nb; }

fmca_status fmca_step(const fmca_grid* g, const fmca_neighborhood* nb, int threads, fmca_grid** out) {
  return guarded([&] {
    require(g && nb && out, "null argument");
    *out = new fmca_grid{fmca::step(g->x, nb->nb, clamp_threads(threads))};
  });
}

fmca_status fmca_simulate(const fmca_grid* g, const fmca_neighborhood* nb, uint64_t steps,
                          int threads, fmca_grid** out) {
  return guarded([&] {
    require(g && nb && out, "null argument");
    *out = new fmca_grid{fmca::simulate(g->x, nb->nb, steps, clamp_threads(threads))};
  });
}

fmca_status fmca_run_to_fixed_point(const fmca_grid* g, const fmca_neighborhood* nb, int threads,
                                    fmca_grid** out, uint64_t* steps) {
  return guarded([&] {
    require(g && nb && out, "null argument");
    fmca::FixedPointResult r = fmca::run_to_fixed_point(g->x, nb->nb, clamp_threads(threads));
    if (steps) *steps = r.steps;
    *out = new fmca_grid{std::move(r.config)};
  });
}

fmca_status fmca_predict(const fmca_grid* g, const fmca_neighborhood* nb, int i, int j, uint64_t t,
                         fmca_method method, int* changed) {
  return guarded([&] {
    require(g && nb && changed, "null argument");
    const fmca::Cell c{i, j};
    bool r = false;
    switch (resolve(method, nb->nb)) {
      case FMCA_METHOD_SIM:
        r = fmca::predict_by_simulation(g->x, nb->nb, t, c);
        break;
      case FMCA_METHOD_GRAPH:
        r = fmca::predict::predict_fast(g->x, nb->nb, t, c);
        break;
      case FMCA_METHOD_MATRIX:
        r = fmca::predict::predict_matrix(g->x, nb->nb, t, c);
        break;
      default:
        require(false, "unknown prediction method");
    }
    *changed = r ? 1 : 0;
  });
}

fmca_status fmca_flip_schedule(const fmca_grid* g, const fmca_neighborhood* nb, fmca_method method,
                               int threads, int64_t* times, size_t times_len) {
  return guarded([&] {
    require(g && nb && times, "null argument");
    const size_t cells = static_cast<size_t>(g->x.n()) * g->x.n();
    require(times_len >= cells, "times buffer shorter than n*n");
    std::vector<int64_t> v;
    switch (resolve(method, nb->nb)) {
      case FMCA_METHOD_SIM:
        v = fmca::simulate_flip_steps(g->x, nb->nb, clamp_threads(threads));
        break;
      case FMCA_METHOD_GRAPH:
        v = fmca::predict::fast_flip_schedule(g->x, nb->nb).raw();
        break;
      default:
        require(false, "flip schedules support the sim and graph methods");
    }
    std::memcpy(times, v.data(), cells * sizeof(int64_t));
  });
}

fmca_status fmca_circuit_parse(const char* text, fmca_circuit** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new fmca_circuit{fmca::circuit::parse_circuit(text)};
  });
}

fmca_status fmca_circuit_read(const char* path, fmca_circuit** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new fmca_circuit{fmca::circuit::parse_circuit(fmca::read_text_file(path))};
  });
}

fmca_status fmca_circuit_random(int inputs, int gates, uint64_t seed, fmca_circuit** out) {
  return guarded([&] {
    require(out, "null out pointer");
    *out = new fmca_circuit{fmca::circuit::random_circuit(inputs, gates, seed)};
  });
}

fmca_status fmca_circuit_format(const fmca_circuit* c, char** out_text) {
  return guarded([&] {
    require(c && out_text, "null argument");
    *out_text = dup_string(fmca::circuit::format_circuit(c->c));
  });
}

fmca_status fmca_circuit_evaluate(const fmca_circuit* c, int* value) {
  return guarded([&] {
    require(c && value, "null argument");
    *value = fmca::circuit::evaluate_circuit(c->c) ? 1 : 0;
  });
}

fmca_status fmca_circuit_size(const fmca_circuit* c, int* inputs, int* gates) {
  return guarded([&] {
    require(c, "null argument");
    if (inputs) *inputs = static_cast<int>(c->c.inputs().size());
    if (gates) *gates = static_cast<int>(c->c.gates().size());
  });
}

void fmca_circuit_free(fmca_circuit* c) { delete c; }

fmca_status fmca_gadget_set_load(const char* family, fmca_gadget_set** out) {
  return guarded([&] {
    require(family && out, "null argument");
    *out = new fmca_gadget_set{fmca::compile::load_gadget_set(fmca::compile::parse_family(family))};
  });
}

fmca_status fmca_gadget_set_build(const char* family, fmca_gadget_set** out) {
  return guarded([&] {
    require(family && out, "null argument");
    *out = new fmca_gadget_set{fmca::compile::build_gadget_set(fmca::compile::parse_family(family))};
  });
}

fmca_status fmca_gadget_set_read(const char* path, fmca_gadget_set** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new fmca_gadget_set{fmca::compile::parse_gadget_set(fmca::read_text_file(path))};
  });
}

fmca_status fmca_gadget_set_format(const fmca_gadget_set* gs, char** out_text) {
  return guarded([&] {
    require(gs && out_text, "null argument");
    *out_text = dup_string(fmca::compile::format_gadget_set(gs->gs));
  });
}

fmca_status fmca_gadget_set_verify(const fmca_gadget_set* gs, int* passed, char** report) {
  return guarded([&] {
    require(gs && passed, "null argument");
    const fmca::compile::VerifyReport r = fmca::compile::verify_gadget_set(gs->gs);
    *passed = r.passed() ? 1 : 0;
    if (report) *report = dup_string(r.table());
  });
}

void fmca_gadget_set_free(fmca_gadget_set* gs) { delete gs; }

fmca_status fmca_compile(const fmca_circuit* c, const char* family, int max_side,
                         fmca_instance** out) {
  return guarded([&] {
    require(c && family && out, "null argument");
    fmca::compile::CompileOptions opts;
    if (max_side > 0) opts.max_side = max_side;
    *out = new fmca_instance{fmca::compile::compile(c->c, fmca::compile::parse_family(family), opts)};
  });
}

fmca_status fmca_instance_parse(const char* text, fmca_instance** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new fmca_instance{fmca::compile::parse_instance(text)};
  });
}

fmca_status fmca_instance_read(const char* path, fmca_instance** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new fmca_instance{fmca::compile::parse_instance(fmca::read_text_file(path))};
  });
}

fmca_status fmca_instance_write(const fmca_instance* inst, const char* path) {
  return guarded([&] {
    require(inst && path, "null argument");
    fmca::write_text_file(path, fmca::compile::format_instance(inst->inst));
  });
}

fmca_status fmca_instance_format(const fmca_instance* inst, char** out_text) {
  return guarded([&] {
    require(inst && out_text, "null argument");
    *out_text = dup_string(fmca::compile::format_instance(inst->inst));
  });
}

fmca_status fmca_instance_grid(const fmca_instance* inst, fmca_grid** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    *out = new fmca_grid{inst->inst.config};
  });
}

fmca_status fmca_instance_neighborhood(const fmca_instance* inst, fmca_neighborhood** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    *out = new fmca_neighborhood{inst->inst.neighborhood};
  });
}

fmca_status fmca_instance_output_cell(const fmca_instance* inst, int* i, int* j) {
  return guarded([&] {
    require(inst && i && j, "null argument");
    *i = inst->inst.output_cell.i;
    *j = inst->inst.output_cell.j;
  });
}

fmca_status fmca_instance_time_bound(const fmca_instance* inst, uint64_t* t) {
  return guarded([&] {
    require(inst && t, "null argument");
    *t = inst->inst.time_bound;
  });
}

fmca_status fmca_instance_run(const fmca_instance* inst, int threads, int* output) {
  return guarded([&] {
    require(inst && output, "null argument");
    const fmca::Configuration fp =
        fmca::run_to_fixed_point(inst->inst.config, inst->inst.neighborhood, clamp_threads(threads)).config;
    *output = fp.plus(inst->inst.output_cell.i, inst->inst.output_cell.j) ? 1 : 0;
  });
}

void fmca_instance_free(fmca_instance* inst) { delete inst; }

}  // extern "C"
