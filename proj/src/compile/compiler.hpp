#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "circuit/circuit.hpp"
#include "compile/family.hpp"
#include "compile/layout.hpp"
#include "core/configuration.hpp"
#include "core/types.hpp"

namespace fmca::compile {

struct CompiledInstance {
  Configuration config;
  LNeighborhood neighborhood;
  Cell output_cell;
  uint64_t time_bound = 0;  // n^2
};

struct CompileOptions {
  int max_side = kDefaultMaxGridSide;
};

CompiledInstance compile(const circuit::MonotoneCircuit& c, const NeighborhoodFamily& f,
                         const CompileOptions& options = {});

// Runs to the fixed point and compares the output cell with expected.
bool check_compiled(const CompiledInstance& inst, bool expected, int threads = 1);

// Grid text followed by "output <i> <j>", "time <t>" and
// "neighborhood N=<list> E=<list>".
std::string format_instance(const CompiledInstance& inst);
CompiledInstance parse_instance(std::string_view text);

}  // namespace fmca::compile
