#include "compile/compiler.hpp"

#include <sstream>
#include <vector>

#include "compile/gadgets.hpp"
#include "core/error.hpp"
#include "core/grid_io.hpp"
#include "core/rule.hpp"

namespace fmca::compile {

CompiledInstance compile(const circuit::MonotoneCircuit& c, const NeighborhoodFamily& f,
                         const CompileOptions& options) {
  const GadgetSet gs = build_gadget_set(f);
  const circuit::MonotoneCircuit normalized = circuit::normalize_fanout(c);
  const Layout layout = layout_circuit(normalized, gs, options.max_side);
  RenderedLayout r = render_layout(layout, gs);
  CompiledInstance inst;
  inst.neighborhood = neighborhood_of(f);
  inst.neighborhood.check_bindable(r.config.n());
  inst.time_bound = static_cast<uint64_t>(r.config.n()) * static_cast<uint64_t>(r.config.n());
  inst.output_cell = r.output_cell;
  inst.config = std::move(r.config);
  if (inst.config.plus(inst.output_cell.i, inst.output_cell.j))
    throw Error(ErrorCode::kInternal, "output cell starts at +1");
  return inst;
}

bool check_compiled(const CompiledInstance& inst, bool expected, int threads) {
  const Configuration fp = run_to_fixed_point(inst.config, inst.neighborhood, threads).config;
  return fp.plus(inst.output_cell.i, inst.output_cell.j) == expected;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::vector<int> parse_list(const std::string& s, int line) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError(line, "bad offset '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

std::string format_instance(const CompiledInstance& inst) {
  std::ostringstream out;
  out << format_grid(inst.config);
  out << "output " << inst.output_cell.i << ' ' << inst.output_cell.j << '\n';
  out << "time " << inst.time_bound << '\n';
  out << "neighborhood N=" << join(inst.neighborhood.north())
      << " E=" << join(inst.neighborhood.east()) << '\n';
  return out.str();
}

CompiledInstance parse_instance(std::string_view text) {
  const size_t first_nl = text.find('\n');
  if (first_nl == std::string_view::npos) throw ParseError(1, "truncated instance file");
  int n = 0;
  try {
    n = std::stoi(std::string(text.substr(0, first_nl)));
  } catch (const std::exception&) {
    throw ParseError(1, "expected a positive grid size");
  }
  if (n < 1) throw ParseError(1, "expected a positive grid size");
  size_t pos = first_nl + 1;
  for (int r = 0; r < n; ++r) {
    const size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) throw ParseError(r + 2, "grid truncated");
    pos = nl + 1;
  }
  CompiledInstance inst;
  inst.config = parse_grid(text.substr(0, pos));
  bool have_output = false, have_time = false, have_nb = false;
  std::istringstream trailer{std::string(text.substr(pos))};
  std::string line;
  int line_no = n + 1;
  while (std::getline(trailer, line)) {
    ++line_no;
    std::istringstream in(line);
    std::string key;
    if (!(in >> key)) continue;
    if (key == "output") {
      if (!(in >> inst.output_cell.i >> inst.output_cell.j)) throw ParseError(line_no, "expected: output <i> <j>");
      inst.config.check_cell(inst.output_cell);
      have_output = true;
    } else if (key == "time") {
      if (!(in >> inst.time_bound)) throw ParseError(line_no, "expected: time <t>");
      have_time = true;
    } else if (key == "neighborhood") {
      std::string a, b;
      if (!(in >> a >> b) || a.rfind("N=", 0) != 0 || b.rfind("E=", 0) != 0)
        throw ParseError(line_no, "expected: neighborhood N=<list> E=<list>");
      try {
        inst.neighborhood = LNeighborhood(parse_list(a.substr(2), line_no), parse_list(b.substr(2), line_no));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      have_nb = true;
    } else {
      throw ParseError(line_no, "unknown trailer '" + key + "'");
    }
  }
  if (!have_output || !have_time || !have_nb)
    throw ParseError(line_no, "instance needs output, time and neighborhood lines");
  return inst;
}

}  // namespace fmca::compile
