#include "circuit/circuit.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

#include "core/error.hpp"

namespace fmca::circuit {
namespace {

bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
           ch == '_';
  });
}

const char* kind_word(NodeKind k) {
  switch (k) {
    case NodeKind::kAnd: return "and";
    case NodeKind::kOr: return "or";
    default: return "input";
  }
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    const size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
    if (k > start) out.push_back(line.substr(start, k - start));
  }
  return out;
}

// Unbiased draw from [0, bound) on top of the standardized mt19937_64 stream.
uint64_t draw(std::mt19937_64& rng, uint64_t bound) {
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
  uint64_t v;
  do v = rng();
  while (v >= limit);
  return v % bound;
}

}  // namespace

int MonotoneCircuit::add_input(std::string name, bool value) {
  if (!valid_name(name)) throw Error(ErrorCode::kInvalidArgument, "bad node name '" + name + "'");
  if (find(name) >= 0) throw Error(ErrorCode::kInvalidArgument, "duplicate node '" + name + "'");
  nodes_.push_back({std::move(name), NodeKind::kInput, value, -1, -1});
  return size() - 1;
}

int MonotoneCircuit::add_gate(std::string name, NodeKind kind, int left, int right) {
  if (kind == NodeKind::kInput) throw Error(ErrorCode::kInvalidArgument, "gate kind expected");
  if (!valid_name(name)) throw Error(ErrorCode::kInvalidArgument, "bad node name '" + name + "'");
  if (find(name) >= 0) throw Error(ErrorCode::kInvalidArgument, "duplicate node '" + name + "'");
  if (left < 0 || right < 0 || left >= size() || right >= size())
    throw Error(ErrorCode::kInvalidArgument, "gate '" + name + "' reads a later or missing node");
  nodes_.push_back({std::move(name), kind, false, left, right});
  return size() - 1;
}

void MonotoneCircuit::set_output(int node) {
  if (node < 0 || node >= size()) throw Error(ErrorCode::kInvalidArgument, "no such output node");
  output_ = node;
}

int MonotoneCircuit::find(std::string_view name) const {
  for (int k = 0; k < size(); ++k)
    if (nodes_[k].name == name) return k;
  return -1;
}

std::vector<int> MonotoneCircuit::inputs() const {
  std::vector<int> out;
  for (int k = 0; k < size(); ++k)
    if (nodes_[k].kind == NodeKind::kInput) out.push_back(k);
  return out;
}

std::vector<int> MonotoneCircuit::gates() const {
  std::vector<int> out;
  for (int k = 0; k < size(); ++k)
    if (nodes_[k].kind != NodeKind::kInput) out.push_back(k);
  return out;
}

void MonotoneCircuit::set_input_value(int node, bool value) {
  if (node < 0 || node >= size() || nodes_[node].kind != NodeKind::kInput)
    throw Error(ErrorCode::kInvalidArgument, "not an input node");
  nodes_[node].value = value;
}

MonotoneCircuit parse_circuit(std::string_view text) {
  MonotoneCircuit c;
  std::unordered_map<std::string, int> index;
  int line_no = 0;
  bool have_output = false;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (have_output) throw ParseError(line_no, "statement after output");
    auto source = [&](std::string_view name) {
      const auto it = index.find(std::string(name));
      if (it == index.end())
        throw ParseError(line_no, "unknown or later node '" + std::string(name) + "'");
      return it->second;
    };
    auto fresh = [&](std::string_view name) {
      if (!valid_name(name)) throw ParseError(line_no, "bad name '" + std::string(name) + "'");
      if (index.count(std::string(name)))
        throw ParseError(line_no, "duplicate name '" + std::string(name) + "'");
      return std::string(name);
    };
    const std::string_view op = tok[0];
    if (op == "input") {
      if (tok.size() != 3) throw ParseError(line_no, "expected: input <name> <0|1>");
      if (tok[2] != "0" && tok[2] != "1") throw ParseError(line_no, "input value must be 0 or 1");
      std::string name = fresh(tok[1]);
      index[name] = c.add_input(name, tok[2] == "1");
    } else if (op == "and" || op == "or") {
      if (tok.size() != 4) throw ParseError(line_no, "expected: " + std::string(op) + " <name> <src> <src>");
      std::string name = fresh(tok[1]);
      const int l = source(tok[2]), r = source(tok[3]);
      index[name] = c.add_gate(name, op == "and" ? NodeKind::kAnd : NodeKind::kOr, l, r);
    } else if (op == "output") {
      if (tok.size() != 2) throw ParseError(line_no, "expected: output <src>");
      c.set_output(source(tok[1]));
      have_output = true;
    } else {
      throw ParseError(line_no, "unknown statement '" + std::string(op) + "'");
    }
    if (nl == text.size()) break;
  }
  if (!have_output) throw ParseError(line_no, "missing output line");
  return c;
}

std::string format_circuit(const MonotoneCircuit& c) {
  std::ostringstream out;
  for (const Node& nd : c.nodes()) {
    if (nd.kind == NodeKind::kInput)
      out << "input " << nd.name << ' ' << (nd.value ? 1 : 0) << '\n';
    else
      out << kind_word(nd.kind) << ' ' << nd.name << ' ' << c.node(nd.left).name << ' '
          << c.node(nd.right).name << '\n';
  }
  if (c.output() >= 0) out << "output " << c.node(c.output()).name << '\n';
  return out.str();
}

std::vector<bool> evaluate_all(const MonotoneCircuit& c) {
  std::vector<bool> val(c.size());
  for (int k = 0; k < c.size(); ++k) {
    const Node& nd = c.node(k);
    switch (nd.kind) {
      case NodeKind::kInput: val[k] = nd.value; break;
      case NodeKind::kAnd: val[k] = val[nd.left] && val[nd.right]; break;
      case NodeKind::kOr: val[k] = val[nd.left] || val[nd.right]; break;
    }
  }
  return val;
}

bool evaluate_circuit(const MonotoneCircuit& c) {
  if (c.output() < 0) throw Error(ErrorCode::kInvalidArgument, "circuit has no output");
  return evaluate_all(c)[c.output()];
}

std::vector<int> consumer_counts(const MonotoneCircuit& c) {
  std::vector<int> count(c.size(), 0);
  for (const Node& nd : c.nodes()) {
    if (nd.kind == NodeKind::kInput) continue;
    ++count[nd.left];
    if (nd.right != nd.left) ++count[nd.right];
  }
  if (c.output() >= 0) ++count[c.output()];
  return count;
}

MonotoneCircuit normalize_fanout(const MonotoneCircuit& c) {
  constexpr int kOutputReader = -2;
  // Readers of each node in order of appearance.
  std::vector<std::vector<int>> readers(c.size());
  for (int k = 0; k < c.size(); ++k) {
    const Node& nd = c.node(k);
    if (nd.kind == NodeKind::kInput) continue;
    readers[nd.left].push_back(k);
    if (nd.right != nd.left) readers[nd.right].push_back(k);
  }
  if (c.output() >= 0) readers[c.output()].push_back(kOutputReader);

  auto taken = [&c](const std::string& s) { return c.find(s) >= 0; };
  MonotoneCircuit out;
  std::vector<int> renamed(c.size(), -1);
  // feeder[{source, reader}] = node in `out` that the reader should use.
  std::unordered_map<long long, int> feeder;
  auto key = [](int src, int reader) { return (static_cast<long long>(src) << 32) ^ (reader & 0xffffffffLL); };

  for (int k = 0; k < c.size(); ++k) {
    const Node& nd = c.node(k);
    if (nd.kind == NodeKind::kInput) {
      renamed[k] = out.add_input(nd.name, nd.value);
    } else {
      renamed[k] = out.add_gate(nd.name, nd.kind, feeder.at(key(nd.left, k)),
                                feeder.at(key(nd.right, k)));
    }
    const auto& rs = readers[k];
    if (rs.size() <= 2) {
      for (int r : rs) feeder[key(k, r)] = renamed[k];
      continue;
    }
    // x -> {r0, d1}, d1 -> {r1, d2}, ..., last dup -> {r_{m-2}, r_{m-1}}.
    int current = renamed[k];
    for (size_t idx = 0; idx + 2 < rs.size(); ++idx) {
      feeder[key(k, rs[idx])] = current;
      std::string name;
      for (int suffix = static_cast<int>(idx) + 1;; ++suffix) {
        name = nd.name + "_dup" + std::to_string(suffix);
        if (!taken(name) && out.find(name) < 0) break;
      }
      current = out.add_gate(name, NodeKind::kOr, current, current);
    }
    feeder[key(k, rs[rs.size() - 2])] = current;
    feeder[key(k, rs.back())] = current;
  }
  if (c.output() >= 0) out.set_output(feeder.at(key(c.output(), kOutputReader)));
  return out;
}

MonotoneCircuit random_circuit(int num_inputs, int num_gates, uint64_t seed) {
  if (num_inputs < 1 || num_gates < 1)
    throw Error(ErrorCode::kInvalidArgument, "need at least one input and one gate");
  std::mt19937_64 rng(seed);
  MonotoneCircuit c;
  for (int k = 0; k < num_inputs; ++k) c.add_input("i" + std::to_string(k), draw(rng, 2) == 1);
  for (int g = 0; g < num_gates; ++g) {
    const NodeKind kind = draw(rng, 2) ? NodeKind::kOr : NodeKind::kAnd;
    const int avail = c.size();
    const int l = static_cast<int>(draw(rng, avail));
    const int r = static_cast<int>(draw(rng, avail));
    c.add_gate("g" + std::to_string(g), kind, l, r);
  }
  c.set_output(c.size() - 1);
  return c;
}

}  // namespace fmca::circuit
