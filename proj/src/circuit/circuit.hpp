#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fmca::circuit {

enum class NodeKind { kInput, kAnd, kOr };

struct Node {
  std::string name;
  NodeKind kind = NodeKind::kInput;
  bool value = false;  // inputs only
  int left = -1;       // gates only: index of an earlier node
  int right = -1;
  bool operator==(const Node&) const = default;
};

// Netlist in file order: every gate refers to earlier nodes only.
class MonotoneCircuit {
 public:
  int add_input(std::string name, bool value);
  int add_gate(std::string name, NodeKind kind, int left, int right);
  void set_output(int node);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int k) const { return nodes_[k]; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int output() const { return output_; }
  int find(std::string_view name) const;  // -1 if absent

  std::vector<int> inputs() const;
  std::vector<int> gates() const;
  void set_input_value(int node, bool value);

  bool operator==(const MonotoneCircuit&) const = default;

 private:
  std::vector<Node> nodes_;
  int output_ = -1;
};

// Throws ParseError(line, reason).
MonotoneCircuit parse_circuit(std::string_view text);
std::string format_circuit(const MonotoneCircuit& c);

bool evaluate_circuit(const MonotoneCircuit& c);
std::vector<bool> evaluate_all(const MonotoneCircuit& c);

// Number of distinct gates reading each node; the output line counts once.
std::vector<int> consumer_counts(const MonotoneCircuit& c);

// Same function, every node read by at most two consumers; extra readers
// are served through OR(x, x) duplicator trees.
MonotoneCircuit normalize_fanout(const MonotoneCircuit& c);

MonotoneCircuit random_circuit(int num_inputs, int num_gates, uint64_t seed);

}  // namespace fmca::circuit
