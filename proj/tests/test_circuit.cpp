#include <gtest/gtest.h>

#include "circuit/circuit.hpp"
#include "test_util.hpp"

using namespace fmca;
using namespace fmca::circuit;

TEST(ParseCircuit, AndGate) {
  const MonotoneCircuit c = parse_circuit("input a 1\ninput b 0\nand g a b\noutput g\n");
  ASSERT_EQ(c.size(), 3);
  EXPECT_EQ(c.node(2).kind, NodeKind::kAnd);
  EXPECT_EQ(c.output(), 2);
  EXPECT_FALSE(evaluate_circuit(c));
}

TEST(ParseCircuit, Errors) {
  try {
    parse_circuit("input a 1\nand g a b\ninput b 0\noutput g\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_FMCA_ERROR(parse_circuit("input a 1\ninput a 0\nor g a a\noutput g\n"), ErrorCode::kParseError);
  EXPECT_FMCA_ERROR(parse_circuit("input a 2\noutput a\n"), ErrorCode::kParseError);
  EXPECT_FMCA_ERROR(parse_circuit("input a 1\nxor g a a\noutput g\n"), ErrorCode::kParseError);
  EXPECT_FMCA_ERROR(parse_circuit("input a 1\nand g a\noutput g\n"), ErrorCode::kParseError);
  EXPECT_FMCA_ERROR(parse_circuit("input a 1\n"), ErrorCode::kParseError);
}

TEST(ParseCircuit, RoundTrip) {
  const MonotoneCircuit c =
      parse_circuit("input a 1\ninput b 1\ninput c 0\nand g1 a b\nor g2 g1 c\noutput g2\n");
  EXPECT_EQ(c.gates().size(), 2u);
  EXPECT_EQ(parse_circuit(format_circuit(c)), c);
}

TEST(Evaluate, SmallCircuits) {
  EXPECT_FALSE(evaluate_circuit(parse_circuit("input a 1\ninput b 0\nand g a b\noutput g\n")));
  EXPECT_TRUE(evaluate_circuit(parse_circuit("input a 1\ninput b 0\nor g a b\noutput g\n")));
  EXPECT_TRUE(evaluate_circuit(parse_circuit(
      "input a 1\ninput b 0\ninput c 1\ninput d 1\nand x a b\nand y c d\nor g x y\noutput g\n")));
}

TEST(Evaluate, MonotoneInInputs) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    MonotoneCircuit c = random_circuit(6, 15, seed);
    const auto ins = c.inputs();
    const int k = static_cast<int>(ins.size());
    std::vector<int> value(1 << k);
    for (int mask = 0; mask < (1 << k); ++mask) {
      for (int b = 0; b < k; ++b) c.set_input_value(ins[b], (mask >> b) & 1);
      value[mask] = evaluate_circuit(c);
    }
    for (int mask = 0; mask < (1 << k); ++mask)
      for (int b = 0; b < k; ++b)
        EXPECT_LE(value[mask], value[mask | (1 << b)]);
  }
}

TEST(NormalizeFanout, FanOutOneUnchanged) {
  const MonotoneCircuit c = parse_circuit("input a 1\ninput b 0\nand g a b\noutput g\n");
  EXPECT_EQ(normalize_fanout(c), c);
}

TEST(NormalizeFanout, InsertsDuplicator) {
  const MonotoneCircuit c = parse_circuit(
      "input a 1\ninput b 1\nand g1 a b\nor g2 a b\nand g3 a g1\nor g4 g2 g3\noutput g4\n");
  EXPECT_EQ(consumer_counts(c)[0], 3);
  const MonotoneCircuit nc = normalize_fanout(c);
  EXPECT_EQ(nc.size(), c.size() + 1);
  for (int k : consumer_counts(nc)) EXPECT_LE(k, 2);
  EXPECT_EQ(evaluate_circuit(nc), evaluate_circuit(c));
}

TEST(NormalizeFanout, PreservesValueOnRandomCircuits) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const MonotoneCircuit c = random_circuit(3, 20, seed);
    const MonotoneCircuit nc = normalize_fanout(c);
    for (int k : consumer_counts(nc)) EXPECT_LE(k, 2);
    EXPECT_EQ(evaluate_circuit(nc), evaluate_circuit(c));
  }
}

TEST(RandomCircuit, Properties) {
  const MonotoneCircuit one = random_circuit(2, 1, 5);
  EXPECT_EQ(one.gates().size(), 1u);
  EXPECT_EQ(random_circuit(6, 25, 42), random_circuit(6, 25, 42));
  const MonotoneCircuit c = random_circuit(6, 25, 42);
  EXPECT_EQ(c.inputs().size(), 6u);
  EXPECT_EQ(c.gates().size(), 25u);
  for (int k : c.gates()) {
    EXPECT_LT(c.node(k).left, k);
    EXPECT_LT(c.node(k).right, k);
  }
  EXPECT_EQ(parse_circuit(format_circuit(c)), c);
  EXPECT_FMCA_ERROR(random_circuit(0, 3, 1), ErrorCode::kInvalidArgument);
}
