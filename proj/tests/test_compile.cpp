#include <gtest/gtest.h>

#include "circuit/circuit.hpp"
#include "compile/compiler.hpp"
#include "compile/family.hpp"
#include "compile/gadgets.hpp"
#include "compile/layout.hpp"
#include "compile/verify.hpp"
#include "core/rule.hpp"
#include "test_util.hpp"

using namespace fmca;
using namespace fmca::compile;
using fmca::circuit::parse_circuit;

namespace {

const NeighborhoodFamily kC22 = NeighborhoodFamily::contiguous(2, 2);

size_t count_tiles(const Layout& l, const std::string& name) {
  size_t k = 0;
  for (const auto& t : l.tiles) k += t == name;
  return k;
}

bool compiled_output(const circuit::MonotoneCircuit& c, const NeighborhoodFamily& f) {
  const CompiledInstance inst = fmca::compile::compile(c, f);
  const Configuration fp = run_to_fixed_point(inst.config, inst.neighborhood).config;
  return fp.plus(inst.output_cell.i, inst.output_cell.j);
}

}  // namespace

TEST(Family, ParseAndFormat) {
  EXPECT_EQ(parse_family("contiguous:3,2"), NeighborhoodFamily::contiguous(3, 2));
  EXPECT_EQ(parse_family("periodic 2 3 2 2"), NeighborhoodFamily::periodic(2, 3, 2, 2));
  EXPECT_EQ(parse_family("sparse2:1,3,1,3").to_string(), "sparse2 1 3 1 3");
  EXPECT_FMCA_ERROR(parse_family("hexagonal:1,2"), ErrorCode::kInvalidArgument);
  EXPECT_FMCA_ERROR(parse_family("contiguous:2"), ErrorCode::kInvalidArgument);
}

TEST(Family, Ranges) {
  EXPECT_FMCA_ERROR(NeighborhoodFamily::contiguous(1, 2).validate(), ErrorCode::kFamilyOutOfRange);
  EXPECT_FMCA_ERROR(NeighborhoodFamily::sparse2(1, 2, 1, 3).validate(), ErrorCode::kFamilyOutOfRange);
  EXPECT_FMCA_ERROR(NeighborhoodFamily::sparse2(2, 4, 1, 3).validate(), ErrorCode::kFamilyOutOfRange);
  EXPECT_FMCA_ERROR(NeighborhoodFamily::periodic(2, 3, 1, 2).validate(), ErrorCode::kFamilyOutOfRange);
  EXPECT_NO_THROW(NeighborhoodFamily::sparse2(1, 3, 1, 3).validate());
}

TEST(Family, Neighborhoods) {
  EXPECT_EQ(neighborhood_of(NeighborhoodFamily::periodic(2, 3, 2, 2)), LNeighborhood({3, 6}, {2, 4}));
  EXPECT_EQ(neighborhood_of(NeighborhoodFamily::sparse2(1, 3, 2, 5)), LNeighborhood({2, 5}, {1, 3}));
  EXPECT_EQ(transposed(NeighborhoodFamily::contiguous(3, 2)), NeighborhoodFamily::contiguous(2, 3));
}

TEST(WireParams, FromFormulas) {
  EXPECT_EQ(wire_params(2, 2), (WireParams{2, 0, 1}));
  EXPECT_EQ(wire_params(3, 2), (WireParams{2, 1, 1}));
  EXPECT_EQ(wire_params(4, 3), (WireParams{3, 1, 1}));
  EXPECT_FMCA_ERROR(wire_params(1, 3), ErrorCode::kFamilyOutOfRange);
}

TEST(Tile, TransposeAndInflate) {
  Tile t("vwire", 3, 2);
  t.set(1, 0, true);
  t.ports.push_back({PortDir::kIn, Side::kNorth, "n", 1, {{1, 1}}});
  const Tile tt = transpose(t);
  EXPECT_EQ(tt.name, "hwire");
  EXPECT_EQ(tt.width, 2);
  EXPECT_TRUE(tt.at(0, 1));
  ASSERT_NE(tt.port(PortDir::kIn, Side::kEast), nullptr);
  EXPECT_EQ(transpose(tt), t);
  const Tile in = inflate(t, 2, 3);
  EXPECT_EQ(in.width, 6);
  EXPECT_EQ(in.height, 6);
  EXPECT_TRUE(in.at(2, 0));
  EXPECT_FALSE(in.at(1, 0));
}

TEST(GadgetSet, FormatRoundTrip) {
  const GadgetSet gs = load_gadget_set(kC22);
  EXPECT_EQ(gs.tiles.size(), 5u);
  const GadgetSet back = parse_gadget_set(format_gadget_set(gs));
  EXPECT_EQ(back.family, gs.family);
  EXPECT_EQ(back.tiles, gs.tiles);
  EXPECT_FMCA_ERROR(parse_gadget_set("family contiguous 2 2\ntile vwire 2 2\n+x\n--\n"),
                    ErrorCode::kParseError);
}

TEST(GadgetSet, ShippedAndDerivedFamiliesVerify) {
  for (const auto& f : {kC22, NeighborhoodFamily::contiguous(3, 2), NeighborhoodFamily::contiguous(2, 3),
                        NeighborhoodFamily::sparse2(1, 3, 1, 3)}) {
    const GadgetSet gs = build_gadget_set(f);
    EXPECT_EQ(gs.tiles.size(), 5u) << f.to_string();
  }
}

TEST(GadgetSet, MissingDataFails) {
  EXPECT_FMCA_ERROR(build_gadget_set(NeighborhoodFamily::contiguous(6, 5)),
                    ErrorCode::kGadgetConstructionFailed);
}

TEST(GadgetSet, ParametricWiresMatchShippedTiles) {
  const GadgetSet gs = load_gadget_set(NeighborhoodFamily::contiguous(3, 2));
  const Tile v = contiguous_vertical_wire(3, 2, gs.tile_width, gs.tile(kVWire).port(PortDir::kIn, Side::kNorth)->offset);
  EXPECT_EQ(v.plus, gs.tile(kVWire).plus);
}

TEST(Verify, TruthTables) {
  const TruthTable cross = TruthTable::for_tile(kCross);
  EXPECT_TRUE(cross.west(false, true));
  EXPECT_FALSE(cross.south(false, true));
  const TruthTable and_tt = TruthTable::for_tile(kAnd);
  EXPECT_FALSE(and_tt.south(true, false));
  EXPECT_TRUE(TruthTable::for_tile(kOr).west(false, true));
  EXPECT_FMCA_ERROR(TruthTable::for_tile("nand"), ErrorCode::kInvalidArgument);
}

TEST(Verify, DetectsWrongTruthTable) {
  const GadgetSet gs = load_gadget_set(kC22);
  const LNeighborhood nb = neighborhood_of(kC22);
  const VerifyReport ok = verify_gadget(gs.tile(kAnd), nb, TruthTable::for_tile(kAnd), gs.tile(kVWire), gs.tile(kHWire));
  EXPECT_TRUE(ok.passed());
  const VerifyReport bad = verify_gadget(gs.tile(kAnd), nb, TruthTable::for_tile(kOr), gs.tile(kVWire), gs.tile(kHWire));
  EXPECT_FALSE(bad.passed());
  EXPECT_GT(bad.failures(), 0u);
  EXPECT_NE(bad.table().find("FAIL"), std::string::npos);
}

TEST(Verify, DetectsBrokenCrossover) {
  const GadgetSet gs = load_gadget_set(kC22);
  Tile cross = gs.tile(kCross);
  for (size_t k = 0; k < cross.plus.size(); ++k)
    if (cross.plus[k]) {
      cross.plus[k] = 0;  // drop one frozen cell of the junction
      break;
    }
  const VerifyReport r = verify_gadget(cross, neighborhood_of(kC22), TruthTable::for_tile(kCross),
                                       gs.tile(kVWire), gs.tile(kHWire));
  EXPECT_FALSE(r.passed());
}

TEST(Layout, SingleInput) {
  const GadgetSet gs = build_gadget_set(kC22);
  const Layout l = layout_circuit(parse_circuit("input a 1\noutput a\n"), gs);
  EXPECT_EQ(l.slots, 3);
  EXPECT_EQ(l.at(0, 0), kOr);
  EXPECT_EQ(l.at(0, 1), kVWire);
  EXPECT_EQ(count_tiles(l, kAnd), 0u);
  EXPECT_EQ(count_tiles(l, kCross), 0u);
}

TEST(Layout, AndOfTwoInputs) {
  const GadgetSet gs = build_gadget_set(kC22);
  const Layout l = layout_circuit(parse_circuit("input a 1\ninput b 1\nand g a b\noutput g\n"), gs);
  EXPECT_EQ(count_tiles(l, kAnd), 1u);
  EXPECT_EQ(l.at(2, 2), kAnd);
}

TEST(Layout, RejectsHighFanOutAndOverflow) {
  const GadgetSet gs = build_gadget_set(kC22);
  const auto c = parse_circuit("input a 1\nand g1 a a\nand g2 a g1\nor g3 a g2\noutput g3\n");
  EXPECT_FMCA_ERROR(layout_circuit(c, gs), ErrorCode::kInvalidArgument);
  EXPECT_FMCA_ERROR(layout_circuit(circuit::normalize_fanout(c), gs, 40), ErrorCode::kLayoutOverflow);
}

TEST(Compile, IdentityTrue) {
  EXPECT_TRUE(compiled_output(parse_circuit("input a 1\noutput a\n"), kC22));
  EXPECT_FALSE(compiled_output(parse_circuit("input a 0\noutput a\n"), kC22));
}

TEST(Compile, AndOfTrueFalse) {
  const auto c = parse_circuit("input a 1\ninput b 0\nand g a b\noutput g\n");
  EXPECT_FALSE(compiled_output(c, NeighborhoodFamily::sparse2(1, 3, 1, 3)));
  EXPECT_FALSE(compiled_output(c, kC22));
}

TEST(Compile, NeedsCrossover) {
  // g2 reads a and g1 reads b, so the bus of a crosses the one of b.
  const auto c = parse_circuit(
      "input a 1\ninput b 0\ninput d 1\nor g1 b d\nand g2 a g1\nor g3 b g2\noutput g3\n");
  const GadgetSet gs = build_gadget_set(kC22);
  EXPECT_GT(count_tiles(layout_circuit(circuit::normalize_fanout(c), gs), kCross), 0u);
  EXPECT_TRUE(compiled_output(c, kC22));
}

TEST(Compile, RandomCircuitsSmallSweep) {
  for (const auto& f : {kC22, NeighborhoodFamily::periodic(2, 3, 2, 2)})
    for (uint64_t seed = 0; seed < 6; ++seed) {
      const auto c = circuit::random_circuit(3, 6, seed);
      const CompiledInstance inst = fmca::compile::compile(c, f);
      EXPECT_TRUE(check_compiled(inst, circuit::evaluate_circuit(c))) << f.to_string() << " seed " << seed;
    }
}

TEST(Compile, InstanceRoundTrip) {
  const CompiledInstance inst = fmca::compile::compile(parse_circuit("input a 1\ninput b 1\nor g a b\noutput g\n"), kC22);
  const CompiledInstance back = parse_instance(format_instance(inst));
  EXPECT_EQ(back.config, inst.config);
  EXPECT_EQ(back.neighborhood, inst.neighborhood);
  EXPECT_EQ(back.output_cell, inst.output_cell);
  EXPECT_EQ(back.time_bound, static_cast<uint64_t>(inst.config.n()) * inst.config.n());
  EXPECT_FMCA_ERROR(parse_instance("2\n++\n--\noutput 0 0\n"), ErrorCode::kParseError);
}
