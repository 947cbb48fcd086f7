#include <gtest/gtest.h>

#include "knotlift/diagram.hpp"
#include "knotlift/random.hpp"
#include "knotlift/topology.hpp"
#include "oracles.hpp"

using namespace knotlift;

namespace {

const char* kTrefoil = R"(X a sign=- uin=e1 oin=e4 uout=e2 oout=e5
X b sign=- uin=e3 oin=e6 uout=e4 oout=e1
X c sign=- uin=e5 oin=e2 uout=e6 oout=e3
)";

// Virtual trefoil with its virtual crossing removed: genus one.
const char* kToroidal = R"(X 1 sign=+ uin=e2 oin=e4 uout=e3 oout=e1
X 2 sign=+ uin=e3 oin=e1 uout=e4 oout=e2
)";

}  // namespace

TEST(Diagram, SerializeRoundTrip) {
  const PlanarDiagram d = parse_diagram(kTrefoil);
  EXPECT_EQ(d.nodes.size(), 3u);
  EXPECT_EQ(serialize_diagram(d), kTrefoil);
  EXPECT_EQ(parse_diagram(serialize_diagram(d)), d);
}

TEST(Diagram, RoundTripOnFixtures) {
  for (const auto& name : oracle::fixture_names()) {
    const PlanarDiagram d = oracle::load(name);
    EXPECT_EQ(parse_diagram(serialize_diagram(d)), d) << name;
  }
}

TEST(Diagram, CommentsAndBlankLinesIgnored) {
  const PlanarDiagram d = parse_diagram("# header\n\nT t sign=+ in=e out=e  # tail\n");
  ASSERT_EQ(d.nodes.size(), 1u);
  EXPECT_EQ(d.nodes[0].kind, NodeKind::double_line);
}

TEST(Diagram, ParseErrorsCarryPosition) {
  try {
    parse_diagram_unchecked("T t sign=+ in=e out=e\nQ x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_diagram_unchecked("X a uin=e1 oin=e2 uout=e3 oout=e4\n"), ParseError);  // no sign
  EXPECT_THROW(parse_diagram_unchecked("T t sign=+ in=e\n"), ParseError);
  EXPECT_THROW(parse_diagram_unchecked("T t sign=+ in=e in=f out=g\n"), ParseError);
  EXPECT_THROW(parse_diagram_unchecked("C c dir=up in=e out=e\n"), ParseError);
}

TEST(Diagram, DanglingPort) {
  const auto r = validate(parse_diagram_unchecked("T t sign=+ in=e1 out=e2\n"));
  EXPECT_TRUE(r.has(IssueKind::dangling_port));
}

TEST(Diagram, DuplicateId) {
  const auto r = validate(parse_diagram_unchecked("T t sign=+ in=e1 out=e2\nT t sign=- in=e2 out=e1\n"));
  EXPECT_TRUE(r.has(IssueKind::duplicate_id));
}

TEST(Diagram, RotationMismatch) {
  const auto r = validate(parse_diagram_unchecked("X a sign=+ uin=e1 oin=e2 uout=e2 oout=e1 ccw=uin,oout,uout,oin\n"));
  EXPECT_TRUE(r.has(IssueKind::rotation_mismatch));
  const auto ok = validate(parse_diagram_unchecked("X a sign=+ uin=e1 oin=e2 uout=e2 oout=e1 ccw=oin,uout,oout,uin\n"));
  EXPECT_FALSE(ok.has(IssueKind::rotation_mismatch));
}

TEST(Diagram, NonPlanarRotationRejected) {
  const auto r = validate(parse_diagram_unchecked(kToroidal));
  EXPECT_TRUE(r.has(IssueKind::nonplanar));
  EXPECT_THROW(parse_diagram(kToroidal), DiagramError);
}

TEST(Diagram, FreeLoopIsValid) {
  const PlanarDiagram d = parse_diagram("L k\n");
  EXPECT_TRUE(d.nodes.empty());
  EXPECT_EQ(d.free_loops, std::vector<std::string>{"k"});
}

TEST(Diagram, SwitchCrossingKeepsRotationAndFlipsSign) {
  PlanarDiagram d = parse_diagram(kTrefoil);
  Node n = d.nodes[0];
  switch_crossing(n);
  EXPECT_EQ(n.sign, 1);
  EXPECT_EQ(n.ports[kOverIn], "e1");
  EXPECT_EQ(n.ports[kUnderIn], "e4");
  d.nodes[0] = n;
  EXPECT_TRUE(validate(d).ok());
}

TEST(Topology, FacesSatisfyEuler) {
  const PlanarDiagram d = parse_diagram(kTrefoil);
  const Topology t(d);
  EXPECT_EQ(t.faces().size(), 5u);  // 3 - 6 + 5 = 2
  EXPECT_EQ(t.graph_components(), 1);
}

TEST(Topology, EveryDartInExactlyOneFace) {
  for (const auto& name : oracle::fixture_names()) {
    const PlanarDiagram d = oracle::load(name);
    const Topology t(d);
    std::size_t darts = 0;
    for (const auto& f : t.faces()) darts += f.size();
    EXPECT_EQ(darts, 2 * t.edge_order().size()) << name;
  }
}

TEST(Property, RandomDiagramsValidate) {
  RandomDiagramOptions o;
  o.degree = std::nullopt;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const PlanarDiagram d = generate_random_diagram(s, o);
    EXPECT_TRUE(validate(d).ok()) << s;
    EXPECT_EQ(parse_diagram(serialize_diagram(d)), d);
  }
}
