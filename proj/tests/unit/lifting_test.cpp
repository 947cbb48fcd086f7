#include <gtest/gtest.h>

#include "knotlift/heights.hpp"
#include "knotlift/lifting.hpp"
#include "knotlift/numbering.hpp"
#include "knotlift/random.hpp"
#include "oracles.hpp"

using namespace knotlift;

namespace {

long floor_div(long a, long n) { return a >= 0 ? a / n : -((-a + n - 1) / n); }

// Lift computed on the code alone: walk the single component keeping an
// integer height, compare pass heights at each crossing (mod n when n > 0),
// keep a double line only when it crosses a multiple of n.
MarkedGaussCode lift_by_code(const MarkedGaussCode& code, long n) {
  const auto& comp = code.components.at(0);
  std::size_t first = comp.size();
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (comp[i].kind == EventKind::double_line) {
      first = i;
      break;
    }
  std::vector<long> h(comp.size(), 0);
  std::vector<long> before(comp.size(), 0);
  long cur = 0;
  for (std::size_t k = 0; k < comp.size(); ++k) {
    const std::size_t i = first == comp.size() ? k : (first + k) % comp.size();
    if (comp[i].kind == EventKind::double_line) {
      before[i] = k == 0 ? -comp[i].sign : cur;
      cur = k == 0 ? 0 : cur + comp[i].sign;
    }
    h[i] = cur;
  }
  std::map<std::string, std::pair<long, long>> at;  // over, under heights
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (comp[i].kind == EventKind::crossing) {
      const long v = n ? oracle::mod(h[i], n) : h[i];
      (comp[i].role == Role::over ? at[comp[i].id].first : at[comp[i].id].second) = v;
    }
  MarkedGaussCode out;
  out.components.emplace_back();
  for (std::size_t i = 0; i < comp.size(); ++i) {
    Event e = comp[i];
    if (e.kind == EventKind::double_line) {
      if (n == 0 || floor_div(before[i], n) == floor_div(h[i], n)) continue;
    } else if (e.kind == EventKind::crossing) {
      const auto [o, u] = at[e.id];
      if (u > o) {
        e.role = e.role == Role::over ? Role::under : Role::over;
        e.sign = -e.sign;
      }
    }
    out.components[0].push_back(e);
  }
  return out;
}

RandomDiagramOptions degree_zero() {
  RandomDiagramOptions o;
  o.max_crossings = 6;
  o.max_double_lines = 4;
  return o;
}

}  // namespace

TEST(Lift0, WithoutDoubleLinesIsIdentity) {
  const PlanarDiagram d = oracle::load("trefoil.kd");
  EXPECT_EQ(canonical_code(traverse(lift0(d))), canonical_code(traverse(d)));
}

TEST(Lift0, SwitchesCrossingsWhereUnderPassIsHigher) {
  const PlanarDiagram l = lift0(oracle::load("cover_trefoil.kd"));
  EXPECT_EQ(l.count(NodeKind::double_line), 0u);
  EXPECT_EQ(canonical_code(traverse(l)), canonical_code(parse_code("Uc- Ub+ Oa+ Oc- Ob+ Ua+")));
}

TEST(Lift0, RejectsNonzeroDegree) { EXPECT_THROW(lift0(oracle::load("degree_d1.kd")), std::invalid_argument); }

TEST(Liftk, TwoPositiveDoubleLinesGiveOne) {
  EXPECT_EQ(canonical_code(traverse(liftk(oracle::load("unknot_two_plus.kd")))), canonical_code(parse_code("Tt+")));
}

TEST(Liftk, DegreeThreeKink) {
  const PlanarDiagram l = liftk(oracle::load("liftk_deg3.kd"));
  EXPECT_EQ(canonical_code(traverse(l)), canonical_code(parse_code("O1- Tt1+ U1-")));
  EXPECT_EQ(degree(l), 1);
}

TEST(Liftk, RejectsDegreeZero) { EXPECT_THROW(liftk(oracle::load("degree_d3.kd")), std::invalid_argument); }

TEST(Property, Lift0MatchesCodeOracle) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const PlanarDiagram d = generate_random_diagram(s, degree_zero());
    EXPECT_EQ(canonical_code(traverse(lift0(d))), canonical_code(lift_by_code(traverse(d), 0))) << s;
  }
}

TEST(Property, LiftkMatchesCodeOracle) {
  RandomDiagramOptions o = degree_zero();
  o.degree = std::nullopt;
  o.nonzero_degree = true;
  for (std::uint64_t s = 0; s < 300; ++s) {
    const PlanarDiagram d = generate_random_diagram(s, o);
    const long n = std::abs(degree(d));
    const PlanarDiagram l = liftk(d);
    EXPECT_EQ(canonical_code(traverse(l)), canonical_code(lift_by_code(traverse(d), n))) << s;
    EXPECT_EQ(std::abs(degree(l)), 1);
  }
}

TEST(Cover0, SingleSheetIsLift0) {
  const PlanarDiagram d = oracle::load("cover_trefoil.kd");
  EXPECT_EQ(canonical_code(traverse(cover0(d, 1).diagram)), canonical_code(traverse(lift0(d))));
}

TEST(Cover0, CensusOnFixture) {
  const PlanarDiagram d = oracle::load("cover_trefoil.kd");
  for (int m = 2; m <= 4; ++m) {
    const CoveringDiagram c = cover0(d, m);
    EXPECT_TRUE(validate(c.diagram).ok());
    EXPECT_EQ(c.sheets, m);
    EXPECT_EQ(traverse(c.diagram).components.size(), static_cast<std::size_t>(m));
    EXPECT_EQ(static_cast<int>(c.diagram.count(NodeKind::classical)), m * m * 3 + (m - 1) * 2);
    EXPECT_EQ(c.diagram.count(NodeKind::double_line), 0u);
  }
}

TEST(Cover0, ProvenanceNamesGridNodes) {
  const CoveringDiagram c = cover0(oracle::load("cover_trefoil.kd"), 2);
  ASSERT_TRUE(c.provenance.count("a@0.1"));
  EXPECT_EQ(c.provenance.at("a@0.1").source, "a");
  EXPECT_EQ(c.provenance.at("a@0.1").piece, CoverPiece::grid);
  EXPECT_EQ(c.provenance.at("a@0.1").sheets, (std::array<int, 2>{0, 1}));
  int twists = 0;
  for (const auto& [id, p] : c.provenance) twists += p.piece == CoverPiece::twist;
  EXPECT_EQ(twists, 2);
}

TEST(Cover0, VirtualCrossingsBecomeVirtualGrids) {
  const PlanarDiagram d = oracle::load("cover_virtual.kd");
  const CoveringDiagram c = cover0(d, 3);
  EXPECT_EQ(c.diagram.count(NodeKind::virtual_crossing), 9 * d.count(NodeKind::virtual_crossing));
}

TEST(Cover0, RejectsBadInput) {
  EXPECT_THROW(cover0(oracle::load("degree_d1.kd"), 2), std::invalid_argument);
  EXPECT_THROW(cover0(oracle::load("cover_trefoil.kd"), 0), std::invalid_argument);
  EXPECT_THROW(cover0(oracle::load("trefoil_cuts.kd"), 2), std::invalid_argument);
}

TEST(Coverk, SheetsFollowDegree) {
  for (const char* f : {"unknot_two_plus.kd", "liftk_deg3.kd", "degree_d2.kd"}) {
    const PlanarDiagram d = oracle::load(f);
    const CoveringDiagram c = coverk(d);
    const int k = std::abs(degree(d));
    EXPECT_EQ(c.sheets, k) << f;
    EXPECT_TRUE(validate(c.diagram).ok());
    const auto degs = degrees(c.diagram);
    EXPECT_EQ(degs.size(), static_cast<std::size_t>(k));
    for (int g : degs) EXPECT_EQ(g, 1) << f;
  }
}

TEST(CoveringNumbering, ClosedFormOnFixtures) {
  for (const char* f : {"cover_trefoil.kd", "cover_virtual.kd", "degree_d3.kd", "heights_deg0.kd"}) {
    for (int m = 2; m <= 5; ++m) {
      const CoveringDiagram c = cover0(oracle::load(f), m);
      const CoveringNumbering n = covering_numbering(c, m);
      ASSERT_TRUE(n.numbering) << f << " m=" << m;
      EXPECT_FALSE(n.fallback) << f << " m=" << m;
      EXPECT_TRUE(check_numbering(n.system, *n.numbering).empty());
    }
  }
}

TEST(RestrictedLift, NoDoubleLinesGivesParallelCopies) {
  const MarkedGaussCode r = restricted_lift(oracle::load("trefoil.kd"), 2);
  ASSERT_EQ(r.components.size(), 2u);
  std::size_t passes = 0;
  for (const auto& c : r.components) passes += c.size();
  EXPECT_EQ(passes, 2u * 4 * 3);
  EXPECT_TRUE(check_code(r).empty());
}

TEST(RestrictedLift, PairsSheetsByHeightDifference) {
  // Crossing a of this fixture has over height -1 and under height 0, so
  // sheet s over-passes meet sheet s-1 under-passes at equal levels.
  const MarkedGaussCode r = restricted_lift(oracle::load("cover_trefoil.kd"), 3);
  EXPECT_EQ(r.components.size(), 3u);
  EXPECT_TRUE(check_code(r).empty());
}

TEST(Property, CoveringsOfRandomDiagrams) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const PlanarDiagram d = generate_random_diagram(s, degree_zero());
    for (int m = 2; m <= 4; ++m) {
      const CoveringDiagram c = cover0(d, m);
      ASSERT_TRUE(validate(c.diagram).ok());
      EXPECT_TRUE(is_mod_m_ac(c.diagram, m)) << s << " m=" << m;
      EXPECT_EQ(restricted_lift(d, m).components.size(), static_cast<std::size_t>(m));
    }
  }
}
