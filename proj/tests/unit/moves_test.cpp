#include <gtest/gtest.h>

#include "knotlift/heights.hpp"
#include "knotlift/invariants.hpp"
#include "knotlift/lifting.hpp"
#include "knotlift/moves.hpp"
#include "knotlift/random.hpp"
#include "oracles.hpp"

using namespace knotlift;

namespace {

RandomDiagramOptions small() {
  RandomDiagramOptions o;
  o.max_crossings = 4;
  o.max_double_lines = 4;
  return o;
}

bool returns_to(const PlanarDiagram& from, MoveKind k, const PlanarDiagram& target) {
  const auto want = canonical_code(traverse(target));
  for (const auto& s : enumerate_sites(from, k))
    if (canonical_code(traverse(apply_move(from, k, s))) == want) return true;
  return false;
}

std::size_t passes(const PlanarDiagram& d) {
  std::size_t n = 0;
  for (const auto& c : traverse(d).components) n += c.size();
  return n;
}

}  // namespace

TEST(MoveSite, TextRoundTrip) {
  const MoveSite s{false, {"e1", "e2"}, 5};
  EXPECT_EQ(s.to_string(), "bwd;e1,e2;5");
  EXPECT_EQ(MoveSite::parse(s.to_string()), s);
  EXPECT_THROW(MoveSite::parse("sideways;e;0"), std::invalid_argument);
}

TEST(MoveKind, NamesRoundTrip) {
  for (MoveKind k : kAllMoveKinds) EXPECT_EQ(parse_move_kind(to_string(k)), k);
  EXPECT_THROW(parse_move_kind("R4"), std::invalid_argument);
}

TEST(Moves, KinkOnFreeLoop) {
  const PlanarDiagram d = oracle::load("unknot.kd");
  const auto sites = enumerate_sites(d, MoveKind::R1);
  ASSERT_EQ(sites.size(), 4u);
  for (const auto& s : sites) {
    const PlanarDiagram e = apply_move(d, MoveKind::R1, s);
    EXPECT_EQ(e.count(NodeKind::classical), 1u);
    EXPECT_TRUE(e.free_loops.empty());
    EXPECT_TRUE(returns_to(e, MoveKind::R1, d));
  }
}

TEST(Moves, CancelPairOnFreeLoop) {
  const PlanarDiagram d = oracle::load("unknot.kd");
  const PlanarDiagram e = apply_move(d, MoveKind::DL_CANCEL, MoveSite{true, {"k"}, 0});
  EXPECT_EQ(e.count(NodeKind::double_line), 2u);
  EXPECT_EQ(degree(e), 0);
  EXPECT_TRUE(returns_to(e, MoveKind::DL_CANCEL, d));
}

TEST(Moves, TrefoilHasNoReducingMoves) {
  const PlanarDiagram d = oracle::load("trefoil.kd");
  for (MoveKind k : {MoveKind::R1, MoveKind::R2})
    for (const auto& s : enumerate_sites(d, k)) EXPECT_TRUE(s.forward) << to_string(k);
  EXPECT_TRUE(enumerate_sites(d, MoveKind::R3).empty());
}

TEST(Moves, SlideNeedsMatchingSign) {
  // p sits right after crossing b's over strand with sign +: it may slide.
  const PlanarDiagram d = oracle::load("degree_d1.kd");
  const auto sites = enumerate_sites(d, MoveKind::DL_SLIDE);
  ASSERT_FALSE(sites.empty());
  for (const auto& s : sites) {
    const PlanarDiagram e = apply_move(d, MoveKind::DL_SLIDE, s);
    EXPECT_EQ(degree(e), 2);
    EXPECT_TRUE(returns_to(e, MoveKind::DL_SLIDE, d));
  }
}

TEST(Moves, ThirdMoveOnTriangle) {
  const PlanarDiagram d = oracle::load("r3_triangle.kd");
  const auto sites = enumerate_sites(d, MoveKind::R3);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].to_string(), "fwd;e3,e4,e7;7");
  EXPECT_TRUE(enumerate_sites(d, MoveKind::V3).empty());
  EXPECT_TRUE(enumerate_sites(d, MoveKind::MIXED).empty());
  const PlanarDiagram e = apply_move(d, MoveKind::R3, sites[0]);
  EXPECT_EQ(e.count(NodeKind::classical), 4u);
  EXPECT_EQ(e.count(NodeKind::virtual_crossing), 0u);
  EXPECT_NE(canonical_code(traverse(e)), canonical_code(traverse(d)));
  EXPECT_TRUE(returns_to(e, MoveKind::R3, d));
  EXPECT_EQ(invariant_report(e), invariant_report(d));
}

TEST(Moves, MismatchedSitesThrow) {
  const PlanarDiagram d = oracle::load("trefoil.kd");
  EXPECT_THROW(apply_move(d, MoveKind::R1, MoveSite{false, {"a"}, 0}), std::invalid_argument);
  EXPECT_THROW(apply_move(d, MoveKind::R2, MoveSite{true, {"e1", "e1"}, 0}), std::invalid_argument);
  EXPECT_THROW(apply_move(d, MoveKind::DL_SLIDE, MoveSite{true, {"a", "b"}, 0}), std::invalid_argument);
  EXPECT_THROW(apply_move(d, MoveKind::R1, MoveSite{true, {"nope"}, 0}), std::invalid_argument);
}

TEST(Moves, CrossingChangeKeepsLift) {
  const PlanarDiagram d = oracle::load("trefoil.kd");
  for (const char* x : {"a", "b", "c"}) {
    const PlanarDiagram e = crossing_change(d, x);
    EXPECT_EQ(e.count(NodeKind::double_line), 2u);
    EXPECT_EQ(degree(e), 0);
    EXPECT_EQ(canonical_code(traverse(lift0(e))), canonical_code(traverse(d)));
  }
  EXPECT_THROW(crossing_change(d, "zz"), std::invalid_argument);
}

TEST(Property, ForwardMovesCanBeUndone) {
  std::mt19937_64 rng(41);
  for (MoveKind k : kAllMoveKinds) {
    int tried = 0;
    for (std::uint64_t s = 0; s < 60 && tried < 25; ++s) {
      const PlanarDiagram d = generate_random_diagram(s, small());
      auto sites = enumerate_sites(d, k);
      std::erase_if(sites, [](const MoveSite& m) { return !m.forward; });
      if (sites.empty()) continue;
      ++tried;
      const MoveSite site = sites[draw(rng, sites.size())];
      const PlanarDiagram e = apply_move(d, k, site);
      EXPECT_TRUE(returns_to(e, k, d)) << to_string(k) << " " << site.to_string() << " seed " << s;
    }
  }
}

TEST(Property, MovesPreserveDegreeAndLiftInvariants) {
  std::mt19937_64 rng(42);
  std::map<MoveKind, int> seen;
  for (std::uint64_t s = 0; s < 300; ++s) {
    const PlanarDiagram d = generate_random_diagram(s, small());
    const MoveKind k = kAllMoveKinds[s % std::size(kAllMoveKinds)];
    const auto sites = enumerate_sites(d, k);
    if (sites.empty()) continue;
    ++seen[k];
    const MoveSite& site = sites[draw(rng, sites.size())];
    const PlanarDiagram e = apply_move(d, k, site);
    ASSERT_TRUE(validate(e).ok());
    EXPECT_EQ(degrees(e), degrees(d));
    EXPECT_TRUE(equivalent_reports(invariant_report(lift0(d)), invariant_report(lift0(e)))) << to_string(k) << " " << site.to_string();
    EXPECT_TRUE(equivalent_reports(invariant_report(cover0(d, 3).diagram), invariant_report(cover0(e, 3).diagram)))
        << to_string(k) << " " << site.to_string();
  }
  EXPECT_GE(seen.size(), 7u);
}

TEST(Property, ClassicalKinkChangesPassCountByTwo) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const PlanarDiagram d = generate_random_diagram(s, small());
    for (const auto& site : enumerate_sites(d, MoveKind::R1)) {
      const PlanarDiagram e = apply_move(d, MoveKind::R1, site);
      EXPECT_EQ(passes(e), site.forward ? passes(d) + 2 : passes(d) - 2);
    }
  }
}

TEST(RandomWalk, ReproducibleFromSeed) {
  const PlanarDiagram d = oracle::load("cover_trefoil.kd");
  const RandomWalk a = random_walk(d, 15, 99);
  const RandomWalk b = random_walk(d, 15, 99);
  EXPECT_EQ(a.result, b.result);
  ASSERT_EQ(a.steps.size(), 15u);
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    EXPECT_EQ(a.steps[i].kind, b.steps[i].kind);
    EXPECT_EQ(a.steps[i].site, b.steps[i].site);
  }
  EXPECT_EQ(degree(a.result), 0);
  EXPECT_TRUE(equivalent_reports(invariant_report(lift0(d)), invariant_report(lift0(a.result))));
}

TEST(RandomWalk, RestrictedKinds) {
  const RandomWalk w = random_walk(oracle::load("unknot.kd"), 5, 1, {MoveKind::V1});
  for (const auto& s : w.steps) EXPECT_EQ(s.kind, MoveKind::V1);
  EXPECT_EQ(w.result.count(NodeKind::classical), 0u);
}
