#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dspath/error.hpp"
#include "dspath/oracle.hpp"
#include "dspath/verify.hpp"
#include "helpers.hpp"

using namespace dspath;
using namespace dspath::testing;

namespace {

void check_same_table(const MassTable& a, const MassTable& b, double tol) {
  CHECK(std::abs(a.conflict_mass() - b.conflict_mass()) <= tol);
  for (const auto& [set, mass] : a.entries()) CHECK(std::abs(mass - b.mass_of(set)) <= tol);
  for (const auto& [set, mass] : b.entries()) CHECK(std::abs(mass - a.mass_of(set)) <= tol);
}

}  // namespace

TEST_CASE("single vertex evidence") {
  const EvidenceGraph g({0.3}, {});
  const MassTable t = oracle_combine(g);
  REQUIRE(t.entries().size() == 2);
  FrameSubset r1 = FrameSubset::none(1);
  r1.insert(1);
  CHECK(t.mass_of(r1) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(t.mass_of(FrameSubset::all(1)) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(t.conflict_mass() == 0.0);
}

TEST_CASE("total conflict on two certain vertices with a certain blocked edge") {
  const EvidenceGraph g({1.0, 1.0}, {1.0});
  const MassTable t = oracle_combine(g);
  CHECK(t.conflict_mass() == 1.0);
  CHECK(t.entries().empty());
  CHECK_THROWS_AS(oracle_report(t), TotalConflictError);
}

TEST_CASE("three-vertex conflict equals the expanded fusion table") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const EvidenceGraph g = random_graph(3, rng, 0.0, 1.0);
    CHECK(std::abs(oracle_combine(g).conflict_mass() - closed_k3(g)) <= 1e-12);
  }
}

TEST_CASE("oracle report on small fixtures") {
  SUBCASE("vacuous edge evidence") {
    const EvidenceGraph g({0.5, 0.5}, {0.0});
    const BeliefReport r = oracle_report(oracle_combine(g));
    CHECK(r.conflict == 0.0);
    CHECK(r.at(0b11).support == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(r.at(0b11).plausibility == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.at(0b01).support == 0.0);
  }
  SUBCASE("path <r1, -r2, r3>") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const EvidenceGraph g = random_graph(3, rng);
      const BeliefReport r = oracle_report(oracle_combine(g));
      const double scale = 1.0 / (1.0 - closed_k3(g));
      const PathBelief& b = r.at(path_of("101").bits());
      CHECK(std::abs(b.plausibility - scale * closed_pls_101(g)) <= 1e-12);
      CHECK(std::abs(b.support - scale * closed_spt_101(g)) <= 1e-12);
    }
  }
}

TEST_CASE("mass is conserved") {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < (n < 6 ? 10 : 3); ++trial) {
      const MassTable t = oracle_combine(random_graph(n, rng, 0.0, 1.0));
      CHECK(std::abs(t.total_mass() - 1.0) <= 1e-12);
      for (const auto& [set, mass] : t.entries()) CHECK_FALSE(set.is_empty());
    }
  }
}

TEST_CASE("combination order does not matter") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 3; ++n) {
    const EvidenceGraph g = random_graph(n, rng);
    const MassTable expected = oracle_combine(g);
    auto evidences = graph_evidences(g);
    for (int order = 0; order < 3; ++order) {
      std::shuffle(evidences.begin(), evidences.end(), rng);
      MassTable folded = MassTable::vacuous(n);
      for (const auto& ev : evidences) folded = combine(folded, MassTable::from_simple_support(n, ev));
      check_same_table(folded, expected, 1e-12);
      check_same_table(oracle_combine(n, evidences), expected, 1e-12);
    }
  }
}

TEST_CASE("plausibility of a path is one minus belief in its complement") {
  std::mt19937_64 rng(29);
  for (std::size_t n = 1; n <= 4; ++n) {
    const MassTable t = oracle_combine(random_graph(n, rng));
    const BeliefReport r = oracle_report(t);
    for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) {
      FrameSubset single = FrameSubset::none(n);
      single.insert(m);
      const double bel_complement = t.belief(single.complement()) / (1.0 - t.conflict_mass());
      CHECK(std::abs(r.at(m).plausibility - (1.0 - bel_complement)) <= 1e-12);
      CHECK(std::abs(r.at(m).plausibility_unnormalized - t.plausibility(single)) <= 1e-12);
      CHECK(r.at(m).support <= r.at(m).plausibility + 1e-15);
    }
  }
}

TEST_CASE("a zero-mass evidence is the same as no evidence") {
  std::mt19937_64 rng(31);
  for (std::size_t n = 2; n <= 4; ++n) {
    const EvidenceGraph base = random_graph(n, rng);
    {
      const EvidenceGraph g = base.with_edge_doubt(0, n - 1, 0.0);
      auto evidences = graph_evidences(g);
      evidences.erase(evidences.begin() + static_cast<std::ptrdiff_t>(n + g.edge_index(0, n - 1)));
      check_same_table(oracle_combine(g), oracle_combine(n, evidences), 1e-12);
    }
    {
      const EvidenceGraph g = base.with_vertex_mass(1, 0.0);
      auto evidences = graph_evidences(g);
      evidences.erase(evidences.begin() + 1);
      check_same_table(oracle_combine(g), oracle_combine(n, evidences), 1e-12);
    }
  }
}

TEST_CASE("partitioned expansion agrees with the sequential one") {
  std::mt19937_64 rng(37);
  for (std::size_t n : {3, 5}) {
    const EvidenceGraph g = random_graph(n, rng);
    OracleOptions parallel;
    parallel.threads = 4;
    check_same_table(oracle_combine(g, parallel), oracle_combine(g), 1e-12);
  }
}

TEST_CASE("oracle refuses graphs above its cap") {
  const EvidenceGraph g(7);
  try {
    (void)oracle_combine(g);
    FAIL("expected OracleInfeasibleError");
  } catch (const OracleInfeasibleError& e) {
    CHECK(std::string(e.what()).find("cap of 6") != std::string::npos);
  }
  OracleOptions small;
  small.max_vertices = 2;
  CHECK_THROWS_AS(oracle_combine(EvidenceGraph(3), small), OracleInfeasibleError);
}
