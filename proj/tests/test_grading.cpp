#include <doctest.h>

#include "common.hpp"
#include "minorb/grading.hpp"
#include "oracle.hpp"

using namespace minorb;
using testing::T;

namespace {

int positive_part(const GradingReport& g) {
  int s = 0;
  for (const auto& [k, d] : g.dims)
    if (k > 0) s += d;
  return s;
}

BigInt weyl_route(const VAlphaWeights& v) {
  std::vector<FactorWeight> negated = v.lowest;
  for (auto& fw : negated)
    for (int& x : fw.weight.coeffs) x = -x;
  return dim_irrep_product(dual_weight(negated), 1);
}

}  // namespace

TEST_SUITE("grading") {

TEST_CASE("E8 grading at node 7") {
  const GradingReport g = grade_adjoint(RootSystem(T("E8")), 7);
  CHECK(g.dims == std::map<int, int>{{-3, 2}, {-2, 27}, {-1, 54}, {0, 82}, {1, 54}, {2, 27}, {3, 2}});
  CHECK(g.max_grade == 3);
  CHECK(g.residues(29) == std::map<int, int>{{0, 82}, {1, 54}, {2, 27}, {3, 2}, {26, 2}, {27, 27}, {28, 54}});
}

TEST_CASE("small gradings") {
  CHECK(grade_adjoint(RootSystem(T("A1")), 1).dims == std::map<int, int>{{-1, 1}, {0, 1}, {1, 1}});
  // Positive roots of B2: a1, a2, a1+a2, a1+2a2.
  CHECK(grade_adjoint(RootSystem(T("B2")), 2).dims == std::map<int, int>{{-2, 1}, {-1, 2}, {0, 4}, {1, 2}, {2, 1}});
}

TEST_CASE("gradings agree with the oracle and are symmetric") {
  for (const auto& t : testing::types_up_to(8)) {
    CAPTURE(t.label());
    const RootSystem rs(t);
    const auto ref = oracle::roots(t);
    for (int i = 1; i <= t.rank(); ++i) {
      const GradingReport g = grade_adjoint(rs, i);
      CHECK(g.dims == oracle::grading(ref, i));
      int total = 0;
      for (const auto& [k, d] : g.dims) {
        total += d;
        CHECK(g.dims.at(-k) == d);
      }
      CHECK(total == rs.dimension());
      CHECK(positive_part(g) == levi_data(rs, std::vector<int>{i}).dim_u);
      CHECK(g.max_grade == rs.highest_root().coeffs[static_cast<std::size_t>(i - 1)]);
      CHECK(g.dims.rbegin()->first == g.max_grade);
    }
  }
}

TEST_CASE("V(alpha_i) spot values") {
  const std::vector<std::tuple<const char*, int, int>> cases{
      {"E8", 1, 64}, {"E8", 7, 54}, {"E8", 8, 56}, {"E7", 1, 32}, {"E7", 2, 35},
      {"E7", 6, 32}, {"E7", 7, 27}, {"E6", 1, 16}, {"E6", 2, 20}};
  for (const auto& [label, node, expected] : cases) {
    CAPTURE(label);
    CAPTURE(node);
    const RootSystem rs(T(label));
    CHECK(dim_v_alpha(rs, node) == expected);
    CHECK(grade_adjoint(rs, node).dims.at(1) == expected);
    CHECK(weyl_route(lowest_weight_of_v_alpha(rs, node)) == expected);
  }
}

TEST_CASE("V(alpha_i) three routes agree everywhere") {
  for (const auto& t : testing::types_up_to(8)) {
    CAPTURE(t.label());
    const RootSystem rs(t);
    const auto ref = oracle::roots(t);
    for (int i = 1; i <= t.rank(); ++i) {
      int coefficient_one = 0;
      for (const auto& c : ref.positive)
        if (c[static_cast<std::size_t>(i - 1)] == 1) ++coefficient_one;
      const VAlphaWeights v = lowest_weight_of_v_alpha(rs, i);
      CHECK(dim_v_alpha(rs, i) == coefficient_one);
      CHECK(grade_adjoint(rs, i).dims.at(1) == coefficient_one);
      CHECK(weyl_route(v) == coefficient_one);
      CHECK(v.dim == coefficient_one);
    }
  }
}

TEST_CASE("lowest weights of V(alpha_i)") {
  const RootSystem e8(T("E8"));
  const VAlphaWeights v1 = lowest_weight_of_v_alpha(e8, 1);
  REQUIRE(v1.lowest.size() == 1);
  CHECK(v1.lowest[0].type == T("D7"));
  CHECK(v1.lowest[0].weight == Weight{{0, 0, 0, 0, 0, -1, 0}});
  CHECK(v1.highest[0].weight == Weight::fundamental(7, 7));
  CHECK(v1.dim == 64);

  // Node labels of E6 follow the component labeling used throughout,
  // so E8 node 6 is E6 node 1 and the lowest weight sits on omega_1.
  const VAlphaWeights v7 = lowest_weight_of_v_alpha(e8, 7);
  REQUIRE(v7.lowest.size() == 2);
  CHECK(v7.lowest[0].weight == Weight{{-1, 0, 0, 0, 0, 0}});
  CHECK(v7.lowest[1].weight == Weight{{-1}});
  CHECK(v7.highest[0].weight == Weight::fundamental(6, 6));
  CHECK(v7.highest[1].weight == Weight{{1}});
  CHECK(v7.dim == 54);

  const VAlphaWeights a1 = lowest_weight_of_v_alpha(RootSystem(T("A1")), 1);
  CHECK(a1.lowest.empty());
  CHECK(a1.dim == 1);
}

TEST_CASE("restriction to a Levi") {
  const RootSystem e8(T("E8"));
  const LeviData l = levi_data(e8, std::vector<int>{7});
  const auto r = restrict_to_levi(l.components, Weight{{1, 2, 3, 4, 5, 6, 7, 8}});
  REQUIRE(r.size() == 2);
  CHECK(r[0].weight == Weight{{6, 2, 5, 4, 3, 1}});
  CHECK(r[1].weight == Weight{{8}});
}

TEST_CASE("E8 branching at node 7") {
  const BranchReport b = branch_adjoint(RootSystem(T("E8")), 7);
  CHECK(levi_data(RootSystem(T("E8")), std::vector<int>{7}).components == b.levi.components);
  REQUIRE(b.grade_modules.size() == 4);

  const auto& g0 = b.grade_modules.at(0);
  REQUIRE(g0.size() == 3);
  CHECK(g0[0].highest[0].weight == Weight{{0, 1, 0, 0, 0, 0}});
  CHECK(g0[0].dim == 78);
  CHECK(g0[1].highest[1].weight == Weight{{2}});
  CHECK(g0[1].dim == 3);
  CHECK(g0[2].dim == 1);

  const auto& g1 = b.grade_modules.at(1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0].highest[0].weight == Weight::fundamental(6, 6));
  CHECK(g1[0].highest[1].weight == Weight{{1}});
  CHECK(g1[0].dim == 54);

  const auto& g2 = b.grade_modules.at(2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0].highest[0].weight == Weight::fundamental(6, 1));
  CHECK(g2[0].highest[1].weight == Weight{{0}});
  CHECK(g2[0].dim == 27);

  const auto& g3 = b.grade_modules.at(3);
  REQUIRE(g3.size() == 1);
  CHECK(g3[0].highest[0].weight == Weight::zero(6));
  CHECK(g3[0].highest[1].weight == Weight{{1}});
  CHECK(g3[0].dim == 2);
}

TEST_CASE("branching adds up to the grading") {
  for (const auto& t : testing::types_up_to(8)) {
    const RootSystem rs(t);
    for (int i = 1; i <= t.rank(); ++i) {
      const BranchReport b = branch_adjoint(rs, i);
      const GradingReport g = grade_adjoint(rs, i);
      BigInt total = 0;
      for (const auto& [k, modules] : b.grade_modules) {
        BigInt sum = 0;
        for (const auto& m : modules) sum += m.dim;
        CHECK(sum == g.dims.at(k));
        total += k == 0 ? sum : 2 * sum;
      }
      CHECK(total == rs.dimension());
      CHECK(b.grade_modules.at(1).size() == 1);
    }
  }
}

TEST_CASE("invalid nodes") {
  CHECK_THROWS_AS(grade_adjoint(RootSystem(T("E8")), 9), std::out_of_range);
  CHECK_THROWS_AS(grade_adjoint(RootSystem(T("E8")), 0), std::out_of_range);
  CHECK_THROWS_AS(branch_adjoint(RootSystem(T("E8")), 9), std::out_of_range);
  CHECK_THROWS_AS(lowest_weight_of_v_alpha(RootSystem(T("E8")), 9), std::out_of_range);
}

}  // TEST_SUITE
