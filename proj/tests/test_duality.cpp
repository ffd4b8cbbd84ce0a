#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "relcyl/axioms.hpp"
#include "relcyl/duality.hpp"
#include "relcyl/error.hpp"
#include "relcyl/setalg.hpp"

using namespace relcyl;

namespace {

bool same_tables(const FiniteBAO& a, const FiniteBAO& b) {
  return a.num_atoms == b.num_atoms && a.c == b.c && a.sub_dual == b.sub_dual && a.swap_dual == b.swap_dual;
}

std::vector<std::vector<int>> full_carrier(int w1, int w2) {
  std::vector<std::vector<int>> out;
  for (int x = 0; x < w1; ++x)
    for (int y = 0; y < w2; ++y) out.push_back({x, y});
  return out;
}

}  // namespace

TEST_CASE("tuple frame of the square") {
  const Frame f = tuple_frame(full_unit(2, 2));
  CHECK(f.worlds == 4);
  CHECK(f.C[0].size() == 8);
  CHECK(f.C[1].size() == 8);
  const Frame one = tuple_frame(Unit{2, 2, {{0, 0}}});
  CHECK(one.worlds == 1);
  const Relation id{{0, 0}};
  for (int i = 0; i < 2; ++i) {
    CHECK(one.C[i] == id);
    for (int j = 0; j < 2; ++j) {
      CHECK(one.S_sub[i][j] == id);
      CHECK(one.S_swap[i][j] == id);
    }
  }
  try {
    tuple_frame(Unit{2, 2, {{0, 1}}});
    FAIL("expected a closure error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
}

TEST_CASE("complex algebra of a tuple frame is the set algebra") {
  for (int n = 2; n <= 3; ++n) {
    for (int base = 1; base <= 2; ++base) {
      for (const Unit& u : all_units(n, base)) {
        if (!classify_unit(u).closed_under_finite_transformations) continue;
        const ComplexAlgebra ca = complex_algebra(tuple_frame(u));
        CHECK(ca.report.empty());
        CHECK(same_tables(ca.algebra, abstract(u, Signature::ta())));
        CHECK(check_class(ca.algebra, AxiomSystem::TA).empty());
      }
    }
  }
}

TEST_CASE("degenerate frames") {
  Frame empty;
  empty.dim = 2;
  empty.worlds = 2;
  empty.C.assign(2, {});
  empty.has_sub = false;
  empty.has_swap = false;
  const ComplexAlgebra ca = complex_algebra(empty);
  CHECK(cyl(ca.algebra, 0, ca.algebra.top()).empty());
  CHECK(std::any_of(ca.report.begin(), ca.report.end(),
                    [](const auto& s) { return s.find("c_0 increasing") != std::string::npos; }));

  Frame single;
  single.dim = 2;
  single.worlds = 1;
  single.C.assign(2, {{0, 0}});
  single.S_sub.assign(2, std::vector<Relation>(2, {{0, 0}}));
  single.S_swap.assign(2, std::vector<Relation>(2, {{0, 0}}));
  const ComplexAlgebra one = complex_algebra(single);
  CHECK(one.report.empty());
  CHECK(same_tables(one.algebra, trivial_algebra(2, Signature::ta())));

  Frame nonfunc = single;
  nonfunc.worlds = 2;
  nonfunc.C.assign(2, {{0, 0}, {1, 1}});
  nonfunc.S_sub.assign(2, std::vector<Relation>(2, {{0, 0}, {1, 1}}));
  nonfunc.S_swap.assign(2, std::vector<Relation>(2, {{0, 0}, {1, 1}}));
  nonfunc.S_sub[0][1] = {{0, 0}, {0, 1}, {1, 1}};
  const ComplexAlgebra nf = complex_algebra(nonfunc);
  CHECK(std::any_of(nf.report.begin(), nf.report.end(),
                    [](const auto& s) { return s.find("sub_dual total") != std::string::npos; }));
}

TEST_CASE("zigzag products") {
  const Unit sq = full_unit(2, 2);
  const Frame f = tuple_frame(sq);
  const Frame diag = zigzag_product({f, f}, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK(diag == f);

  const Frame full = zigzag_product({f, f}, full_carrier(4, 4));
  CHECK(full.worlds == 16);
  const ComplexAlgebra ca = complex_algebra(full);
  CHECK(ca.report.empty());
  CHECK(check_class(ca.algebra, AxiomSystem::TA).empty());

  for (int base = 1; base <= 2; ++base) {
    for (const Unit& u : all_units(2, base)) {
      if (!classify_unit(u).closed_under_finite_transformations) continue;
      const Frame g = tuple_frame(u);
      const ComplexAlgebra z = complex_algebra(zigzag_product({f, g}, full_carrier(f.worlds, g.worlds)));
      CHECK(z.report.empty());
      CHECK(check_class(z.algebra, AxiomSystem::TA).empty());
    }
  }

  std::vector<std::vector<int>> missing;
  for (const auto& s : full_carrier(4, 4))
    if (s[1] != 2) missing.push_back(s);
  try {
    zigzag_product({f, f}, missing);
    FAIL("expected a zigzag error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("factor 1 misses world 2") != std::string::npos);
  }
}

TEST_CASE("superamalgam search") {
  const FiniteBAO t1 = abstract(full_unit(2, 1), Signature::ta());
  const AmalgamSearch trivial = search_superamalgam({t1, t1, t1, {0}, {0}}, 4);
  REQUIRE(trivial.found);
  CHECK(same_tables(trivial.result->D, t1));

  const FiniteBAO a0 = abstract(Unit{2, 2, {{0, 0}, {1, 1}}}, Signature::ta());
  CHECK(a0.num_atoms == 2);
  const AmalgamProblem p{a0, a0, a0, {0, 1}, {0, 1}};
  const AmalgamSearch d = search_superamalgam(p, 4);
  REQUIRE(d.found);
  CHECK(same_tables(d.result->D, a0));
  CHECK(d.result->carrier == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  CHECK(d.result->certificate.size() == 4);

  CHECK_FALSE(search_superamalgam(p, 0).found);
  CHECK_THROWS_AS(search_superamalgam(p, 4, 2), BudgetError);
}

TEST_CASE("embedding checks") {
  const FiniteBAO a0 = abstract(Unit{2, 2, {{0, 0}, {1, 1}}}, Signature::ta());
  CHECK(check_embedding(a0, a0, {0, 1}).empty());
  CHECK(check_embedding(a0, a0, {1, 0}).empty());  // the swap of the two constants is an automorphism
  CHECK_FALSE(check_embedding(a0, a0, {0, 0}).empty());
  const FiniteBAO sq = abstract(full_unit(2, 2), Signature::ta());
  // Collapsing the square onto the diagonal algebra along the first coordinate
  // does not commute with c_1.
  CHECK_FALSE(check_embedding(a0, sq, {0, 0, 1, 1}).empty());
}
