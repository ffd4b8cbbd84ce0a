#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "relcyl/axioms.hpp"
#include "relcyl/error.hpp"
#include "relcyl/setalg.hpp"

using namespace relcyl;

namespace {

std::size_t count_label(const std::vector<AxiomInstance>& v, const std::string& label) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](const auto& a) { return a.label == label; }));
}

bool has_label(const ViolationReport& r, const std::string& label) {
  return std::any_of(r.begin(), r.end(), [&](const Violation& v) { return v.label == label; });
}

}  // namespace

TEST_CASE("instance counts") {
  // (i,j) ordered and distinct, m outside {i,j}, k outside {i,j,m}: 4*3*2*1.
  CHECK(count_label(axiom_instances(AxiomSystem::PTA, 4), "MGR") == 24);
  CHECK(count_label(axiom_instances(AxiomSystem::PTA, 3), "MGR") == 0);
  CHECK(count_label(axiom_instances(AxiomSystem::PTA, 3), "C5") == 3);
  CHECK(count_label(axiom_instances(AxiomSystem::SA, 4), "S8") == 24);
  for (const auto& inst : axiom_instances(AxiomSystem::PTA, 4)) {
    if (inst.label != "MGR") continue;
    std::vector<int> idx = inst.indices;
    std::sort(idx.begin(), idx.end());
    CHECK(std::adjacent_find(idx.begin(), idx.end()) == idx.end());
  }
}

TEST_CASE("instances are ordered by schema then index") {
  const auto v = axiom_instances(AxiomSystem::TEA, 3);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().label == "Fe0");
  CHECK(v.front().indices == std::vector<int>{0});
  const auto again = axiom_instances(AxiomSystem::TEA, 3);
  REQUIRE(again.size() == v.size());
  for (std::size_t k = 0; k < v.size(); ++k) CHECK(to_string(v[k].equation) == to_string(again[k].equation));
}

TEST_CASE("set algebras satisfy their systems") {
  const FiniteBAO sq = abstract(full_unit(2, 2), Signature::tea());
  CHECK(check_class(sq, AxiomSystem::PTA).empty());
  CHECK(check_class(sq, AxiomSystem::TEA).empty());
  CHECK(check_class(sq, AxiomSystem::TA).empty());
  const FiniteBAO cube = abstract(full_unit(3, 2), Signature::tea());
  CHECK(check_class(cube, AxiomSystem::TEA).empty());
}

TEST_CASE("a constant substitution breaks Fe3") {
  FiniteBAO a = abstract(full_unit(2, 2), Signature::tea());
  a.sub_dual[0][1] = {0, 0, 0, 0};
  const auto r = check_class(a, AxiomSystem::TEA);
  CHECK(has_label(r, "Fe3"));
  AxiomOptions par;
  par.jobs = 4;
  const auto r4 = check_class(a, AxiomSystem::TEA, par);
  REQUIRE(r4.size() == r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    CHECK(r4[k].label == r[k].label);
    CHECK(r4[k].indices == r[k].indices);
    CHECK(r4[k].lhs == r[k].lhs);
  }
}

TEST_CASE("non-D unit fails C6 with i = j") {
  const Unit u{2, 2, {{0, 1}}};
  CHECK_FALSE(classify_unit(u).is_D);
  const auto r = check_class(abstract(u, Signature::pta()), AxiomSystem::PTA);
  CHECK(has_label(r, "C6"));
}

TEST_CASE("S7 reading") {
  const auto lit = axiom_instances(AxiomSystem::SA, 3);
  AxiomOptions alt;
  alt.s7_alt = true;
  const auto swapped = axiom_instances(AxiomSystem::SA, 3, alt);
  CHECK(lit.size() == swapped.size());
  bool differ = false;
  for (std::size_t k = 0; k < lit.size(); ++k) {
    if (lit[k].label == "S7") differ = differ || to_string(lit[k].equation) != to_string(swapped[k].equation);
  }
  CHECK(differ);
}

TEST_CASE("signature mismatches") {
  const FiniteBAO df = reduct(abstract(full_unit(2, 2), Signature::tea()), Signature::df());
  CHECK_THROWS_AS(check_class(df, AxiomSystem::PTA), SignatureError);
  CHECK_THROWS_AS(parse_axiom_system("CA"), FormatError);
  CHECK(required_signature(AxiomSystem::PTA) == Signature::pta());
  CHECK(required_signature(AxiomSystem::TEA) == Signature::tea());
}

TEST_CASE("soatom and lesa consequences") {
  for (int n = 2; n <= 3; ++n) {
    const FiniteBAO a = abstract(full_unit(n, 2), Signature::tea());
    CHECK(soatom_report(a).empty());
    CHECK(lesa_report(a).empty());
  }
  FiniteBAO broken = abstract(full_unit(2, 2), Signature::tea());
  broken.c[0][0] |= Element::atom(3);
  CHECK_FALSE(soatom_report(broken).empty());
}
