#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "relcyl/error.hpp"
#include "relcyl/networks.hpp"
#include "relcyl/setalg.hpp"
#include "relcyl/terms.hpp"

using namespace relcyl;

namespace {

bool mentions(const std::vector<std::string>& report, const std::string& what) {
  return std::any_of(report.begin(), report.end(), [&](const auto& r) { return r.find(what) != std::string::npos; });
}

// Nodes patterned on the atom's tuple: x_k is the first position holding a_k's value.
Tuple pattern(const Tuple& a) {
  Tuple x(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) x[k] = static_cast<int>(std::find(a.begin(), a.end(), a[k]) - a.begin());
  return x;
}

// In a full set algebra node m stands for the value a[m]; the true label of y
// is the atom of k -> a[y_k].
Element meaning(const oracle::Tuples& v, const Tuple& a, const Tuple& y) {
  Tuple t(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) t[k] = a[y[k]];
  return Element::atom(oracle::index_of(v, t));
}

}  // namespace

TEST_CASE("build_PT on the square") {
  const FiniteBAO a = abstract(full_unit(2, 2), Signature::pta());
  const oracle::Tuples v = oracle::power(2, 2);
  const Network n = build_PT(a, Element::atom(1), {0, 1});
  std::vector<Tuple> dom;
  for (const auto& [t, l] : n.labels) dom.push_back(t);
  CHECK(dom == std::vector<Tuple>{{0, 0}, {1, 1}});
  CHECK(n.labels.at({0, 0}) == Element::atom(oracle::index_of(v, {0, 0})));
  CHECK(n.labels.at({1, 1}) == Element::atom(oracle::index_of(v, {1, 1})));
  CHECK(check_network(a, n, NetworkMode::PTA).empty());
  CHECK_THROWS_AS(build_PT(a, Element::atom(0), {0, 1}), PreconditionError);
}

TEST_CASE("constructors agree with the set semantics and pass check_network") {
  for (int n = 2; n <= 3; ++n) {
    const FiniteBAO a = abstract(full_unit(n, 2), Signature::tea());
    const oracle::Tuples v = oracle::power(n, 2);
    for (int at = 0; at < a.num_atoms; ++at) {
      const Tuple x = pattern(v[at]);
      CHECK(matches_diagonals(a, Element::atom(at), x));
      const Network pt = build_PT(a, Element::atom(at), x);
      const Network t = build_T(a, Element::atom(at), x);
      CHECK(check_network(a, pt, NetworkMode::PTA).empty());
      CHECK(check_network(a, t, NetworkMode::TEA).empty());
      CHECK(pt.labels.size() == non_surjective_tuples(x).size());
      CHECK(t.labels.size() == all_tuples_over(x).size());
      for (const auto& [y, l] : pt.labels) CHECK(l == meaning(v, v[at], y));
      for (const auto& [y, l] : t.labels) {
        CHECK(l == meaning(v, v[at], y));
        CHECK(l.is_atom());
      }
    }
  }
}

TEST_CASE("build_T transposition structure") {
  const FiniteBAO a = abstract(full_unit(2, 2), Signature::tea());
  const Element at = Element::atom(1);  // (0,1), not below d_01
  const Network t = build_T(a, at, {0, 1});
  CHECK(t.labels.at({1, 0}) == swap(a, 0, 1, t.labels.at({0, 1})));
  CHECK(t.labels.at({1, 0}) == swap(a, 0, 1, at));
  for (const auto& [y, l] : t.labels) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Tuple z = y;
        std::swap(z[i], z[j]);
        if (z == y) CHECK(l == swap(a, i, j, l));
      }
  }
  const Network single = build_T(a, Element::atom(0), {0, 0});
  CHECK(single.nodes == std::set<int>{0});
  CHECK(single.labels.size() == 1);
  CHECK(single.labels.at({0, 0}) == Element::atom(0));
}

TEST_CASE("check_network names the violated condition") {
  const FiniteBAO a = abstract(full_unit(2, 2), Signature::tea());
  Network bad_a;
  bad_a.nodes = {0};
  bad_a.labels[{0, 0}] = Element::atom(1);
  CHECK(mentions(check_network(a, bad_a, NetworkMode::PTA), "(a):"));

  Network bad_c = build_T(a, Element::atom(1), {0, 1});
  bad_c.labels[{1, 0}] = Element::atom(1);
  CHECK(mentions(check_network(a, bad_c, NetworkMode::TEA), "(c):"));

  Network bad_b;
  bad_b.nodes = {0, 1};
  bad_b.labels[{0, 1}] = Element::atom(1);
  bad_b.labels[{1, 1}] = Element::atom(0);  // (0,0) where (1,1) is forced
  bad_b.labels[{0, 0}] = Element::atom(0);
  CHECK(mentions(check_network(a, bad_b, NetworkMode::PTA), "(b):"));
}

TEST_CASE("tuple helpers") {
  CHECK(non_surjective_tuples({0, 1}) == std::vector<Tuple>{{0, 0}, {1, 1}});
  CHECK(all_tuples_over({4, 7}).size() == 4);
  CHECK(all_tuples_over({0, 1, 2}).size() == 27);
  CHECK(non_surjective_tuples({0, 1, 2}).size() == 21);
  const Tuple x{3, 5, 8};
  for (const auto& y : all_tuples_over(x)) CHECK(act(reaching_map(x, y), x) == y);
}
