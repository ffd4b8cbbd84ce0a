#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "relcyl/axioms.hpp"
#include "relcyl/error.hpp"
#include "relcyl/setalg.hpp"

using namespace relcyl;

namespace {

TupleSet ts(std::initializer_list<Tuple> l) { return TupleSet(l); }

Unit to_unit(const oracle::Tuples& v, int n, int base) { return Unit{n, base, TupleSet(v.begin(), v.end())}; }

}  // namespace

TEST_CASE("set operations on the full square") {
  const Unit v = full_unit(2, 2);
  CHECK(set_cyl(v, 0, ts({{0, 1}})) == ts({{0, 1}, {1, 1}}));
  CHECK(set_diag(v, 0, 1) == ts({{0, 0}, {1, 1}}));
  const Unit odd{2, 2, {{0, 1}}};
  CHECK(set_sub(odd, 0, 1, odd.tuples).empty());
}

TEST_CASE("classify_unit") {
  const auto all = [](const UnitFlags& f) {
    return f.is_D && f.is_Dp && f.is_Dpe && f.is_Ds && f.closed_under_finite_transformations;
  };
  CHECK(all(classify_unit(full_unit(2, 2))));
  CHECK_FALSE(classify_unit(Unit{2, 2, {{0, 1}}}).is_D);
  CHECK(all(classify_unit(Unit{2, 2, {{0, 0}}})));
}

TEST_CASE("classification agrees with the closure oracle") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& v : oracle::units(n, 2)) {
      const UnitFlags f = classify_unit(to_unit(v, n, 2));
      CHECK(f.is_D == oracle::closed(v, n, false));
      CHECK(f.closed_under_finite_transformations == oracle::closed(v, n, true));
    }
  }
}

TEST_CASE("abstract matches the tuple semantics on every unit") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& v : oracle::units(n, 2)) {
      const Unit u = to_unit(v, n, 2);
      const bool subs = oracle::closed(v, n, false);
      const bool swaps = oracle::closed(v, n, true);
      const FiniteBAO a = abstract(u, swaps ? Signature::tea() : subs ? Signature::pt() : Signature::pta());
      CHECK(a.num_atoms == static_cast<int>(v.size()));
      for (int at = 0; at < a.num_atoms; ++at) {
        const Element x = Element::atom(at);
        for (int i = 0; i < n; ++i) {
          CHECK(cyl(a, i, x) == oracle::cyl(v, 2, i, x));
          for (int j = 0; j < n; ++j) {
            CHECK(diag(a, i, j) == oracle::diag(v, i, j));
            if (subs) {
              CHECK(sub(a, i, j, x) == oracle::preimage(v, x, [&](const Tuple& y) { return oracle::subst(y, i, j); }));
            }
            if (swaps) {
              CHECK(swap(a, i, j, x) ==
                    oracle::preimage(v, x, [&](const Tuple& y) { return oracle::transpose(y, i, j); }));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("abstract of a single constant tuple") {
  const FiniteBAO a = abstract(Unit{2, 2, {{0, 0}}}, Signature::tea());
  CHECK(a.num_atoms == 1);
  CHECK(cyl(a, 0, a.top()) == a.top());
  CHECK(swap(a, 0, 1, a.top()) == a.top());
  CHECK(diag(a, 0, 1) == a.top());
}

TEST_CASE("closure failures name the escaping tuple") {
  try {
    abstract(Unit{2, 2, {{0, 1}}}, Signature::tea());
    FAIL("expected a closure error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
  const auto y = escaping_tuple(Unit{2, 2, {{0, 1}, {1, 1}}}, Transformation::transposition(2, 0, 1));
  REQUIRE(y.has_value());
  CHECK(*y == Tuple{0, 1});
}

TEST_CASE("image reading differs from the preimage reading") {
  const Unit v = full_unit(2, 2);
  const Transformation t = Transformation::elementary(2, 0, 1);
  const TupleSet x = ts({{0, 1}});
  CHECK(set_transform(v, t, x).empty());
  CHECK(set_transform_image(v, t, x) == ts({{1, 1}}));
  const TupleSet z = ts({{0, 0}});
  CHECK(set_transform(v, t, z) == ts({{0, 0}, {1, 0}}));
  CHECK(set_transform_image(v, t, z) == ts({{0, 0}}));
}

TEST_CASE("element conversion round-trips") {
  const Unit v = full_unit(2, 2);
  for (std::uint64_t b = 0; b < 16; ++b) CHECK(to_element(v, to_tuples(v, Element(b))) == Element(b));
  CHECK(all_units(2, 2).size() == 15);
}

TEST_CASE("unit validation") {
  CHECK_THROWS(validate_unit(Unit{2, 2, {{0, 2}}}));
  CHECK_THROWS(validate_unit(Unit{2, 2, {{0, 1, 1}}}));
}
