#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "relcyl/bao.hpp"
#include "relcyl/error.hpp"
#include "relcyl/setalg.hpp"

using namespace relcyl;

namespace {

bool mentions(const std::vector<std::string>& report, const std::string& what) {
  for (const auto& r : report)
    if (r.find(what) != std::string::npos) return true;
  return false;
}

const oracle::Tuples kSquare = oracle::power(2, 2);  // (0,0) (0,1) (1,0) (1,1)

Element at(const Tuple& y) { return Element::atom(oracle::index_of(kSquare, y)); }

}  // namespace

TEST_CASE("eval_op on the full square") {
  const FiniteBAO a = abstract(full_unit(2, 2), Signature::tea());
  CHECK(eval_op(a, OpKind::Cyl, 0, 0, at({0, 1})) == (at({0, 1}) | at({1, 1})));
  CHECK(eval_op(a, OpKind::Swap, 0, 1, at({0, 1})) == at({1, 0}));
  for (int i = 0; i < 2; ++i) CHECK(cyl(a, i, Element{}).empty());
  CHECK(sub(a, 0, 1, diag(a, 0, 1)) == a.top());
  CHECK(sub(a, 1, 0, diag(a, 1, 0)) == a.top());
  CHECK(eval_op(a, OpKind::Neg, 0, 0, at({0, 0})) == (a.top().minus(at({0, 0}))));
  CHECK(eval_op(a, OpKind::One, 0, 0, {}) == a.top());
  CHECK(eval_op(a, OpKind::Zero, 0, 0, a.top()).empty());
  CHECK_THROWS_AS(cyl(a, 2, a.top()), IndexError);
}

TEST_CASE("eval_op agrees with the tuple oracle on every element") {
  const FiniteBAO a = abstract(full_unit(2, 2), Signature::tea());
  for (std::uint64_t b = 0; b < 16; ++b) {
    const Element x(b);
    for (int i = 0; i < 2; ++i) {
      CHECK(cyl(a, i, x) == oracle::cyl(kSquare, 2, i, x));
      for (int j = 0; j < 2; ++j) {
        CHECK(sub(a, i, j, x) == oracle::preimage(kSquare, x, [&](const Tuple& y) { return oracle::subst(y, i, j); }));
        CHECK(swap(a, i, j, x) == oracle::preimage(kSquare, x, [&](const Tuple& y) { return oracle::transpose(y, i, j); }));
      }
    }
  }
}

TEST_CASE("validate_bao") {
  const FiniteBAO good = abstract(full_unit(2, 2), Signature::tea());
  CHECK(validate_bao(good).empty());

  FiniteBAO inv = good;
  inv.swap_dual[0][1] = {0, 2, 3, 1};
  inv.swap_dual[1][0] = {0, 2, 3, 1};
  CHECK(mentions(validate_bao(inv), "swap_dual involution"));

  FiniteBAO inc = good;
  inc.c[0][0] = inc.c[0][0].minus(Element::atom(0));
  CHECK(mentions(validate_bao(inc), "c_0 increasing"));

  FiniteBAO sym = good;
  sym.c[0][0] |= Element::atom(1);
  CHECK(mentions(validate_bao(sym), "c_0 symmetric"));

  FiniteBAO id = good;
  id.sub_dual[1][1] = {1, 0, 2, 3};
  CHECK(mentions(validate_bao(id), "sub_dual identity"));

  FiniteBAO dd = good;
  dd.d[0][0] = Element::atom(0);
  CHECK(mentions(validate_bao(dd), "d_ii full"));
}

TEST_CASE("reduct") {
  const FiniteBAO tea = abstract(full_unit(2, 2), Signature::tea());
  const FiniteBAO pt = reduct(tea, Signature::pt());
  CHECK(pt.sig == Signature::pt());
  CHECK(pt.c == tea.c);
  CHECK(pt.sub_dual == tea.sub_dual);
  CHECK(pt.d == tea.d);
  CHECK(pt.swap_dual.empty());
  CHECK(reduct(tea, Signature::tea()) == tea);

  const FiniteBAO df = reduct(tea, Signature::df());
  CHECK_THROWS_AS(diag(df, 0, 1), SignatureError);
  CHECK_THROWS_AS(reduct(df, Signature::pta()), SignatureError);
}

TEST_CASE("define_diagonals recovers D_01") {
  const FiniteBAO full = abstract(full_unit(2, 2), Signature::tea());
  const FiniteBAO df = reduct(full, Signature::ta());
  const FiniteBAO back = define_diagonals(df);
  CHECK(back.d[0][1] == (at({0, 0}) | at({1, 1})));
  CHECK(back.d[0][1] == oracle::diag(kSquare, 0, 1));
  CHECK(back.d[0][0] == back.top());
  CHECK(back.d[1][1] == back.top());

  const FiniteBAO triv = define_diagonals(trivial_algebra(3, Signature::ta()));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(triv.d[i][j] == triv.top());
}

TEST_CASE("canonical_extension is the identity on finite algebras") {
  const FiniteBAO a = abstract(full_unit(2, 2), Signature::tea());
  CHECK(canonical_extension(a) == a);
  const FiniteBAO t = trivial_algebra(2, Signature::tea());
  CHECK(canonical_extension(t) == t);
  CHECK(validate_bao(canonical_extension(a)).empty());
}

TEST_CASE("trivial algebra") {
  const FiniteBAO t = trivial_algebra(3, Signature::tea());
  CHECK(t.num_atoms == 1);
  CHECK(validate_bao(t).empty());
  CHECK(cyl(t, 2, t.top()) == t.top());
  CHECK(sub(t, 0, 2, t.top()) == t.top());
  CHECK(diag(t, 0, 1) == t.top());
}

TEST_CASE("shape limits") {
  CHECK_THROWS_AS(check_shape(1, 4), FormatError);
  CHECK_THROWS_AS(check_shape(2, 0), FormatError);
  CHECK_THROWS_AS(check_shape(limits().max_dim + 1, 1), FormatError);
  CHECK_NOTHROW(check_shape(2, 4));
}
