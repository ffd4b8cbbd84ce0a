#include "relcyl/terms.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "relcyl/error.hpp"

namespace relcyl {

namespace term {
namespace {
TermPtr make(Term::Kind k, int i = 0, int j = 0, TermPtr a = nullptr, TermPtr b = nullptr) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->i = i;
  t->j = j;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}
}  // namespace

TermPtr var(int k) { return make(Term::Kind::Var, k); }
TermPtr zero() { return make(Term::Kind::Zero); }
TermPtr one() { return make(Term::Kind::One); }
TermPtr d(int i, int j) { return make(Term::Kind::Diag, i, j); }
TermPtr neg(TermPtr t) { return make(Term::Kind::Neg, 0, 0, std::move(t)); }
TermPtr c(int i, TermPtr t) { return make(Term::Kind::Cyl, i, 0, std::move(t)); }
TermPtr s(int i, int j, TermPtr t) { return make(Term::Kind::Sub, i, j, std::move(t)); }
TermPtr swap(int i, int j, TermPtr t) { return make(Term::Kind::Swap, i, j, std::move(t)); }
TermPtr join(TermPtr l, TermPtr r) { return make(Term::Kind::Join, 0, 0, std::move(l), std::move(r)); }
TermPtr meet(TermPtr l, TermPtr r) { return make(Term::Kind::Meet, 0, 0, std::move(l), std::move(r)); }
}  // namespace term

bool equal(const Term& l, const Term& r) {
  if (l.kind != r.kind || l.i != r.i || l.j != r.j) return false;
  if (static_cast<bool>(l.a) != static_cast<bool>(r.a)) return false;
  if (static_cast<bool>(l.b) != static_cast<bool>(r.b)) return false;
  if (l.a && !equal(*l.a, *r.a)) return false;
  if (l.b && !equal(*l.b, *r.b)) return false;
  return true;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, int n) : s_(text), n_(n) {}

  TermPtr whole() {
    TermPtr t = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

  TermPtr sum() {
    TermPtr t = product();
    while (peek() == '+') {
      ++pos_;
      t = term::join(t, product());
    }
    return t;
  }

  std::size_t pos() const { return pos_; }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

 private:
  TermPtr product() {
    TermPtr t = unary();
    while (peek() == '*') {
      ++pos_;
      t = term::meet(t, unary());
    }
    return t;
  }

  TermPtr unary() {
    const char ch = peek();
    switch (ch) {
      case '-':
        ++pos_;
        return term::neg(unary());
      case 'c': {
        ++pos_;
        const int i = index();
        return term::c(i, unary());
      }
      case 's': {
        ++pos_;
        const int i = index();
        const char sep = peek();
        if (sep != '/' && sep != ',') fail("expected '/' or ',' after s" + std::to_string(i));
        ++pos_;
        const int j = index();
        return sep == '/' ? term::s(i, j, unary()) : term::swap(i, j, unary());
      }
      default:
        return primary();
    }
  }

  TermPtr primary() {
    const char ch = peek();
    if (ch == '(') {
      ++pos_;
      TermPtr t = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    if (ch == '0') {
      ++pos_;
      return term::zero();
    }
    if (ch == '1') {
      ++pos_;
      return term::one();
    }
    if (ch == 'x') {
      ++pos_;
      return term::var(number());
    }
    if (ch == 'd') {
      ++pos_;
      const int i = index();
      const int j = index();
      return term::d(i, j);
    }
    if (ch == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  // Operator indices are single digits so that "d01" reads as d_{0,1}.
  int index() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected an index digit");
    }
    const int i = s_[pos_++] - '0';
    if (i >= n_) throw IndexError("index " + std::to_string(i) + " ≥ dimension " + std::to_string(n_));
    return i;
  }

  int number() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected a variable number");
    }
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) fail("variable number too large");
    }
    return static_cast<int>(v);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;
};

void print(std::ostream& os, const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var: os << 'x' << t.i; return;
    case Term::Kind::Zero: os << '0'; return;
    case Term::Kind::One: os << '1'; return;
    case Term::Kind::Diag: os << 'd' << t.i << t.j; return;
    case Term::Kind::Neg: os << '-'; print(os, *t.a); return;
    case Term::Kind::Cyl: os << 'c' << t.i << ' '; print(os, *t.a); return;
    case Term::Kind::Sub: os << 's' << t.i << '/' << t.j << ' '; print(os, *t.a); return;
    case Term::Kind::Swap: os << 's' << t.i << ',' << t.j << ' '; print(os, *t.a); return;
    case Term::Kind::Join:
    case Term::Kind::Meet:
      os << '(';
      print(os, *t.a);
      os << (t.kind == Term::Kind::Join ? " + " : " * ");
      print(os, *t.b);
      os << ')';
      return;
  }
}

void collect(const Term& t, std::set<int>& out) {
  if (t.kind == Term::Kind::Var) out.insert(t.i);
  if (t.a) collect(*t.a, out);
  if (t.b) collect(*t.b, out);
}

// Preserves binary joins in `v` (not necessarily 0).
bool additive_in(const Term& t, int v) {
  if (!mentions(t, v)) return true;
  switch (t.kind) {
    case Term::Kind::Var: return true;
    case Term::Kind::Cyl:
    case Term::Kind::Sub:
    case Term::Kind::Swap: return additive_in(*t.a, v);
    case Term::Kind::Join: return additive_in(*t.a, v) && additive_in(*t.b, v);
    case Term::Kind::Meet:
      return (!mentions(*t.a, v) && additive_in(*t.b, v)) ||
             (!mentions(*t.b, v) && additive_in(*t.a, v));
    default: return false;  // Neg of a term mentioning v
  }
}

bool monotone_in(const Term& t, int v) {
  if (!mentions(t, v)) return true;
  switch (t.kind) {
    case Term::Kind::Var: return true;
    case Term::Kind::Cyl:
    case Term::Kind::Sub:
    case Term::Kind::Swap: return monotone_in(*t.a, v);
    case Term::Kind::Join:
    case Term::Kind::Meet: return monotone_in(*t.a, v) && monotone_in(*t.b, v);
    default: return false;
  }
}

}  // namespace

TermPtr parse_term(const std::string& text, int n) { return Parser(text, n).whole(); }

std::string to_string(const Term& t) {
  std::ostringstream os;
  print(os, t);
  return os.str();
}

std::set<int> variables(const Term& t) {
  std::set<int> out;
  collect(t, out);
  return out;
}

bool mentions(const Term& t, int var) {
  if (t.kind == Term::Kind::Var) return t.i == var;
  return (t.a && mentions(*t.a, var)) || (t.b && mentions(*t.b, var));
}

Element eval_term(const FiniteBAO& a, const Term& t, const Assignment& env) {
  switch (t.kind) {
    case Term::Kind::Var: {
      auto it = env.find(t.i);
      if (it == env.end()) throw FormatError("no binding for variable x" + std::to_string(t.i));
      return it->second;
    }
    case Term::Kind::Zero: return Element{};
    case Term::Kind::One: return a.top();
    case Term::Kind::Diag: return diag(a, t.i, t.j);
    case Term::Kind::Neg: return a.neg(eval_term(a, *t.a, env));
    case Term::Kind::Cyl: return cyl(a, t.i, eval_term(a, *t.a, env));
    case Term::Kind::Sub: return sub(a, t.i, t.j, eval_term(a, *t.a, env));
    case Term::Kind::Swap: return swap(a, t.i, t.j, eval_term(a, *t.a, env));
    case Term::Kind::Join: return eval_term(a, *t.a, env) | eval_term(a, *t.b, env);
    case Term::Kind::Meet: return eval_term(a, *t.a, env) & eval_term(a, *t.b, env);
  }
  return {};
}

Equation parse_equation(const std::string& text, int n) {
  std::size_t at = text.find("<=");
  std::size_t width = 2;
  Equation::Kind kind = Equation::Kind::Leq;
  if (at == std::string::npos) {
    at = text.find('=');
    width = 1;
    kind = Equation::Kind::Eq;
  }
  if (at == std::string::npos) throw FormatError("equation needs '=' or '<='");
  Equation e;
  e.kind = kind;
  e.lhs = parse_term(text.substr(0, at), n);
  e.rhs = parse_term(text.substr(at + width), n);
  return e;
}

std::string to_string(const Equation& e) {
  return to_string(*e.lhs) + (e.kind == Equation::Kind::Eq ? " = " : " <= ") + to_string(*e.rhs);
}

bool atoms_mode_sound(const Equation& e) {
  std::set<int> vars = variables(*e.lhs);
  for (int v : variables(*e.rhs)) vars.insert(v);
  for (int v : vars) {
    if (!additive_in(*e.lhs, v)) return false;
    if (e.kind == Equation::Kind::Eq ? !additive_in(*e.rhs, v) : !monotone_in(*e.rhs, v)) return false;
  }
  return true;
}

CheckResult check_equation(const FiniteBAO& a, const Equation& e, CheckMode mode) {
  std::set<int> var_set = variables(*e.lhs);
  for (int v : variables(*e.rhs)) var_set.insert(v);
  const std::vector<int> vars(var_set.begin(), var_set.end());

  bool atoms = false;
  if (mode == CheckMode::Atoms) {
    if (!atoms_mode_sound(e)) {
      throw PreconditionError("atoms mode does not decide " + to_string(e));
    }
    atoms = true;
  } else if (mode == CheckMode::Auto) {
    atoms = atoms_mode_sound(e);
  }

  // Candidate values per variable, ascending by bitmask.
  std::vector<Element> values;
  if (atoms) {
    values.push_back(Element{});
    for (int at = 0; at < a.num_atoms; ++at) values.push_back(Element::atom(at));
  } else {
    if (a.num_atoms >= 63) throw BudgetError("too many atoms for exhaustive element enumeration");
    const std::uint64_t count = std::uint64_t{1} << a.num_atoms;
    if (count > limits().max_assignments) {
      throw BudgetError("2^" + std::to_string(a.num_atoms) + " elements exceed the assignment budget");
    }
    values.reserve(count);
    for (std::uint64_t b = 0; b < count; ++b) values.emplace_back(b);
  }

  std::uint64_t total = 1;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (total > limits().max_assignments / values.size()) {
      throw BudgetError(to_string(e) + ": " + std::to_string(values.size()) + "^" +
                        std::to_string(vars.size()) + " assignments exceed the budget of " +
                        std::to_string(limits().max_assignments));
    }
    total *= values.size();
  }

  CheckResult res;
  std::vector<std::size_t> digit(vars.size(), 0);
  Assignment env;
  for (std::uint64_t step = 0; step < total; ++step) {
    for (std::size_t k = 0; k < vars.size(); ++k) env[vars[k]] = values[digit[k]];
    const Element l = eval_term(a, *e.lhs, env);
    const Element r = eval_term(a, *e.rhs, env);
    ++res.assignments;
    const bool ok = e.kind == Equation::Kind::Eq ? l == r : l.leq(r);
    if (!ok) {
      res.holds = false;
      res.counterexample = env;
      res.lhs = l;
      res.rhs = r;
      return res;
    }
    // Odometer with the last variable varying fastest.
    for (std::size_t k = vars.size(); k-- > 0;) {
      if (++digit[k] < values.size()) break;
      digit[k] = 0;
    }
  }
  return res;
}

Element apply_word(const FiniteBAO& a, const SubstWord& w, Element x) {
  for (const auto& g : w) {
    x = g.kind == Generator::Kind::Sub ? sub(a, g.i, g.j, x) : swap(a, g.i, g.j, x);
  }
  return x;
}

Element s_tau(const FiniteBAO& a, const Transformation& t, Element x) {
  if (t.size() != a.dim) throw IndexError("transformation size differs from the dimension");
  return apply_word(a, decompose(t), x);
}

}  // namespace relcyl

namespace relcyl {

Element t_op(const FiniteBAO& a, int i, int j, Element x) {
  if (i < 0 || j < 0 || i >= a.dim || j >= a.dim) {
    throw IndexError("index " + std::to_string(std::max(i, j)) + " ≥ dimension " + std::to_string(a.dim));
  }
  if (i == j) return x;
  return diag(a, i, j) & cyl(a, i, x);
}

Element apply_t_word(const FiniteBAO& a, const SubstWord& w, Element x) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->kind != Generator::Kind::Sub) throw PreconditionError("t-words contain elementary substitutions only");
    x = t_op(a, it->i, it->j, x);
  }
  return x;
}

}  // namespace relcyl
