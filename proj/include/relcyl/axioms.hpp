#pragma once

#include <string>
#include <vector>

#include "relcyl/terms.hpp"

namespace relcyl {

enum class AxiomSystem { PTA, TA, SA, TEA };

std::string to_string(AxiomSystem s);
AxiomSystem parse_axiom_system(const std::string& name);  // FormatError on unknown names

// Operators the system's terms use.
Signature required_signature(AxiomSystem s);

struct AxiomInstance {
  std::string label;        // schema label, e.g. "C4*", "Fe6", "MGR"
  std::vector<int> indices;  // instantiated indices in schema order
  Equation equation;
};

struct AxiomOptions {
  bool s7_alt = false;  // S7 read as s^j_k s^i_k x = s^i_k s^j_k x
  int jobs = 1;
};

// Ground instances in schema order, then lexicographic index order.
// In PTA, s^i_j is written out as c_i(d_ij . x).
std::vector<AxiomInstance> axiom_instances(AxiomSystem s, int n, const AxiomOptions& opt = {});

struct Violation {
  std::string label;
  std::vector<int> indices;
  std::string equation;
  Assignment assignment;
  Element lhs;
  Element rhs;
};

using ViolationReport = std::vector<Violation>;

// Checks every instance (each in Auto mode). All failures are reported, in
// instance order. Throws SignatureError when the algebra lacks an operator.
ViolationReport check_class(const FiniteBAO& a, AxiomSystem s, const AxiomOptions& opt = {});

// Lemma-level consequences on atoms/elements of a PTA-style algebra (needs c, d):
// (i) t^i_j x <= d_ij; (ii) x <= d_ij implies t^k_i x <= d_ij d_ik d_jk;
// (iii) a <= c_i b iff c_i a = c_i b for atoms; (iv) c_i t^i_j x = c_i x.
// Each failure is one line naming the property and the witness.
std::vector<std::string> soatom_report(const FiniteBAO& a);

// Atoms a <= d_ij must satisfy s_ij a = a (needs swap and d).
std::vector<std::string> lesa_report(const FiniteBAO& a);

}  // namespace relcyl
