#include "relcyl/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "relcyl/error.hpp"

namespace relcyl::io {
namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw FormatError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) bad(where, "integer out of range");
  return static_cast<int>(v);
}

const Json& as_array(const Json& j, const std::string& where, std::size_t size = SIZE_MAX) {
  if (!j.is_array()) bad(where, "expected an array");
  if (size != SIZE_MAX && j.size() != size) {
    bad(where, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
  }
  return j;
}

std::string at(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

Tuple tuple_from_json(const Json& j, const std::string& where) {
  Tuple t;
  for (std::size_t k = 0; k < as_array(j, where).size(); ++k) t.push_back(as_int(j[k], at(where, k)));
  return t;
}

Json pairs_to_json(const Relation& r) {
  Json out = Json::array();
  for (const auto& [s, t] : r) out.push_back(Json::array({s, t}));
  return out;
}

Relation pairs_from_json(const Json& j, const std::string& where) {
  Relation r;
  for (std::size_t k = 0; k < as_array(j, where).size(); ++k) {
    const Json& p = as_array(j[k], at(where, k), 2);
    r.emplace_back(as_int(p[0], at(where, k) + "[0]"), as_int(p[1], at(where, k) + "[1]"));
  }
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

const char* kind_name(Move::Kind k) {
  switch (k) {
    case Move::Kind::Place: return "place";
    case Move::Kind::Split: return "split";
    case Move::Kind::Witness: return "witness";
  }
  return "?";
}

}  // namespace

Json to_json(Element e) { return Json(e.atoms()); }

Element element_from_json(const Json& j, int num_atoms, const std::string& where) {
  Element e;
  for (std::size_t k = 0; k < as_array(j, where).size(); ++k) {
    const int a = as_int(j[k], at(where, k));
    if (a < 0 || a >= num_atoms) bad(at(where, k), "atom " + std::to_string(a) + " outside 0.." + std::to_string(num_atoms - 1));
    e |= Element::atom(a);
  }
  return e;
}

Json to_json(const Signature& s) {
  Json j;
  j["c"] = s.has_c;
  j["sub"] = s.has_sub;
  j["swap"] = s.has_swap;
  j["d"] = s.has_d;
  return j;
}

Signature signature_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "PTA") return Signature::pta();
    if (name == "TA") return Signature::ta();
    if (name == "SA") return Signature::sa();
    if (name == "TEA") return Signature::tea();
    if (name == "PT") return Signature::pt();
    if (name == "DF") return Signature::df();
    bad("signature", "unknown signature \"" + name + "\"");
  }
  Signature s;
  for (const char* key : {"c", "sub", "swap", "d"}) {
    const Json& v = field(j, key, "signature");
    if (!v.is_boolean()) bad(std::string("signature.") + key, "expected a boolean");
  }
  if (!j["c"].get<bool>()) bad("signature.c", "cylindrifications are always present");
  s.has_sub = j["sub"].get<bool>();
  s.has_swap = j["swap"].get<bool>();
  s.has_d = j["d"].get<bool>();
  return s;
}

Json to_json(const FiniteBAO& a) {
  Json j;
  j["dimension"] = a.dim;
  j["atoms"] = a.num_atoms;
  j["signature"] = to_json(a.sig);
  Json c = Json::array();
  for (const auto& row : a.c) {
    Json r = Json::array();
    for (Element e : row) r.push_back(to_json(e));
    c.push_back(r);
  }
  j["c"] = c;
  j["sub_dual"] = a.sig.has_sub ? Json(a.sub_dual) : Json(nullptr);
  j["swap_dual"] = a.sig.has_swap ? Json(a.swap_dual) : Json(nullptr);
  if (a.sig.has_d) {
    Json d = Json::array();
    for (const auto& row : a.d) {
      Json r = Json::array();
      for (Element e : row) r.push_back(to_json(e));
      d.push_back(r);
    }
    j["d"] = d;
  } else {
    j["d"] = nullptr;
  }
  return j;
}

FiniteBAO algebra_from_json(const Json& j) {
  FiniteBAO a;
  a.dim = as_int(field(j, "dimension", "algebra"), "dimension");
  a.num_atoms = as_int(field(j, "atoms", "algebra"), "atoms");
  check_shape(a.dim, a.num_atoms);
  a.sig = signature_from_json(field(j, "signature", "algebra"));
  const auto n = static_cast<std::size_t>(a.dim);
  const auto k = static_cast<std::size_t>(a.num_atoms);

  const Json& c = as_array(field(j, "c", "algebra"), "c", n);
  a.c.assign(n, std::vector<Element>(k));
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = as_array(c[i], at("c", i), k);
    for (std::size_t t = 0; t < k; ++t) a.c[i][t] = element_from_json(row[t], a.num_atoms, at(at("c", i), t));
  }
  auto duals = [&](const char* key, bool present) {
    std::vector<std::vector<std::vector<int>>> out;
    const Json& v = j.contains(key) ? j[key] : Json(nullptr);
    if (!present) {
      if (!v.is_null()) bad(key, "present but the signature does not include it");
      return out;
    }
    const Json& grid = as_array(v, key, n);
    out.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(k)));
    for (std::size_t i = 0; i < n; ++i) {
      const Json& row = as_array(grid[i], at(key, i), n);
      for (std::size_t jj = 0; jj < n; ++jj) {
        const std::string w = at(at(key, i), jj);
        const Json& map = as_array(row[jj], w, k);
        for (std::size_t t = 0; t < k; ++t) {
          const int v2 = as_int(map[t], at(w, t));
          // -1 marks a missing image; validate_bao reports it.
          if (v2 < -1 || v2 >= a.num_atoms) bad(at(w, t), "atom " + std::to_string(v2) + " out of range");
          out[i][jj][t] = v2;
        }
      }
    }
    return out;
  };
  a.sub_dual = duals("sub_dual", a.sig.has_sub);
  a.swap_dual = duals("swap_dual", a.sig.has_swap);
  const Json& d = j.contains("d") ? j["d"] : Json(nullptr);
  if (a.sig.has_d) {
    as_array(d, "d", n);
    a.d.assign(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const Json& row = as_array(d[i], at("d", i), n);
      for (std::size_t jj = 0; jj < n; ++jj) a.d[i][jj] = element_from_json(row[jj], a.num_atoms, at(at("d", i), jj));
    }
  } else if (!d.is_null()) {
    bad("d", "present but the signature does not include it");
  }
  return a;
}

Json to_json(const Unit& u) {
  Json j;
  j["dimension"] = u.dim;
  j["base"] = u.base;
  Json t = Json::array();
  for (const auto& y : u.tuples) t.push_back(y);
  j["tuples"] = t;
  return j;
}

Unit unit_from_json(const Json& j) {
  Unit u;
  u.dim = as_int(field(j, "dimension", "unit"), "dimension");
  u.base = as_int(field(j, "base", "unit"), "base");
  const Json& t = as_array(field(j, "tuples", "unit"), "tuples");
  for (std::size_t k = 0; k < t.size(); ++k) u.tuples.insert(tuple_from_json(t[k], at("tuples", k)));
  validate_unit(u);
  return u;
}

Json to_json(const Network& n) {
  Json j;
  j["nodes"] = Json(std::vector<int>(n.nodes.begin(), n.nodes.end()));
  Json edges = Json::array();
  for (const auto& [t, l] : n.labels) {
    Json e;
    e["tuple"] = t;
    e["label"] = to_json(l);
    edges.push_back(e);
  }
  j["edges"] = edges;
  return j;
}

Network network_from_json(const Json& j) {
  Network n;
  const Json& nodes = as_array(field(j, "nodes", "network"), "nodes");
  for (std::size_t k = 0; k < nodes.size(); ++k) n.nodes.insert(as_int(nodes[k], at("nodes", k)));
  const Json& edges = as_array(field(j, "edges", "network"), "edges");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string w = at("edges", k);
    Tuple t = tuple_from_json(field(edges[k], "tuple", w), w + ".tuple");
    const Element l = element_from_json(field(edges[k], "label", w), kAtomCeiling, w + ".label");
    if (!n.labels.emplace(std::move(t), l).second) bad(w, "duplicate edge");
  }
  return n;
}

Json to_json(const Move& m) {
  Json j;
  j["kind"] = kind_name(m.kind);
  switch (m.kind) {
    case Move::Kind::Place:
      j["a"] = to_json(m.a);
      break;
    case Move::Kind::Split:
      j["edge"] = m.edge;
      j["a"] = to_json(m.a);
      break;
    case Move::Kind::Witness:
      j["edge"] = m.edge;
      j["i"] = m.i;
      j["b"] = to_json(m.b);
      break;
  }
  return j;
}

Json to_json(const TranscriptEntry& e) {
  Json j;
  j["round"] = e.round;
  j["move"] = to_json(e.move);
  j["response"] = e.response;
  j["node_count"] = e.node_count;
  j["pending_obligations"] = e.pending_obligations;
  return j;
}

Json to_json(const Play& p) {
  Json j;
  j["mode"] = to_string(p.mode);
  j["outcome"] = to_string(p.outcome);
  j["budget_reason"] = p.budget_reason;
  j["rounds"] = p.rounds;
  j["pending"] = p.pending;
  Json t = Json::array();
  for (const auto& e : p.transcript) t.push_back(to_json(e));
  j["transcript"] = t;
  j["M"] = to_json(p.M);
  j["N"] = to_json(p.N);
  return j;
}

Json to_json(const Representation& r) {
  Json j;
  j["dimension"] = r.dim;
  j["atoms"] = r.num_atoms;
  Json e = Json::array();
  for (const auto& t : r.edges) e.push_back(t);
  j["edges"] = e;
  j["h_atoms"] = r.h_atoms;
  j["saturated"] = r.saturated;
  j["pending"] = r.pending;
  return j;
}

Representation representation_from_json(const Json& j) {
  Representation r;
  r.dim = as_int(field(j, "dimension", "representation"), "dimension");
  r.num_atoms = as_int(field(j, "atoms", "representation"), "atoms");
  check_shape(r.dim, r.num_atoms);
  const Json& e = as_array(field(j, "edges", "representation"), "edges");
  for (std::size_t k = 0; k < e.size(); ++k) {
    Tuple t = tuple_from_json(e[k], at("edges", k));
    if (static_cast<int>(t.size()) != r.dim) bad(at("edges", k), "tuple length differs from the dimension");
    r.edges.push_back(std::move(t));
  }
  if (!std::is_sorted(r.edges.begin(), r.edges.end()) ||
      std::adjacent_find(r.edges.begin(), r.edges.end()) != r.edges.end()) {
    bad("edges", "must be sorted and distinct");
  }
  const Json& h = as_array(field(j, "h_atoms", "representation"), "h_atoms", static_cast<std::size_t>(r.num_atoms));
  for (std::size_t a = 0; a < h.size(); ++a) {
    std::vector<int> idx;
    for (std::size_t k = 0; k < as_array(h[a], at("h_atoms", a)).size(); ++k) {
      const int v = as_int(h[a][k], at(at("h_atoms", a), k));
      if (v < 0 || v >= static_cast<int>(r.edges.size())) bad(at(at("h_atoms", a), k), "edge index out of range");
      idx.push_back(v);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    r.h_atoms.push_back(std::move(idx));
  }
  const Json& s = field(j, "saturated", "representation");
  if (!s.is_boolean()) bad("saturated", "expected a boolean");
  r.saturated = s.get<bool>();
  r.pending = as_int(field(j, "pending", "representation"), "pending");
  return r;
}

Json to_json(const VerifyReport& r) {
  Json j;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["image_size"] = r.image_size;
  j["all_pass"] = r.all_pass();
  return j;
}

Json to_json(const Frame& f) {
  Json j;
  j["dimension"] = f.dim;
  j["worlds"] = f.worlds;
  Json c = Json::array();
  for (const auto& r : f.C) c.push_back(pairs_to_json(r));
  j["C"] = c;
  auto grid = [](const std::vector<std::vector<Relation>>& g) {
    Json out = Json::array();
    for (const auto& row : g) {
      Json r = Json::array();
      for (const auto& rel : row) r.push_back(pairs_to_json(rel));
      out.push_back(r);
    }
    return out;
  };
  j["S_sub"] = f.has_sub ? grid(f.S_sub) : Json(nullptr);
  j["S_swap"] = f.has_swap ? grid(f.S_swap) : Json(nullptr);
  return j;
}

Frame frame_from_json(const Json& j) {
  Frame f;
  f.dim = j.contains("dimension") ? as_int(j["dimension"], "dimension") : 2;
  f.worlds = as_int(field(j, "worlds", "frame"), "worlds");
  const auto n = static_cast<std::size_t>(f.dim);
  if (f.dim < 2 || f.dim > limits().max_dim) bad("dimension", "out of range");
  const Json& c = as_array(field(j, "C", "frame"), "C", n);
  for (std::size_t i = 0; i < n; ++i) f.C.push_back(pairs_from_json(c[i], at("C", i)));
  auto grid = [&](const char* key, bool& present) {
    std::vector<std::vector<Relation>> out;
    present = j.contains(key) && !j[key].is_null();
    if (!present) return out;
    const Json& g = as_array(j[key], key, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Json& row = as_array(g[i], at(key, i), n);
      out.emplace_back();
      for (std::size_t jj = 0; jj < n; ++jj) out.back().push_back(pairs_from_json(row[jj], at(at(key, i), jj)));
    }
    return out;
  };
  f.S_sub = grid("S_sub", f.has_sub);
  f.S_swap = grid("S_swap", f.has_swap);
  validate_frame(f);
  return f;
}

Json to_json(const SubstWord& w) {
  Json j = Json::array();
  for (const auto& g : w) j.push_back(Json::array({g.kind == Generator::Kind::Sub ? "sub" : "swap", g.i, g.j}));
  return j;
}

SubstWord word_from_json(const Json& j) {
  SubstWord w;
  for (std::size_t k = 0; k < as_array(j, "word").size(); ++k) {
    const std::string where = at("word", k);
    const Json& g = as_array(j[k], where, 3);
    if (!g[0].is_string()) bad(where, "expected \"sub\" or \"swap\"");
    const std::string kind = g[0].get<std::string>();
    Generator gen;
    if (kind == "sub") {
      gen.kind = Generator::Kind::Sub;
    } else if (kind == "swap") {
      gen.kind = Generator::Kind::Swap;
    } else {
      bad(where, "expected \"sub\" or \"swap\"");
    }
    gen.i = as_int(g[1], where + "[1]");
    gen.j = as_int(g[2], where + "[2]");
    w.push_back(gen);
  }
  return w;
}

Json to_json(const Violation& v) {
  Json j;
  j["label"] = v.label;
  j["indices"] = v.indices;
  j["equation"] = v.equation;
  Json as = Json::object();
  for (const auto& [var, e] : v.assignment) as["x" + std::to_string(var)] = to_json(e);
  j["assignment"] = as;
  j["lhs"] = to_json(v.lhs);
  j["rhs"] = to_json(v.rhs);
  return j;
}

Json to_json(const ViolationReport& r) {
  Json j = Json::array();
  for (const auto& v : r) j.push_back(to_json(v));
  return j;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2, ' ', true) + "\n"; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << dump(j);
  if (!out) throw FormatError("write failed: " + path);
}

}  // namespace relcyl::io
