// relcyl: command-line front end. Exit codes: 0 success, 1 checked and
// failed (violations, unsaturated play, search not found), 2 usage or input
// format error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "relcyl/axioms.hpp"
#include "relcyl/bao.hpp"
#include "relcyl/duality.hpp"
#include "relcyl/error.hpp"
#include "relcyl/game.hpp"
#include "relcyl/io.hpp"
#include "relcyl/networks.hpp"
#include "relcyl/represent.hpp"
#include "relcyl/setalg.hpp"
#include "relcyl/terms.hpp"

using namespace relcyl;
using io::Json;

namespace {

struct Options {
  std::string algebra, unit, network, rep, problem, out, log;
  std::vector<std::string> frames;
  std::string cls = "PTA", mode = "PTA", strategy = "atomic-fast", signature = "PTA";
  std::string term, equation, word, map, carrier = "full";
  std::vector<std::string> vars;
  std::vector<int> tuple;
  std::vector<std::string> tuples;
  int max_rounds = 10000, max_nodes = 512, jobs = 1, dim = 2, base = 2, atom = 0, bound = 4;
  bool no_reuse = false, s7_alt = false;
};

// Result of one verb: the JSON document and the exit code it implies.
struct Outcome {
  Json doc;
  int code = 0;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw FormatError("not an integer list: " + s);
    }
  }
  return out;
}

FiniteBAO load_algebra(const Options& o) {
  if (o.algebra.empty()) throw FormatError("--algebra is required");
  return io::algebra_from_json(io::read_file(o.algebra));
}

Unit load_unit(const Options& o) {
  if (o.unit.empty()) throw FormatError("--unit is required");
  return io::unit_from_json(io::read_file(o.unit));
}

Json flags_json(const UnitFlags& f) {
  Json j;
  j["is_D"] = f.is_D;
  j["is_Dp"] = f.is_Dp;
  j["is_Dpe"] = f.is_Dpe;
  j["is_Ds"] = f.is_Ds;
  j["closed_under_finite_transformations"] = f.closed_under_finite_transformations;
  return j;
}

Outcome cmd_check(const Options& o) {
  const FiniteBAO a = load_algebra(o);
  const AxiomSystem sys = parse_axiom_system(o.cls);
  Json j;
  j["class"] = to_string(sys);
  const auto wf = validate_bao(a);
  j["well_formed"] = wf;
  AxiomOptions opt;
  opt.s7_alt = o.s7_alt;
  opt.jobs = o.jobs;
  const auto report = check_class(a, sys, opt);
  j["violations"] = io::to_json(report);
  return {j, wf.empty() && report.empty() ? 0 : 1};
}

Outcome cmd_represent(const Options& o) {
  const FiniteBAO a = load_algebra(o);
  GameConfig cfg;
  cfg.mode = parse_network_mode(o.mode);
  cfg.strategy = parse_strategy(o.strategy);
  cfg.max_rounds = o.max_rounds;
  cfg.max_nodes = o.max_nodes;
  cfg.reuse = !o.no_reuse;
  const AxiomSystem sys = cfg.mode == NetworkMode::PTA ? AxiomSystem::PTA : AxiomSystem::TEA;
  Json j;
  j["mode"] = to_string(cfg.mode);
  const auto wf = validate_bao(a);
  const auto report = wf.empty() ? check_class(a, sys) : ViolationReport{};
  if (!wf.empty() || !report.empty()) {
    j["refused"] = "algebra fails the " + to_string(sys) + " axioms";
    j["well_formed"] = wf;
    j["violations"] = io::to_json(report);
    return {j, 1};
  }
  const Play p = play(a, cfg);
  const Representation rep = extract(p);
  const VerifyReport vr = verify(a, rep, cfg.mode);
  const bool complete = check_complete(rep);
  const std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
  std::filesystem::create_directories(dir);
  io::write_file((dir / "transcript.json").string(), io::to_json(p));
  io::write_file((dir / "representation.json").string(), io::to_json(rep));
  j["outcome"] = to_string(p.outcome);
  j["budget_reason"] = p.budget_reason;
  j["rounds"] = p.rounds;
  j["nodes"] = p.M.nodes.size();
  j["edges"] = p.M.labels.size();
  j["pending"] = p.pending;
  j["verify"] = io::to_json(vr);
  j["complete"] = complete;
  const bool ok = p.outcome == Play::Outcome::Saturated && vr.all_pass() && complete;
  return {j, ok ? 0 : 1};
}

Outcome cmd_verify_rep(const Options& o) {
  const FiniteBAO a = load_algebra(o);
  if (o.rep.empty()) throw FormatError("--rep is required");
  const Representation rep = io::representation_from_json(io::read_file(o.rep));
  if (rep.num_atoms != a.num_atoms || rep.dim != a.dim) {
    throw FormatError("representation does not match the algebra's shape");
  }
  const VerifyReport vr = verify(a, rep, parse_network_mode(o.mode));
  Json j = io::to_json(vr);
  j["complete"] = check_complete(rep);
  return {j, vr.all_pass() && check_complete(rep) ? 0 : 1};
}

Outcome cmd_setalg_build(const Options& o) {
  Unit u;
  if (o.tuples.empty()) {
    u = full_unit(o.dim, o.base);
  } else {
    u.dim = o.dim;
    u.base = o.base;
    for (const auto& t : o.tuples) u.tuples.insert(parse_ints(t));
  }
  validate_unit(u);
  return {io::to_json(u), 0};
}

Outcome cmd_setalg_abstract(const Options& o) {
  const Unit u = load_unit(o);
  return {io::to_json(abstract(u, io::signature_from_json(Json(o.signature)))), 0};
}

Outcome cmd_setalg_classify(const Options& o) { return {flags_json(classify_unit(load_unit(o))), 0}; }

Outcome cmd_define_diagonals(const Options& o) { return {io::to_json(define_diagonals(load_algebra(o))), 0}; }

Outcome cmd_reduct(const Options& o) {
  return {io::to_json(reduct(load_algebra(o), io::signature_from_json(Json(o.signature)))), 0};
}

Assignment parse_vars(const Options& o, int num_atoms) {
  Assignment env;
  for (const auto& v : o.vars) {
    const auto eq = v.find('=');
    if (eq == std::string::npos) throw FormatError("--var expects k=a,b,...: " + v);
    const auto key = parse_ints(v.substr(0, eq));
    if (key.size() != 1 || key[0] < 0) throw FormatError("--var expects a variable number: " + v);
    Element e;
    for (int at : parse_ints(v.substr(eq + 1))) {
      if (at < 0 || at >= num_atoms) throw IndexError("atom " + std::to_string(at) + " out of range");
      e |= Element::atom(at);
    }
    env[key[0]] = e;
  }
  return env;
}

Outcome cmd_eval(const Options& o) {
  const FiniteBAO a = load_algebra(o);
  Json j;
  if (!o.equation.empty()) {
    const Equation e = parse_equation(o.equation, a.dim);
    const CheckResult r = check_equation(a, e, CheckMode::Auto);
    j["equation"] = to_string(e);
    j["holds"] = r.holds;
    j["assignments"] = r.assignments;
    if (!r.holds) {
      Json ce = Json::object();
      for (const auto& [k, v] : r.counterexample) ce["x" + std::to_string(k)] = io::to_json(v);
      j["counterexample"] = ce;
      j["lhs"] = io::to_json(r.lhs);
      j["rhs"] = io::to_json(r.rhs);
    }
    return {j, r.holds ? 0 : 1};
  }
  if (o.term.empty()) throw FormatError("eval needs --term or --equation");
  const TermPtr t = parse_term(o.term, a.dim);
  const Assignment env = parse_vars(o, a.num_atoms);
  for (int v : variables(*t)) {
    if (!env.count(v)) throw FormatError("no value for x" + std::to_string(v));
  }
  j["term"] = to_string(*t);
  j["value"] = io::to_json(eval_term(a, *t, env));
  return {j, 0};
}

Outcome cmd_word_hat(const Options& o) {
  if (o.word.empty()) throw FormatError("--word is required");
  const SubstWord w = io::word_from_json(Json::parse(o.word));
  Json j;
  j["word"] = io::to_json(w);
  j["map"] = hat(w, o.dim).map();
  return {j, 0};
}

Outcome cmd_word_decompose(const Options& o) {
  const Transformation t(parse_ints(o.map));
  Json j;
  j["map"] = t.map();
  const SubstWord w = decompose(t);
  j["word"] = io::to_json(w);
  j["check"] = hat(w, t.size()) == t;
  return {j, 0};
}

Outcome cmd_network_check(const Options& o) {
  const FiniteBAO a = load_algebra(o);
  if (o.network.empty()) throw FormatError("--network is required");
  const Network n = io::network_from_json(io::read_file(o.network));
  const auto problems = check_network(a, n, parse_network_mode(o.mode));
  Json j;
  j["problems"] = problems;
  return {j, problems.empty() ? 0 : 1};
}

Outcome cmd_network_build(const Options& o, bool pt) {
  const FiniteBAO a = load_algebra(o);
  if (o.atom < 0 || o.atom >= a.num_atoms) throw IndexError("atom " + std::to_string(o.atom) + " out of range");
  const Tuple x = o.tuple.empty() ? Tuple(a.dim, 0) : o.tuple;
  const Element at = Element::atom(o.atom);
  const Network n = pt ? build_PT(a, at, x) : build_T(a, at, x);
  return {io::to_json(n), 0};
}

Outcome cmd_complex(const Options& o) {
  if (o.frames.size() != 1) throw FormatError("complex needs exactly one --frame");
  const ComplexAlgebra ca = complex_algebra(io::frame_from_json(io::read_file(o.frames[0])));
  Json j;
  j["algebra"] = io::to_json(ca.algebra);
  j["report"] = ca.report;
  return {j, ca.report.empty() ? 0 : 1};
}

Outcome cmd_tuple_frame(const Options& o) { return {io::to_json(tuple_frame(load_unit(o))), 0}; }

Outcome cmd_zigzag(const Options& o) {
  if (o.frames.empty()) throw FormatError("zigzag needs at least one --frame");
  std::vector<Frame> frames;
  for (const auto& f : o.frames) frames.push_back(io::frame_from_json(io::read_file(f)));
  std::vector<std::vector<int>> carrier;
  if (o.carrier == "full") {
    carrier.push_back({});
    for (const auto& f : frames) {
      std::vector<std::vector<int>> next;
      for (const auto& prefix : carrier) {
        for (int w = 0; w < f.worlds; ++w) {
          next.push_back(prefix);
          next.back().push_back(w);
        }
      }
      carrier = std::move(next);
    }
  } else {
    const Json c = Json::parse(o.carrier);
    if (!c.is_array()) throw FormatError("--carrier expects \"full\" or a JSON array of world tuples");
    for (const auto& s : c) carrier.push_back(s.get<std::vector<int>>());
  }
  return {io::to_json(zigzag_product(frames, carrier)), 0};
}

Outcome cmd_amalgam(const Options& o) {
  if (o.problem.empty()) throw FormatError("--problem is required");
  const Json pj = io::read_file(o.problem);
  AmalgamProblem p;
  for (const char* key : {"A0", "A1", "A2", "i1", "i2"}) {
    if (!pj.contains(key)) throw FormatError(std::string("problem: missing key \"") + key + "\"");
  }
  p.A0 = io::algebra_from_json(pj["A0"]);
  p.A1 = io::algebra_from_json(pj["A1"]);
  p.A2 = io::algebra_from_json(pj["A2"]);
  p.i1 = pj["i1"].get<std::vector<int>>();
  p.i2 = pj["i2"].get<std::vector<int>>();
  const AmalgamSearch s = search_superamalgam(p, o.bound);
  Json j;
  j["found"] = s.found;
  j["candidates_tried"] = s.candidates_tried;
  if (s.result) {
    j["D"] = io::to_json(s.result->D);
    Json car = Json::array();
    for (const auto& [x, y] : s.result->carrier) car.push_back(Json::array({x, y}));
    j["carrier"] = car;
    j["certificate"] = s.result->certificate;
  }
  return {j, s.found ? 0 : 1};
}

void write_log(const Options& o, const std::string& verb, double ms, int code) {
  std::string path = o.log;
  if (path.empty() && verb == "represent") {
    path = ((o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out)) / "represent.log").string();
  }
  if (path.empty()) return;
  std::ofstream log(path, std::ios::app);
  log << "verb=" << verb << " exit=" << code << " elapsed_ms=" << ms << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relcyl: finite relativized cylindric algebras, networks and representation games"};
  app.require_subcommand(1);
  Options o;

  auto add_algebra = [&](CLI::App* c) { c->add_option("--algebra", o.algebra, "algebra JSON file"); };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "output file (represent: output directory)");
    c->add_option("--log", o.log, "sidecar log for timing");
    c->add_option("--jobs", o.jobs, "worker cap")->check(CLI::PositiveNumber);
  };

  std::string verb;
  std::function<Outcome()> run;
  auto reg = [&](CLI::App* c, const std::string& name, std::function<Outcome()> f) {
    add_common(c);
    c->callback([&verb, &run, name, f] {
      verb = name;
      run = f;
    });
  };

  auto* check = app.add_subcommand("check", "check an algebra against an axiom system");
  add_algebra(check);
  check->add_option("--class", o.cls, "PTA, TA, SA or TEA");
  check->add_flag("--s7-alt", o.s7_alt, "read S7 with the indices exchanged");
  reg(check, "check", [&] { return cmd_check(o); });

  auto* represent = app.add_subcommand("represent", "play the representation game and verify the result");
  add_algebra(represent);
  represent->add_option("--mode", o.mode, "PTA or TEA");
  represent->add_option("--strategy", o.strategy, "atomic-fast or faithful");
  represent->add_option("--max-rounds", o.max_rounds)->check(CLI::NonNegativeNumber);
  represent->add_option("--max-nodes", o.max_nodes)->check(CLI::NonNegativeNumber);
  represent->add_flag("--no-reuse", o.no_reuse, "always answer witness moves with a fresh node");
  reg(represent, "represent", [&] { return cmd_represent(o); });

  auto* verify_rep = app.add_subcommand("verify-rep", "verify a representation file");
  add_algebra(verify_rep);
  verify_rep->add_option("--rep", o.rep, "representation JSON file");
  verify_rep->add_option("--mode", o.mode, "PTA or TEA");
  reg(verify_rep, "verify-rep", [&] { return cmd_verify_rep(o); });

  auto* setalg = app.add_subcommand("setalg", "set algebras over explicit units");
  setalg->require_subcommand(1);
  auto* build = setalg->add_subcommand("build", "write a unit");
  build->add_option("--dim", o.dim);
  build->add_option("--base", o.base);
  build->add_option("--tuple", o.tuples, "comma-separated tuple, repeatable; default is the full power");
  reg(build, "setalg build", [&] { return cmd_setalg_build(o); });
  auto* abs = setalg->add_subcommand("abstract", "powerset algebra of a unit");
  abs->add_option("--unit", o.unit);
  abs->add_option("--signature", o.signature, "PTA, TA, SA, TEA, PT or DF");
  reg(abs, "setalg abstract", [&] { return cmd_setalg_abstract(o); });
  auto* classify = setalg->add_subcommand("classify", "closure flags of a unit");
  classify->add_option("--unit", o.unit);
  reg(classify, "setalg classify", [&] { return cmd_setalg_classify(o); });

  auto* dd = app.add_subcommand("define-diagonals", "add d_ij computed from substitutions");
  add_algebra(dd);
  reg(dd, "define-diagonals", [&] { return cmd_define_diagonals(o); });

  auto* red = app.add_subcommand("reduct", "drop operators");
  add_algebra(red);
  red->add_option("--signature", o.signature);
  reg(red, "reduct", [&] { return cmd_reduct(o); });

  auto* ev = app.add_subcommand("eval", "evaluate a term or check an equation");
  add_algebra(ev);
  ev->add_option("--term", o.term);
  ev->add_option("--equation", o.equation);
  ev->add_option("--var", o.vars, "k=a,b,... assigns atoms to x<k>, repeatable");
  reg(ev, "eval", [&] { return cmd_eval(o); });

  auto* word = app.add_subcommand("word", "substitution words");
  word->require_subcommand(1);
  auto* wh = word->add_subcommand("hat", "transformation induced by a word");
  wh->add_option("--word", o.word, "JSON, e.g. [[\"sub\",0,1]]");
  wh->add_option("--dim", o.dim);
  reg(wh, "word hat", [&] { return cmd_word_hat(o); });
  auto* wd = word->add_subcommand("decompose", "word for a transformation");
  wd->add_option("--map", o.map, "comma-separated images of 0..n-1")->required();
  reg(wd, "word decompose", [&] { return cmd_word_decompose(o); });

  auto* net = app.add_subcommand("network", "networks");
  net->require_subcommand(1);
  auto* nc = net->add_subcommand("check", "check a network file");
  add_algebra(nc);
  nc->add_option("--network", o.network);
  nc->add_option("--mode", o.mode);
  reg(nc, "network check", [&] { return cmd_network_check(o); });
  auto* npt = net->add_subcommand("pt", "build_PT for an atom");
  auto* nt = net->add_subcommand("t", "build_T for an atom");
  for (auto* c : {npt, nt}) {
    add_algebra(c);
    c->add_option("--atom", o.atom);
    c->add_option("--tuple", o.tuple, "node tuple")->delimiter(',');
  }
  reg(npt, "network pt", [&] { return cmd_network_build(o, true); });
  reg(nt, "network t", [&] { return cmd_network_build(o, false); });

  auto* cx = app.add_subcommand("complex", "complex algebra of a frame");
  cx->add_option("--frame", o.frames);
  reg(cx, "complex", [&] { return cmd_complex(o); });

  auto* tf = app.add_subcommand("tuple-frame", "frame of a transformation-closed unit");
  tf->add_option("--unit", o.unit);
  reg(tf, "tuple-frame", [&] { return cmd_tuple_frame(o); });

  auto* zz = app.add_subcommand("zigzag", "zigzag product of frames");
  zz->add_option("--frame", o.frames, "repeatable");
  zz->add_option("--carrier", o.carrier, "\"full\" or a JSON array of world tuples");
  reg(zz, "zigzag", [&] { return cmd_zigzag(o); });

  auto* am = app.add_subcommand("amalgam", "search for a superamalgam");
  am->add_option("--problem", o.problem, "JSON with A0, A1, A2, i1, i2");
  am->add_option("--bound", o.bound, "maximum atoms of D")->check(CLI::NonNegativeNumber);
  reg(am, "amalgam", [&] { return cmd_amalgam(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    Outcome r = run();
    code = r.code;
    if (!o.out.empty() && verb != "represent") {
      io::write_file(o.out, r.doc);
    } else {
      std::cout << io::dump(r.doc);
    }
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  } catch (const IndexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  } catch (const SignatureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    code = 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  write_log(o, verb, ms, code);
  return code;
}
