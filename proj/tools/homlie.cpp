#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "homlie/dsl.hpp"
#include "homlie/parallel.hpp"
#include "json.hpp"
#include "oracle_criteria.hpp"

using namespace homlie;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string algebra = "w22q";
  std::string window = "-6..6";
  int delta = 2;
  std::string degrees = "-4..4";
  std::optional<int> degree;
  std::string cls;
  std::optional<int> parity;
  int k = 1;
  std::string map;
  std::string property;
  std::string specialize_q;
  std::string output = "text";
  std::string out;
  unsigned long seed = 1;

  // Resolved.
  Window w;
  int s_lo = -4, s_hi = 4;
  std::optional<Rational> q0;
};

std::pair<int, int> parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError(flag + " expects lo..hi, got '" + text + "'");
  try {
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const std::string rest = text.substr(dots + 2);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (lo > hi) throw UsageError(flag + " is empty: " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError(flag + " expects lo..hi, got '" + text + "'");
  }
}

void resolve(RunConfig& c) {
  const auto [lo, hi] = parse_range(c.window, "--window");
  c.w = {lo, hi};
  std::tie(c.s_lo, c.s_hi) = parse_range(c.degrees, "--degrees");
  if (c.degree) c.s_lo = c.s_hi = *c.degree;
  if (c.delta < 1) throw UsageError("--delta must be at least 1");
  if (c.parity && *c.parity != 0 && *c.parity != 1) throw UsageError("--parity must be 0 or 1");
  if (!c.specialize_q.empty()) {
    Rational q0;
    try {
      q0 = Rational(c.specialize_q);
    } catch (const std::invalid_argument&) {
      throw UsageError("--specialize-q expects a rational number, got '" + c.specialize_q + "'");
    }
    q0.canonicalize();
    if (q0 == 0 || q0 == 1 || q0 == -1) throw ForbiddenSpecialization(q0.get_str());
    c.q0 = q0;
  }
}

json config_json(const RunConfig& c) {
  json j;
  j["algebra"] = c.algebra;
  j["window"] = {c.w.lo, c.w.hi};
  j["delta"] = c.delta;
  j["degree_range"] = {c.s_lo, c.s_hi};
  if (!c.cls.empty()) j["class"] = c.cls;
  if (c.parity) j["parity"] = *c.parity;
  if (!c.map.empty()) j["map"] = c.map;
  if (!c.property.empty()) j["property"] = c.property;
  j["specialize_q"] = c.q0 ? json(c.q0->get_str()) : json(nullptr);
  j["seed"] = c.seed;
  return j;
}

std::string coefficient(const QRational& x, const RunConfig& c) {
  std::string s = x.to_string();
  if (c.q0) {
    try {
      s += " [q=" + c.q0->get_str() + ": " + specialize(x, *c.q0).get_str() + "]";
    } catch (const PoleAtPoint&) {
      s += " [q=" + c.q0->get_str() + ": pole]";
    }
  }
  return s;
}

json witnesses_json(const AlgebraPresentation& p, const CheckReport& r, std::size_t limit = 5) {
  json out = json::array();
  for (std::size_t i = 0; i < r.witnesses.size() && i < limit; ++i) out.push_back(describe(p, r.witnesses[i]));
  return out;
}

std::string slot_name(const AlgebraPresentation& p, const Slot& s, MapKind kind) {
  std::string name = kind == MapKind::Bilinear ? "phi(" : "f(";
  for (std::size_t i = 0; i < s.inputs.size(); ++i) name += (i ? ", " : "") + p.generator_name(s.inputs[i]);
  return name + ") -> " + p.generator_name(s.target);
}

json basis_json(const AlgebraPresentation& p, const HomogeneousAnsatz& a, const std::vector<Assignment>& basis,
                const RunConfig& c) {
  json out = json::array();
  for (const auto& v : basis) {
    json entry = json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) entry[slot_name(p, a.slots[i], a.kind())] = coefficient(v[i], c);
    out.push_back(std::move(entry));
  }
  return out;
}

json result(const std::string& name, bool ok) {
  json r;
  r["name"] = name;
  r["status"] = ok ? "pass" : "fail";
  return r;
}

MapClass class_or_default(const RunConfig& c, const AlgebraPresentation& p) {
  const std::string name =
      !c.cls.empty() ? c.cls : p.is_super() ? std::string("super-biderivation") : std::string("biderivation");
  auto cls = parse_map_class(name, c.k);
  if (!cls) throw UsageError("unknown --class '" + name + "'");
  return *cls;
}

std::vector<int> parities(const RunConfig& c, const AlgebraPresentation& p) {
  if (c.parity) return {*c.parity};
  return p.is_super() ? std::vector<int>{0, 1} : std::vector<int>{0};
}

StableOptions stable_options(const RunConfig& c) {
  StableOptions o;
  o.window_nullity = true;
  o.nullspace.seed = c.seed;
  return o;
}

std::string scope_note(const RunConfig& c) {
  return "finite-range check: window [" + std::to_string(c.w.lo) + "," + std::to_string(c.w.hi) + "], delta " +
         std::to_string(c.delta) + ", degrees " + std::to_string(c.s_lo) + ".." + std::to_string(c.s_hi) +
         "; not a proof over the whole algebra";
}

// Each command returns its results and whether everything passed.
struct Report {
  json results = json::array();
  std::vector<std::string> text;
  std::optional<std::string> note;
  bool ok = true;

  void add(json r, std::string line) {
    if (r["status"] == "fail") ok = false;
    text.push_back(std::move(line));
    results.push_back(std::move(r));
  }
};

Report check_axioms_cmd(const RunConfig& c) {
  Report rep;
  const auto p = resolve_algebra(c.algebra);
  const auto ax = check_axioms(p, c.w);
  json r = result("axioms", ax.passed());
  r["instances"] = ax.instances;
  if (!ax.passed()) r["witnesses"] = witnesses_json(p, ax);
  std::string line = "axioms: " + std::string(ax.passed() ? "pass" : "fail") + " (" + std::to_string(ax.instances) +
                     " instances)";
  for (const auto& w : ax.witnesses) line += "\n  " + describe(p, w);
  rep.add(std::move(r), line);

  const auto mul = check_multiplicative(p, c.w);
  json m;
  m["name"] = "multiplicative";
  m["status"] = "info";
  m["holds"] = mul.passed();
  if (!mul.passed()) m["witnesses"] = witnesses_json(p, mul, 1);
  rep.add(std::move(m), std::string("multiplicative: ") + (mul.passed() ? "yes" : "no, e.g. " +
                                                                                describe(p, mul.witnesses.front())));
  return rep;
}

Report check_map_cmd(const RunConfig& c) {
  Report rep;
  const auto p = resolve_algebra(c.algebra);
  if (c.map.empty()) throw UsageError("check-map needs --map (a known map name or a map file)");
  const auto cls = class_or_default(c, p);
  CheckReport r;
  if (c.map == "phi_ad" || c.map == "phi_0" || c.map == "phi_minus1") {
    if (kind_of(cls) != MapKind::Bilinear) throw UsageError("--map " + c.map + " is bilinear; --class is linear");
    r = check_bilinear_class(p, known_map(p, c.map).map, std::get<BilinearClass>(cls), c.w);
  } else {
    const auto spec = load_map(p, c.map);
    if ((spec.kind == MapSpec::Kind::Bilinear) != (kind_of(cls) == MapKind::Bilinear))
      throw UsageError("map kind does not match --class " + to_string(cls));
    if (spec.kind == MapSpec::Kind::Bilinear) {
      const auto phi = ConcreteBilinearMap::from_rules(p, spec.parity, spec.degree, spec.bilinear);
      r = check_bilinear_class(p, phi, std::get<BilinearClass>(cls), c.w);
    } else {
      const auto f = ConcreteLinearMap::from_rules(p, spec.parity, spec.linear);
      r = check_linear_class(p, f, std::get<LinearClass>(cls), c.w);
    }
  }
  json j = result(to_string(cls), r.passed());
  j["instances"] = r.instances;
  if (!r.passed()) j["witnesses"] = witnesses_json(p, r);
  std::string line = c.map + " as " + to_string(cls) + ": " + (r.passed() ? "pass" : "fail") + " (" +
                     std::to_string(r.instances) + " instances)";
  for (std::size_t i = 0; i < r.witnesses.size() && i < 5; ++i) line += "\n  " + describe(p, r.witnesses[i]);
  rep.add(std::move(j), line);
  return rep;
}

struct Solved {
  int s, parity;
  StableSolution st;
  bool sound = true;
};

std::vector<Solved> solve_all(const RunConfig& c, const AlgebraPresentation& p, const MapClass& cls) {
  std::vector<Solved> jobs;
  for (int parity : parities(c, p))
    for (int s = c.s_lo; s <= c.s_hi; ++s) jobs.push_back({s, parity, {}, true});
  parallel_for(jobs.size(), default_threads(), [&](std::size_t i) {
    jobs[i].st = stable_solve(p, cls, jobs[i].s, jobs[i].parity, c.w, c.delta, stable_options(c));
    for (const auto& v : jobs[i].st.space.basis)
      jobs[i].sound = jobs[i].sound && check_solution(p, jobs[i].st.ansatz, v).passed();
  });
  return jobs;
}

std::string job_name(const Solved& j) { return "parity " + std::to_string(j.parity) + " s=" + std::to_string(j.s); }

Report solve_cmd(const RunConfig& c) {
  Report rep;
  const auto p = resolve_algebra(c.algebra);
  const auto cls = class_or_default(c, p);
  for (const auto& j : solve_all(c, p, cls)) {
    json r = result(job_name(j), j.sound);
    r["dim"] = j.st.space.dim();
    r["window_dim"] = j.st.window_dim;
    r["enlarged_dim"] = j.st.enlarged_dim;
    if (j.st.space.dim()) r["basis"] = basis_json(p, j.st.ansatz, j.st.space.basis, c);
    std::string line = to_string(cls) + " " + job_name(j) + ": stable dim " + std::to_string(j.st.space.dim()) +
                       " (window " + std::to_string(j.st.window_dim) + ", enlarged " +
                       std::to_string(j.st.enlarged_dim) + ")";
    if (!j.sound) line += " [basis fails the checker]";
    rep.add(std::move(r), line);
  }
  rep.note = scope_note(c);
  return rep;
}

// Known maps that exist on p and have the given parity.
std::vector<KnownMap> knowns_for(const AlgebraPresentation& p, int parity, int s) {
  std::vector<KnownMap> out;
  for (const char* name : {"phi_ad", "phi_0", "phi_minus1"}) {
    try {
      auto k = known_map(p, name);
      if (k.map.parity() == parity && k.map.degree().value_or(s) == s) out.push_back(std::move(k));
    } catch (const UnknownGenerator&) {
    }
  }
  return out;
}

Report classify_cmd(const RunConfig& c) {
  Report rep;
  const auto p = resolve_algebra(c.algebra);
  const auto cls = class_or_default(c, p);
  if (kind_of(cls) != MapKind::Bilinear) throw UsageError("classify works on bilinear classes");
  for (const auto& j : solve_all(c, p, cls)) {
    const auto knowns = knowns_for(p, j.parity, j.s);
    const auto d = decompose(j.st.ansatz, j.st.space, knowns);
    const bool ok = j.sound && d.residual_dim == 0;
    json r = result(job_name(j), ok);
    r["dim"] = j.st.space.dim();
    r["residual_dim"] = d.residual_dim;
    json coeffs = json::array();
    std::string line = to_string(cls) + " " + job_name(j) + ": stable dim " + std::to_string(j.st.space.dim());
    for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
      if (!d.coefficients[i]) {
        coeffs.push_back(nullptr);
        continue;
      }
      json cj = json::object();
      std::string form;
      for (const auto& [name, x] : *d.coefficients[i]) {
        cj[name] = coefficient(x, c);
        if (!x.is_zero()) form += (form.empty() ? "" : " + ") + x.to_string() + " * " + name;
      }
      coeffs.push_back(std::move(cj));
      line += "\n  basis " + std::to_string(i) + " = " + (form.empty() ? "0" : form);
    }
    if (j.st.space.dim()) r["coefficients"] = std::move(coeffs);
    if (d.residual_dim) line += "\n  " + std::to_string(d.residual_dim) + " dimension(s) outside the known maps";
    rep.add(std::move(r), line);
  }
  rep.note = scope_note(c);
  return rep;
}

CommutingFamily family_for(const RunConfig& c, const AlgebraPresentation& p, int parity) {
  CommutingOptions o{c.s_lo, c.s_hi, {}};
  o.stable.nullspace.seed = c.seed;
  return solve_commuting_maps(p, parity, c.w, c.delta, o);
}

Report commuting_cmd(const RunConfig& c) {
  Report rep;
  const auto p = resolve_algebra(c.algebra);
  const auto ps = parities(c, p);
  std::vector<CommutingFamily> fams(ps.size());
  parallel_for(ps.size(), default_threads(), [&](std::size_t i) { fams[i] = family_for(c, p, ps[i]); });
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto& fam = fams[i];
    bool sound = true;
    for (const auto& v : fam.basis) sound = sound && check_solution(p, fam.ansatz, v).passed();
    json r = result("parity " + std::to_string(ps[i]), sound);
    r["dim"] = fam.size();
    r["parameters"] = fam.parameters;
    r["degrees"] = fam.degrees;
    r["rule"] = fam.describe(p);
    std::string line = "commuting maps, parity " + std::to_string(ps[i]) + ": " + std::to_string(fam.size()) +
                       " parameter(s)";
    for (const auto& l : fam.describe(p)) line += "\n  " + l;
    rep.add(std::move(r), line);
  }
  rep.note = scope_note(c);
  return rep;
}

Report corollaries_cmd(const RunConfig& c) {
  Report rep;
  const auto p = resolve_algebra(c.algebra);
  std::vector<std::pair<CorollaryProperty, int>> jobs;
  if (!c.property.empty()) {
    auto prop = parse_corollary_property(c.property);
    if (!prop) throw UsageError("unknown --property '" + c.property + "'");
    const bool even_only = *prop == CorollaryProperty::Automorphism;
    for (int parity : parities(c, p))
      if (!even_only || parity == 0 || c.parity) jobs.push_back({*prop, parity});
  } else {
    jobs.push_back({CorollaryProperty::Automorphism, 0});
    if (p.is_super()) {
      for (int parity : parities(c, p)) jobs.push_back({CorollaryProperty::SuperDerivation, parity});
    } else {
      jobs.push_back({CorollaryProperty::Derivation, 0});
    }
  }
  std::map<int, CommutingFamily> fams;
  for (const auto& [prop, parity] : jobs) fams.emplace(parity, CommutingFamily{});
  std::vector<int> keys;
  for (const auto& [parity, f] : fams) keys.push_back(parity);
  parallel_for(keys.size(), default_threads(), [&](std::size_t i) { fams[keys[i]] = family_for(c, p, keys[i]); });
  for (const auto& [prop, parity] : jobs) {
    const auto& fam = fams[parity];
    const auto r = corollary_check(p, fam, prop, c.w);
    json j;
    j["name"] = to_string(prop) + " parity " + std::to_string(parity);
    j["status"] = "pass";
    j["parameters"] = r.parameters;
    j["constraints"] = r.constraints;
    json points = json::array();
    std::string line = "commuting " + to_string(prop) + ", parity " + std::to_string(parity) + ": " +
                       std::to_string(r.constraints) + " constraints";
    for (const auto& pt : r.points) {
      json pj;
      pj["values"] = to_string(pt, r.parameters);
      pj["admissible"] = pt.admissible;
      points.push_back(std::move(pj));
      line += "\n  " + to_string(pt, r.parameters) + (pt.admissible ? "" : " (not invertible)");
    }
    if (r.points.empty()) line += "\n  no solutions";
    j["points"] = std::move(points);
    rep.add(std::move(j), line);
  }
  rep.note = scope_note(c);
  return rep;
}

Report reproduce_cmd(const RunConfig& c) {
  Report rep;
  SuiteContext ctx;
  ctx.config = {c.w, c.delta, c.s_lo, c.s_hi, default_threads()};
  for (const auto& r : run_suite(oracle::all_criteria(), ctx)) {
    json j = result("criterion " + std::to_string(r.id), r.passed);
    j["title"] = r.name;
    j["details"] = r.details;
    std::string line = summary_line(r);
    for (const auto& d : r.details) line += "\n    " + d;
    rep.add(std::move(j), line);
  }
  rep.note = scope_note(c);
  return rep;
}

void emit(const std::string& command, const RunConfig& c, const Report& rep) {
  std::ostringstream os;
  if (c.output == "json") {
    json j;
    j["command"] = command;
    j["config"] = config_json(c);
    j["results"] = rep.results;
    if (rep.note) j["scope"] = *rep.note;
    j["status"] = rep.ok ? "pass" : "fail";
    os << j.dump(2) << "\n";
  } else {
    os << command << " " << c.algebra << "\n";
    for (const auto& l : rep.text) os << l << "\n";
    if (rep.note) os << "(" << *rep.note << ")\n";
    os << (rep.ok ? "PASS" : "FAIL") << "\n";
  }
  if (c.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(c.out);
    if (!f) throw UsageError("cannot write --out file '" + c.out + "'");
    f << os.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biderivations and commuting maps of graded Hom-Lie (super)algebras over Q(q)"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--algebra", c.algebra, "built-in name or .alg file")->capture_default_str();
    sub->add_option("--window", c.window, "grading window lo..hi")->capture_default_str();
    sub->add_option("--specialize-q", c.specialize_q, "also print coefficients at this rational q");
    sub->add_option("--output", c.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "write the report to this path");
    sub->add_option("--seed", c.seed, "seed for randomized specializations")->capture_default_str();
  };
  auto solving = [&](CLI::App* sub) {
    sub->add_option("--delta", c.delta, "window enlargement for stability")->capture_default_str();
    sub->add_option("--degrees", c.degrees, "degree scan s_lo..s_hi")->capture_default_str();
  };

  auto* axioms = app.add_subcommand("check-axioms", "skew-symmetry, Hom-Jacobi and multiplicativity on the window");
  common(axioms);
  auto* check_map = app.add_subcommand("check-map", "check a known map or a map file against a class");
  common(check_map);
  check_map->add_option("--map", c.map, "phi_ad, phi_0, phi_minus1 or a map file")->required();
  check_map->add_option("--class", c.cls, "map class");
  check_map->add_option("--k", c.k, "k for alpha-k-derivation")->capture_default_str();
  auto* solve = app.add_subcommand("solve", "stable solution spaces of a map class");
  common(solve);
  solving(solve);
  solve->add_option("--class", c.cls, "map class");
  solve->add_option("--degree", c.degree, "single degree s");
  solve->add_option("--parity", c.parity, "0 or 1");
  solve->add_option("--k", c.k, "k for alpha-k-derivation")->capture_default_str();
  auto* classify = app.add_subcommand("classify", "decompose stable solutions against the known maps");
  common(classify);
  solving(classify);
  classify->add_option("--class", c.cls, "bilinear map class");
  classify->add_option("--degree", c.degree, "single degree s");
  classify->add_option("--parity", c.parity, "0 or 1");
  auto* commuting = app.add_subcommand("commuting-maps", "linear commuting maps");
  common(commuting);
  solving(commuting);
  commuting->add_option("--parity", c.parity, "0 or 1");
  auto* corollaries = app.add_subcommand("corollaries", "commuting automorphisms and (super-)derivations");
  common(corollaries);
  solving(corollaries);
  corollaries->add_option("--property", c.property, "automorphism, derivation or super-derivation");
  corollaries->add_option("--parity", c.parity, "0 or 1");
  auto* reproduce = app.add_subcommand("reproduce-paper", "run all acceptance criteria");
  common(reproduce);
  solving(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    resolve(c);
    Report rep;
    if (sub == axioms) rep = check_axioms_cmd(c);
    else if (sub == check_map) rep = check_map_cmd(c);
    else if (sub == solve) rep = solve_cmd(c);
    else if (sub == classify) rep = classify_cmd(c);
    else if (sub == commuting) rep = commuting_cmd(c);
    else if (sub == corollaries) rep = corollaries_cmd(c);
    else rep = reproduce_cmd(c);
    emit(command, c, rep);
    return rep.ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownBuiltin& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ForbiddenSpecialization& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ClassModeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownGenerator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
