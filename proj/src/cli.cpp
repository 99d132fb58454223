#include "hopfgr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include "hopfgr/io.hpp"
#include "hopfgr/typeone.hpp"

namespace hopfgr {

namespace {

struct Options {
  std::string input;
  std::string sub;
  std::string quot;
  std::string format = "text";
  std::string zoo_name;
  std::string output;
  int max_degree = 4;
  bool inject_fault = false;
};

AnyZooEntry build_named(const std::string& name) {
  try {
    return build(name);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

AnyZooEntry load_input(const std::string& input) {
  if (input.rfind("zoo:", 0) == 0) return build_named(input.substr(4));
  return load_document_file(input);
}

std::string join(const std::vector<Index>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

Json optional_json(const std::optional<Index>& v) { return v ? Json(*v) : Json(nullptr); }

Json report_json(const CheckReport& r) {
  Json j{{"passed", r.passed}, {"identities_checked", r.checked.size()}};
  if (!r.passed) {
    j["failed_identity"] = r.failed_identity;
    j["basis_index"] = r.basis_index;
    j["detail"] = r.detail;
    j["location"] = r.location;
  }
  return j;
}

std::string report_text(const CheckReport& r) {
  if (r.passed) return "pass (" + std::to_string(r.checked.size()) + " identities)";
  std::string s = "FAIL: " + r.failed_identity;
  if (!r.location.empty()) s += " at degrees " + join(r.location);
  if (r.basis_index >= 0) s += ", first differing basis index " + std::to_string(r.basis_index);
  if (!r.detail.empty()) s += " (" + r.detail + ")";
  return s;
}

Json strongly_json(const StronglyGraded& s) {
  Json j{{"holds", s.holds}};
  if (s.first_failure) j["first_failure"] = {s.first_failure->first, s.first_failure->second};
  return j;
}

std::string strongly_text(const StronglyGraded& s) {
  if (s.holds) return "yes";
  return "no, first failure at (" + std::to_string(s.first_failure->first) + "," +
         std::to_string(s.first_failure->second) + ")";
}

Json predicates_json(const Predicates& p) {
  return {{"is_subcoalgebra", p.is_subcoalgebra}, {"is_subalgebra", p.is_subalgebra}, {"is_ideal", p.is_ideal},
          {"is_subbialgebra", p.is_subbialgebra}, {"is_coideal", p.is_coideal}};
}

std::string predicates_text(const Predicates& p) {
  std::string s;
  auto add = [&](bool v, const char* name) {
    if (v) s += (s.empty() ? "" : ", ") + std::string(name);
  };
  add(p.is_subcoalgebra, "subcoalgebra");
  add(p.is_subalgebra, "subalgebra");
  add(p.is_ideal, "ideal");
  add(p.is_subbialgebra, "subbialgebra");
  add(p.is_coideal, "coideal");
  return s.empty() ? "none" : s;
}

// Collects a machine document and the text rendering side by side.
struct Report {
  Json doc;
  std::ostringstream text;

  void emit(const Options& o, std::ostream& out) const {
    if (o.format == "machine")
      out << doc.dump(2) << "\n";
    else
      out << text.str();
  }
};

template <class S>
Report start(const std::string& command, const ZooEntry<S>& z) {
  Report r;
  const auto& e = z.bialgebra;
  r.doc["command"] = command;
  r.doc["input"] = {{"name", z.name},
                    {"field", e.field().spec().name()},
                    {"dim", e.dim()},
                    {"digest", fnv1a_digest(canonical_text(export_document(z)))}};
  r.text << z.name << " over " << e.field().spec().name() << ", dimension " << e.dim() << "\n";
  return r;
}

template <class S>
struct Selected {
  Side side = Side::sub;
  std::string name;
  Subspace<S> space;
  Mat<S> map;
};

template <class S>
Selected<S> select(const ZooEntry<S>& z, const Options& o) {
  if (o.sub.empty() == o.quot.empty()) throw InputError("exactly one of --sub and --quot is required");
  Selected<S> s;
  if (!o.sub.empty()) {
    const auto* found = z.find_subspace(o.sub);
    if (!found) throw InputError("no subspace named " + o.sub);
    s.side = Side::sub;
    s.name = o.sub;
    s.space = found->space;
  } else {
    const auto* found = z.find_quotient(o.quot);
    if (!found) throw InputError("no quotient named " + o.quot);
    s.side = Side::quot;
    s.name = o.quot;
    s.map = found->map;
  }
  return s;
}

// Axioms gate every construction; a failure ends the run with exit 1.
template <class S>
bool axioms_hold(const ZooEntry<S>& z, Report& rep) {
  const auto r = verify_bialgebra(z.bialgebra);
  rep.doc["axioms"] = report_json(r);
  rep.text << "bialgebra axioms: " << report_text(r) << "\n";
  return r.passed;
}

template <class S>
int cmd_verify(const ZooEntry<S>& z, const Options& o, std::ostream& out) {
  auto rep = start("verify", z);
  const bool ok = axioms_hold(z, rep);
  if (ok) {
    Json subs = Json::object();
    for (const auto& s : z.subspaces) {
      const auto p = predicates(s.space, z.bialgebra);
      subs[s.name] = {{"dim", s.space.dim()}, {"predicates", predicates_json(p)}};
      rep.text << "subspace " << s.name << " (dim " << s.space.dim() << "): " << predicates_text(p) << "\n";
    }
    Json quots = Json::object();
    for (const auto& q : z.quotients) {
      bool quotient = true;
      try {
        quotient_by(z.bialgebra, q.map);
      } catch (const Error&) {
        quotient = false;
      }
      quots[q.name] = {{"target_dim", q.map.rows()}, {"bialgebra_quotient", quotient}};
      rep.text << "quotient " << q.name << " (onto dim " << q.map.rows() << "): "
               << (quotient ? "bialgebra quotient" : "not a bialgebra quotient") << "\n";
    }
    rep.doc["subspaces"] = std::move(subs);
    rep.doc["quotients"] = std::move(quots);
  }
  rep.emit(o, out);
  return ok ? exit_ok : exit_failure;
}

template <class S>
int cmd_filtration(const ZooEntry<S>& z, const Options& o, std::ostream& out) {
  const auto sel = select(z, o);
  auto rep = start("filtration", z);
  if (!axioms_hold(z, rep)) {
    rep.emit(o, out);
    return exit_failure;
  }
  const auto& e = z.bialgebra;
  Json f{{"side", to_string(sel.side)}, {"name", sel.name}, {"max_degree", o.max_degree}};
  if (sel.side == Side::sub) {
    const auto tower = wedge_tower(sel.space, e.coalgebra(), o.max_degree);
    const auto p = predicates(sel.space, e);
    f["kind"] = "wedge";
    f["dims"] = tower.dims();
    f["stabilized_at"] = optional_json(tower.stabilized_at);
    f["stop"] = to_string(tower.stop);
    f["predicates"] = predicates_json(p);
    rep.text << "subspace " << sel.name << ": " << predicates_text(p) << "\n";
    rep.text << "wedge powers dims " << join(tower.dims());
  } else {
    const auto ideal = kernel(sel.map);
    const auto tower = power_tower(ideal, e.algebra(), o.max_degree);
    const auto p = predicates(ideal, e);
    f["kind"] = "power";
    f["dims"] = tower.dims();
    f["stabilized_at"] = optional_json(tower.stabilized_at);
    f["stop"] = to_string(tower.stop);
    f["predicates"] = predicates_json(p);
    rep.text << "kernel of " << sel.name << ": " << predicates_text(p) << "\n";
    rep.text << "ideal powers dims " << join(tower.dims());
  }
  const auto& st = f["stabilized_at"];
  rep.text << (st.is_null() ? ", degree cap reached" : ", stabilized at " + std::to_string(st.get<Index>())) << "\n";
  rep.doc["filtration"] = std::move(f);
  rep.emit(o, out);
  return exit_ok;
}

template <class S>
WithWitness<GradedBialgebra<S>, S> graded_of(const Bialgebra<S>& e, const Selected<S>& sel, Index n) {
  return sel.side == Side::sub ? graded_bialgebra_from_subbialgebra(e, sel.space, n)
                               : graded_bialgebra_from_quotient(e, sel.map, n);
}

template <class S>
int cmd_graded(const ZooEntry<S>& z, const Options& o, std::ostream& out) {
  const auto sel = select(z, o);
  auto rep = start("graded", z);
  if (!axioms_hold(z, rep)) {
    rep.emit(o, out);
    return exit_failure;
  }
  const auto g = graded_of(z.bialgebra, sel, o.max_degree);
  const auto vr = verify_graded_bialgebra(g.object);
  const auto sa = is_strongly_graded_algebra(g.object.algebra);
  const auto sc = is_strongly_graded_coalgebra(g.object.coalgebra);
  const auto um = universal_map_assertions(g.object, sel.side);
  rep.doc["graded"] = {{"side", to_string(sel.side)},
                       {"name", sel.name},
                       {"max_degree", o.max_degree},
                       {"dims", g.object.dims()},
                       {"complete", g.object.complete},
                       {"verification", report_json(vr)},
                       {"strongly_graded_algebra", strongly_json(sa)},
                       {"strongly_graded_coalgebra", strongly_json(sc)},
                       {"universal_maps", report_json(um)}};
  rep.text << "graded " << (sel.side == Side::sub ? "by wedge powers of " : "by powers of the kernel of ") << sel.name
           << ", components dims " << join(g.object.dims()) << (g.object.complete ? " (complete)" : "") << "\n";
  rep.text << "graded bialgebra identities: " << report_text(vr) << "\n";
  rep.text << "strongly graded as an algebra: " << strongly_text(sa) << "\n";
  rep.text << "strongly graded as a coalgebra: " << strongly_text(sc) << "\n";
  rep.text << "universal map characterizations: " << report_text(um) << "\n";
  rep.emit(o, out);
  return vr.passed ? exit_ok : exit_failure;
}

const char* condition_name(Side side, int k) {
  static const char* sub[] = {"graded bialgebra is of type one", "graded bialgebra strongly graded as an algebra",
                              "algebra of wedge levels strongly graded",
                              "wedge levels are powers of the second level"};
  static const char* quot[] = {"graded bialgebra is of type one", "graded bialgebra strongly graded as a coalgebra",
                               "coalgebra of quotients strongly graded",
                               "ideal powers are wedge powers of the square"};
  return side == Side::sub ? sub[k] : quot[k];
}

template <class S>
int cmd_typeone(const ZooEntry<S>& z, const Options& o, std::ostream& out) {
  const auto sel = select(z, o);
  auto rep = start("typeone", z);
  if (!axioms_hold(z, rep)) {
    rep.emit(o, out);
    return exit_failure;
  }
  const auto& e = z.bialgebra;
  auto r = sel.side == Side::sub ? typeone_check_sub(e, sel.space, o.max_degree, false)
                                 : typeone_check_quot(e, sel.map, o.max_degree, false);
  if (o.inject_fault) {
    r.conditions[1].holds = !r.conditions[1].holds;
    r.agreement = std::all_of(r.conditions.begin(), r.conditions.end(),
                              [&](const auto& c) { return c.holds == r.conditions[0].holds; });
  }
  const auto tower_dims = sel.side == Side::sub ? wedge_tower(sel.space, e.coalgebra(), o.max_degree + 1).dims()
                                                : power_tower(kernel(sel.map), e.algebra(), o.max_degree + 1).dims();
  Json conds = Json::array();
  rep.text << "type-one conditions for " << (sel.side == Side::sub ? "subbialgebra " : "quotient ") << sel.name
           << ", N = " << o.max_degree << ", tower dims " << join(tower_dims) << "\n";
  for (int k = 0; k < 4; ++k) {
    const auto& c = r.conditions[k];
    Json cj{{"index", k + 1}, {"name", condition_name(sel.side, k)}, {"holds", c.holds}};
    rep.text << "  (" << k + 1 << ") " << condition_name(sel.side, k) << ": " << (c.holds ? "true" : "false");
    if (!c.holds) {
      cj["degree"] = optional_json(c.degree);
      cj["location"] = c.location;
      cj["detail"] = c.detail;
      cj["witness_basis"] = c.witness.size() ? basis_to_json(e.field(), c.witness) : Json::array();
      rep.text << " -- " << c.detail << ", witness of dim " << c.witness.cols();
    }
    rep.text << "\n";
    conds.push_back(std::move(cj));
  }
  rep.text << "agreement: " << (r.agreement ? "yes" : "NO") << "\n";
  rep.doc["typeone"] = {{"side", to_string(sel.side)},   {"name", sel.name},
                        {"max_degree", o.max_degree},    {"tower_dims", tower_dims},
                        {"conditions", std::move(conds)}, {"agreement", r.agreement}};
  rep.emit(o, out);
  return r.agreement ? exit_ok : exit_failure;
}

template <class F>
int on_input(const Options& o, F f) {
  const auto z = load_input(o.input);
  return std::visit(f, z);
}

int cmd_zoo_export(const Options& o, std::ostream& out) {
  const auto text = export_document(build_named(o.zoo_name)).dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
    return exit_ok;
  }
  std::ofstream file(o.output);
  if (!file) throw InputError("cannot write " + o.output);
  file << text;
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Associated graded bialgebras of filtered bialgebras and type-one checks", "hopfgr"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", o.input, "Document path, or zoo:NAME for a built-in example")->required();
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  };
  auto add_config = [&](CLI::App* cmd) {
    auto* sub = cmd->add_option("--sub", o.sub, "Named subbialgebra");
    auto* quot = cmd->add_option("--quot", o.quot, "Named quotient map");
    sub->excludes(quot);
    cmd->add_option("--max-degree", o.max_degree, "Truncation degree")->check(CLI::Range(0, 8));
  };

  auto* verify = app.add_subcommand("verify", "Check the bialgebra axioms of a document");
  add_input(verify);
  auto* filtration = app.add_subcommand("filtration", "Wedge powers of a subspace or powers of a kernel");
  add_input(filtration);
  add_config(filtration);
  auto* graded = app.add_subcommand("graded", "Associated graded bialgebra and its identities");
  add_input(graded);
  add_config(graded);
  auto* typeone = app.add_subcommand("typeone", "The four equivalent type-one conditions");
  add_input(typeone);
  add_config(typeone);
  typeone->add_flag("--inject-fault", o.inject_fault, "Flip one computed condition")->group("");
  auto* zoo = app.add_subcommand("zoo", "Built-in examples");
  zoo->require_subcommand(1);
  auto* zoo_list = zoo->add_subcommand("list", "List the example names");
  auto* zoo_export = zoo->add_subcommand("export", "Print an example as a document");
  zoo_export->add_option("name", o.zoo_name, "Example name")->required();
  zoo_export->add_option("-o,--output", o.output, "Write to a file instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (verify->parsed()) return on_input(o, [&](const auto& z) { return cmd_verify(z, o, out); });
    if (filtration->parsed()) return on_input(o, [&](const auto& z) { return cmd_filtration(z, o, out); });
    if (graded->parsed()) return on_input(o, [&](const auto& z) { return cmd_graded(z, o, out); });
    if (typeone->parsed()) return on_input(o, [&](const auto& z) { return cmd_typeone(z, o, out); });
    if (zoo_list->parsed()) {
      for (const auto& name : zoo_names()) out << name << "\n";
      return exit_ok;
    }
    if (zoo_export->parsed()) return cmd_zoo_export(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const NotSubbialgebra& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const NotBialgebraQuotient& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_input;
}

}  // namespace hopfgr
