// eblab: command-line front end for the finite EBL-algebra workbench.
//
// Every subcommand reports checks as `RESULT <id> <pass|fail> [witness=..]`
// lines (machine mode), as readable text (human mode), or both. Exit status:
// 0 when every check passes, 1 when a counterexample was found, 2 for input
// and usage errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eblab/config.hpp"
#include "eblab/correspondences.hpp"
#include "eblab/epistemic.hpp"
#include "eblab/error.hpp"
#include "eblab/filters.hpp"
#include "eblab/frames.hpp"
#include "eblab/suite.hpp"
#include "eblab/term.hpp"
#include "eblab/text_format.hpp"

namespace {

using namespace eblab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class Session {
 public:
  explicit Session(RunConfig config) : config_(config) {}

  const RunConfig& config() const { return config_; }
  unsigned workers() const { return config_.effective_workers(); }

  bool human_enabled() const { return config_.mode != OutputMode::machine; }

  void say(const std::string& text) {
    if (human_enabled()) std::cout << text << '\n';
  }

  /// Listings (tables, counts, filters). Machine mode prints RESULT lines only.
  void data(const std::string& text) {
    if (human_enabled()) std::cout << text;
  }

  void result(CheckResult r) {
    if (human_enabled()) {
      std::cout << (r.pass ? "  pass  " : "  FAIL  ") << r.id;
      if (r.witness) std::cout << "  [" << format_assignment(*r.witness) << "]";
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << '\n';
    }
    results_.push_back(std::move(r));
  }

  void report(const AxiomReport& report, const std::string& prefix) {
    for (const auto& e : report.entries()) result({prefix + e.id, e.holds, e.witness, {}});
  }

  int finish() {
    bool all = true;
    for (const auto& r : results_) all = all && r.pass;
    if (config_.mode != OutputMode::human) {
      for (const auto& r : results_) std::cout << machine_line(r) << '\n';
    }
    return all ? kExitPass : kExitFail;
  }

 private:
  RunConfig config_;
  std::vector<CheckResult> results_;
};

Bundle load(const std::string& path, const RunConfig& config) {
  if (!std::filesystem::exists(path) && path.find(':') != std::string::npos) {
    return builtin_bundle(path, config.size_cap);
  }
  return read_bundle_file(path);
}

std::string list(const std::vector<Elem>& values) {
  std::string s;
  for (Elem v : values) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

std::string describe(const Classification& c) {
  std::string s;
  auto add = [&](bool flag, const char* label) {
    if (flag) s += (s.empty() ? "" : ", ") + std::string(label);
  };
  add(c.chain, "chain");
  add(c.mv, "MV");
  add(c.godel, "Gödel");
  add(c.boolean, "Boolean");
  return s.empty() ? "none" : s;
}

// ---------------------------------------------------------------------------
// Subcommands

struct Args {
  std::string file;
  std::string spec;
  std::string out;
  std::string structure;
  std::string algebra;
  std::string frame;
  std::string filter;
  std::string family;
  std::string emit = "count";
  std::vector<std::string> statements;
  std::vector<std::string> axioms;
  std::string statements_file;
  std::size_t max_vars = kDefaultMaxVariables;
  std::size_t max_enumerated = 16;
  unsigned alternate_workers = 4;
  bool epistemic_only = false;
  bool verify_all = false;
  bool derived = false;
  bool allow_non_chain = false;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::malformed_input, "cannot write '" + path + "'");
  out << text;
}

int cmd_builtin(Session& s, const Args& a) {
  const Bundle b = builtin_bundle(a.spec, s.config().size_cap, a.max_enumerated);
  std::ostringstream text;
  for (const auto& raw : b.algebras) write_algebra(text, raw);
  const Algebra alg = b.algebra({}, s.config().size_cap);
  for (const auto& st : b.structures) {
    write_structure(text, b.structure(st.name, s.config().size_cap), st.name, st.algebra);
  }
  write_output(a.out, text.str());
  if (!a.out.empty()) {
    s.say("wrote " + alg.name() + " (" + std::to_string(alg.size()) + " elements, " +
          std::to_string(b.structures.size()) + " structures) to " + a.out);
  }
  return s.finish();
}

int cmd_check_bl(Session& s, const Args& a) {
  const Bundle b = load(a.file, s.config());
  if (b.algebras.empty()) throw Error(ErrorKind::malformed_input, "no algebra in " + a.file);
  for (const auto& raw : b.algebras) {
    if (!a.algebra.empty() && raw.name != a.algebra) continue;
    if (raw.n > s.config().size_cap) {
      throw Error(ErrorKind::size_limit, "'" + raw.name + "' exceeds the size cap");
    }
    const BlVerification v = verify_bl(raw);
    s.say(raw.name + ": " + std::to_string(raw.n) + " elements, bot " + std::to_string(v.bot) +
          ", top " + std::to_string(v.top) + ", classes: " + describe(v.classes));
    s.report(v.report, "bl." + raw.name + ".");
  }
  return s.finish();
}

int cmd_check_ebl(Session& s, const Args& a) {
  const Bundle b = load(a.file, s.config());
  const RawStructure* raw = b.find_structure(a.structure);
  if (!raw) throw Error(ErrorKind::malformed_input, "no structure named '" + a.structure + "'");
  const Algebra alg = b.algebra(raw->algebra, s.config().size_cap);
  const AxiomReport report = verify_ebl(alg, raw->forall, raw->exists);
  s.say(raw->name + " over " + alg.name() + ": forall " + list(raw->forall) + ", exists " +
        list(raw->exists));
  s.report(report, "ebl.");
  if (a.derived && report.all_pass()) {
    const auto st = EpistemicStructure::create(alg, raw->forall, raw->exists, raw->name);
    s.report(verify_derived(st), "derived.");
  }
  return s.finish();
}

int cmd_enumerate(Session& s, const Args& a) {
  const Bundle b = load(a.file, s.config());
  const Algebra alg = b.algebra(a.algebra, s.config().size_cap);
  EnumerationOptions opts;
  opts.method = s.config().method;
  opts.workers = s.workers();
  const auto structures = enumerate_ebl(alg, opts);
  if (a.emit == "tables") {
    std::ostringstream text;
    const auto names = structure_names(alg, structures, true);
    for (std::size_t k = 0; k < structures.size(); ++k) {
      write_structure(text, structures[k], names[k], alg.name());
    }
    s.data(text.str());
  } else {
    s.data(alg.name() + " " + std::to_string(structures.size()) + "\n");
  }
  s.result({"enumerate." + alg.name(), true, std::nullopt,
            std::to_string(structures.size()) + " structures"});
  return s.finish();
}

int cmd_focal(Session& s, const Args& a) {
  const Bundle b = load(a.file, s.config());
  const auto st = b.structure(a.structure, s.config().size_cap);
  const FocalFormulaCheck f = verify_focal_formula(st);
  const CRelCompletePair pair = pair_from_structure(st);
  s.say("focal element " + std::to_string(st.focal()) + ", image {" + pair.sub.to_string() + "}");
  s.result({"focal.formula", f.holds, f.witness,
            f.formula_min ? "formula minimum " + std::to_string(*f.formula_min) : "no minimum"});
  s.report(check_c_relatively_complete(st.algebra(), pair.sub, pair.c), "focal.");
  s.result({"focal.reconstruction", structure_from_pair(pair).same_operators(st), std::nullopt, {}});
  return s.finish();
}

int cmd_filters(Session& s, const Args& a) {
  const Bundle b = load(a.file, s.config());
  const auto st = b.structure(a.structure, s.config().size_cap);
  std::ostringstream text;
  std::size_t epistemic = 0;
  for (const Subset& f : enumerate_filters(st.algebra())) {
    const bool ep = is_epistemic_filter(st, f).epistemic;
    epistemic += ep;
    if (a.epistemic_only && !ep) continue;
    text << f.to_string() << (a.epistemic_only ? "" : ep ? "  epistemic" : "") << '\n';
  }
  s.data(text.str());
  if (a.epistemic_only) {
    const auto congruences = enumerate_congruences(st.view());
    std::vector<Congruence> image;
    bool inverse = true;
    for (const Subset& f : enumerate_epistemic_filters(st)) {
      image.push_back(congruence_of_filter(st, f));
      inverse = inverse && filter_of_congruence(st, image.back()) == f;
    }
    std::sort(image.begin(), image.end());
    s.result({"filters.bijection", inverse && image == congruences, std::nullopt,
              std::to_string(epistemic) + " epistemic filters, " +
                  std::to_string(congruences.size()) + " congruences"});
  }
  return s.finish();
}

int cmd_quotient(Session& s, const Args& a) {
  const Bundle b = load(a.file, s.config());
  const auto st = b.structure(a.structure, s.config().size_cap);
  const std::vector<Elem> members = parse_element_list(a.filter);
  for (Elem m : members) {
    if (m >= st.algebra().size()) throw Error(ErrorKind::malformed_input, "filter element out of range");
  }
  const auto q = quotient(st, Subset::of(st.algebra().size(), members));
  std::ostringstream text;
  write_algebra(text, q.algebra().tables());
  write_structure(text, q, q.name(), q.algebra().name());
  write_output(a.out, text.str());
  s.say("quotient has " + std::to_string(q.algebra().size()) + " elements");
  s.report(verify_ebl(q.algebra(), q.forall_table(), q.exists_table()), "quotient.");
  return s.finish();
}

int cmd_frame_complex(Session& s, const Args& a) {
  const Bundle b = load(a.file, s.config());
  const PossibilisticFrame frame = b.frame(a.frame, a.allow_non_chain, s.config().size_cap);
  const ComplexAlgebra c = complex_structure(frame, s.config().size_cap);
  const EpistemicStructure& st = c.structure;
  if (!a.out.empty()) {
    std::ostringstream text;
    write_algebra(text, st.algebra().tables());
    write_structure(text, st, frame.name(), st.algebra().name());
    write_output(a.out, text.str());
  }
  s.say(frame.name() + ": " + std::to_string(frame.worlds()) + " worlds over " +
        frame.base().name() + ", function algebra of " + std::to_string(st.algebra().size()) +
        " elements, focal tuple (" + list(c.functions.decode(st.focal())) + ")");
  s.report(verify_ebl(st.algebra(), st.forall_table(), st.exists_table()), "frame.ebl.");
  s.result({"frame.focal", st.focal() == c.functions.encode(frame.pi()), std::nullopt, {}});
  if (a.verify_all) {
    s.result({"frame.normalization-square", verify_normalization_square(frame), std::nullopt, {}});
    const SolvabilityCheck solv = verify_solvability(frame);
    s.result({"frame.solvability", solv.holds, solv.witness, {}});
    if (frame.base().is_chain()) {
      s.result({"frame.constant-image", verify_constant_image(frame, s.config().size_cap),
                std::nullopt, {}});
      const CoincidenceCheck co = structure_frame_coincidence(c.functions, st);
      s.result({"frame.coincidence", co.hypotheses_hold && co.tables_identical, std::nullopt, {}});
    } else {
      s.say("base is not a chain: constant-image and coincidence checks skipped");
    }
  }
  return s.finish();
}

int cmd_correspond(Session& s, const Args& a) {
  const auto family = parse_family(a.family);
  if (!family) {
    throw Error(ErrorKind::malformed_input,
                "unknown family '" + a.family + "' (pseudomonadic, godel-kd45, monadic)");
  }
  const Bundle b = load(a.file, s.config());
  const Algebra alg = b.algebra(a.algebra, s.config().size_cap);
  CorrespondenceOptions opts;
  opts.method = s.config().method;
  opts.workers = s.workers();
  const FamilyCheck check = check_family(alg, *family, opts);
  const std::string id = "correspond." + std::string(to_string(*family));
  if (!check.applicable) {
    throw Error(ErrorKind::not_applicable,
                alg.name() + ": " + check.classifier.failed + " fails at " +
                    format_assignment(*check.classifier.witness),
                check.classifier.witness);
  }
  s.result({id, check.result.equal, std::nullopt,
            std::to_string(check.result.ebl_side.size()) + " EBL structures, " +
                std::to_string(check.result.family_side.size()) + " family structures"});
  return s.finish();
}

int cmd_prove(Session& s, const Args& a) {
  const Bundle b = load(a.file, s.config());
  TableView view;
  std::optional<EpistemicStructure> st;
  std::optional<Algebra> alg;
  if (!a.structure.empty()) {
    st = b.structure(a.structure, s.config().size_cap);
    view = st->view();
  } else {
    alg = b.algebra(a.algebra, s.config().size_cap);
    view = alg->view();
  }

  std::vector<std::pair<std::string, Statement>> todo;
  for (const auto& id : a.axioms) todo.emplace_back(id, library_statement(id));
  std::size_t k = 0;
  auto add_text = [&](const std::string& text) {
    todo.emplace_back("stmt" + std::to_string(++k), parse_statement(text));
  };
  for (const auto& text : a.statements) add_text(text);
  if (!a.statements_file.empty()) {
    std::ifstream in(a.statements_file);
    if (!in) throw Error(ErrorKind::malformed_input, "cannot open '" + a.statements_file + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      add_text(line);
    }
  }
  if (todo.empty()) throw Error(ErrorKind::malformed_input, "nothing to prove (use --stmt, --stmts or --axiom)");

  for (const auto& [id, stmt] : todo) {
    const StatementResult r = check_statement(stmt, view, a.max_vars);
    s.result({"prove." + id, r.holds, r.witness, print(stmt)});
  }
  return s.finish();
}

int cmd_paper_suite(Session& s, const Args& a) {
  SuiteOptions opts;
  opts.workers = s.workers();
  opts.alternate_workers = a.alternate_workers;
  const auto& criteria = acceptance_criteria();
  const auto results = run_paper_suite(opts);
  for (std::size_t i = 0; i < results.size(); ++i) {
    s.say("criterion " + std::to_string(criteria[i].number) + ": " + criteria[i].title);
    s.result(results[i]);
  }
  return s.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model workbench for epistemic BL-algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  unsigned workers = 0;
  std::string mode;
  std::size_t cap = 0;
  std::string method;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--workers", workers, "worker threads (0 = all available)");
  app.add_option("--mode", mode, "output mode: human, machine or both");
  app.add_option("--cap", cap, "maximum carrier size");
  app.add_option("--method", method, "enumeration method: pairs, brute or both");

  Args args;
  auto* builtin = app.add_subcommand("builtin", "write a builtin algebra and its structures");
  builtin->add_option("spec", args.spec, "mv:N, godel:N, bool:K, osum:C+C, prod:CxC")->required();
  builtin->add_option("--out", args.out, "output file (default: standard output)");
  builtin->add_option("--max-enumerated", args.max_enumerated,
                      "largest algebra whose structures are written");

  auto* check_bl = app.add_subcommand("check-bl", "verify the BL-algebra laws");
  check_bl->add_option("file", args.file)->required();
  check_bl->add_option("--algebra", args.algebra, "only this algebra");

  auto* check_ebl = app.add_subcommand("check-ebl", "verify the epistemic axioms");
  check_ebl->add_option("file", args.file)->required();
  check_ebl->add_option("--structure", args.structure)->required();
  check_ebl->add_flag("--derived", args.derived, "also check the derived laws");

  auto* enumerate = app.add_subcommand("enumerate", "list every epistemic structure");
  enumerate->add_option("file", args.file)->required();
  enumerate->add_option("--algebra", args.algebra);
  enumerate->add_option("--emit", args.emit, "count or tables")
      ->check(CLI::IsMember({"count", "tables"}));

  auto* focal = app.add_subcommand("focal", "focal element and (B, c) reconstruction");
  focal->add_option("file", args.file)->required();
  focal->add_option("--structure", args.structure)->required();

  auto* filters = app.add_subcommand("filters", "implicative and epistemic filters");
  filters->add_option("file", args.file)->required();
  filters->add_option("--structure", args.structure)->required();
  filters->add_flag("--epistemic", args.epistemic_only,
                    "only epistemic filters, with the congruence bijection check");

  auto* quot = app.add_subcommand("quotient", "quotient by an epistemic filter");
  quot->add_option("file", args.file)->required();
  quot->add_option("--structure", args.structure)->required();
  quot->add_option("--filter", args.filter, "comma-separated elements")->required();
  quot->add_option("--out", args.out);

  auto* frame = app.add_subcommand("frame-complex", "complex algebra of a possibilistic frame");
  frame->add_option("file", args.file)->required();
  frame->add_option("--frame", args.frame)->required();
  frame->add_option("--out", args.out);
  frame->add_flag("--verify-all", args.verify_all, "run every frame check");
  frame->add_flag("--allow-non-chain", args.allow_non_chain, "accept a non-chain base");

  auto* correspond = app.add_subcommand("correspond", "compare with a classical family");
  correspond->add_option("file", args.file)->required();
  correspond->add_option("--family", args.family, "pseudomonadic, godel-kd45 or monadic")
      ->required();
  correspond->add_option("--algebra", args.algebra);

  auto* prove = app.add_subcommand("prove", "evaluate statements on a structure");
  prove->add_option("file", args.file)->required();
  prove->add_option("--structure", args.structure);
  prove->add_option("--algebra", args.algebra, "evaluate on a bare algebra instead");
  prove->add_option("--stmt", args.statements, "statement text (repeatable)");
  prove->add_option("--stmts", args.statements_file, "file of statements, one per line");
  prove->add_option("--axiom", args.axioms, "named library statement (repeatable)");
  prove->add_option("--max-vars", args.max_vars);

  auto* suite = app.add_subcommand("paper-suite", "run every acceptance check");
  suite->add_option("--alternate-workers", args.alternate_workers,
                    "worker count compared against 1 by the determinism check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "eblab: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw Error(ErrorKind::malformed_input, "cannot open '" + config_path + "'");
      config = read_config(in, config);
    }
    if (app.count("--workers")) config.workers = workers;
    if (app.count("--cap")) config.size_cap = cap;
    if (!mode.empty()) {
      const auto m = parse_output_mode(mode);
      if (!m) throw Error(ErrorKind::malformed_input, "unknown output mode '" + mode + "'");
      config.mode = *m;
    }
    if (!method.empty()) {
      const auto m = parse_method(method);
      if (!m) throw Error(ErrorKind::malformed_input, "unknown method '" + method + "'");
      config.method = *m;
    }

    Session session(config);
    if (*builtin) return cmd_builtin(session, args);
    if (*check_bl) return cmd_check_bl(session, args);
    if (*check_ebl) return cmd_check_ebl(session, args);
    if (*enumerate) return cmd_enumerate(session, args);
    if (*focal) return cmd_focal(session, args);
    if (*filters) return cmd_filters(session, args);
    if (*quot) return cmd_quotient(session, args);
    if (*frame) return cmd_frame_complex(session, args);
    if (*correspond) return cmd_correspond(session, args);
    if (*prove) {
      if (!args.structure.empty() && !args.algebra.empty()) {
        throw Error(ErrorKind::malformed_input, "give --structure or --algebra, not both");
      }
      return cmd_prove(session, args);
    }
    if (*suite) return cmd_paper_suite(session, args);
  } catch (const Error& e) {
    std::cerr << "eblab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
