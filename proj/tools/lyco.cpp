// lyco: command-line front end for the Lie-Yamaguti universal coacting
// algebra toolkit. Exit codes: 0 full pass, 1 mathematical failure (witness
// in the report), 2 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lycoact/hopf.hpp"
#include "lycoact/io.hpp"
#include "lycoact/lya.hpp"
#include "lycoact/rep.hpp"
#include "lycoact/symmetry.hpp"
#include "lycoact/universal.hpp"

namespace {

using namespace lyc;
namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

struct Report {
  std::string command;
  std::string format = "text";
  uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, hash
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> lines;
  bool pass = true;

  void input(const fs::path& p) { inputs.push_back({p.string(), io::file_hash(p)}); }
  void field(const std::string& k, const std::string& v) { fields.push_back({k, v}); }
  void field(const std::string& k, long v) { fields.push_back({k, std::to_string(v)}); }
  void line(const std::string& s) { lines.push_back(s); }

  void print(std::ostream& os) const {
    if (format == "json") {
      json j;
      j["command"] = command;
      j["version"] = io::kLibraryVersion;
      j["seed"] = seed;
      json in = json::array();
      for (const auto& [p, h] : inputs) in.push_back({{"path", p}, {"hash", h}});
      j["inputs"] = std::move(in);
      for (const auto& [k, v] : fields) j[k] = v;
      j["detail"] = lines;
      j["result"] = pass ? "pass" : "fail";
      os << j.dump(2) << "\n";
      return;
    }
    os << "lyco " << command << " report\n";
    os << "version: " << io::kLibraryVersion << "\n";
    os << "seed: " << seed << "\n";
    for (const auto& [p, h] : inputs) os << "input " << p << ": " << h << "\n";
    for (const auto& [k, v] : fields) os << k << ": " << v << "\n";
    for (const auto& l : lines) os << l << "\n";
    os << "result: " << (pass ? "pass" : "fail") << "\n";
  }
};

std::string witness_string(const std::vector<int>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i] + 1);
  return s + ")";
}

void report_axioms(Report& rep, const AxiomReport& ax) {
  for (const auto& c : ax.checks) {
    std::string line = c.axiom + ": " + (c.passed ? "pass" : "fail");
    if (!c.passed) line += " witness " + witness_string(c.witness);
    rep.line(line);
  }
  rep.pass = rep.pass && ax.all_passed();
}

/// Eager validation at the CLI boundary; returns false (math failure) on
/// axiom violations.
bool load_validated(const fs::path& path, Report& rep, std::optional<LYAlgebra>& out) {
  rep.input(path);
  out = io::load_algebra(path);
  AxiomReport ax = validate_lya(*out);
  if (!ax.all_passed()) {
    const AxiomCheck* f = ax.first_failure();
    rep.line("input algebra " + path.string() + " fails " + f->axiom + " at " + witness_string(f->witness));
    rep.pass = false;
    return false;
  }
  return true;
}

int run_validate(const fs::path& algebra, Report& rep) {
  rep.input(algebra);
  LYAlgebra L = io::load_algebra(algebra);
  rep.field("dim", L.dim());
  AxiomReport ax = validate_lya(L);
  report_axioms(rep, ax);
  return rep.pass ? kExitPass : kExitMathFailure;
}

int run_universal(const fs::path& lpath, const fs::path& kpath, const std::string& dump,
                  const std::string& json_dump, MonomialOrder order, Report& rep) {
  std::optional<LYAlgebra> L, K;
  if (!load_validated(lpath, rep, L)) return kExitMathFailure;
  if (!load_validated(kpath, rep, K)) return kExitMathFailure;
  Presentation pres = Presentation::build(*L, *K, order);
  rep.field("variables", pres.varset()->size());
  rep.field("generators", static_cast<long>(pres.generator_list().size()));
  rep.field("p_generators", static_cast<long>(pres.pq().P.size()));
  rep.field("q_generators", static_cast<long>(pres.pq().Q.size()));
  PhiReport phi = verify_phi(pres);
  rep.line(std::string("phi defect identity: ") +
           (phi.binary_defects_are_minus_p && phi.ternary_defects_are_minus_q ? "pass" : "fail"));
  rep.line(std::string("phi membership certificates: ") + (phi.all_certified() ? "pass" : "fail"));
  rep.pass = rep.pass && phi.all_certified();
  if (!dump.empty()) io::write_file(dump, io::presentation_text(pres));
  if (!json_dump.empty()) io::write_file(json_dump, io::presentation_json(pres).dump(2) + "\n");
  return rep.pass ? kExitPass : kExitMathFailure;
}

int run_bialgebra(const fs::path& algebra, int degree_cap, MonomialOrder order, Report& rep) {
  std::optional<LYAlgebra> L;
  if (!load_validated(algebra, rep, L)) return kExitMathFailure;
  BialgebraPresentation b = BialgebraPresentation::build(*L, order);
  CoidealReport co = verify_coideal(b, degree_cap);
  for (const auto& e : co.entries)
    rep.line(e.generator + ": eps " + (e.epsilon_zero ? "0" : "nonzero") + ", Delta membership " +
             to_string(e.delta_membership));
  rep.field("generators", static_cast<long>(co.entries.size()));
  rep.field("unknown", co.unknown_count());
  rep.pass = rep.pass && co.all_certified();
  return rep.pass ? kExitPass : kExitMathFailure;
}

int run_comodule(const fs::path& algebra, MonomialOrder order, Report& rep) {
  std::optional<LYAlgebra> L;
  if (!load_validated(algebra, rep, L)) return kExitMathFailure;
  BialgebraPresentation b = BialgebraPresentation::build(*L, order);
  ComoduleReport co = verify_comodule(b);
  rep.line(std::string("coassociativity: ") + (co.coassociativity ? "pass" : "fail"));
  rep.line(std::string("counit: ") + (co.counit ? "pass" : "fail"));
  rep.pass = rep.pass && co.passed();
  return rep.pass ? kExitPass : kExitMathFailure;
}

int run_hopf(const fs::path& algebra, int depth, int degree_cap, MonomialOrder order, const std::string& dump,
             bool s2_check, Report& rep) {
  std::optional<LYAlgebra> L;
  if (!load_validated(algebra, rep, L)) return kExitMathFailure;
  BialgebraPresentation b = BialgebraPresentation::build(*L, order);
  HopfPresentation h = hopf_envelope(b, depth);
  rep.field("depth", depth);
  rep.field("variables", h.varset()->size());
  rep.field("generators", static_cast<long>(h.generators().size()));
  CoactionReport coact = universal_coaction(*L, h, degree_cap);
  rep.line(std::string("universal coaction certificates: ") + (coact.all_certified() ? "pass" : "fail"));
  AntipodeReport anti = antipode_check(h, degree_cap);
  long checkable = 0;
  for (const auto& e : anti.entries) checkable += e.checkable;
  rep.field("antipode_checkable", checkable);
  rep.field("antipode_unknown", anti.unknown_count());
  rep.line(std::string("antipode descent: ") + (anti.all_certified() ? "pass" : "fail"));
  rep.pass = rep.pass && coact.all_certified() && anti.all_certified();
  if (s2_check) {
    AntipodeReport s2 = square_antipode_check(h, degree_cap);
    rep.field("s2_unknown", s2.unknown_count());
    rep.line(std::string("square antipode stability: ") + (s2.all_certified() ? "pass" : "fail"));
    rep.pass = rep.pass && s2.all_certified();
  }
  if (!dump.empty()) io::write_file(dump, io::hopf_text(h));
  return rep.pass ? kExitPass : kExitMathFailure;
}

int run_module_validate(const fs::path& module, Report& rep) {
  rep.input(module);
  LYModule m = io::load_module(module);
  rep.field("dim", m.mdim());
  rep.field("over_dim", m.over().dim());
  AxiomReport over = validate_lya(m.over());
  if (!over.all_passed()) {
    const AxiomCheck* f = over.first_failure();
    rep.line("over-algebra fails " + f->axiom + " at " + witness_string(f->witness));
    rep.pass = false;
    return kExitMathFailure;
  }
  report_axioms(rep, validate_module(m));
  return rep.pass ? kExitPass : kExitMathFailure;
}

int run_induce(const fs::path& module, const fs::path& kpath, const fs::path& point, const std::string& out,
               Report& rep) {
  rep.input(module);
  LYModule u = io::load_module(module);
  std::optional<LYAlgebra> K;
  if (!load_validated(kpath, rep, K)) return kExitMathFailure;
  rep.input(point);
  Presentation pres = Presentation::build(u.over(), *K);
  json pj;
  try {
    pj = json::parse(io::read_file(point));
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + point.string() + ": " + e.what());
  }
  MatrixPoint w = io::matrix_point_from_json(pres, pj);
  rep.field("wdim", w.wdim());
  LYModule ind = induced_module(u, pres, w);
  rep.field("induced_dim", ind.mdim());
  report_axioms(rep, validate_module(ind));
  if (!out.empty())
    io::write_file(out, io::module_to_json(ind, fs::absolute(kpath).string()).dump(2) + "\n");
  return rep.pass ? kExitPass : kExitMathFailure;
}

int run_universal_module(const fs::path& upath, const fs::path& vpath, const std::string& dump, Report& rep) {
  rep.input(upath);
  rep.input(vpath);
  LYModule u = io::load_module(upath);
  LYModule v = io::load_module(vpath);
  AxiomReport au = validate_module(u), av = validate_module(v);
  if (!au.all_passed() || !av.all_passed()) {
    const AxiomCheck* f = au.all_passed() ? av.first_failure() : au.first_failure();
    rep.line("input module fails " + f->axiom + " at " + witness_string(f->witness));
    rep.pass = false;
    return kExitMathFailure;
  }
  Presentation pres = Presentation::build(u.over(), v.over());
  auto [mp, gamma] = universal_module_presentation(u, v, pres);
  (void)gamma;
  rep.field("generators", mp.generator_count());
  rep.field("relations", static_cast<long>(mp.relations().size()));
  rep.field("free", mp.is_free() ? "yes" : "no");
  if (!dump.empty()) io::write_file(dump, io::module_presentation_text(mp));
  return kExitPass;
}

int run_autocheck(const fs::path& algebra, const fs::path& matrix, Report& rep) {
  std::optional<LYAlgebra> L;
  if (!load_validated(algebra, rep, L)) return kExitMathFailure;
  rep.input(matrix);
  QMatrix m = io::load_matrix(matrix);
  Presentation pres = Presentation::square(*L);
  AutoEquivalenceReport eq = automorphism_equivalence_check(pres, m);
  rep.line(std::string("automorphism: ") + (eq.direct ? "yes" : "no"));
  rep.line(std::string("point: ") + (eq.is_point ? "yes" : "no"));
  rep.line(std::string("invertible: ") + (eq.invertible ? "yes" : "no"));
  rep.line(std::string("inverse point: ") + (eq.inverse_is_point ? "yes" : "no"));
  rep.line(std::string("agreement: ") + (eq.agree() ? "yes" : "no"));
  rep.pass = rep.pass && eq.agree();
  return rep.pass ? kExitPass : kExitMathFailure;
}

int run_gradings(const fs::path& algebra, const std::string& group, Report& rep) {
  std::optional<LYAlgebra> L;
  if (!load_validated(algebra, rep, L)) return kExitMathFailure;
  auto G = FiniteAbelianGroup::parse(group);
  if (G->size() > 64) throw InputError("group size capped at 64 (got " + std::to_string(G->size()) + ")");
  std::vector<Grading> gs = enumerate_diagonal_gradings(*L, G);
  rep.field("group", group);
  rep.field("gradings", static_cast<long>(gs.size()));
  for (const auto& g : gs) rep.line(io::grading_to_json(g).dump());
  return kExitPass;
}

int run_export(const fs::path& lpath, const std::string& kpath, const std::string& target, int hopf_depth,
               const std::string& out, MonomialOrder order, Report& rep) {
  std::optional<LYAlgebra> L, K;
  if (!load_validated(lpath, rep, L)) return kExitMathFailure;
  if (!kpath.empty()) {
    if (!load_validated(kpath, rep, K)) return kExitMathFailure;
  } else {
    K = L;
  }
  Presentation pres = Presentation::build(*L, *K, order);
  std::string content;
  if (target == "cas-script") {
    if (hopf_depth > 0) {
      BialgebraPresentation b = BialgebraPresentation::build(*L, order);
      content = io::cas_script(hopf_envelope(b, hopf_depth));
    } else {
      content = io::cas_script(pres);
    }
  } else if (target == "presentation-text") {
    content = io::presentation_text(pres);
  } else if (target == "presentation-json") {
    content = io::presentation_json(pres).dump(2) + "\n";
  } else {
    throw InputError("unknown export target: " + target);
  }
  if (out.empty()) {
    rep.line(content);
  } else {
    io::write_file(out, content);
    rep.field("written", out);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lyco: universal coacting algebras of Lie-Yamaguti algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  uint64_t seed = 0;
  std::string order_name = "degrevlex";
  int degree_cap = -1;
  app.add_option("--format", format, "report format: text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed recorded in reports and used by randomized runs");
  app.add_option("--order", order_name, "monomial order: degrevlex | lex")
      ->check(CLI::IsMember({"degrevlex", "lex"}));
  app.add_option("--degree-cap", degree_cap, "degree cap for Groebner completion");

  std::string algebra, lpath, kpath, mpath, vpath, point, matrix, dump, json_dump, out, group;
  std::string target = "cas-script";
  int depth = 2;
  int hopf_depth = 0;

  CLI::App* validate = app.add_subcommand("validate", "check the LY1-LY6 axioms of an algebra file");
  validate->add_option("--algebra", algebra, "structure-constant file")->required();

  CLI::App* universal = app.add_subcommand("universal", "build the universal algebra A(L,K)");
  universal->add_option("--L", lpath, "left algebra (finite-dimensional)")->required();
  universal->add_option("--K", kpath, "right algebra")->required();
  universal->add_option("--dump", dump, "write the presentation as text");
  universal->add_option("--json-dump", json_dump, "write the presentation as JSON");

  CLI::App* bialgebra = app.add_subcommand("bialgebra", "verify the coideal property of A(L)");
  bialgebra->add_option("--algebra", algebra)->required();

  CLI::App* comodule = app.add_subcommand("comodule", "verify the comodule identities of Phi");
  comodule->add_option("--algebra", algebra)->required();

  CLI::App* hopf = app.add_subcommand("hopf", "truncated Hopf envelope with antipode certification");
  hopf->add_option("--algebra", algebra)->required();
  hopf->add_option("--depth", depth, "truncation depth (default 2)");
  hopf->add_option("--dump", dump, "write the envelope presentation as text");
  bool s2_check = false;
  hopf->add_flag("--s2-check", s2_check, "also test the x{l+2} -> x{l} substitution");

  CLI::App* module_validate = app.add_subcommand("module-validate", "check the R1-R7 module axioms");
  module_validate->add_option("--module", mpath)->required();

  CLI::App* induce = app.add_subcommand("induce", "induced K-module on U (x) W");
  induce->add_option("--module", mpath, "L-module file (U)")->required();
  induce->add_option("--K", kpath, "algebra K")->required();
  induce->add_option("--point", point, "matrix point file (W)")->required();
  induce->add_option("--out", out, "write the induced module as JSON");

  CLI::App* universal_module = app.add_subcommand("universal-module", "presentation of U(U,V)");
  universal_module->add_option("--U", mpath)->required();
  universal_module->add_option("--V", vpath)->required();
  universal_module->add_option("--dump", dump, "write the module presentation as text");

  CLI::App* autocheck = app.add_subcommand("autocheck", "dual-path automorphism check");
  autocheck->add_option("--algebra", algebra)->required();
  autocheck->add_option("--matrix", matrix)->required();

  CLI::App* gradings = app.add_subcommand("gradings", "enumerate diagonal abelian-group gradings");
  gradings->add_option("--algebra", algebra)->required();
  gradings->add_option("--group", group, "cyclic orders, e.g. 2x2")->required();

  CLI::App* exp = app.add_subcommand("export", "export presentations for external tools");
  exp->add_option("--L", lpath)->required();
  exp->add_option("--K", kpath, "defaults to L");
  exp->add_option("--target", target, "cas-script | presentation-text | presentation-json");
  exp->add_option("--hopf-depth", hopf_depth, "export the depth-d Hopf envelope ideal instead");
  exp->add_option("--out", out, "output file (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  if (degree_cap != -1 && degree_cap < 1) {
    std::cerr << "input error: --degree-cap must be positive\n";
    return kExitInputError;
  }
  if (depth < 1) {
    std::cerr << "input error: --depth must be >= 1\n";
    return kExitInputError;
  }
  MonomialOrder order = *parse_order(order_name);
  Report rep;
  rep.format = format;
  rep.seed = seed;

  try {
    int code = kExitPass;
    if (app.got_subcommand(validate)) {
      rep.command = "validate";
      code = run_validate(algebra, rep);
    } else if (app.got_subcommand(universal)) {
      rep.command = "universal";
      code = run_universal(lpath, kpath, dump, json_dump, order, rep);
    } else if (app.got_subcommand(bialgebra)) {
      rep.command = "bialgebra";
      code = run_bialgebra(algebra, degree_cap, order, rep);
    } else if (app.got_subcommand(comodule)) {
      rep.command = "comodule";
      code = run_comodule(algebra, order, rep);
    } else if (app.got_subcommand(hopf)) {
      rep.command = "hopf";
      code = run_hopf(algebra, depth, degree_cap, order, dump, s2_check, rep);
    } else if (app.got_subcommand(module_validate)) {
      rep.command = "module-validate";
      code = run_module_validate(mpath, rep);
    } else if (app.got_subcommand(induce)) {
      rep.command = "induce";
      code = run_induce(mpath, kpath, point, out, rep);
    } else if (app.got_subcommand(universal_module)) {
      rep.command = "universal-module";
      code = run_universal_module(mpath, vpath, dump, rep);
    } else if (app.got_subcommand(autocheck)) {
      rep.command = "autocheck";
      code = run_autocheck(algebra, matrix, rep);
    } else if (app.got_subcommand(gradings)) {
      rep.command = "gradings";
      code = run_gradings(algebra, group, rep);
    } else if (app.got_subcommand(exp)) {
      rep.command = "export";
      code = run_export(lpath, kpath, target, hopf_depth, out, order, rep);
    }
    rep.print(std::cout);
    return code;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    rep.line(std::string("error: ") + e.what());
    rep.pass = false;
    rep.print(std::cout);
    return kExitMathFailure;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}
