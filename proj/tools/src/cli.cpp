#include "kanact/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kanact/error.hpp"
#include "kanact/homology.hpp"
#include "kanact/io.hpp"
#include "kanact/nerve.hpp"
#include "kanact/selftest.hpp"

namespace kanact {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string input;
  std::string second;
  std::string quotient;
  std::string action;
  std::string out;
  std::optional<int> dim;
  std::optional<int> coeff;
  std::optional<int> max_deg;
  int depth = 2;
  bool quiet = false;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int validate();
  int group();
  int nerve();
  int pi1();
  int cover();
  int lift();
  int fixed();
  int homology();
  int product();
  int verify();
  int selftest();

 private:
  SSetPresentation complex(const std::string& path) const {
    return complex_from_json(read_json_file(path));
  }
  QuotientMap quotient(const SSetPresentation& k) const {
    if (o_.quotient.empty()) throw Error(ErrorCode::SchemaError, "--quotient is required");
    return quotient_from_json(read_json_file(o_.quotient), k, fs::path(o_.quotient).parent_path());
  }
  SimplicialAction action(const SSetPresentation& k) const {
    if (o_.action.empty()) throw Error(ErrorCode::SchemaError, "--action is required");
    return action_from_json(read_json_file(o_.action), k, fs::path(o_.action).parent_path());
  }
  int depth_for(const SSetPresentation& x) const {
    if (o_.depth < 0 || o_.depth + 1 > x.max_dim()) {
      throw Error(ErrorCode::InvariantViolation, "check_depth + 1 <= truncation");
    }
    return o_.depth;
  }
  // JSON goes to --out, or to stdout when no file is given; notes then go to
  // stderr so stdout stays parseable.
  void emit(const Json& j) {
    if (o_.out.empty()) {
      out_ << canonical_dump(j);
    } else {
      write_text_file(o_.out, canonical_dump(j));
    }
  }
  std::ostream& notes() { return o_.out.empty() ? err_ : out_; }
  void note(const std::string& line) {
    if (!o_.quiet) notes() << line << "\n";
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

int Runner::validate() {
  const auto j = read_json_file(o_.input);
  if (j.is_object() && j.contains("theorems")) {
    const auto c = load_case(o_.input);
    note("case " + c.name + ": ok");
    return kExitPass;
  }
  if (j.is_object() && j.contains("table")) {
    const auto g = group_from_json(j);
    note("group " + g.name() + " of order " + std::to_string(g.order()) + ": ok");
    return kExitPass;
  }
  const auto x = complex_from_json(j, false);
  const auto report = kanact::validate(x);
  for (const auto& s : report.structural) err_ << s << "\n";
  for (const auto& v : report.identities) err_ << describe(x, v) << "\n";
  if (!report.ok()) return kExitInput;
  std::string counts;
  for (int n = 0; n <= x.max_dim(); ++n) {
    counts += (n ? " " : "") + std::to_string(x.generator_count(n));
  }
  note("complex " + x.name() + ": ok, generators per dimension " + counts);
  if (!o_.quotient.empty()) {
    const auto q = quotient(x);
    note("quotient onto " + q.group.name() + ": ok");
  }
  if (!o_.action.empty()) {
    const auto a = action(x);
    note("action of " + a.group.name() + ": ok");
  }
  return kExitPass;
}

int Runner::group() {
  emit(group_to_json(resolve_group(Json(o_.input), fs::current_path())));
  return kExitPass;
}

int Runner::nerve() {
  if (!o_.dim) throw Error(ErrorCode::SchemaError, "--dim is required");
  const auto g = resolve_group(Json(o_.input), fs::current_path());
  emit(complex_to_json(nerve_of_group(g, *o_.dim)));
  return kExitPass;
}

int Runner::pi1() {
  const auto k = complex(o_.input);
  const auto p = pi1_presentation(k);
  std::string gens;
  for (Index e = 0; e < p.generator_count; ++e) gens += " " + k.generator_name(1, e);
  out_ << "generators (" << p.generator_count << "):" << gens << "\n";
  out_ << "relators (" << p.relators.size() << "):\n";
  for (const auto& r : p.relators) out_ << "  " << relator_text(k, r) << "\n";
  return kExitPass;
}

int Runner::cover() {
  const auto k = complex(o_.input);
  const auto c = build_cover(k, quotient(k));
  emit(complex_to_json(c.total));
  const auto report = verify_covering(c, depth_for(c.total));
  note("cover of " + k.name() + " by " + c.q.group.name() + ": " +
       std::to_string(c.total.generator_count(0)) + " vertices, " +
       std::to_string(report.lifts_checked) + " lifts checked, " +
       std::to_string(report.violations.size()) + " violations, Kan " +
       (report.total_kan.ok() ? "yes" : "no"));
  for (const auto& v : report.violations) err_ << v << "\n";
  return report.ok() ? kExitPass : kExitFail;
}

int Runner::lift() {
  const auto k = complex(o_.input);
  const auto c = build_cover(k, quotient(k));
  const auto a = action(k);
  const auto lifted = lift_action(c, a);
  emit(action_to_json(lifted.total, c.total, group_to_json(a.group)));
  for (Index g = 0; g < a.group.order(); ++g) {
    std::string images;
    for (Index x : lifted.star.phi[g]) images += " " + c.q.group.element_name(x);
    note(a.group.element_name(g) + "_* :" + images);
  }
  const auto check = verify_rb_lemmas(c, lifted, depth_for(c.total));
  note(check.name + ": " + std::to_string(check.checks) + " checks, " +
       std::to_string(check.violation_count) + " violations");
  for (const auto& v : check.violations) err_ << v << "\n";
  return check.ok() ? kExitPass : kExitFail;
}

int Runner::fixed() {
  const auto k = complex(o_.input);
  const auto c = build_cover(k, quotient(k));
  const auto lifted = lift_action(c, action(k));
  const auto fd = fixed_data(c, lifted);
  emit(complex_to_json(fd.k_g));
  std::string gamma;
  for (Index x : fd.gamma) gamma += " " + c.q.group.element_name(x);
  note("Gamma:" + gamma);
  std::string counts;
  for (int n = 0; n <= fd.k_g.max_dim(); ++n) {
    counts += (n ? " " : "") + std::to_string(fd.k_g.generator_count(n));
  }
  note("K^G generators per dimension: " + counts);
  note("E vertices: " + std::to_string(fd.e.generator_count(0)));
  return kExitPass;
}

int Runner::homology() {
  auto k = complex(o_.input);
  if (o_.max_deg) {
    if (*o_.max_deg < 0) throw Error(ErrorCode::SchemaError, "--max-deg must be >= 0");
    if (*o_.max_deg + 1 < k.max_dim()) k = truncate(k, *o_.max_deg + 1);
  }
  const auto chain = boundary_matrices(k);
  const auto result = o_.coeff ? mod_p_cohomology(chain, *o_.coeff) : integral_homology(chain);
  if (!o_.quiet) out_ << "complex " << k.name() << "\n" << format_homology(result);
  if (o_.coeff) {
    const bool uct = universal_coefficients_hold(integral_homology(chain), result);
    if (!o_.quiet) out_ << "universal coefficients: " << (uct ? "ok" : "MISMATCH") << "\n";
    if (!uct) return kExitFail;
  }
  if (!o_.out.empty()) write_text_file(o_.out, canonical_dump(homology_to_json(result)));
  return kExitPass;
}

int Runner::product() {
  emit(complex_to_json(cartesian_product(complex(o_.input), complex(o_.second))));
  return kExitPass;
}

int Runner::verify() {
  const auto c = load_case(o_.input);
  const auto reports = run_case(c);
  if (!o_.quiet) out_ << format_reports(c.name, reports);
  if (!o_.out.empty()) write_text_file(o_.out, canonical_dump(reports_to_json(c.name, reports)));
  switch (combine(reports)) {
    case Outcome::pass: return kExitPass;
    case Outcome::fail: return kExitFail;
    case Outcome::hypothesis_failed: return kExitHypothesis;
  }
  return kExitFail;
}

int Runner::selftest() {
  bool ok = true;
  for (const auto& line : run_selftest()) {
    ok = ok && line.ok;
    if (!o_.quiet) {
      out_ << (line.ok ? "pass  " : "FAIL  ") << line.name;
      if (!line.detail.empty()) out_ << ": " << line.detail;
      out_ << "\n";
    }
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"kanact: simplicial sets, covers and finite group actions"};
  app.require_subcommand(1);
  Options o;

  auto out_opt = [&](CLI::App* s) { s->add_option("--out", o.out, "output file"); };
  auto quiet_opt = [&](CLI::App* s) { s->add_flag("--quiet", o.quiet, "suppress the report"); };
  auto depth_opt = [&](CLI::App* s) {
    s->add_option("--depth", o.depth, "check depth")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "check a complex, group or case file");
  validate->add_option("file", o.input)->required();
  validate->add_option("--quotient", o.quotient, "quotient file for the complex");
  validate->add_option("--action", o.action, "action file for the complex");
  quiet_opt(validate);

  auto* group = app.add_subcommand("group", "write a group file from a spec such as Z3 or S3");
  group->add_option("spec", o.input)->required();
  out_opt(group);

  auto* nerve = app.add_subcommand("nerve", "nerve of a finite group");
  nerve->add_option("group", o.input, "spec or group file")->required();
  nerve->add_option("--dim", o.dim, "truncation")->required();
  out_opt(nerve);

  auto* pi1 = app.add_subcommand("pi1", "edge-path presentation of pi_1");
  pi1->add_option("complex", o.input)->required();

  auto* cover = app.add_subcommand("cover", "regular cover along a quotient of pi_1");
  cover->add_option("complex", o.input)->required();
  cover->add_option("--quotient", o.quotient)->required();
  depth_opt(cover);
  out_opt(cover);
  quiet_opt(cover);

  auto* lift = app.add_subcommand("lift", "lift an action to the cover");
  lift->add_option("complex", o.input)->required();
  lift->add_option("--quotient", o.quotient)->required();
  lift->add_option("--action", o.action)->required();
  depth_opt(lift);
  out_opt(lift);
  quiet_opt(lift);

  auto* fixed = app.add_subcommand("fixed", "fixed subcomplex and Gamma");
  fixed->add_option("complex", o.input)->required();
  fixed->add_option("--quotient", o.quotient)->required();
  fixed->add_option("--action", o.action)->required();
  out_opt(fixed);
  quiet_opt(fixed);

  auto* homology = app.add_subcommand("homology", "integral homology or mod-p cohomology");
  homology->add_option("complex", o.input)->required();
  homology->add_option("--coeff", o.coeff, "prime p for F_p coefficients");
  homology->add_option("--max-deg", o.max_deg, "highest degree of interest");
  out_opt(homology);
  quiet_opt(homology);

  auto* product = app.add_subcommand("product", "cartesian product of two complexes");
  product->add_option("x", o.input)->required();
  product->add_option("y", o.second)->required();
  out_opt(product);

  auto* verify = app.add_subcommand("verify", "run the theorem checks of a case file");
  verify->add_option("case", o.input)->required();
  out_opt(verify);
  quiet_opt(verify);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  quiet_opt(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << e.what() << "\n";
    return kExitInput;
  }

  Runner r(o, out, err);
  try {
    if (validate->parsed()) return r.validate();
    if (group->parsed()) return r.group();
    if (nerve->parsed()) return r.nerve();
    if (pi1->parsed()) return r.pi1();
    if (cover->parsed()) return r.cover();
    if (lift->parsed()) return r.lift();
    if (fixed->parsed()) return r.fixed();
    if (homology->parsed()) return r.homology();
    if (product->parsed()) return r.product();
    if (verify->parsed()) return r.verify();
    if (selftest->parsed()) return r.selftest();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::HypothesisFailed ? kExitHypothesis : kExitInput;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace kanact
