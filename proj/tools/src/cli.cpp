#include "fqg_cli/cli.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqg/actions.hpp"
#include "fqg/builders.hpp"
#include "fqg/dual.hpp"
#include "fqg/error.hpp"
#include "fqg/serialization.hpp"

namespace fqg::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct SuiteConfig {
  double tolerance = kDefaultTolerance;
  std::string format = "text";
  std::vector<std::string> only;
  std::string mode = "auto";
};

bool is_structural(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SchemaVersionMismatch:
    case ErrorCode::UnknownPreset:
    case ErrorCode::IoError:
    case ErrorCode::InvalidGroupTable:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ModeUnavailable:
      return true;
    default:
      return false;
  }
}

/// Runs verification stages in order. A mathematical failure inside a stage
/// becomes a failed check and skips the remaining stages, since they depend
/// on what the failed stage would have produced.
class SuiteRunner {
 public:
  void stage(const std::string& prefix, const std::function<VerificationReport()>& body) {
    if (stopped_) return;
    try {
      report_.merge(body(), prefix);
    } catch (const Error& e) {
      if (is_structural(e.code())) throw;
      report_.add_outcome(prefix + "error", false, std::numeric_limits<double>::infinity(), 0.0,
                          e.what());
      notes_.push_back("stopped after stage '" + prefix.substr(0, prefix.size() - 1) + "'");
      stopped_ = true;
    }
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }
  const VerificationReport& report() const { return report_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  VerificationReport report_;
  std::vector<std::string> notes_;
  bool stopped_ = false;
};

/// Keeps, for every check name, the instance with the largest residual.
VerificationReport worst_of(const std::vector<VerificationReport>& reports) {
  std::vector<std::string> order;
  std::map<std::string, Check> worst;
  for (const VerificationReport& r : reports) {
    for (const Check& c : r.checks()) {
      auto it = worst.find(c.name);
      if (it == worst.end()) {
        order.push_back(c.name);
        worst.emplace(c.name, c);
      } else if (!c.pass || (it->second.pass && c.residual > it->second.residual)) {
        it->second = c;
      }
    }
  }
  VerificationReport out;
  for (const std::string& name : order) {
    const Check& c = worst.at(name);
    out.add_outcome(c.name, c.pass, c.residual, c.tolerance, c.note);
  }
  return out;
}

PresetAlgebra resolve_algebra(const std::string& input, const fs::path& base = {}) {
  try {
    return describe_preset(input);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownPreset) throw;
  }
  const fs::path path = base.empty() || fs::path(input).is_absolute() ? fs::path(input) : base / input;
  if (!fs::is_regular_file(path)) {
    throw Error(ErrorCode::UnknownPreset, "'" + input + "' is neither a preset nor a readable file");
  }
  return {load_algebra(path), PresetKind::Loaded, std::nullopt};
}

CayleyTable resolve_group(const std::string& input, const fs::path& base = {}) {
  try {
    return group_preset(input);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownPreset) throw;
  }
  const fs::path path = base.empty() || fs::path(input).is_absolute() ? fs::path(input) : base / input;
  if (!fs::is_regular_file(path)) {
    throw Error(ErrorCode::UnknownPreset, "'" + input + "' is neither a group preset nor a readable file");
  }
  return cayley_from_json(read_text_file(path));
}

bool is_family(const std::string& name) {
  return name == "trivial" || name == "inversion" || name == "conjugation";
}

std::string format_number(double v) {
  std::ostringstream ss;
  ss << std::setprecision(3) << std::scientific << v;
  return ss.str();
}

bool selected(const std::string& name, const std::vector<std::string>& globs) {
  if (globs.empty()) return true;
  return std::any_of(globs.begin(), globs.end(),
                     [&](const std::string& g) { return fnmatch(g.c_str(), name.c_str(), 0) == 0; });
}

/// Emits the (possibly filtered) report and returns the exit code.
int emit(const std::string& command, const Json& provenance, const SuiteRunner& run, const SuiteConfig& config,
         std::ostream& out, std::ostream& err) {
  std::vector<Check> checks;
  for (const Check& c : run.report().checks()) {
    if (selected(c.name, config.only)) checks.push_back(c);
  }
  if (checks.empty()) {
    err << "fqg " << command << ": no checks match the --only filter\n";
    return kExitStructural;
  }
  std::size_t failed = 0;
  double max_residual = 0.0;
  for (const Check& c : checks) {
    if (!c.pass) ++failed;
    if (std::isfinite(c.residual)) max_residual = std::max(max_residual, c.residual);
  }
  const bool pass = failed == 0;

  if (config.format == "json") {
    Json doc;
    doc["provenance"] = provenance;
    Json list = Json::array();
    for (const Check& c : checks) {
      Json entry;
      entry["name"] = c.name;
      entry["residual"] = c.residual;
      entry["tolerance"] = c.tolerance;
      entry["pass"] = c.pass;
      if (!c.note.empty()) entry["note"] = c.note;
      list.push_back(std::move(entry));
    }
    doc["checks"] = std::move(list);
    doc["notes"] = run.notes();
    doc["summary"] = {{"total", checks.size()}, {"failed", failed}, {"max_residual", max_residual},
                      {"overall_pass", pass}};
    out << doc.dump(2) << '\n';
  } else {
    out << "fqg " << command << " " << provenance.value("algebra", std::string()) << " (tolerance "
        << format_number(config.tolerance) << ")\n";
    for (const Check& c : checks) {
      out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  residual " << format_number(c.residual) << "  tol "
          << format_number(c.tolerance);
      if (!c.note.empty()) out << "  [" << c.note << "]";
      out << '\n';
    }
    for (const std::string& n : run.notes()) out << "note: " << n << '\n';
    out << (pass ? "PASSED" : "FAILED") << ": " << checks.size() << " checks, " << failed << " failed, max residual "
        << format_number(max_residual) << '\n';
  }
  return pass ? kExitPass : kExitChecksFailed;
}

Json base_provenance(const std::string& command, const FiniteHopfStarAlgebra& a, const SuiteConfig& config) {
  Json p;
  p["command"] = command;
  p["format_version"] = kFormatVersion;
  p["algebra"] = a.name();
  p["dim"] = a.dim();
  p["input_hash"] = fnv1a_hex(algebra_to_json(a));
  p["tolerance"] = config.tolerance;
  return p;
}

int cmd_verify(const std::string& input, const SuiteConfig& config, std::ostream& out, std::ostream& err) {
  const PresetAlgebra resolved = resolve_algebra(input);
  const FiniteHopfStarAlgebra& a = resolved.algebra;
  const double tol = config.tolerance;

  SuiteRunner run;
  std::optional<Functional> h;
  std::optional<GnsData> gns;
  std::optional<MultiplicativeUnitary> w;
  std::optional<DualSubspace> dual;

  run.stage("axioms.", [&] { return verify_hopf_star_axioms(a, tol); });
  run.stage("haar.", [&] {
    const HaarSolution sol = solve_haar(a, tol);
    h = sol.haar;
    VerificationReport r = verify_haar(a, *h, tol);
    r.add_outcome("unique", sol.nullity == 1, std::abs(static_cast<double>(sol.nullity - 1)), 0.0,
                  "nullity " + std::to_string(sol.nullity) + ", spectral gap " + format_number(sol.spectral_gap));
    return r;
  });
  run.stage("gns.", [&] {
    gns = gns_construct(a, *h, tol);
    return verify_gns(a, *gns, tol);
  });
  run.stage("trace.", [&] { return verify_trace(a, *h, tol); });
  run.stage("W.", [&] {
    w = build_W(a, *gns, tol);
    VerificationReport r;
    r.add("expansion", w->expansion_residual(), tol * std::max(1.0, w->w().norm()));
    return r;
  });
  run.stage("unitarity.", [&] { return verify_unitarity(w->w(), tol); });
  run.stage("pentagon.", [&] { return verify_pentagon(w->w(), tol); });
  run.stage("slices.", [&] { return verify_left_slices_span_A(*w, tol); });
  run.stage("comultiplication.", [&] {
    std::vector<VerificationReport> per_basis;
    for (Index i = 0; i < a.dim(); ++i) per_basis.push_back(comultiplication_via_W(*w, a.basis_vector(i), tol));
    return worst_of(per_basis);
  });
  run.stage("antipode.", [&] {
    VerificationReport r = verify_inverse_via_antipode(*w, tol);
    r.merge(verify_antipode_relation(*w, tol));
    return r;
  });
  run.stage("dual_subspace.", [&] {
    dual = build_dual_subspace(*w, tol);
    return dual->report;
  });
  run.stage("dual_comultiplication.", [&] { return verify_dual_comultiplication(*w, *dual, tol); });
  run.stage("dual_axioms.", [&] { return verify_hopf_star_axioms(build_dual(a), tol); });
  run.stage("G.", [&] { return verify_G_isomorphism(*w, *dual, tol); });
  run.stage("fourier.", [&] {
    VerificationReport r = verify_fourier(a, *h, tol);
    r.merge(verify_gamma_closed_form(*w, *h, tol));
    return r;
  });

  return emit("verify", base_provenance("verify", a, config), run, config, out, err);
}

CommutativityMode parse_mode(const std::string& mode) {
  if (mode == "full") return CommutativityMode::Full;
  if (mode == "sliced") return CommutativityMode::Sliced;
  return CommutativityMode::Auto;
}

std::string theta_digest(const std::vector<Matrix>& theta) {
  std::ostringstream ss;
  ss << std::setprecision(17);
  for (const Matrix& t : theta) {
    for (Index i = 0; i < t.rows(); ++i) {
      for (Index j = 0; j < t.cols(); ++j) ss << t(i, j).real() << ',' << t(i, j).imag() << ';';
    }
    ss << '|';
  }
  return fnv1a_hex(ss.str());
}

int cmd_action(const PresetAlgebra& resolved, const CayleyTable& group, const std::vector<Matrix>& theta,
               const std::string& automorphisms, const SuiteConfig& config, std::ostream& out, std::ostream& err) {
  const FiniteHopfStarAlgebra& a = resolved.algebra;
  const double tol = config.tolerance;
  if (static_cast<Index>(theta.size()) != group.order()) {
    throw Error(ErrorCode::InvalidArgument, "the action lists " + std::to_string(theta.size()) +
                                                " automorphisms for a group of order " +
                                                std::to_string(group.order()));
  }
  const CommutativityMode mode = resolve_mode(parse_mode(config.mode), a.dim(), group.order());

  SuiteRunner run;
  std::optional<FiniteGroupAction> action;
  std::optional<Functional> h;
  std::optional<MultiplicativeUnitary> w;
  std::optional<DualSubspace> dual;
  std::optional<IntertwinerData> data;

  run.stage("action.", [&] {
    action = build_group_action(a, group, theta, tol);
    if (action->is_trivial(tol)) run.note("θ is trivial: every group element acts as the identity");
    return action->report();
  });
  run.stage("haar.", [&] {
    h = compute_haar(a, tol);
    return verify_haar(a, *h, tol);
  });
  run.stage("W.", [&] {
    const GnsData gns = gns_construct(a, *h, tol);
    w = build_W(a, gns, tol);
    VerificationReport r = verify_unitarity(w->w(), tol);
    r.merge(verify_pentagon(w->w(), tol));
    return r;
  });
  run.stage("dual_subspace.", [&] {
    dual = build_dual_subspace(*w, tol);
    return dual->report;
  });
  run.stage("invariance.", [&] { return verify_haar_invariance(*action, *h, tol); });
  run.stage("strong_invariance.", [&] { return verify_strong_right_invariance(*action, *h, tol); });
  run.stage("maps.", [&] {
    data = build_intertwiner(*action, *w, *dual, *h, tol);
    return data->report;
  });
  run.stage("intertwiner.", [&] { return verify_main_intertwiner(*action, *w, *dual, *data, *h, tol); });
  run.stage("commutativity.", [&] { return verify_slice_commutativity(*action, *w, *dual, *data, tol, mode); });

  Json provenance = base_provenance("action", a, config);
  provenance["group_order"] = group.order();
  std::ostringstream table;
  for (const auto& row : group.table()) {
    for (Index v : row) table << v << ',';
    table << ';';
  }
  provenance["group_hash"] = fnv1a_hex(table.str());
  provenance["automorphisms"] = automorphisms;
  provenance["automorphisms_hash"] = theta_digest(theta);
  provenance["mode"] = mode == CommutativityMode::Full ? "full" : "sliced";
  return emit("action", provenance, run, config, out, err);
}

std::vector<Matrix> resolve_automorphisms(const std::string& spec, const PresetAlgebra& algebra,
                                          const CayleyTable& group, const fs::path& base = {}) {
  if (is_family(spec)) return automorphism_preset(spec, algebra, group);
  const fs::path path = base.empty() || fs::path(spec).is_absolute() ? fs::path(spec) : base / spec;
  if (!fs::is_regular_file(path)) {
    throw Error(ErrorCode::UnknownPreset, "'" + spec + "' is neither an automorphism family nor a readable file");
  }
  return materialize(automorphisms_from_json(read_text_file(path)), algebra.algebra.dim());
}

void add_suite_options(CLI::App* cmd, SuiteConfig& config) {
  cmd->add_option("--tol", config.tolerance, "Residual tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--format", config.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--only", config.only, "Only report checks whose names match these globs");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quantum group verification tool", "fqg"};
  app.require_subcommand(1);
  SuiteConfig config;

  std::string input;
  std::string output;
  std::string group_arg;
  std::string automorphisms_arg;
  std::string spec_path;
  bool list = false;

  CLI::App* verify = app.add_subcommand("verify", "Run the full verification suite on an algebra");
  verify->add_option("input", input, "Preset name or algebra JSON file")->required();
  add_suite_options(verify, config);

  CLI::App* action = app.add_subcommand("action", "Verify a finite group action by Hopf *-automorphisms");
  action->add_option("input", input, "Preset name or algebra JSON file");
  action->add_option("--group", group_arg, "Group preset (trivial, z1..z6, s3) or Cayley table JSON file");
  action->add_option("--automorphisms", automorphisms_arg,
                     "trivial, inversion, conjugation, or a JSON file of matrices");
  action->add_option("--spec", spec_path, "Action specification JSON file");
  action->add_option("--mode", config.mode, "Commutation check mode")
      ->check(CLI::IsMember({"auto", "full", "sliced"}));
  add_suite_options(action, config);

  CLI::App* preset_cmd = app.add_subcommand("preset", "Write a preset algebra to a JSON file");
  preset_cmd->add_option("name", input, "Preset name");
  preset_cmd->add_option("-o,--output", output, "Output path");
  preset_cmd->add_flag("--list", list, "List preset names");

  CLI::App* dual_cmd = app.add_subcommand("dual", "Write the dual Hopf *-algebra to a JSON file");
  dual_cmd->add_option("input", input, "Preset name or algebra JSON file")->required();
  dual_cmd->add_option("-o,--output", output, "Output path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitStructural;
  }

  try {
    if (verify->parsed()) return cmd_verify(input, config, out, err);

    if (action->parsed()) {
      if (!spec_path.empty()) {
        if (!input.empty() || !group_arg.empty() || !automorphisms_arg.empty()) {
          err << "fqg action: --spec cannot be combined with an input, --group or --automorphisms\n";
          return kExitStructural;
        }
        const ActionSpec spec = action_spec_from_json(read_text_file(spec_path));
        const fs::path base = fs::path(spec_path).parent_path();
        const PresetAlgebra algebra = resolve_algebra(spec.algebra, base);
        const CayleyTable group = std::holds_alternative<CayleyTable>(spec.group)
                                      ? std::get<CayleyTable>(spec.group)
                                      : resolve_group(std::get<std::string>(spec.group), base);
        std::vector<Matrix> theta;
        std::string label;
        if (std::holds_alternative<std::string>(spec.automorphisms)) {
          label = std::get<std::string>(spec.automorphisms);
          theta = resolve_automorphisms(label, algebra, group, base);
        } else {
          label = "explicit";
          theta = materialize(std::get<std::vector<SparseEntries>>(spec.automorphisms), algebra.algebra.dim());
        }
        return cmd_action(algebra, group, theta, label, config, out, err);
      }
      if (input.empty() || group_arg.empty() || automorphisms_arg.empty()) {
        err << "fqg action: need an input, --group and --automorphisms (or --spec)\n";
        return kExitStructural;
      }
      const PresetAlgebra algebra = resolve_algebra(input);
      const CayleyTable group = resolve_group(group_arg);
      const std::vector<Matrix> theta = resolve_automorphisms(automorphisms_arg, algebra, group);
      const std::string label = is_family(automorphisms_arg) ? automorphisms_arg : "explicit";
      return cmd_action(algebra, group, theta, label, config, out, err);
    }

    if (preset_cmd->parsed()) {
      if (list) {
        for (const std::string& name : preset_names()) out << name << '\n';
        return kExitPass;
      }
      if (input.empty() || output.empty()) {
        err << "fqg preset: need a preset name and -o <path>\n";
        return kExitStructural;
      }
      save_algebra(preset(input), output);
      return kExitPass;
    }

    if (dual_cmd->parsed()) {
      save_algebra(dual_concrete(resolve_algebra(input).algebra), output);
      return kExitPass;
    }
  } catch (const Error& e) {
    err << "fqg: " << e.what() << '\n';
    return kExitStructural;
  } catch (const std::exception& e) {
    err << "fqg: " << e.what() << '\n';
    return kExitStructural;
  }
  return kExitStructural;
}

}  // namespace fqg::cli
