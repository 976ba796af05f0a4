#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqg_cli/cli.hpp"
#include "support.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fqg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json checks_of(const Result& r) { return nlohmann::json::parse(r.out).at("checks"); }

bool has_check(const Result& r, const std::string& name) {
  for (const auto& c : checks_of(r)) {
    if (c.at("name") == name) return true;
  }
  return false;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify passes on presets") {
    for (const char* name : {"ks3", "trivial", "fz4", "dual:fs3"}) {
      CAPTURE(name);
      const Result r = run_cli({"verify", name});
      CHECK(r.code == fqg::cli::kExitPass);
      CHECK(r.out.find("PASSED") != std::string::npos);
    }
  }

  TEST_CASE("broken algebra gives exit 1 and names the failing check") {
    const Result r = run_cli({"verify", fqg::test::data_path("broken_kz2.json"), "--format", "json"});
    CHECK(r.code == fqg::cli::kExitChecksFailed);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("summary").at("overall_pass") == false);
    bool named = false;
    for (const auto& c : doc.at("checks")) {
      if (c.at("pass") == false && c.at("name").get<std::string>().rfind("axioms.", 0) == 0) named = true;
    }
    CHECK(named);
  }

  TEST_CASE("structural errors give exit 2") {
    CHECK(run_cli({"verify", "nope"}).code == fqg::cli::kExitStructural);
    CHECK(run_cli({"verify", fqg::test::data_path("bad_version.json")}).code == fqg::cli::kExitStructural);
    CHECK(run_cli({"verify", fqg::test::data_path("unknown_field.json")}).code == fqg::cli::kExitStructural);
    CHECK(run_cli({"verify"}).code == fqg::cli::kExitStructural);
    CHECK(run_cli({"frobnicate"}).code == fqg::cli::kExitStructural);
    CHECK(run_cli({"preset", "ks3", "-o", "/nonexistent-dir/a/b.json"}).code == fqg::cli::kExitStructural);
    CHECK(run_cli({"preset", "kz9", "-o", temp_file("fqg_cli_never.json").string()}).code ==
          fqg::cli::kExitStructural);
    CHECK(run_cli({"action", "ks3", "--group", "s3", "--automorphisms", "conjugation", "--mode", "full"}).code ==
          fqg::cli::kExitStructural);
    CHECK(run_cli({"action", "kz3", "--group", fqg::test::data_path("non_latin_cayley.json"), "--automorphisms",
                   "trivial"})
              .code == fqg::cli::kExitStructural);
    CHECK(run_cli({"verify", "ks3", "--only", "zzz*"}).code == fqg::cli::kExitStructural);
  }

  TEST_CASE("action on kz3 by inversion in full mode") {
    const Result r = run_cli(
        {"action", "kz3", "--group", "z2", "--automorphisms", "inversion", "--mode", "full", "--format", "json"});
    CHECK(r.code == fqg::cli::kExitPass);
    CHECK(has_check(r, "commutativity.five_leg_commutator"));
    CHECK(has_check(r, "commutativity.V_comultiplication"));
    CHECK(has_check(r, "strong_invariance.strong_right_invariance"));
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("provenance").at("mode") == "full");
    CHECK(doc.at("provenance").at("group_order") == 2);
  }

  TEST_CASE("action on ks3 by conjugation in sliced mode") {
    const Result r = run_cli({"action", "ks3", "--group", "s3", "--automorphisms", "conjugation", "--format", "json"});
    CHECK(r.code == fqg::cli::kExitPass);
    CHECK(has_check(r, "commutativity.slice_commutators"));
    CHECK(has_check(r, "intertwiner.intertwiner"));
  }

  TEST_CASE("inversion on kz2 is trivial and says so") {
    const Result r = run_cli({"action", "kz2", "--group", "z2", "--automorphisms", "inversion"});
    CHECK(r.code == fqg::cli::kExitPass);
    CHECK(r.out.find("θ is trivial") != std::string::npos);
  }

  TEST_CASE("spec files") {
    CHECK(run_cli({"action", "--spec", fqg::test::data_path("kz3_inversion_action.json")}).code == fqg::cli::kExitPass);
    const Result bad = run_cli({"action", "--spec", fqg::test::data_path("kz2_not_automorphism_action.json")});
    CHECK(bad.code == fqg::cli::kExitChecksFailed);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(run_cli({"action", "kz3", "--group", "z2", "--automorphisms", fqg::test::data_path("kz3_inversion_theta.json")})
              .code == fqg::cli::kExitPass);
    CHECK(run_cli({"action", "kz3", "--spec", fqg::test::data_path("kz3_inversion_action.json")}).code ==
          fqg::cli::kExitStructural);
  }

  TEST_CASE("an exported preset verifies like the preset") {
    const auto path = temp_file("fqg_cli_fs3.json");
    REQUIRE(run_cli({"preset", "fs3", "-o", path.string()}).code == fqg::cli::kExitPass);
    const Result from_preset = run_cli({"verify", "fs3", "--format", "json"});
    const Result from_file = run_cli({"verify", path.string(), "--format", "json"});
    CHECK(checks_of(from_preset) == checks_of(from_file));
    std::filesystem::remove(path);
  }

  TEST_CASE("dual export round trip") {
    const auto path = temp_file("fqg_cli_dual_ks3.json");
    REQUIRE(run_cli({"dual", "ks3", "-o", path.string()}).code == fqg::cli::kExitPass);
    const Result r = run_cli({"verify", path.string(), "--format", "json"});
    CHECK(r.code == fqg::cli::kExitPass);
    CHECK(nlohmann::json::parse(r.out).at("provenance").at("dim") == 6);
    std::filesystem::remove(path);
  }

  TEST_CASE("only filter keeps matching checks") {
    const Result r = run_cli({"verify", "kz3", "--only", "pentagon.*", "--format", "json"});
    CHECK(r.code == fqg::cli::kExitPass);
    for (const auto& c : checks_of(r)) CHECK(c.at("name").get<std::string>().rfind("pentagon.", 0) == 0);
    CHECK_FALSE(checks_of(r).empty());
  }

  TEST_CASE("json output is deterministic") {
    const Result a = run_cli({"verify", "ks3", "--format", "json"});
    const Result b = run_cli({"verify", "ks3", "--format", "json"});
    CHECK(a.out == b.out);
  }

  TEST_CASE("preset list") {
    const Result r = run_cli({"preset", "--list"});
    CHECK(r.code == fqg::cli::kExitPass);
    CHECK(r.out.find("dual:fs3") != std::string::npos);
  }
}
