// symgen: build, verify and enumerate the symmetric presentations of the
// simply laced Weyl groups W(A_n), W(D_n), W(E_6), W(E_7), W(E_8).
//
// Exit codes: 0 success, 1 check failure, 2 cap exceeded, 3 bad config.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symgen/coset_enum.hpp"
#include "symgen/dihedral.hpp"
#include "symgen/expected.hpp"
#include "symgen/gf2.hpp"
#include "symgen/matrix_io.hpp"
#include "symgen/oracles.hpp"
#include "symgen/properties.hpp"
#include "symgen/representation.hpp"

namespace {

using namespace symgen;

enum Exit { kOk = 0, kCheckFailed = 1, kCapExceeded = 2, kBadConfig = 3 };

struct RunConfig {
  std::string command;
  std::string family;
  std::size_t n = 0;
  std::string format = "text";
  std::string out;
  std::uint64_t cap = 0;
  bool mod2 = false;
  std::uint64_t seed = kDefaultSeed;
  bool experimental = false;
  std::size_t trials = 500;
};

class BadConfig : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json report_json(CheckReport const& r) {
  nlohmann::ordered_json j;
  j["title"] = r.title;
  j["passed"] = r.passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (auto const& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["warnings"] = r.warnings;
  return j;
}

CheckReport property_report(std::vector<PropertyResult> const& results) {
  CheckReport r;
  r.title = "property suites";
  for (auto const& p : results) {
    std::string detail = std::to_string(p.trials) + " trials, " + std::to_string(p.failures) + " failures";
    if (!p.first_failure.empty()) detail += "; first: " + p.first_failure;
    r.add(p.name, p.passed(), detail);
  }
  return r;
}

// Everything `verify` runs, in order.
std::vector<CheckReport> verification_reports(FamilySpec const& spec, bool mod2) {
  std::vector<CheckReport> reports{verify_representation(spec)};
  Representation rep(spec);
  switch (spec.family()) {
    case Family::A:
    case Family::D: {
      CheckReport oracle;
      oracle.title = "oracle " + spec.name();
      if (spec.n() <= 7 && (spec.family() == Family::A || spec.n() <= 6)) {
        auto o = oracle_group_order(spec.family(), spec.n());
        oracle.add("oracle group order = " + std::to_string(order_table(spec.family(), spec.n())),
                   o.matches_table, std::to_string(o.order) + (o.exhaustive ? " by closure" : " from table"));
      }
      if (spec.family() == Family::D && spec.n() <= 8) reports.push_back(dn_structure_check(spec));
      auto d = dihedral_intersection_check(rep, spec.subsets().at(0), spec.subsets().at(1));
      oracle.add("<t_a, t_b> ∩ N inside C_N(Stab_N(a, b)) for the first two generators", d.contained,
                 std::to_string(d.intersection.size()) + " control elements in a dihedral group of order " +
                     std::to_string(d.dihedral_order));
      reports.push_back(std::move(oracle));
      break;
    }
    case Family::E: {
      reports.push_back(e_block_constants_check());
      auto w = irreducibility_witness(spec);
      CheckReport irr;
      irr.title = "permutation-module splitting " + spec.name();
      std::string image;
      for (std::size_t i = 0; i < w.image_of_all_ones.size(); ++i) {
        image += (i ? "," : "") + to_string(w.image_of_all_ones[i]);
      }
      irr.add("t{1,2,3} moves the all-ones line", !w.all_ones_fixed_up_to_scalar, "image (" + image + ")");
      irr.add("t{1,2,3} does not preserve the sum-zero hyperplane", !w.perp_invariant);
      reports.push_back(std::move(irr));
      if (spec.in_scope()) {
        auto d = dihedral_intersection_check(rep, spec.subsets().at(0), spec.subsets().at(1));
        CheckReport dih;
        dih.title = "dihedral intersection " + spec.name();
        dih.add("<t_a, t_b> ∩ N inside C_N(Stab_N(a, b)) for the first two generators", d.contained);
        reports.push_back(std::move(dih));
      }
      break;
    }
  }
  if (mod2) reports.push_back(gf2_suite(spec));
  return reports;
}

std::vector<PropertyResult> property_results(FamilySpec const& spec, RunConfig const& cfg) {
  std::vector<PropertyResult> out;
  out.push_back(check_word_homomorphism(spec, cfg.trials, cfg.seed));
  out.push_back(check_canonical_invariance(spec, cfg.trials, cfg.seed + 1));
  if (spec.family() == Family::D) out.push_back(check_shorten_invariance(spec, cfg.trials, cfg.seed + 2));
  if (spec.family() != Family::E) out.push_back(check_oracle_agreement(spec, cfg.trials, cfg.seed + 3));
  if (spec.family() == Family::E && spec.dim() <= kMaxGf2Dim) {
    out.push_back(check_mod2_homomorphism(spec, cfg.trials, cfg.seed + 4));
  }
  if (spec.n() <= 8) out.push_back(check_dihedral_containment(spec, cfg.trials, cfg.seed + 5));
  return out;
}

class Output {
 public:
  explicit Output(std::string const& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw BadConfig("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_enumerate(FamilySpec const& spec, RunConfig const& cfg, nlohmann::ordered_json* collect,
                  std::ostream& out) {
  EnumerateOptions options;
  options.cap = cfg.cap;
  std::optional<EnumerationReport> result;
  try {
    result.emplace(enumerate(spec, options));
  } catch (CapExceeded const& e) {
    std::cerr << "symgen: " << e.what() << "\n";
    return kCapExceeded;
  }
  EnumerationReport const& report = *result;
  std::optional<CheckReport> checks;
  if (auto exp = expected_counts(spec)) checks = check_enumeration(report, *exp);

  if (cfg.format == "json") {
    auto j = nlohmann::ordered_json::parse(format_report_json(report));
    if (checks) j["checks"] = report_json(*checks);
    if (collect) {
      (*collect)["enumeration"] = j;
    } else {
      out << j.dump(2) << "\n";
    }
  } else {
    out << format_report_text(report);
    out << "Time: " << report.seconds << " s on " << report.threads << " thread(s)\n";
    if (checks) out << checks->to_text();
  }
  if (checks && !checks->passed()) {
    for (auto const& c : checks->checks) {
      if (!c.passed) std::cerr << "symgen: check failed: " << c.name << " (" << c.detail << ")\n";
    }
    return kCheckFailed;
  }
  return kOk;
}

int emit_reports(std::vector<CheckReport> const& reports, RunConfig const& cfg, char const* key,
                 nlohmann::ordered_json* collect, std::ostream& out) {
  bool ok = true;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (auto const& r : reports) {
    ok = ok && r.passed();
    if (cfg.format == "json") {
      arr.push_back(report_json(r));
    } else {
      out << r.to_text();
    }
    for (auto const& c : r.checks) {
      if (!c.passed) std::cerr << "symgen: check failed: " << r.title << ": " << c.name << "\n";
    }
  }
  if (cfg.format == "json") {
    if (collect) {
      (*collect)[key] = arr;
    } else {
      out << arr.dump(2) << "\n";
    }
  }
  return ok ? kOk : kCheckFailed;
}

int run(RunConfig const& cfg) {
  FamilySpec const spec = [&] {
    try {
      return FamilySpec(parse_family(cfg.family), cfg.n, cfg.experimental);
    } catch (std::invalid_argument const& e) {
      throw BadConfig(e.what());
    }
  }();
  bool const enumerates = cfg.command == "enumerate" || cfg.command == "all";
  if (enumerates && !spec.in_scope() && cfg.cap == 0) {
    throw BadConfig(spec.name() + " is experimental: --cap is required");
  }
  if (cfg.mod2 && spec.dim() > kMaxGf2Dim) {
    throw BadConfig("--mod2 needs representation dimension <= 8");
  }

  Output output(cfg.out);
  std::ostream& out = output.stream();

  if (cfg.command == "enumerate") return run_enumerate(spec, cfg, nullptr, out);
  if (cfg.command == "verify") {
    return emit_reports(verification_reports(spec, cfg.mod2), cfg, "verify", nullptr, out);
  }
  if (cfg.command == "matrices") {
    MatrixDocument doc = build_matrix_document(spec, cfg.mod2);
    out << (cfg.format == "json" ? matrix_document_json(doc) : matrix_document_text(doc));
    return kOk;
  }

  // all: verification (mod 2 included whenever it applies), enumeration,
  // property suites.
  bool const mod2 = cfg.mod2 || (spec.family() == Family::E && spec.dim() <= kMaxGf2Dim);
  nlohmann::ordered_json collected;
  nlohmann::ordered_json* collect = cfg.format == "json" ? &collected : nullptr;
  int status = emit_reports(verification_reports(spec, mod2), cfg, "verify", collect, out);
  int const enum_status = run_enumerate(spec, cfg, collect, out);
  if (enum_status == kCapExceeded) return kCapExceeded;
  if (enum_status != kOk) status = enum_status;
  if (int s = emit_reports({property_report(property_results(spec, cfg))}, cfg, "properties", collect, out);
      s != kOk) {
    status = s;
  }
  if (collect) {
    collected["seed"] = cfg.seed;
    out << collected.dump(2) << "\n";
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Symmetric presentations of the simply laced Weyl groups"};
  app.add_option("command", cfg.command, "enumerate | verify | matrices | all")
      ->required()
      ->check(CLI::IsMember({"enumerate", "verify", "matrices", "all"}));
  app.add_option("--family", cfg.family, "A, D or E")->required();
  app.add_option("--n", cfg.n, "rank n")->required();
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out, "write output to this file instead of stdout");
  app.add_option("--cap", cfg.cap, "maximum number of cosets before giving up");
  app.add_flag("--mod2", cfg.mod2, "include the mod-2 representation");
  app.add_option("--seed", cfg.seed, "seed for the randomized property suites");
  app.add_option("--trials", cfg.trials, "trials per property suite")->check(CLI::PositiveNumber);
  app.add_flag("--experimental", cfg.experimental, "allow E_n outside n = 6, 7, 8 (needs --cap)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kBadConfig;
  }

  try {
    return run(cfg);
  } catch (BadConfig const& e) {
    std::cerr << "symgen: " << e.what() << "\n";
    return kBadConfig;
  } catch (std::exception const& e) {
    std::cerr << "symgen: " << e.what() << "\n";
    return kCheckFailed;
  }
}
