#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "surfact/audit.hpp"
#include "surfact/cache.hpp"
#include "surfact/config.hpp"
#include "surfact/errors.hpp"
#include "surfact/exclusivity.hpp"
#include "surfact/group_spec.hpp"
#include "surfact/group_search.hpp"
#include "surfact/report.hpp"
#include "surfact/rh.hpp"
#include "surfact/todd_coxeter.hpp"
#include "surfact/trichotomy.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDefinitiveNo = 2;
constexpr int kExitInconclusive = 3;

struct CliState {
  surfact::RunConfig config;
  std::optional<surfact::Catalog> catalog;
  std::unique_ptr<surfact::ResultCache> cache;

  const surfact::Catalog* catalog_ptr() const { return catalog ? &*catalog : nullptr; }
  bool json() const { return config.output_format == "json"; }
};

void load_inputs(CliState& state) {
  if (state.config.catalog_paths.empty()) {
    if (const char* env = std::getenv("HF_CATALOG"); env && *env) {
      state.config.catalog_paths.push_back(env);
    }
  }
  if (!state.config.catalog_paths.empty()) {
    surfact::Catalog merged;
    for (const auto& path : state.config.catalog_paths) {
      const surfact::Catalog one = surfact::load_catalog(path);
      for (const auto& entry : one.entries()) merged.add(entry);
      for (const auto& claim : one.coverage()) merged.add_coverage(claim);
    }
    state.catalog = std::move(merged);
  }
  if (!state.config.cache_path.empty()) {
    state.cache = std::make_unique<surfact::ResultCache>(state.config.cache_path);
  }
}

int cmd_measure(const CliState& state, const std::string& text) {
  const surfact::Signature s = surfact::Signature::parse(text);
  const surfact::Rational m = surfact::rh_measure(s);
  if (state.json()) {
    surfact::Json j;
    j["signature"] = s.str();
    j["measure"] = surfact::rational_str(m);
    std::cout << surfact::emit_json(j);
  } else {
    std::cout << surfact::rational_str(m) << "\n";
  }
  return kExitOk;
}

int cmd_signatures(const CliState& state, int sigma, std::uint64_t order) {
  const auto sigs = surfact::enumerate_signatures(sigma, order);
  if (state.json()) {
    surfact::Json j = surfact::Json::array();
    for (const auto& s : sigs) j.push_back(s.str());
    std::cout << surfact::emit_json(j);
  } else {
    for (const auto& s : sigs) std::cout << s.str() << "\n";
    if (sigs.empty()) std::cout << "none\n";
  }
  return kExitOk;
}

int cmd_find_action(CliState& state, const std::string& spec, int sigma) {
  const surfact::GroupEntry entry = surfact::resolve_group_spec(spec, state.catalog_ptr());
  const std::string cache_key =
      "sigma=" + std::to_string(sigma) + "|" + surfact::group_digest(entry.group);
  if (state.cache) {
    if (const auto hit = state.cache->lookup("find-action", cache_key)) {
      try {
        const surfact::ActionRecord record = surfact::action_record_from_json(*hit);
        std::cout << (state.json() ? surfact::emit_json(surfact::to_json(record))
                                   : surfact::to_markdown(record));
        return kExitOk;
      } catch (const std::exception& e) {
        std::cerr << "warning: cached find-action entry failed re-verification (" << e.what()
                  << "); recomputing\n";
      }
    }
  }
  const auto result =
      surfact::acts_on(entry, sigma, state.config.limits(), state.config.parallelism);
  if (result.status == surfact::SearchStatus::found) {
    if (state.cache) {
      state.cache->store("find-action", cache_key, surfact::to_json(*result.value));
    }
    std::cout << (state.json() ? surfact::emit_json(surfact::to_json(*result.value))
                               : surfact::to_markdown(*result.value));
    return kExitOk;
  }
  if (result.status == surfact::SearchStatus::absent) {
    std::cout << "no action of " << entry.id << " on genus " << sigma
              << " (definitive: exhaustive search over every admissible signature)\n";
    return kExitDefinitiveNo;
  }
  std::cout << "no verdict for " << entry.id << " on genus " << sigma
            << " (inconclusive: node budget " << state.config.search_node_budget
            << " exhausted during the generating-vector search)\n";
  return kExitInconclusive;
}

int cmd_verify_vector(const CliState& state, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw surfact::ParseError("cannot open vector file: " + path);
  surfact::Json j;
  in >> j;
  surfact::GroupEntry entry =
      j.at("group").is_string()
          ? surfact::resolve_group_spec(j.at("group").get<std::string>(), state.catalog_ptr())
          : surfact::GroupEntry{"inline", surfact::perm_group_from_json(j.at("group")), {},
                                "inline"};
  const auto declared =
      surfact::DeclaredSignature::parse(j.at("declared").get<std::string>());
  const auto vector = surfact::generating_vector_from_json(j.at("vector"), entry.group.degree());
  const surfact::VerificationReport report =
      surfact::verify_vector(entry.group, declared, vector);
  std::cout << (state.json() ? surfact::emit_json(surfact::to_json(report))
                             : surfact::to_markdown(report));
  return report.verdict == surfact::VectorVerdict::valid ? kExitOk : kExitDefinitiveNo;
}

int cmd_todd_coxeter(const CliState& state, const std::string& text) {
  const surfact::Presentation p = surfact::Presentation::parse(text);
  const surfact::CosetTableResult result = surfact::todd_coxeter(p, state.config.coset_budget);
  const surfact::CosetSummary summary = surfact::summarize(p, result);
  std::cout << (state.json() ? surfact::emit_json(surfact::to_json(summary))
                             : surfact::to_markdown(summary));
  if (result.status == surfact::EnumerationStatus::overflow) {
    std::cout << "no verdict (inconclusive: coset budget " << state.config.coset_budget
              << " exhausted before the table closed)\n";
    return kExitInconclusive;
  }
  return kExitOk;
}

int cmd_embed(const CliState& state, const std::string& sub_spec, const std::string& host_spec) {
  const surfact::GroupEntry sub = surfact::resolve_group_spec(sub_spec, state.catalog_ptr());
  const surfact::GroupEntry host = surfact::resolve_group_spec(host_spec, state.catalog_ptr());
  const surfact::EmbedReport report = surfact::embed_report(sub, host, state.config.limits());
  if (state.json()) {
    std::cout << surfact::emit_json(surfact::to_json(report));
  } else {
    if (report.status == "absent" && report.definitive) {
      std::cout << "no monomorphism (definitive: brute force)\n";
    } else if (report.status == "inconclusive") {
      std::cout << "no verdict (inconclusive: node budget exhausted in the embedding search)\n";
    }
    std::cout << surfact::to_markdown(report);
  }
  if (report.status == "found") return kExitOk;
  if (report.status == "absent") return kExitDefinitiveNo;
  return kExitInconclusive;
}

int cmd_genus_report(CliState& state, int sigma) {
  const std::string cache_key =
      "sigma=" + std::to_string(sigma) + "|budget=" + std::to_string(state.config.search_node_budget) +
      "|catalog=" + (state.catalog ? surfact::catalog_digest(*state.catalog) : "none");
  std::optional<surfact::GenusReport> report;
  if (state.cache) {
    if (const auto hit = state.cache->lookup("genus-report", cache_key)) {
      try {
        report = surfact::genus_report_from_json(*hit);
      } catch (const std::exception& e) {
        std::cerr << "warning: cached genus-report entry failed re-verification (" << e.what()
                  << "); recomputing\n";
      }
    }
  }
  if (!report) {
    report = surfact::genus_report(sigma, state.catalog_ptr(), state.config.limits(),
                                   state.config.parallelism);
    if (state.cache) {
      state.cache->store("genus-report", cache_key, surfact::to_json(*report));
    }
  }
  std::cout << (state.json() ? surfact::emit_json(surfact::to_json(*report))
                             : surfact::to_markdown(*report));
  return report->verdict.result == surfact::ExclusivityResult::impossible ? kExitOk
                                                                          : kExitInconclusive;
}

int cmd_trichotomy(const CliState& state, int dim, const std::string& singular, bool fixes,
                   bool lattice) {
  surfact::GeometryProfile profile;
  profile.ambient_dim = dim;
  if (singular == "empty") {
    profile.singular = surfact::SingularKind::empty;
  } else if (singular == "0" || singular == "zero" || singular == "zero_dim") {
    profile.singular = surfact::SingularKind::zero_dim;
  } else if (singular == "positive" || singular == "positive_dim" || singular == "pos") {
    profile.singular = surfact::SingularKind::positive_dim;
  } else {
    throw surfact::ParseError("unknown --singular value: " + singular +
                              " (use empty, 0, or positive)");
  }
  profile.has_order_two_with_fixed_points = fixes;
  profile.context =
      lattice ? surfact::ProfileContext::lattice : surfact::ProfileContext::manifold;
  const surfact::TrichotomyOutcome outcome = surfact::trichotomy_classify(profile);
  if (state.json()) {
    surfact::Json j;
    j["profile"] = surfact::to_json(profile);
    j["outcome"] = surfact::to_json(outcome);
    std::cout << surfact::emit_json(j);
  } else {
    std::cout << surfact::to_markdown(outcome);
  }
  return kExitOk;
}

int cmd_audit(const CliState& state) {
  const auto checks = surfact::audit_paper(state.config.limits());
  std::cout << (state.json() ? surfact::emit_json(surfact::to_json(checks))
                             : surfact::to_markdown(checks));
  return surfact::audit_has_failures(checks) ? kExitError : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surface action toolkit: decides, constructs, and certifies finite group actions "
               "on closed oriented surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  CliState state;
  app.add_option("--format", state.config.output_format, "output format: markdown or json")
      ->check(CLI::IsMember({"markdown", "json"}))
      ->capture_default_str();
  app.add_option("--budget", state.config.search_node_budget, "search node budget")
      ->capture_default_str();
  app.add_option("--coset-budget", state.config.coset_budget, "coset enumeration budget")
      ->capture_default_str();
  app.add_option("-j,--parallelism", state.config.parallelism, "worker threads for searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--catalog", state.config.catalog_paths,
                 "catalog file (repeatable; default: $HF_CATALOG)");
  app.add_option("--cache", state.config.cache_path, "result cache file");

  std::string measure_sig;
  auto* measure = app.add_subcommand("measure", "measure of a signature");
  measure->add_option("signature", measure_sig, "signature, e.g. \"(0;2,3,7)\"")->required();

  int sig_sigma = 0;
  std::uint64_t sig_order = 0;
  auto* signatures = app.add_subcommand("signatures", "admissible signatures for genus and order");
  signatures->add_option("sigma", sig_sigma, "genus (>= 2)")->required();
  signatures->add_option("order", sig_order, "group order")->required();

  std::string fa_spec;
  int fa_sigma = 0;
  auto* find_action = app.add_subcommand("find-action", "search for an action of a group");
  find_action->add_option("group", fa_spec, "group spec")->required();
  find_action->add_option("sigma", fa_sigma, "genus (>= 2)")->required();

  std::string vv_path;
  auto* verify = app.add_subcommand("verify-vector", "verify a declared generating vector");
  verify->add_option("file", vv_path, "JSON file with group, declared, vector")->required();

  std::string tc_text;
  auto* tc = app.add_subcommand("todd-coxeter", "enumerate cosets of a finite presentation");
  tc->add_option("presentation", tc_text, "e.g. \"<x,y | x^4, y^6, (x*y)^2, (x^-1*y)^2>\"")
      ->required();

  std::string embed_sub, embed_host;
  auto* embed = app.add_subcommand("embed", "search for a monomorphism between groups");
  embed->add_option("subgroup", embed_sub, "subgroup spec")->required();
  embed->add_option("host", embed_host, "host group spec")->required();

  int gr_sigma = 0;
  auto* genus = app.add_subcommand("genus-report", "full per-genus report");
  genus->add_option("sigma", gr_sigma, "genus (>= 2)")->required();

  int tri_dim = 0;
  std::string tri_singular;
  bool tri_fixes = false;
  bool tri_lattice = false;
  auto* tri = app.add_subcommand("trichotomy", "classify a rigidity profile");
  tri->add_option("--dim", tri_dim, "ambient dimension")->required();
  tri->add_option("--singular", tri_singular, "singular locus: empty, 0, or positive")
      ->required();
  tri->add_flag("--involution-fixes", tri_fixes, "an order-2 element has fixed points");
  tri->add_flag("--lattice", tri_lattice, "profile comes from a lattice quotient");

  auto* audit = app.add_subcommand("audit-paper", "re-derive every published figure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    load_inputs(state);
    if (measure->parsed()) return cmd_measure(state, measure_sig);
    if (signatures->parsed()) return cmd_signatures(state, sig_sigma, sig_order);
    if (find_action->parsed()) return cmd_find_action(state, fa_spec, fa_sigma);
    if (verify->parsed()) return cmd_verify_vector(state, vv_path);
    if (tc->parsed()) return cmd_todd_coxeter(state, tc_text);
    if (embed->parsed()) return cmd_embed(state, embed_sub, embed_host);
    if (genus->parsed()) return cmd_genus_report(state, gr_sigma);
    if (tri->parsed()) {
      return cmd_trichotomy(state, tri_dim, tri_singular, tri_fixes, tri_lattice);
    }
    if (audit->parsed()) return cmd_audit(state);
  } catch (const surfact::CeilingExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
