#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "surfact/catalog.hpp"
#include "surfact/exclusivity.hpp"
#include "surfact/rh.hpp"
#include "surfact/todd_coxeter.hpp"
#include "surfact/trichotomy.hpp"

namespace surfact {

using Json = nlohmann::json;

// Serialization. Field names are frozen; see docs/report-schema.json.
// nlohmann::json keeps object keys sorted, so emission is byte-deterministic.
// Parsers re-validate: action records are rebuilt through ActionRecord::make,
// which re-checks orders, the defining relation, generation, and the genus.

Json to_json(const Permutation& p);
Json to_json(const PermGroup& g);
Json to_json(const Signature& s);
Json to_json(const DeclaredSignature& s);
Json to_json(const GeneratingVector& v);
Json to_json(const VerificationReport& r);
Json to_json(const ActionRecord& r);
Json to_json(const MeasureEntry& e);
Json to_json(const LcmCertificate& c);
Json to_json(const GenericCutoffCertificate& c);
Json to_json(const SylowCertificate& c);
Json to_json(const DivisibilityCertificate& c);
Json to_json(const EmbeddingCertificate& c);
Json to_json(const WitnessAuditCertificate& c);
Json to_json(const CatalogScanEntry& e);
Json to_json(const CatalogScanCertificate& c);
Json to_json(const Certificate& c);
Json to_json(const ExclusivityVerdict& v);
Json to_json(const GeometryProfile& p);
Json to_json(const TrichotomyOutcome& o);

Permutation permutation_from_json(const Json& j, int degree);
PermGroup perm_group_from_json(const Json& j);
Signature signature_from_json(const Json& j);
DeclaredSignature declared_signature_from_json(const Json& j);
GeneratingVector generating_vector_from_json(const Json& j, int degree);
VerificationReport verification_report_from_json(const Json& j);
ActionRecord action_record_from_json(const Json& j);  // re-verifies, throws on tampering
MeasureEntry measure_entry_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);
ExclusivityVerdict exclusivity_verdict_from_json(const Json& j);
GeometryProfile geometry_profile_from_json(const Json& j);
TrichotomyOutcome trichotomy_outcome_from_json(const Json& j);

// Flat summary of a coset enumeration, small enough to serialize.
struct CosetSummary {
  std::string presentation;
  std::string status;  // completed | overflow
  std::uint64_t coset_count = 0;
  std::uint64_t cosets_defined = 0;
  bool verified = false;

  bool operator==(const CosetSummary&) const = default;
};

CosetSummary summarize(const Presentation& p, const CosetTableResult& r);
Json to_json(const CosetSummary& s);
CosetSummary coset_summary_from_json(const Json& j);

// Outcome of an embedding query between two named groups.
struct EmbedReport {
  std::string subgroup_id;
  std::uint64_t subgroup_order = 0;
  std::string host_id;
  std::uint64_t host_order = 0;
  std::string status;  // found | absent | inconclusive
  bool definitive = false;
  std::vector<std::string> domain_generators;
  std::vector<std::string> images;  // empty unless status == found

  bool operator==(const EmbedReport&) const = default;
};

EmbedReport embed_report(const GroupEntry& subgroup, const GroupEntry& host,
                         const SearchLimits& limits = SearchLimits{});
Json to_json(const EmbedReport& r);
EmbedReport embed_report_from_json(const Json& j);

// Everything the pipeline can say about one genus: bounds, the verified
// actions it constructed or found, and the exclusivity verdict.
struct GenusReport {
  int sigma = 0;
  std::uint64_t hurwitz = 0;
  std::uint64_t fallback = 0;
  std::uint64_t accola_maclachlan = 0;
  std::vector<ActionRecord> actions;
  ExclusivityVerdict verdict;
};

GenusReport genus_report(int sigma, const Catalog* catalog = nullptr,
                         const SearchLimits& limits = SearchLimits{}, int workers = 1);
Json to_json(const GenusReport& r);
GenusReport genus_report_from_json(const Json& j);  // re-verifies the action records

// Markdown renderings of the same data.
std::string to_markdown(const VerificationReport& r);
std::string to_markdown(const ActionRecord& r);
std::string to_markdown(const ExclusivityVerdict& v);
std::string to_markdown(const TrichotomyOutcome& o);
std::string to_markdown(const GenusReport& r);
std::string to_markdown(const CosetSummary& s);
std::string to_markdown(const EmbedReport& r);

// One emitted line per JSON document, newline-terminated, keys sorted.
std::string emit_json(const Json& j);

}  // namespace surfact
