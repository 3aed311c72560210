#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "surfact/catalog.hpp"
#include "surfact/rh.hpp"
#include "surfact/signature.hpp"

namespace surfact {

// Order bounds for a faithful orientation-preserving action on a closed
// surface of genus sigma >= 2. All three throw GenusRegimeError below
// genus 2.
std::uint64_t hurwitz_bound(int sigma);            // 84 (sigma - 1)
std::uint64_t fallback_bound(int sigma);           // 48 (sigma - 1)
std::uint64_t accola_maclachlan_bound(int sigma);  //  8 (sigma + 1)

// One row of the small-measure table: a positive measure value together
// with the least signature attaining it.
struct MeasureEntry {
  Rational measure;
  Signature signature;
};

// The k smallest positive signature measures, each with its least witness.
// The scan is exhaustive for small measures; see the completeness argument
// in the implementation. Throws CeilingExceeded when max_period is too
// small to certify the k-th entry.
std::vector<MeasureEntry> minimal_positive_measures(std::size_t k, int max_period = 84);

// Certificate: the lcm of the three canonical acting orders divides the
// order of any group that contains all groups acting on genus sigma, and
// that lcm may already exceed the Hurwitz bound.
struct LcmCertificate {
  int sigma = 0;
  std::array<std::uint64_t, 3> orders{};  // sigma-1, sigma, 8(sigma+1)
  std::uint64_t lcm_value = 0;
  std::uint64_t bound = 0;  // hurwitz_bound(sigma)
  bool contradiction = false;

  bool validate() const;  // recomputes every field from sigma
};

LcmCertificate lcm_certificate(int sigma);

// Certificate: for sigma >= 13 the lcm lower bound (sigma-1)sigma(sigma+1)/2
// already beats the Hurwitz bound, so no per-genus case analysis is needed.
struct GenericCutoffCertificate {
  int sigma = 0;
  std::uint64_t lcm_lower_bound = 0;  // (sigma-1) sigma (sigma+1) / 2
  std::uint64_t bound = 0;            // hurwitz_bound(sigma)
  bool strict = false;                // lower bound exceeds the Hurwitz bound

  bool validate() const;
};

GenericCutoffCertificate generic_cutoff_certificate(int sigma);

// Certificate for genus 8: a dominating group would contain both a cyclic
// group of order 8 and a Klein four-group, so its Sylow 2-subgroup has
// order at least 16; together with the forced factors 7 and 9 this drives
// the order past the Hurwitz bound.
struct SylowCertificate {
  int sigma = 8;
  std::string cyclic_witness_id;      // acting cyclic group of order 8
  std::string klein_host_id;          // acting group of order 72
  std::uint64_t klein_host_order = 0;
  std::string klein_pair_a;           // commuting involutions inside the host
  std::string klein_pair_b;
  std::string odd_witness_id;         // acting cyclic group of order 7
  bool cyclic8_has_klein_four = false;  // measured on C8: must be false
  std::uint64_t sylow_two_minimum = 0;  // 16
  std::array<std::uint64_t, 3> forced_factors{};  // 7, 16, 9
  std::uint64_t minimum_order = 0;    // product of forced factors
  std::uint64_t bound = 0;            // hurwitz_bound(8)
  bool contradiction = false;

  bool validate() const;  // rebuilds the witness groups and re-measures
};

// Derives the genus-8 refutation from an inventory of verified actions.
// The inventory must contain a cyclic group of order 8, a cyclic group of
// order 7, and a group of order 72 containing a Klein four-group, each
// acting on genus 8. Returns nullopt when a witness is missing; the caller
// reports that as inconclusive, not as a refutation.
std::optional<SylowCertificate> sylow_refutation_sigma8(
    const std::vector<ActionRecord>& inventory);

// Certificate: divisibility chain narrowing the order of a dominating
// group. The lcm L divides the order; an order above the fallback bound
// forces the minimal measure 1/42 and hence the exact Hurwitz order, which
// is excluded when L does not divide it. Candidate orders are the
// surviving multiples of L.
struct DivisibilityCertificate {
  int sigma = 0;
  std::uint64_t lcm_value = 0;
  std::uint64_t hurwitz = 0;
  std::uint64_t fallback = 0;
  Rational minimal_measure;          // 1/42
  Rational second_measure;           // 1/24; the gap between them is empty
  bool lcm_divides_hurwitz = false;
  bool gap_argument_applied = false;  // false: candidates run up to hurwitz
  std::vector<std::uint64_t> candidate_orders;
  // Signatures each candidate order would have to realize.
  std::vector<std::pair<std::uint64_t, std::vector<Signature>>> candidate_signatures;
  std::vector<std::string> notes;

  bool validate() const;
};

DivisibilityCertificate divisibility_certificate(int sigma, bool apply_gap_argument);

// Certificate: a specific required subgroup does not embed into a specific
// candidate dominating group, refuting that candidate.
struct EmbeddingCertificate {
  int sigma = 0;
  std::string subgroup_id;
  std::uint64_t subgroup_order = 0;
  std::string host_id;
  std::uint64_t host_order = 0;
  bool host_acts = false;            // host itself admits a genus-sigma action
  std::string embedding_status;      // "absent" refutes the host
  bool definitive = false;           // search exhausted, not budget-limited
  // When the subgroup order divides the host order, the number of subgroup
  // classes of that order found by exhaustive scan (0 refutes directly).
  std::optional<std::size_t> matching_subgroup_classes;

  bool validate() const;  // internal consistency only; searches are re-run by tests
};

// Certificate: re-measurement of a published attainment witness.
struct WitnessAuditCertificate {
  int sigma = 0;
  std::string group_id;
  std::uint64_t group_order = 0;
  std::string declared_signature;
  std::string verdict;               // VALID or INVALID-AS-DECLARED
  std::vector<std::uint64_t> measured_orders;
  std::optional<int> measured_genus;
  std::vector<std::string> notes;

  bool validate() const;  // rebuilds the witness and re-measures it
};

// The published genus-5 attainment witness: a linear group of order 336
// with a declared (0; 7,2,3) triple. Reconstructing it and measuring the
// element orders is the audit; the declared period 2 is measured as 4.
WitnessAuditCertificate published_genus5_witness();

// Per-entry outcome of a catalog scan over one candidate order.
struct CatalogScanEntry {
  std::string id;
  std::uint64_t order = 0;
  std::string action_status;         // found / absent / inconclusive
  std::string action_signature;      // set when action_status == "found"
  std::vector<std::string> embeddings_required;
  std::vector<std::string> embeddings_missing;  // required subgroups that do not embed
  bool ruled_out = false;
};

// Certificate: exhaustive scan of catalog entries at the candidate orders.
// Sound only when the catalog carries a coverage claim for every order.
struct CatalogScanCertificate {
  int sigma = 0;
  std::vector<std::uint64_t> orders_needed;
  std::vector<std::uint64_t> orders_covered;
  std::vector<CatalogScanEntry> entries;
  bool complete = false;             // every needed order carries a coverage claim
  bool all_ruled_out = false;

  bool validate() const;  // internal consistency of the recorded scan
};

using Certificate = std::variant<GenericCutoffCertificate, LcmCertificate, SylowCertificate,
                                 DivisibilityCertificate, EmbeddingCertificate,
                                 WitnessAuditCertificate, CatalogScanCertificate>;

std::string certificate_kind(const Certificate& certificate);
bool certificate_valid(const Certificate& certificate);

enum class ExclusivityResult { impossible, inconclusive };

std::string to_string(ExclusivityResult result);

// Verdict on whether some single group of admissible order could contain
// every group acting on genus sigma. "impossible" certifies weak
// exclusivity; "inconclusive" lists what is missing.
struct ExclusivityVerdict {
  int sigma = 0;
  ExclusivityResult result = ExclusivityResult::inconclusive;
  std::vector<Certificate> certificates;
  std::vector<std::string> assumptions;  // unverified published assertions relied on
  std::vector<std::string> missing;      // inputs that would settle the verdict
  std::vector<std::string> notes;

  bool validate() const;  // every certificate must validate and support the result
};

// Runs the per-genus decision pipeline. The catalog, when supplied and
// carrying coverage claims for the candidate orders, upgrades the
// catalog-gated genera to definitive verdicts.
ExclusivityVerdict weakly_exclusive_verdict(int sigma, const Catalog* catalog = nullptr,
                                            const SearchLimits& limits = SearchLimits{});

// Number of two-generated groups among the catalog entries of the given
// order, or nullopt when the catalog does not claim coverage of it.
std::optional<std::size_t> two_generated_count(const Catalog& catalog, std::uint64_t order,
                                               const SearchLimits& limits = SearchLimits{});

}  // namespace surfact
