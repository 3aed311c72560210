#include "surfact/report.hpp"

#include <sstream>
#include <stdexcept>

#include "surfact/errors.hpp"
#include "surfact/group_search.hpp"

namespace surfact {

namespace {

Json strings_to_json(const std::vector<std::string>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(x);
  return j;
}

std::vector<std::string> strings_from_json(const Json& j) {
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(x.get<std::string>());
  return out;
}

Json perms_to_json(const std::vector<Permutation>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(x.str());
  return j;
}

std::vector<Permutation> perms_from_json(const Json& j, int degree) {
  std::vector<Permutation> out;
  for (const auto& x : j) out.push_back(Permutation::parse(x.get<std::string>(), degree));
  return out;
}

VectorVerdict verdict_from_string(const std::string& s) {
  if (s == "VALID") return VectorVerdict::valid;
  if (s == "INVALID-AS-DECLARED") return VectorVerdict::invalid_as_declared;
  throw ParseError("unknown verdict: " + s);
}

SingularKind singular_from_string(const std::string& s) {
  if (s == "empty") return SingularKind::empty;
  if (s == "zero_dim") return SingularKind::zero_dim;
  if (s == "positive_dim") return SingularKind::positive_dim;
  throw ParseError("unknown singular kind: " + s);
}

TrichotomyCase case_from_string(const std::string& s) {
  for (auto c : {TrichotomyCase::unique_class, TrichotomyCase::countably_many,
                 TrichotomyCase::continuum, TrichotomyCase::dim4_positive_continuum,
                 TrichotomyCase::dim4_discrete_unknown, TrichotomyCase::dim2_regime}) {
    if (to_string(c) == s) return c;
  }
  throw ParseError("unknown trichotomy case: " + s);
}

}  // namespace

Json to_json(const Permutation& p) { return p.str(); }

Json to_json(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  j["generators"] = perms_to_json(g.generators());
  return j;
}

Json to_json(const Signature& s) { return s.str(); }

Json to_json(const DeclaredSignature& s) { return s.str(); }

Json to_json(const GeneratingVector& v) {
  Json j;
  j["a"] = perms_to_json(v.a);
  j["b"] = perms_to_json(v.b);
  j["c"] = perms_to_json(v.c);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["verdict"] = r.verdict_str();
  j["declared"] = r.declared.str();
  j["counts_ok"] = r.counts_ok;
  j["orders_ok"] = r.orders_ok;
  j["product_ok"] = r.product_ok;
  j["generates_ok"] = r.generates_ok;
  j["measured_orders"] = r.measured_orders;
  j["declared_genus"] = r.declared_genus ? Json(*r.declared_genus) : Json(nullptr);
  j["measured_genus"] = r.measured_genus ? Json(*r.measured_genus) : Json(nullptr);
  j["notes"] = strings_to_json(r.notes);
  return j;
}

Json to_json(const ActionRecord& r) {
  Json j;
  j["group_id"] = r.group_id;
  j["group"] = to_json(r.group);
  j["genus"] = r.genus;
  j["signature"] = to_json(r.signature);
  j["vector"] = to_json(r.vector);
  j["provenance"] = r.provenance;
  return j;
}

Json to_json(const MeasureEntry& e) {
  Json j;
  j["measure"] = rational_str(e.measure);
  j["signature"] = to_json(e.signature);
  return j;
}

Json to_json(const LcmCertificate& c) {
  Json j;
  j["kind"] = "lcm";
  j["sigma"] = c.sigma;
  j["orders"] = Json::array({c.orders[0], c.orders[1], c.orders[2]});
  j["lcm_value"] = c.lcm_value;
  j["bound"] = c.bound;
  j["contradiction"] = c.contradiction;
  return j;
}

Json to_json(const GenericCutoffCertificate& c) {
  Json j;
  j["kind"] = "generic-cutoff";
  j["sigma"] = c.sigma;
  j["lcm_lower_bound"] = c.lcm_lower_bound;
  j["bound"] = c.bound;
  j["strict"] = c.strict;
  return j;
}

Json to_json(const SylowCertificate& c) {
  Json j;
  j["kind"] = "sylow";
  j["sigma"] = c.sigma;
  j["cyclic_witness_id"] = c.cyclic_witness_id;
  j["klein_host_id"] = c.klein_host_id;
  j["klein_host_order"] = c.klein_host_order;
  j["klein_pair_a"] = c.klein_pair_a;
  j["klein_pair_b"] = c.klein_pair_b;
  j["odd_witness_id"] = c.odd_witness_id;
  j["cyclic8_has_klein_four"] = c.cyclic8_has_klein_four;
  j["sylow_two_minimum"] = c.sylow_two_minimum;
  j["forced_factors"] = Json::array({c.forced_factors[0], c.forced_factors[1], c.forced_factors[2]});
  j["minimum_order"] = c.minimum_order;
  j["bound"] = c.bound;
  j["contradiction"] = c.contradiction;
  return j;
}

Json to_json(const DivisibilityCertificate& c) {
  Json j;
  j["kind"] = "divisibility";
  j["sigma"] = c.sigma;
  j["lcm_value"] = c.lcm_value;
  j["hurwitz"] = c.hurwitz;
  j["fallback"] = c.fallback;
  j["minimal_measure"] = rational_str(c.minimal_measure);
  j["second_measure"] = rational_str(c.second_measure);
  j["lcm_divides_hurwitz"] = c.lcm_divides_hurwitz;
  j["gap_argument_applied"] = c.gap_argument_applied;
  j["candidate_orders"] = c.candidate_orders;
  Json sigs = Json::array();
  for (const auto& [order, list] : c.candidate_signatures) {
    Json row;
    row["order"] = order;
    Json inner = Json::array();
    for (const auto& s : list) inner.push_back(s.str());
    row["signatures"] = inner;
    sigs.push_back(row);
  }
  j["candidate_signatures"] = sigs;
  j["notes"] = strings_to_json(c.notes);
  return j;
}

Json to_json(const EmbeddingCertificate& c) {
  Json j;
  j["kind"] = "embedding";
  j["sigma"] = c.sigma;
  j["subgroup_id"] = c.subgroup_id;
  j["subgroup_order"] = c.subgroup_order;
  j["host_id"] = c.host_id;
  j["host_order"] = c.host_order;
  j["host_acts"] = c.host_acts;
  j["embedding_status"] = c.embedding_status;
  j["definitive"] = c.definitive;
  j["matching_subgroup_classes"] =
      c.matching_subgroup_classes ? Json(*c.matching_subgroup_classes) : Json(nullptr);
  return j;
}

Json to_json(const WitnessAuditCertificate& c) {
  Json j;
  j["kind"] = "witness-audit";
  j["sigma"] = c.sigma;
  j["group_id"] = c.group_id;
  j["group_order"] = c.group_order;
  j["declared_signature"] = c.declared_signature;
  j["verdict"] = c.verdict;
  j["measured_orders"] = c.measured_orders;
  j["measured_genus"] = c.measured_genus ? Json(*c.measured_genus) : Json(nullptr);
  j["notes"] = strings_to_json(c.notes);
  return j;
}

Json to_json(const CatalogScanEntry& e) {
  Json j;
  j["id"] = e.id;
  j["order"] = e.order;
  j["action_status"] = e.action_status;
  j["action_signature"] = e.action_signature;
  j["embeddings_required"] = strings_to_json(e.embeddings_required);
  j["embeddings_missing"] = strings_to_json(e.embeddings_missing);
  j["ruled_out"] = e.ruled_out;
  return j;
}

Json to_json(const CatalogScanCertificate& c) {
  Json j;
  j["kind"] = "catalog-scan";
  j["sigma"] = c.sigma;
  j["orders_needed"] = c.orders_needed;
  j["orders_covered"] = c.orders_covered;
  Json entries = Json::array();
  for (const auto& e : c.entries) entries.push_back(to_json(e));
  j["entries"] = entries;
  j["complete"] = c.complete;
  j["all_ruled_out"] = c.all_ruled_out;
  return j;
}

Json to_json(const Certificate& c) {
  return std::visit([](const auto& inner) { return to_json(inner); }, c);
}

Json to_json(const ExclusivityVerdict& v) {
  Json j;
  j["sigma"] = v.sigma;
  j["result"] = to_string(v.result);
  Json certs = Json::array();
  for (const auto& c : v.certificates) certs.push_back(to_json(c));
  j["certificates"] = certs;
  j["assumptions"] = strings_to_json(v.assumptions);
  j["missing"] = strings_to_json(v.missing);
  j["notes"] = strings_to_json(v.notes);
  return j;
}

Json to_json(const GeometryProfile& p) {
  Json j;
  j["ambient_dim"] = p.ambient_dim;
  j["singular"] = to_string(p.singular);
  j["has_order_two_with_fixed_points"] = p.has_order_two_with_fixed_points;
  j["context"] = to_string(p.context);
  return j;
}

Json to_json(const TrichotomyOutcome& o) {
  Json j;
  j["outcome"] = to_string(o.outcome);
  j["locally_rigid"] = o.locally_rigid;
  return j;
}

Permutation permutation_from_json(const Json& j, int degree) {
  return Permutation::parse(j.get<std::string>(), degree);
}

PermGroup perm_group_from_json(const Json& j) {
  const int degree = j.at("degree").get<int>();
  return PermGroup(degree, perms_from_json(j.at("generators"), degree));
}

Signature signature_from_json(const Json& j) { return Signature::parse(j.get<std::string>()); }

DeclaredSignature declared_signature_from_json(const Json& j) {
  return DeclaredSignature::parse(j.get<std::string>());
}

GeneratingVector generating_vector_from_json(const Json& j, int degree) {
  GeneratingVector v;
  v.a = perms_from_json(j.at("a"), degree);
  v.b = perms_from_json(j.at("b"), degree);
  v.c = perms_from_json(j.at("c"), degree);
  return v;
}

VerificationReport verification_report_from_json(const Json& j) {
  VerificationReport r;
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.declared = DeclaredSignature::parse(j.at("declared").get<std::string>());
  r.counts_ok = j.at("counts_ok").get<bool>();
  r.orders_ok = j.at("orders_ok").get<bool>();
  r.product_ok = j.at("product_ok").get<bool>();
  r.generates_ok = j.at("generates_ok").get<bool>();
  r.measured_orders = j.at("measured_orders").get<std::vector<std::uint64_t>>();
  if (!j.at("declared_genus").is_null()) r.declared_genus = j.at("declared_genus").get<int>();
  if (!j.at("measured_genus").is_null()) r.measured_genus = j.at("measured_genus").get<int>();
  r.notes = strings_from_json(j.at("notes"));
  return r;
}

ActionRecord action_record_from_json(const Json& j) {
  PermGroup group = perm_group_from_json(j.at("group"));
  const int degree = group.degree();
  return ActionRecord::make(j.at("group_id").get<std::string>(), std::move(group),
                            j.at("genus").get<int>(),
                            Signature::parse(j.at("signature").get<std::string>()),
                            generating_vector_from_json(j.at("vector"), degree),
                            j.at("provenance").get<std::string>());
}

MeasureEntry measure_entry_from_json(const Json& j) {
  MeasureEntry e;
  e.measure = parse_rational(j.at("measure").get<std::string>());
  e.signature = Signature::parse(j.at("signature").get<std::string>());
  return e;
}

namespace {

template <typename T>
void array3_from_json(const Json& j, std::array<std::uint64_t, 3>& out) {
  for (std::size_t i = 0; i < 3; ++i) out[i] = j.at(i).get<T>();
}

}  // namespace

Certificate certificate_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "lcm") {
    LcmCertificate c;
    c.sigma = j.at("sigma").get<int>();
    array3_from_json<std::uint64_t>(j.at("orders"), c.orders);
    c.lcm_value = j.at("lcm_value").get<std::uint64_t>();
    c.bound = j.at("bound").get<std::uint64_t>();
    c.contradiction = j.at("contradiction").get<bool>();
    return c;
  }
  if (kind == "generic-cutoff") {
    GenericCutoffCertificate c;
    c.sigma = j.at("sigma").get<int>();
    c.lcm_lower_bound = j.at("lcm_lower_bound").get<std::uint64_t>();
    c.bound = j.at("bound").get<std::uint64_t>();
    c.strict = j.at("strict").get<bool>();
    return c;
  }
  if (kind == "sylow") {
    SylowCertificate c;
    c.sigma = j.at("sigma").get<int>();
    c.cyclic_witness_id = j.at("cyclic_witness_id").get<std::string>();
    c.klein_host_id = j.at("klein_host_id").get<std::string>();
    c.klein_host_order = j.at("klein_host_order").get<std::uint64_t>();
    c.klein_pair_a = j.at("klein_pair_a").get<std::string>();
    c.klein_pair_b = j.at("klein_pair_b").get<std::string>();
    c.odd_witness_id = j.at("odd_witness_id").get<std::string>();
    c.cyclic8_has_klein_four = j.at("cyclic8_has_klein_four").get<bool>();
    c.sylow_two_minimum = j.at("sylow_two_minimum").get<std::uint64_t>();
    array3_from_json<std::uint64_t>(j.at("forced_factors"), c.forced_factors);
    c.minimum_order = j.at("minimum_order").get<std::uint64_t>();
    c.bound = j.at("bound").get<std::uint64_t>();
    c.contradiction = j.at("contradiction").get<bool>();
    return c;
  }
  if (kind == "divisibility") {
    DivisibilityCertificate c;
    c.sigma = j.at("sigma").get<int>();
    c.lcm_value = j.at("lcm_value").get<std::uint64_t>();
    c.hurwitz = j.at("hurwitz").get<std::uint64_t>();
    c.fallback = j.at("fallback").get<std::uint64_t>();
    c.minimal_measure = parse_rational(j.at("minimal_measure").get<std::string>());
    c.second_measure = parse_rational(j.at("second_measure").get<std::string>());
    c.lcm_divides_hurwitz = j.at("lcm_divides_hurwitz").get<bool>();
    c.gap_argument_applied = j.at("gap_argument_applied").get<bool>();
    c.candidate_orders = j.at("candidate_orders").get<std::vector<std::uint64_t>>();
    for (const auto& row : j.at("candidate_signatures")) {
      std::vector<Signature> sigs;
      for (const auto& s : row.at("signatures")) sigs.push_back(Signature::parse(s.get<std::string>()));
      c.candidate_signatures.emplace_back(row.at("order").get<std::uint64_t>(), std::move(sigs));
    }
    c.notes = strings_from_json(j.at("notes"));
    return c;
  }
  if (kind == "embedding") {
    EmbeddingCertificate c;
    c.sigma = j.at("sigma").get<int>();
    c.subgroup_id = j.at("subgroup_id").get<std::string>();
    c.subgroup_order = j.at("subgroup_order").get<std::uint64_t>();
    c.host_id = j.at("host_id").get<std::string>();
    c.host_order = j.at("host_order").get<std::uint64_t>();
    c.host_acts = j.at("host_acts").get<bool>();
    c.embedding_status = j.at("embedding_status").get<std::string>();
    c.definitive = j.at("definitive").get<bool>();
    if (!j.at("matching_subgroup_classes").is_null()) {
      c.matching_subgroup_classes = j.at("matching_subgroup_classes").get<std::size_t>();
    }
    return c;
  }
  if (kind == "witness-audit") {
    WitnessAuditCertificate c;
    c.sigma = j.at("sigma").get<int>();
    c.group_id = j.at("group_id").get<std::string>();
    c.group_order = j.at("group_order").get<std::uint64_t>();
    c.declared_signature = j.at("declared_signature").get<std::string>();
    c.verdict = j.at("verdict").get<std::string>();
    c.measured_orders = j.at("measured_orders").get<std::vector<std::uint64_t>>();
    if (!j.at("measured_genus").is_null()) c.measured_genus = j.at("measured_genus").get<int>();
    c.notes = strings_from_json(j.at("notes"));
    return c;
  }
  if (kind == "catalog-scan") {
    CatalogScanCertificate c;
    c.sigma = j.at("sigma").get<int>();
    c.orders_needed = j.at("orders_needed").get<std::vector<std::uint64_t>>();
    c.orders_covered = j.at("orders_covered").get<std::vector<std::uint64_t>>();
    for (const auto& row : j.at("entries")) {
      CatalogScanEntry e;
      e.id = row.at("id").get<std::string>();
      e.order = row.at("order").get<std::uint64_t>();
      e.action_status = row.at("action_status").get<std::string>();
      e.action_signature = row.at("action_signature").get<std::string>();
      e.embeddings_required = strings_from_json(row.at("embeddings_required"));
      e.embeddings_missing = strings_from_json(row.at("embeddings_missing"));
      e.ruled_out = row.at("ruled_out").get<bool>();
      c.entries.push_back(std::move(e));
    }
    c.complete = j.at("complete").get<bool>();
    c.all_ruled_out = j.at("all_ruled_out").get<bool>();
    return c;
  }
  throw ParseError("unknown certificate kind: " + kind);
}

ExclusivityVerdict exclusivity_verdict_from_json(const Json& j) {
  ExclusivityVerdict v;
  v.sigma = j.at("sigma").get<int>();
  const std::string result = j.at("result").get<std::string>();
  if (result == "impossible") {
    v.result = ExclusivityResult::impossible;
  } else if (result == "inconclusive") {
    v.result = ExclusivityResult::inconclusive;
  } else {
    throw ParseError("unknown exclusivity result: " + result);
  }
  for (const auto& c : j.at("certificates")) v.certificates.push_back(certificate_from_json(c));
  v.assumptions = strings_from_json(j.at("assumptions"));
  v.missing = strings_from_json(j.at("missing"));
  v.notes = strings_from_json(j.at("notes"));
  return v;
}

GeometryProfile geometry_profile_from_json(const Json& j) {
  GeometryProfile p;
  p.ambient_dim = j.at("ambient_dim").get<int>();
  p.singular = singular_from_string(j.at("singular").get<std::string>());
  p.has_order_two_with_fixed_points = j.at("has_order_two_with_fixed_points").get<bool>();
  p.context = j.at("context").get<std::string>() == "lattice" ? ProfileContext::lattice
                                                              : ProfileContext::manifold;
  return p;
}

TrichotomyOutcome trichotomy_outcome_from_json(const Json& j) {
  TrichotomyOutcome o;
  o.outcome = case_from_string(j.at("outcome").get<std::string>());
  o.locally_rigid = j.at("locally_rigid").get<bool>();
  return o;
}

CosetSummary summarize(const Presentation& p, const CosetTableResult& r) {
  CosetSummary s;
  s.presentation = p.str();
  s.status = r.status == EnumerationStatus::completed ? "completed" : "overflow";
  s.coset_count = r.coset_count;
  s.cosets_defined = r.cosets_defined;
  s.verified = r.verified;
  return s;
}

Json to_json(const CosetSummary& s) {
  Json j;
  j["presentation"] = s.presentation;
  j["status"] = s.status;
  j["coset_count"] = s.coset_count;
  j["cosets_defined"] = s.cosets_defined;
  j["verified"] = s.verified;
  return j;
}

CosetSummary coset_summary_from_json(const Json& j) {
  CosetSummary s;
  s.presentation = j.at("presentation").get<std::string>();
  s.status = j.at("status").get<std::string>();
  s.coset_count = j.at("coset_count").get<std::uint64_t>();
  s.cosets_defined = j.at("cosets_defined").get<std::uint64_t>();
  s.verified = j.at("verified").get<bool>();
  return s;
}

EmbedReport embed_report(const GroupEntry& subgroup, const GroupEntry& host,
                         const SearchLimits& limits) {
  EmbedReport r;
  r.subgroup_id = subgroup.id;
  r.subgroup_order = subgroup.group.order();
  r.host_id = host.id;
  r.host_order = host.group.order();
  const auto search = find_monomorphism(subgroup.group, host.group, limits);
  r.status = to_string(search.status);
  r.definitive = search.status != SearchStatus::inconclusive;
  for (const auto& g : subgroup.group.generators()) r.domain_generators.push_back(g.str());
  if (search.status == SearchStatus::found) {
    for (const auto& img : search.value->images) r.images.push_back(img.str());
  }
  return r;
}

Json to_json(const EmbedReport& r) {
  Json j;
  j["subgroup_id"] = r.subgroup_id;
  j["subgroup_order"] = r.subgroup_order;
  j["host_id"] = r.host_id;
  j["host_order"] = r.host_order;
  j["status"] = r.status;
  j["definitive"] = r.definitive;
  j["domain_generators"] = strings_to_json(r.domain_generators);
  j["images"] = strings_to_json(r.images);
  return j;
}

EmbedReport embed_report_from_json(const Json& j) {
  EmbedReport r;
  r.subgroup_id = j.at("subgroup_id").get<std::string>();
  r.subgroup_order = j.at("subgroup_order").get<std::uint64_t>();
  r.host_id = j.at("host_id").get<std::string>();
  r.host_order = j.at("host_order").get<std::uint64_t>();
  r.status = j.at("status").get<std::string>();
  r.definitive = j.at("definitive").get<bool>();
  r.domain_generators = strings_from_json(j.at("domain_generators"));
  r.images = strings_from_json(j.at("images"));
  return r;
}

GenusReport genus_report(int sigma, const Catalog* catalog, const SearchLimits& limits,
                         int workers) {
  GenusReport r;
  r.sigma = sigma;
  r.hurwitz = hurwitz_bound(sigma);
  r.fallback = fallback_bound(sigma);
  r.accola_maclachlan = accola_maclachlan_bound(sigma);
  r.actions = canonical_actions(sigma);
  r.actions.push_back(bounded_family_action(sigma));
  if (catalog) {
    for (const auto& entry : catalog->entries()) {
      const auto found = acts_on(entry, sigma, limits, workers);
      if (found.status == SearchStatus::found) {
        r.actions.push_back(*found.value);
      }
    }
  }
  r.verdict = weakly_exclusive_verdict(sigma, catalog, limits);
  return r;
}

Json to_json(const GenusReport& r) {
  Json j;
  j["sigma"] = r.sigma;
  j["hurwitz_bound"] = r.hurwitz;
  j["fallback_bound"] = r.fallback;
  j["accola_maclachlan_bound"] = r.accola_maclachlan;
  Json actions = Json::array();
  for (const auto& a : r.actions) actions.push_back(to_json(a));
  j["actions"] = actions;
  j["verdict"] = to_json(r.verdict);
  return j;
}

GenusReport genus_report_from_json(const Json& j) {
  GenusReport r;
  r.sigma = j.at("sigma").get<int>();
  r.hurwitz = j.at("hurwitz_bound").get<std::uint64_t>();
  r.fallback = j.at("fallback_bound").get<std::uint64_t>();
  r.accola_maclachlan = j.at("accola_maclachlan_bound").get<std::uint64_t>();
  for (const auto& a : j.at("actions")) r.actions.push_back(action_record_from_json(a));
  r.verdict = exclusivity_verdict_from_json(j.at("verdict"));
  return r;
}

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string bullet_list(const std::string& title, const std::vector<std::string>& xs) {
  if (xs.empty()) return "";
  std::string out = "\n" + title + "\n\n";
  for (const auto& x : xs) out += "- " + x + "\n";
  return out;
}

std::string certificate_markdown(const Certificate& cert) {
  const Json j = to_json(cert);
  std::string out = "- `" + certificate_kind(cert) + "`: ";
  std::vector<std::string> parts;
  for (const auto& [key, value] : j.items()) {
    if (key == "kind" || key == "entries" || key == "candidate_signatures" || key == "notes") {
      continue;
    }
    parts.push_back(key + " = " + value.dump());
  }
  out += join(parts, ", ") + "\n";
  if (j.contains("entries")) {
    for (const auto& e : j.at("entries")) {
      out += "  - entry " + e.at("id").get<std::string>() + ": action " +
             e.at("action_status").get<std::string>() +
             (e.at("ruled_out").get<bool>() ? " (ruled out)" : " (not ruled out)") + "\n";
    }
  }
  if (j.contains("candidate_signatures")) {
    for (const auto& row : j.at("candidate_signatures")) {
      std::vector<std::string> sigs;
      for (const auto& s : row.at("signatures")) sigs.push_back(s.get<std::string>());
      out += "  - order " + row.at("order").dump() + " admits: " +
             (sigs.empty() ? std::string("none") : join(sigs, ", ")) + "\n";
    }
  }
  if (j.contains("notes")) {
    for (const auto& n : j.at("notes")) out += "  - note: " + n.get<std::string>() + "\n";
  }
  return out;
}

}  // namespace

std::string to_markdown(const VerificationReport& r) {
  std::ostringstream out;
  out << "## Vector verification\n\n";
  out << "| field | value |\n|---|---|\n";
  out << "| verdict | " << r.verdict_str() << " |\n";
  out << "| declared | " << r.declared.str() << " |\n";
  out << "| counts_ok | " << (r.counts_ok ? "true" : "false") << " |\n";
  out << "| orders_ok | " << (r.orders_ok ? "true" : "false") << " |\n";
  out << "| product_ok | " << (r.product_ok ? "true" : "false") << " |\n";
  out << "| generates_ok | " << (r.generates_ok ? "true" : "false") << " |\n";
  std::vector<std::string> orders;
  for (auto o : r.measured_orders) orders.push_back(std::to_string(o));
  out << "| measured_orders | " << join(orders, ", ") << " |\n";
  out << "| declared_genus | " << (r.declared_genus ? std::to_string(*r.declared_genus) : "-")
      << " |\n";
  out << "| measured_genus | " << (r.measured_genus ? std::to_string(*r.measured_genus) : "-")
      << " |\n";
  out << bullet_list("Notes:", r.notes);
  return out.str();
}

std::string to_markdown(const ActionRecord& r) {
  std::ostringstream out;
  out << "| " << r.group_id << " | " << r.group.order() << " | " << r.genus << " | "
      << r.signature.str() << " | " << r.provenance << " |\n";
  return out.str();
}

std::string to_markdown(const ExclusivityVerdict& v) {
  std::ostringstream out;
  out << "## Exclusivity verdict for genus " << v.sigma << "\n\n";
  out << "Result: **" << to_string(v.result) << "**\n\nCertificate chain:\n\n";
  for (const auto& c : v.certificates) out << certificate_markdown(c);
  out << bullet_list("Assumptions:", v.assumptions);
  out << bullet_list("Missing inputs:", v.missing);
  out << bullet_list("Notes:", v.notes);
  return out.str();
}

std::string to_markdown(const TrichotomyOutcome& o) {
  return to_string(o.outcome) + "; locally_rigid=" + (o.locally_rigid ? "true" : "false") + "\n";
}

std::string to_markdown(const GenusReport& r) {
  std::ostringstream out;
  out << "# Genus " << r.sigma << " report\n\n";
  out << "| bound | value |\n|---|---|\n";
  out << "| hurwitz | " << r.hurwitz << " |\n";
  out << "| fallback | " << r.fallback << " |\n";
  out << "| accola_maclachlan | " << r.accola_maclachlan << " |\n\n";
  out << "## Verified actions\n\n";
  out << "| group | order | genus | signature | provenance |\n|---|---|---|---|---|\n";
  for (const auto& a : r.actions) out << to_markdown(a);
  out << "\n" << to_markdown(r.verdict);
  return out.str();
}

std::string to_markdown(const CosetSummary& s) {
  std::ostringstream out;
  out << "| field | value |\n|---|---|\n";
  out << "| presentation | `" << s.presentation << "` |\n";
  out << "| status | " << s.status << " |\n";
  out << "| coset_count | " << s.coset_count << " |\n";
  out << "| cosets_defined | " << s.cosets_defined << " |\n";
  out << "| verified | " << (s.verified ? "true" : "false") << " |\n";
  return out.str();
}

std::string to_markdown(const EmbedReport& r) {
  std::ostringstream out;
  out << "| field | value |\n|---|---|\n";
  out << "| subgroup | " << r.subgroup_id << " (order " << r.subgroup_order << ") |\n";
  out << "| host | " << r.host_id << " (order " << r.host_order << ") |\n";
  out << "| status | " << r.status << " |\n";
  out << "| definitive | " << (r.definitive ? "true" : "false") << " |\n";
  if (!r.images.empty()) {
    for (std::size_t i = 0; i < r.images.size(); ++i) {
      out << "| " << r.domain_generators[i] << " maps to | " << r.images[i] << " |\n";
    }
  }
  return out.str();
}

std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace surfact
