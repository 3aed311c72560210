#include "surfact/audit.hpp"

#include <sstream>

#include "surfact/exclusivity.hpp"
#include "surfact/todd_coxeter.hpp"

namespace surfact {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::discrepancy_expected: return "DISCREPANCY(expected)";
  }
  return "FAIL";
}

namespace {

PaperCheck make_check(std::string id, std::string claim, std::string published,
                      std::string computed, bool matches, bool mismatch_expected,
                      std::string note = "") {
  PaperCheck c;
  c.id = std::move(id);
  c.claim = std::move(claim);
  c.published = std::move(published);
  c.computed = std::move(computed);
  c.status = matches ? CheckStatus::pass
                     : (mismatch_expected ? CheckStatus::discrepancy_expected : CheckStatus::fail);
  c.note = std::move(note);
  return c;
}

}  // namespace

std::vector<PaperCheck> audit_paper(const SearchLimits& limits) {
  std::vector<PaperCheck> checks;

  {
    // Composition convention, pinned by the inverse of the genus-4 product.
    const Permutation c1 = Permutation::parse("(1,2,3,4,5)", 5);
    const Permutation c2 = Permutation::parse("(1,2)", 5);
    const Permutation inv = (c1 * c2).inverse();
    const Permutation published = Permutation::parse("(5,4,3,1)", 5);
    checks.push_back(make_check(
        "compose-convention", "(c1 c2)^-1 for c1=(1,2,3,4,5), c2=(1,2)", "(5,4,3,1)", inv.str(),
        inv == published, false,
        "cycles are printed from their smallest point; the permutations agree"));
  }

  {
    // The order-120 symmetric group acts on genus 4 through the printed triple.
    const GroupEntry s5 = builtin_symmetric(5);
    GeneratingVector v;
    v.c = {Permutation::parse("(1,2,3,4,5)", 5), Permutation::parse("(1,2)", 5),
           Permutation::parse("(1,5,4,3)", 5)};
    const VerificationReport rep =
        verify_vector(s5.group, DeclaredSignature::parse("(0;5,2,4)"), v);
    const bool ok = rep.verdict == VectorVerdict::valid && rep.measured_genus &&
                    *rep.measured_genus == 4;
    checks.push_back(make_check("sym5-triple",
                                "S5 acts on genus 4 with signature (0;5,2,4) via the printed triple",
                                "VALID, genus 4",
                                rep.verdict_str() + ", genus " +
                                    (rep.measured_genus ? std::to_string(*rep.measured_genus) : "-"),
                                ok, false));
  }

  {
    const GroupEntry sl27 = builtin_sl2(7);
    checks.push_back(make_check("sl2-7-order", "the 2x2 linear group over the 7-element field",
                                "order 336", "order " + std::to_string(sl27.group.order()),
                                sl27.group.order() == 336, false));
  }

  {
    const WitnessAuditCertificate w = published_genus5_witness();
    std::string measured = "measured orders (";
    for (std::size_t i = 0; i < w.measured_orders.size(); ++i) {
      if (i) measured += ",";
      measured += std::to_string(w.measured_orders[i]);
    }
    measured += "), verdict " + w.verdict;
    checks.push_back(make_check(
        "sl2-7-triple", "the linear group attains the Hurwitz bound on genus 5 via (0;7,2,3)",
        "declared periods (7,2,3)", measured, w.verdict == "VALID", true,
        "the element declared of order 2 measures 4: its square is the central involution, not "
        "the identity; the declared data describes the quotient by the center"));
  }

  {
    const auto mm = minimal_positive_measures(2);
    const bool min_ok = mm[0].measure == Rational(1, 42) && mm[0].signature.str() == "(0;2,3,7)";
    checks.push_back(make_check("min-measure", "smallest positive signature measure",
                                "1/42 at (0;2,3,7)",
                                rational_str(mm[0].measure) + " at " + mm[0].signature.str(),
                                min_ok, false));
    const std::string second = rational_str(mm[1].measure) + " at " + mm[1].signature.str();
    checks.push_back(make_check(
        "second-measure", "second-smallest positive signature measure", "1/24 at periods {1,2,8}",
        second, mm[1].signature.str() == "(0;1,2,8)", true,
        "a period of 1 is no branch point at all; the exhaustive scan finds (0;2,3,8), so the "
        "published period set reads as a misprint"));
  }

  {
    checks.push_back(make_check("hurwitz-sigma4", "84(sigma-1) at sigma=4", "254",
                                std::to_string(hurwitz_bound(4)), hurwitz_bound(4) == 254, true,
                                "84*3 = 252; the printed 254 is off by 2"));
    checks.push_back(make_check("fallback-sigma4", "48(sigma-1) at sigma=4", "154",
                                std::to_string(fallback_bound(4)), fallback_bound(4) == 154, true,
                                "48*3 = 144; the printed 154 is off by 10"));
  }

  {
    bool all_ok = true;
    std::ostringstream computed;
    for (int sigma = 2; sigma <= 12; ++sigma) {
      const AmGroup fam = accola_maclachlan_group(sigma);
      const std::uint64_t expect = 8 * (static_cast<std::uint64_t>(sigma) + 1);
      all_ok = all_ok && fam.group.order() == expect;
      if (sigma > 2) computed << ",";
      computed << fam.group.order();
    }
    checks.push_back(make_check("am-orders",
                                "the bounded family has order 8(sigma+1), sigma=2..12",
                                "24,32,40,48,56,64,72,80,88,96,104", computed.str(), all_ok,
                                false));
  }

  {
    const AmGroup fam = accola_maclachlan_group(8);
    const PermGroup sub(fam.group.degree(), {fam.xy(), fam.x_inv_y()});
    const bool klein = sub.order() == 4 && has_klein_four(sub, limits);
    checks.push_back(make_check(
        "klein-four-sigma8", "xy and x^-1 y generate a non-cyclic group of order 4 in the "
        "order-72 family group", "Klein four-group",
        "order " + std::to_string(sub.order()) + (klein ? ", two commuting involutions" : ""),
        klein, false));
  }

  {
    struct Row {
      int sigma;
      std::uint64_t lcm;
      bool contradiction;
    };
    const Row published[] = {{6, 840, true},  {7, 1344, true},  {8, 504, false}, {9, 720, true},
                             {10, 3960, true}, {11, 5280, true}, {12, 3432, true}};
    bool all_ok = true;
    std::ostringstream computed;
    for (const auto& row : published) {
      const LcmCertificate c = lcm_certificate(row.sigma);
      all_ok = all_ok && c.lcm_value == row.lcm && c.contradiction == row.contradiction;
      computed << "s=" << row.sigma << ":" << c.lcm_value << (c.contradiction ? ">" : "<=")
               << c.bound << " ";
    }
    checks.push_back(make_check("lcm-table", "per-genus lcm values against the Hurwitz bound",
                                "840>420, 1344>504, 504<=588, 720>672, 3960>756, 5280>840, "
                                "3432>924",
                                computed.str(), all_ok, false));
  }

  {
    std::vector<ActionRecord> inventory = canonical_actions(8);
    inventory.push_back(bounded_family_action(8));
    const auto sylow = sylow_refutation_sigma8(inventory);
    const bool ok = sylow && sylow->minimum_order == 1008 && sylow->bound == 588 &&
                    sylow->contradiction && sylow->validate();
    checks.push_back(make_check("sylow-sigma8",
                                "a genus-8 dominating group needs order at least 7*16*9",
                                "1008 > 588",
                                sylow ? std::to_string(sylow->minimum_order) + " > " +
                                            std::to_string(sylow->bound)
                                      : "witnesses missing",
                                ok, false));
  }

  {
    const DivisibilityCertificate div = divisibility_certificate(4, true);
    const GroupEntry s5 = builtin_symmetric(5);
    const GroupEntry h4 = builtin_accola_maclachlan(4);
    const auto emb = find_monomorphism(h4.group, s5.group, limits);
    const auto classes = subgroups_of_order(s5.group, 40, limits);
    const bool chain_ok = div.candidate_orders == std::vector<std::uint64_t>{120} &&
                          div.candidate_signatures.size() == 1 &&
                          div.candidate_signatures[0].second ==
                              std::vector<Signature>{Signature::make(0, {2, 4, 5})} &&
                          emb.status == SearchStatus::absent && classes.empty();
    checks.push_back(make_check(
        "sigma4-chain",
        "genus 4 forces order 120 with signature (0;2,4,5), and S5 has no order-40 subgroup",
        "order 120, (0;2,4,5), no embedding of the order-40 family group",
        "candidates {120}, signature " +
            (div.candidate_signatures.empty() || div.candidate_signatures[0].second.empty()
                 ? std::string("none")
                 : div.candidate_signatures[0].second[0].str()) +
            ", embedding " + to_string(emb.status) + ", order-40 classes " +
            std::to_string(classes.size()),
        chain_ok, false));
  }

  {
    bool all_ok = true;
    for (int sigma = 13; sigma <= 100; ++sigma) {
      all_ok = all_ok && generic_cutoff_certificate(sigma).strict &&
               lcm_certificate(sigma).contradiction;
    }
    checks.push_back(make_check("generic-cutoff",
                                "from genus 13 on, the lcm lower bound beats the Hurwitz bound",
                                "strict for all sigma >= 13", all_ok ? "strict for 13..100" : "gap",
                                all_ok, false));
  }

  return checks;
}

bool audit_has_failures(const std::vector<PaperCheck>& checks) {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return true;
  }
  return false;
}

Json to_json(const PaperCheck& c) {
  Json j;
  j["id"] = c.id;
  j["claim"] = c.claim;
  j["published"] = c.published;
  j["computed"] = c.computed;
  j["status"] = to_string(c.status);
  j["note"] = c.note;
  return j;
}

Json to_json(const std::vector<PaperCheck>& checks) {
  Json j = Json::array();
  for (const auto& c : checks) j.push_back(to_json(c));
  return j;
}

std::string to_markdown(const std::vector<PaperCheck>& checks) {
  std::ostringstream out;
  out << "# Source-text audit\n\n";
  out << "| check | published | computed | status |\n|---|---|---|---|\n";
  for (const auto& c : checks) {
    out << "| " << c.id << " | " << c.published << " | " << c.computed << " | "
        << to_string(c.status) << " |\n";
  }
  out << "\n";
  for (const auto& c : checks) {
    if (!c.note.empty()) out << "- " << c.id << ": " << c.note << "\n";
  }
  return out.str();
}

}  // namespace surfact
