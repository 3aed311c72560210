#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "surfact/catalog.hpp"
#include "surfact/errors.hpp"
#include "surfact/exclusivity.hpp"
#include "surfact/rh.hpp"
#include "surfact/todd_coxeter.hpp"
#include "surfact/trichotomy.hpp"

using namespace surfact;

TEST_CASE("order bounds") {
  CHECK(hurwitz_bound(2) == 84);
  CHECK(hurwitz_bound(3) == 168);
  CHECK(hurwitz_bound(4) == 252);
  CHECK(hurwitz_bound(5) == 336);
  CHECK(hurwitz_bound(7) == 504);
  CHECK(hurwitz_bound(8) == 588);
  CHECK(fallback_bound(2) == 48);
  CHECK(fallback_bound(4) == 144);
  CHECK(fallback_bound(5) == 192);
  CHECK(fallback_bound(7) == 288);
  CHECK(accola_maclachlan_bound(2) == 24);
  CHECK(accola_maclachlan_bound(7) == 64);
  CHECK(accola_maclachlan_bound(12) == 104);
  for (int bad : {-1, 0, 1}) {
    CHECK_THROWS_AS(hurwitz_bound(bad), GenusRegimeError);
    CHECK_THROWS_AS(fallback_bound(bad), GenusRegimeError);
    CHECK_THROWS_AS(accola_maclachlan_bound(bad), GenusRegimeError);
  }
}

TEST_CASE("smallest positive measures with least witnesses") {
  auto entries = minimal_positive_measures(4);
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].measure == Rational(1, 42));
  CHECK(entries[0].signature == Signature::parse("(0;2,3,7)"));
  CHECK(entries[1].measure == Rational(1, 24));
  CHECK(entries[1].signature == Signature::parse("(0;2,3,8)"));
  CHECK(entries[2].measure == Rational(1, 20));
  CHECK(entries[2].signature == Signature::parse("(0;2,4,5)"));
  CHECK(entries[3].measure == Rational(1, 18));
  CHECK(entries[3].signature == Signature::parse("(0;2,3,9)"));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(rh_measure(entries[i].signature) == entries[i].measure);
    CHECK(entries[i].measure > Rational(0));
    CHECK(entries[i].measure < Rational(1, 2));
    if (i > 0) CHECK(entries[i - 1].measure < entries[i].measure);
  }
}

TEST_CASE("measure scan refuses to certify beyond its period ceiling") {
  // With periods capped at 7 the scan would report 1/20 as the second
  // smallest and miss 1/24 at (0;2,3,8); the guard catches exactly that.
  CHECK_THROWS_AS(minimal_positive_measures(2, 7), CeilingExceeded);
  auto two = minimal_positive_measures(2, 8);
  CHECK(two[1].measure == Rational(1, 24));
  // Far more entries than a small period bound can support.
  CHECK_THROWS_AS(minimal_positive_measures(100, 10), CeilingExceeded);
  CHECK_THROWS_AS(minimal_positive_measures(0), std::invalid_argument);
  CHECK_THROWS_AS(minimal_positive_measures(1, 1), std::invalid_argument);
}

TEST_CASE("lcm certificates match an independent big-integer recomputation") {
  using boost::multiprecision::cpp_int;
  struct Row {
    int sigma;
    std::uint64_t lcm, bound;
    bool contradiction;
  };
  const Row table[] = {
      {2, 24, 84, false},     {3, 96, 168, false},    {4, 120, 252, false},
      {5, 240, 336, false},   {6, 840, 420, true},    {7, 1344, 504, true},
      {8, 504, 588, false},   {9, 720, 672, true},    {10, 3960, 756, true},
      {11, 5280, 840, true},  {12, 3432, 924, true},  {13, 4368, 1008, true},
  };
  for (const auto& row : table) {
    LcmCertificate c = lcm_certificate(row.sigma);
    CHECK(c.lcm_value == row.lcm);
    CHECK(c.bound == row.bound);
    CHECK(c.contradiction == row.contradiction);
    CHECK(c.validate());

    cpp_int a = row.sigma - 1, b = row.sigma, d = 8 * (row.sigma + 1);
    cpp_int l = boost::multiprecision::lcm(boost::multiprecision::lcm(a, b), d);
    CHECK(cpp_int(c.lcm_value) == l);
    CHECK((l > cpp_int(84) * (row.sigma - 1)) == row.contradiction);
  }
  // The oracle keeps pace far beyond the frozen table.
  for (int sigma = 2; sigma <= 2000; ++sigma) {
    cpp_int a = sigma - 1, b = sigma, d = 8 * (sigma + 1);
    cpp_int l = boost::multiprecision::lcm(boost::multiprecision::lcm(a, b), d);
    CHECK(cpp_int(lcm_certificate(sigma).lcm_value) == l);
  }
}

TEST_CASE("generic cutoff properties across the supported range") {
  for (int sigma = 2; sigma <= 1000; ++sigma) {
    GenericCutoffCertificate c = generic_cutoff_certificate(sigma);
    CHECK(c.validate());
    const auto s = static_cast<std::uint64_t>(sigma);
    CHECK(c.lcm_lower_bound == (s - 1) * s * (s + 1) / 2);
    // The true lcm never drops below the closed-form lower bound.
    CHECK(lcm_certificate(sigma).lcm_value >= c.lcm_lower_bound);
    // Strict exactly from genus 13 on: s(s+1)/2 > 84 first holds there.
    CHECK(c.strict == (sigma >= 13));
    if (sigma >= 13) CHECK(lcm_certificate(sigma).lcm_value > hurwitz_bound(sigma));
  }
}

TEST_CASE("genus-8 refutation from verified witnesses") {
  std::vector<ActionRecord> inventory = canonical_actions(8);
  inventory.push_back(bounded_family_action(8));
  auto cert = sylow_refutation_sigma8(inventory);
  REQUIRE(cert.has_value());
  CHECK(cert->cyclic_witness_id == "C8");
  CHECK(cert->odd_witness_id == "C7");
  CHECK(cert->klein_host_order == 72);
  CHECK_FALSE(cert->cyclic8_has_klein_four);
  CHECK(cert->sylow_two_minimum == 16);
  CHECK(cert->forced_factors == std::array<std::uint64_t, 3>{7, 16, 9});
  CHECK(cert->minimum_order == 1008);
  CHECK(cert->bound == 588);
  CHECK(cert->contradiction);
  CHECK(cert->validate());

  // The two commuting involutions recorded in the certificate are real
  // elements of the order-72 witness.
  const AmGroup h8 = accola_maclachlan_group(8);
  Permutation a = Permutation::parse(cert->klein_pair_a, h8.group.degree());
  Permutation b = Permutation::parse(cert->klein_pair_b, h8.group.degree());
  CHECK(h8.group.contains(a));
  CHECK(h8.group.contains(b));
  CHECK(a.order() == 2);
  CHECK(b.order() == 2);
  CHECK(a * b == b * a);
  CHECK(a != b);

  // Tampering must not validate.
  SylowCertificate bad = *cert;
  bad.minimum_order = 2016;
  CHECK_FALSE(bad.validate());
  SylowCertificate wrong_factor = *cert;
  wrong_factor.forced_factors = {7, 8, 9};
  CHECK_FALSE(wrong_factor.validate());
}

TEST_CASE("genus-8 refutation needs every witness") {
  CHECK_FALSE(sylow_refutation_sigma8({}).has_value());

  std::vector<ActionRecord> no_host = canonical_actions(8);  // C7 and C8 only
  CHECK_FALSE(sylow_refutation_sigma8(no_host).has_value());

  std::vector<ActionRecord> wrong_genus = canonical_actions(7);
  wrong_genus.push_back(bounded_family_action(7));
  CHECK_FALSE(sylow_refutation_sigma8(wrong_genus).has_value());
}

TEST_CASE("divisibility chains") {
  DivisibilityCertificate four = divisibility_certificate(4, true);
  CHECK(four.lcm_value == 120);
  CHECK(four.gap_argument_applied);
  CHECK_FALSE(four.lcm_divides_hurwitz);  // 120 does not divide 252
  CHECK(four.candidate_orders == std::vector<std::uint64_t>{120});
  REQUIRE(four.candidate_signatures.size() == 1);
  CHECK(four.candidate_signatures[0].first == 120);
  REQUIRE(four.candidate_signatures[0].second.size() == 1);
  CHECK(four.candidate_signatures[0].second[0] == Signature::parse("(0;2,4,5)"));
  CHECK(four.validate());

  DivisibilityCertificate five = divisibility_certificate(5, false);
  CHECK(five.lcm_value == 240);
  CHECK_FALSE(five.gap_argument_applied);
  CHECK(five.candidate_orders == std::vector<std::uint64_t>{240});
  REQUIRE(five.candidate_signatures.size() == 1);
  CHECK(five.candidate_signatures[0].second.empty());  // no admissible data at 240
  CHECK(five.validate());

  DivisibilityCertificate two = divisibility_certificate(2, true);
  CHECK(two.candidate_orders == std::vector<std::uint64_t>{24, 48});
  DivisibilityCertificate three = divisibility_certificate(3, true);
  CHECK(three.candidate_orders == std::vector<std::uint64_t>{96});

  DivisibilityCertificate tampered = four;
  tampered.candidate_orders.push_back(240);
  CHECK_FALSE(tampered.validate());
}

TEST_CASE("published witness audit") {
  WitnessAuditCertificate c = published_genus5_witness();
  CHECK(c.sigma == 5);
  CHECK(c.group_id == "SL2(7)");
  CHECK(c.group_order == 336);
  CHECK(c.declared_signature == "(0;7,2,3)");
  CHECK(c.verdict == "INVALID-AS-DECLARED");
  CHECK(c.measured_orders == std::vector<std::uint64_t>{7, 4, 3});
  CHECK(c.measured_genus == 47);
  CHECK(c.validate());

  WitnessAuditCertificate lie = c;
  lie.verdict = "VALID";
  CHECK_FALSE(lie.validate());
  WitnessAuditCertificate wrong_orders = c;
  wrong_orders.measured_orders = {7, 2, 3};
  CHECK_FALSE(wrong_orders.validate());
}

TEST_CASE("embedding certificate consistency rules") {
  EmbeddingCertificate c;
  c.sigma = 4;
  c.subgroup_id = "H4";
  c.subgroup_order = 40;
  c.host_id = "S5";
  c.host_order = 120;
  c.host_acts = true;
  c.embedding_status = "absent";
  c.definitive = true;
  c.matching_subgroup_classes = 0;
  CHECK(c.validate());

  EmbeddingCertificate contradictory = c;
  contradictory.matching_subgroup_classes = 1;
  CHECK_FALSE(contradictory.validate());

  EmbeddingCertificate half_hearted = c;
  half_hearted.embedding_status = "inconclusive";
  CHECK_FALSE(half_hearted.validate());  // definitive and inconclusive clash

  EmbeddingCertificate lagrange = c;
  lagrange.embedding_status = "found";
  lagrange.matching_subgroup_classes = 1;
  lagrange.subgroup_order = 50;  // 50 does not divide 120
  CHECK_FALSE(lagrange.validate());
}

TEST_CASE("verdicts driven by the lcm contradiction") {
  // Below genus 13 the chain is the lcm certificate alone; from 13 on the
  // generic cutoff fronts it.
  for (int sigma : {6, 7, 9, 10, 11, 12}) {
    ExclusivityVerdict v = weakly_exclusive_verdict(sigma);
    CHECK(v.result == ExclusivityResult::impossible);
    CHECK(v.validate());
    CHECK(v.assumptions.empty());
    REQUIRE(v.certificates.size() == 1);
    CHECK(certificate_kind(v.certificates[0]) == "lcm");
  }
  for (int sigma : {13, 50, 100}) {
    ExclusivityVerdict v = weakly_exclusive_verdict(sigma);
    CHECK(v.result == ExclusivityResult::impossible);
    CHECK(v.validate());
    CHECK(v.assumptions.empty());
    REQUIRE(v.certificates.size() == 2);
    CHECK(certificate_kind(v.certificates[0]) == "generic-cutoff");
    CHECK(certificate_kind(v.certificates[1]) == "lcm");
  }
  CHECK(to_string(ExclusivityResult::impossible) == "impossible");
  CHECK(to_string(ExclusivityResult::inconclusive) == "inconclusive");
  CHECK_THROWS_AS(weakly_exclusive_verdict(1), GenusRegimeError);
}

TEST_CASE("genus-8 verdict goes through the structural refutation") {
  ExclusivityVerdict v = weakly_exclusive_verdict(8);
  CHECK(v.result == ExclusivityResult::impossible);
  CHECK(v.validate());
  REQUIRE(v.certificates.size() == 2);
  CHECK(certificate_kind(v.certificates[0]) == "lcm");
  CHECK(certificate_kind(v.certificates[1]) == "sylow");
  CHECK(v.assumptions.empty());
}

TEST_CASE("genus-4 verdict without catalog leans on one published assertion") {
  ExclusivityVerdict v = weakly_exclusive_verdict(4);
  CHECK(v.result == ExclusivityResult::impossible);
  CHECK(v.validate());
  REQUIRE(v.assumptions.size() == 1);
  CHECK(v.assumptions[0].find("order-120") != std::string::npos);
  bool noted_hurwitz = false, noted_fallback = false;
  for (const auto& n : v.notes) {
    if (n.find("252") != std::string::npos && n.find("254") != std::string::npos) {
      noted_hurwitz = true;
    }
    if (n.find("144") != std::string::npos && n.find("154") != std::string::npos) {
      noted_fallback = true;
    }
  }
  CHECK(noted_hurwitz);
  CHECK(noted_fallback);

  bool saw_embedding = false;
  for (const auto& cert : v.certificates) {
    if (certificate_kind(cert) != "embedding") continue;
    saw_embedding = true;
    const auto& ec = std::get<EmbeddingCertificate>(cert);
    CHECK(ec.subgroup_id == "H4");
    CHECK(ec.host_id == "S5");
    CHECK(ec.host_acts);
    CHECK(ec.embedding_status == "absent");
    CHECK(ec.definitive);
    CHECK(ec.matching_subgroup_classes == 0);
  }
  CHECK(saw_embedding);
}

TEST_CASE("genus-4 verdict with a covering catalog needs no assumption") {
  Catalog cat;
  cat.add(builtin_symmetric(5));
  // Synthetic claim for the mechanism test: treat S5 as the whole order-120
  // inventory. Soundness of such claims rests with the catalog author.
  cat.add_coverage(CoverageClaim{120});
  ExclusivityVerdict v = weakly_exclusive_verdict(4, &cat);
  CHECK(v.result == ExclusivityResult::impossible);
  CHECK(v.validate());
  CHECK(v.assumptions.empty());
  bool saw_scan = false;
  for (const auto& cert : v.certificates) {
    if (certificate_kind(cert) != "catalog-scan") continue;
    saw_scan = true;
    const auto& scan = std::get<CatalogScanCertificate>(cert);
    CHECK(scan.complete);
    CHECK(scan.all_ruled_out);
    REQUIRE(scan.entries.size() == 1);
    CHECK(scan.entries[0].id == "S5");
    CHECK(scan.entries[0].action_status == "found");
    CHECK(scan.entries[0].action_signature == "(0;2,4,5)");
    CHECK(scan.entries[0].embeddings_missing == std::vector<std::string>{"H4"});
    CHECK(scan.entries[0].ruled_out);
  }
  CHECK(saw_scan);
}

TEST_CASE("genus-5 verdict stays conservative without catalog") {
  ExclusivityVerdict v = weakly_exclusive_verdict(5);
  CHECK(v.result == ExclusivityResult::inconclusive);
  CHECK(v.validate());
  REQUIRE(!v.missing.empty());
  CHECK(v.missing[0].find("order 240") != std::string::npos);

  bool saw_audit = false;
  for (const auto& cert : v.certificates) {
    if (certificate_kind(cert) != "witness-audit") continue;
    saw_audit = true;
    CHECK(std::get<WitnessAuditCertificate>(cert).verdict == "INVALID-AS-DECLARED");
  }
  CHECK(saw_audit);

  // The divisibility chain alone would already empty the candidate list;
  // that stays a note, the verdict defers to missing catalog data.
  bool noted = false;
  for (const auto& n : v.notes) {
    if (n.find("divisibility chain alone") != std::string::npos) noted = true;
  }
  CHECK(noted);
}

TEST_CASE("genus-5 verdict upgrades with order-240 coverage") {
  Catalog cat;
  cat.add(builtin_abelian({16, 3, 5}));
  cat.add_coverage(CoverageClaim{240});
  ExclusivityVerdict v = weakly_exclusive_verdict(5, &cat);
  CHECK(v.result == ExclusivityResult::impossible);
  CHECK(v.validate());
  bool saw_scan = false;
  for (const auto& cert : v.certificates) {
    if (certificate_kind(cert) != "catalog-scan") continue;
    saw_scan = true;
    const auto& scan = std::get<CatalogScanCertificate>(cert);
    CHECK(scan.all_ruled_out);
    REQUIRE(scan.entries.size() == 1);
    CHECK(scan.entries[0].action_status == "absent");  // no admissible data at 240
  }
  CHECK(saw_scan);
}

TEST_CASE("low-genus verdicts name the missing classification data") {
  ExclusivityVerdict two = weakly_exclusive_verdict(2);
  CHECK(two.result == ExclusivityResult::inconclusive);
  CHECK(two.validate());
  REQUIRE(two.missing.size() == 1);
  CHECK(two.missing[0].find("24, 48") != std::string::npos);

  ExclusivityVerdict three = weakly_exclusive_verdict(3);
  CHECK(three.result == ExclusivityResult::inconclusive);
  CHECK(three.validate());
  REQUIRE(three.missing.size() == 1);
  CHECK(three.missing[0].find("96") != std::string::npos);
}

TEST_CASE("tampered verdicts fail validation") {
  ExclusivityVerdict v = weakly_exclusive_verdict(6);
  REQUIRE(v.validate());

  ExclusivityVerdict flipped = v;
  flipped.result = ExclusivityResult::inconclusive;
  CHECK_FALSE(flipped.validate());

  ExclusivityVerdict corrupted = v;
  for (auto& cert : corrupted.certificates) {
    if (auto* lc = std::get_if<LcmCertificate>(&cert)) lc->lcm_value += 1;
  }
  CHECK_FALSE(corrupted.validate());

  ExclusivityVerdict unsupported = weakly_exclusive_verdict(2);
  REQUIRE(unsupported.validate());
  unsupported.result = ExclusivityResult::impossible;  // no certificate supports it
  CHECK_FALSE(unsupported.validate());
}

TEST_CASE("certificate kinds are stable") {
  CHECK(certificate_kind(Certificate{lcm_certificate(6)}) == "lcm");
  CHECK(certificate_kind(Certificate{generic_cutoff_certificate(13)}) == "generic-cutoff");
  CHECK(certificate_kind(Certificate{divisibility_certificate(4, true)}) == "divisibility");
  CHECK(certificate_kind(Certificate{published_genus5_witness()}) == "witness-audit");
  CHECK(certificate_valid(Certificate{lcm_certificate(6)}));
}

namespace {

// Outcome codes for the hand-written golden table below:
//   U unique_class, C countably_many, K continuum, P dim4_positive_continuum,
//   D dim4_discrete_unknown, E rejected profile.
// Columns: (empty, fixes=0) (empty, fixes=1) (zero, 0) (zero, 1) (pos, 0) (pos, 1)
struct GoldenRow {
  int dim;
  const char* codes;
};

constexpr GoldenRow kGolden[] = {
    {3, "UEEEKK"},  {4, "UEDDPP"},  {5, "UEEEKK"},  {6, "UEUCKK"},
    {7, "UEEEKK"},  {8, "UEUUKK"},  {9, "UEEEKK"},  {10, "UEUCKK"},
    {11, "UEEEKK"}, {12, "UEUUKK"}, {13, "UEEEKK"}, {14, "UEUCKK"},
    {15, "UEEEKK"}, {16, "UEUUKK"}, {17, "UEEEKK"}, {18, "UEUCKK"},
    {19, "UEEEKK"}, {20, "UEUUKK"},
};

}  // namespace

TEST_CASE("rigidity classification matches the golden table") {
  const SingularKind kinds[] = {SingularKind::empty, SingularKind::zero_dim,
                                SingularKind::positive_dim};
  for (const auto& row : kGolden) {
    for (int ki = 0; ki < 3; ++ki) {
      for (int fixes = 0; fixes <= 1; ++fixes) {
        const char code = row.codes[2 * ki + fixes];
        GeometryProfile profile;
        profile.ambient_dim = row.dim;
        profile.singular = kinds[ki];
        profile.has_order_two_with_fixed_points = fixes == 1;
        CAPTURE(row.dim);
        CAPTURE(ki);
        CAPTURE(fixes);
        if (code == 'E') {
          CHECK_THROWS_AS(trichotomy_classify(profile), std::invalid_argument);
          continue;
        }
        TrichotomyOutcome outcome = trichotomy_classify(profile);
        switch (code) {
          case 'U': CHECK(outcome.outcome == TrichotomyCase::unique_class); break;
          case 'C': CHECK(outcome.outcome == TrichotomyCase::countably_many); break;
          case 'K': CHECK(outcome.outcome == TrichotomyCase::continuum); break;
          case 'P': CHECK(outcome.outcome == TrichotomyCase::dim4_positive_continuum); break;
          case 'D': CHECK(outcome.outcome == TrichotomyCase::dim4_discrete_unknown); break;
          default: FAIL("bad code");
        }
        // Local rigidity holds exactly off the positive-dimensional branch.
        CHECK(outcome.locally_rigid == (kinds[ki] != SingularKind::positive_dim));

        // The lattice flag is metadata; outcomes must not move.
        GeometryProfile lattice = profile;
        lattice.context = ProfileContext::lattice;
        TrichotomyOutcome again = trichotomy_classify(lattice);
        CHECK(again.outcome == outcome.outcome);
        CHECK(again.locally_rigid == outcome.locally_rigid);
      }
    }
  }
}

TEST_CASE("rigidity classification edge dimensions") {
  GeometryProfile p;
  p.ambient_dim = 2;
  p.singular = SingularKind::positive_dim;
  CHECK(trichotomy_classify(p).outcome == TrichotomyCase::dim2_regime);
  p.singular = SingularKind::empty;
  CHECK(trichotomy_classify(p).outcome == TrichotomyCase::dim2_regime);

  p.ambient_dim = 1;
  CHECK_THROWS_AS(trichotomy_classify(p), std::invalid_argument);
  p.ambient_dim = 0;
  CHECK_THROWS_AS(trichotomy_classify(p), std::invalid_argument);

  CHECK(to_string(TrichotomyCase::countably_many) == "countably_many");
  CHECK(to_string(SingularKind::zero_dim) == "zero_dim");
  CHECK(to_string(ProfileContext::lattice) == "lattice");
}
