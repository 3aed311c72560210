#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "surfact/errors.hpp"
#include "surfact/presentation.hpp"
#include "surfact/todd_coxeter.hpp"

using namespace surfact;

TEST_CASE("presentation parse and print round trip") {
  const char* samples[] = {
      "<x | x^5>",
      "<x,y | x^4, y^18, (x*y)^2, (x^-1*y)^2>",
      "<a,b | a^2, b^3, (a*b)^7>",
      "<r,s | r^7, s^2, (r*s)^2>",
  };
  for (const char* s : samples) {
    Presentation p = Presentation::parse(s);
    Presentation again = Presentation::parse(p.str());
    CHECK(p.str() == again.str());
    CHECK(p.generators == again.generators);
    CHECK(p.relators == again.relators);
  }
}

TEST_CASE("presentation parse rejects malformed input") {
  CHECK_THROWS_AS(Presentation::parse("x | x^5"), ParseError);
  CHECK_THROWS_AS(Presentation::parse("<x | y^2>"), ParseError);
  CHECK_THROWS_AS(Presentation::parse("<x | x^>"), ParseError);
  CHECK_THROWS_AS(Presentation::parse("<x | (x>"), ParseError);
  CHECK_THROWS_AS(Presentation::parse("<x,x | x^2>"), ParseError);

  // A bare generator list is a free group, not an error.
  CHECK(Presentation::parse("<x,y>").relators.empty());
}

TEST_CASE("word helpers") {
  Word w{gen_column(0, false), gen_column(1, false)};
  CHECK(word_inverse(w) == Word{gen_column(1, true), gen_column(0, true)});
  CHECK(word_power(w, 2) == Word{w[0], w[1], w[0], w[1]});
  CHECK(word_power(w, -1) == word_inverse(w));
  CHECK(word_power(w, 0).empty());
}

TEST_CASE("coset enumeration on known orders") {
  struct Sample {
    const char* text;
    std::uint64_t order;
  };
  const Sample samples[] = {
      {"<x | x^5>", 5},
      {"<a,b | a^2, b^3, (a*b)^2>", 6},        // S3
      {"<a,b | a^2, b^2, (a*b)^2>", 4},        // Klein four
      {"<i,j | i^4, j^4, i^2*j^2, i*j*i*j^-1>", 8},  // quaternions
      {"<a,b | a^2, b^3, (a*b)^5>", 60},       // A5
      {"<a,b | a^2, b^3, (a*b)^7, (a*b*a*b*b)^4>", 168},  // the order-168 simple group
  };
  for (const auto& s : samples) {
    auto result = todd_coxeter(Presentation::parse(s.text), 100000);
    REQUIRE(result.status == EnumerationStatus::completed);
    CHECK(result.coset_count == s.order);
    CHECK(result.verified);
    PermGroup regular = regular_representation(result);
    CHECK(regular.order() == s.order);
    CHECK(regular.degree() == static_cast<int>(s.order));
  }
}

TEST_CASE("coset enumeration of every cyclic group up to 200") {
  for (int n = 1; n <= 200; ++n) {
    auto result = todd_coxeter(Presentation::parse("<x | x^" + std::to_string(n) + ">"), 4000);
    REQUIRE(result.status == EnumerationStatus::completed);
    CHECK(result.coset_count == static_cast<std::uint64_t>(n));
    CHECK(result.verified);
  }
}

TEST_CASE("infinite groups overflow instead of lying") {
  // The infinite dihedral group: no relator bounds the order.
  auto result = todd_coxeter(Presentation::parse("<a,b | a^2, b^2>"), 2000);
  CHECK(result.status == EnumerationStatus::overflow);
  CHECK_FALSE(result.verified);
  CHECK(result.cosets_defined >= 2000);

  // Free product of C2 with Z.
  CHECK(todd_coxeter(Presentation::parse("<x,y | x^2>"), 500).status ==
        EnumerationStatus::overflow);
}

TEST_CASE("enumeration is deterministic") {
  Presentation p = Presentation::parse("<a,b | a^2, b^3, (a*b)^5>");
  auto first = todd_coxeter(p, 100000);
  auto second = todd_coxeter(p, 100000);
  CHECK(first.coset_count == second.coset_count);
  CHECK(first.cosets_defined == second.cosets_defined);
  CHECK(first.generator_actions == second.generator_actions);
}

TEST_CASE("bounded family groups have order 8(sigma+1)") {
  for (int sigma = 2; sigma <= 50; ++sigma) {
    AmGroup am = accola_maclachlan_group(sigma);
    CHECK(am.group.order() == 8ULL * (sigma + 1));
    CHECK(am.group.degree() == 8 * (sigma + 1));  // regular, hence faithful
    CHECK(am.x.order() == 4);
    CHECK(am.y.order() == 2ULL * (sigma + 1));
    CHECK(am.xy().order() == 2);
    CHECK(am.x_inv_y().order() == 2);
    CHECK(am.group.contains(am.x));
    CHECK(am.group.contains(am.y));
  }
  CHECK_THROWS_AS(accola_maclachlan_group(1), GenusRegimeError);
}

TEST_CASE("bounded family generators generate") {
  for (int sigma : {2, 3, 4, 8, 12}) {
    AmGroup am = accola_maclachlan_group(sigma);
    PermGroup regen(am.group.degree(), {am.x, am.y});
    CHECK(regen.order() == am.group.order());
  }
}
