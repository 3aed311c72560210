#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "surfact/catalog.hpp"
#include "surfact/errors.hpp"
#include "surfact/group_search.hpp"
#include "surfact/perm_group.hpp"
#include "surfact/permutation.hpp"

using namespace surfact;

TEST_CASE("cycle notation round trip") {
  const char* samples[] = {"()", "(1,2)", "(1,2,3)(4,5)", "(2,5)(3,4)", "(1,5,4,3)",
                           "(1,2,3,4,5,6,7,8,9,10,11,12)"};
  for (const char* s : samples) {
    Permutation p = Permutation::parse(s);
    CHECK(Permutation::parse(p.str()) == p);
    CHECK(p.str() == Permutation::parse(p.str()).str());
  }
  // Non-canonical spellings normalize.
  CHECK(Permutation::parse("(5,4,3,1)").str() == "(1,5,4,3)");
  CHECK(Permutation::parse("(2,3,1)").str() == "(1,2,3)");
}

TEST_CASE("cycle notation rejects malformed input") {
  CHECK_THROWS_AS(Permutation::parse("(1,2"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1,1)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1,2)(2,3)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(0,1)"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("nonsense"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1,2)", 1), ParseError);
}

TEST_CASE("composition applies the right factor first") {
  Permutation c1 = Permutation::parse("(1,2,3,4,5)");
  Permutation c2 = Permutation::parse("(1,2)", 5);
  // (c1*c2)(1): c2 sends 1 to 2, then c1 sends 2 to 3.
  Permutation prod = c1 * c2;
  CHECK(prod(0) == 2);
  CHECK(prod.str() == "(1,3,4,5)");
  // The third element of the five-point triple, both spellings.
  CHECK(prod.inverse() == Permutation::parse("(5,4,3,1)"));
  CHECK(prod.inverse().str() == "(1,5,4,3)");
}

TEST_CASE("permutation algebra laws") {
  std::mt19937 rng(20260814);
  for (int trial = 0; trial < 200; ++trial) {
    int degree = 3 + static_cast<int>(rng() % 6);
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    Permutation p{img};
    std::shuffle(img.begin(), img.end(), rng);
    Permutation q{img};

    CHECK((p * p.inverse()).is_identity());
    CHECK((p * q).inverse() == q.inverse() * p.inverse());
    CHECK(p.power(static_cast<std::int64_t>(p.order())).is_identity());
    CHECK(p.power(-1) == p.inverse());
    CHECK(p.conjugated_by(q) == q * p * q.inverse());
    CHECK(p.conjugated_by(q).order() == p.order());

    // Order against the dumbest possible computation.
    Permutation acc = p;
    std::uint64_t naive = 1;
    while (!acc.is_identity()) {
      acc = acc * p;
      ++naive;
    }
    CHECK(naive == p.order());
  }
}

TEST_CASE("degree mismatch is an error, extension is not") {
  Permutation small = Permutation::parse("(1,2)");
  Permutation large = Permutation::parse("(1,2,3,4)");
  CHECK_THROWS_AS(small * large, DegreeMismatch);
  CHECK((small.extended_to(4) * large).degree() == 4);
  CHECK(small.shifted(2, 4).str() == "(3,4)");
}

TEST_CASE("lcm_checked overflows loudly") {
  CHECK(lcm_checked(6, 10) == 30);
  CHECK_THROWS_AS(lcm_checked(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(lcm_checked(0x8000000000000000ULL, 3), std::overflow_error);
}

namespace {

// Closure of a generating set by plain breadth-first multiplication. The
// stabilizer chain must agree with this on everything small.
std::set<Permutation> naive_closure(int degree, const std::vector<Permutation>& gens,
                                    std::size_t cap = 6000) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& f : frontier) {
      for (const auto& g : gens) {
        Permutation h = f * g;
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    REQUIRE(seen.size() <= cap);
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("stabilizer chain order equals naive closure on random generators") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    int degree = 4 + static_cast<int>(rng() % 4);  // keeps closures under ~40k... S7 is 5040
    int ngens = 1 + static_cast<int>(rng() % 3);
    std::vector<Permutation> gens;
    for (int k = 0; k < ngens; ++k) {
      std::vector<int> img(degree);
      for (int i = 0; i < degree; ++i) img[i] = i;
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
    }
    auto closure = naive_closure(degree, gens);
    PermGroup g(degree, gens);
    CHECK(g.order() == closure.size());
    for (const auto& e : closure) CHECK(g.contains(e));
  }
}

TEST_CASE("membership is exact") {
  PermGroup a4(4, {Permutation::parse("(1,2,3)", 4), Permutation::parse("(2,3,4)", 4)});
  CHECK(a4.order() == 12);
  CHECK(a4.contains(Permutation::parse("(1,2)(3,4)", 4)));
  CHECK_FALSE(a4.contains(Permutation::parse("(1,2)", 4)));
  CHECK_FALSE(a4.is_abelian());
  CHECK(PermGroup(5, {Permutation::parse("(1,2,3,4,5)")}).is_abelian());
}

TEST_CASE("elements respect the enumeration ceiling") {
  GroupEntry s5 = builtin_symmetric(5);
  CHECK(s5.group.elements().size() == 120);
  CHECK_THROWS_AS(s5.group.elements(100), CeilingExceeded);
}

TEST_CASE("conjugacy classes partition the group") {
  for (const GroupEntry& e : {builtin_symmetric(4), builtin_dihedral(6), builtin_alternating(5),
                              builtin_abelian({2, 4})}) {
    auto classes = conjugacy_classes(e.group);
    std::uint64_t total = 0;
    for (const auto& c : classes) {
      CHECK(e.group.order() % c.size == 0);  // orbit-stabilizer
      CHECK(e.group.contains(c.representative));
      total += c.size;
    }
    CHECK(total == e.group.order());
  }
  // S4: 1+6+8+6+3 over orders 1,2,3,4.
  CHECK(conjugacy_classes(builtin_symmetric(4).group).size() == 5);
}

TEST_CASE("element_of_order finds exactly what exists") {
  GroupEntry s4 = builtin_symmetric(4);
  for (std::uint64_t n : {1, 2, 3, 4}) CHECK(element_of_order(s4.group, n).has_value());
  CHECK_FALSE(element_of_order(s4.group, 6).has_value());
  CHECK_FALSE(element_of_order(s4.group, 8).has_value());
  auto witness = element_of_order(s4.group, 4);
  REQUIRE(witness.has_value());
  CHECK(witness->order() == 4);
}

TEST_CASE("klein four detection") {
  CHECK_FALSE(has_klein_four(builtin_cyclic(8).group));
  CHECK_FALSE(has_klein_four(builtin_cyclic(4).group));
  CHECK(has_klein_four(builtin_symmetric(4).group));
  CHECK(has_klein_four(builtin_abelian({2, 2}).group));

  auto pair = klein_four_witness(builtin_symmetric(4).group);
  REQUIRE(pair.has_value());
  CHECK(pair->first.order() == 2);
  CHECK(pair->second.order() == 2);
  CHECK(pair->first != pair->second);
  CHECK(pair->first * pair->second == pair->second * pair->first);
  CHECK_FALSE(klein_four_witness(builtin_cyclic(12).group).has_value());
}

TEST_CASE("subgroup scan: classes, orders, and known counts") {
  GroupEntry s4 = builtin_symmetric(4);
  auto sylow2 = subgroups_of_order(s4.group, 8);
  CHECK(sylow2.size() == 1);  // the three dihedral Sylows are conjugate
  CHECK(sylow2[0].order() == 8);

  CHECK(subgroups_of_order(builtin_cyclic(6).group, 3).size() == 1);
  CHECK(subgroups_of_order(builtin_cyclic(6).group, 4).empty());

  // No order-40 subgroup in S5: index 3 would force a core, and 40 does not
  // divide any smaller symmetric image. The scan confirms it exhaustively.
  CHECK(subgroups_of_order(builtin_symmetric(5).group, 40).empty());

  CHECK_THROWS_AS(subgroups_of_order(builtin_symmetric(7).group, 8), CeilingExceeded);
}

namespace {

// Independent monomorphism oracle: express every element of h as a word in
// its generators, then try every tuple of generator images in g and check
// the full multiplication table.
bool mono_exists_brute(const PermGroup& h, const PermGroup& g) {
  auto h_elems = h.elements();
  auto g_elems = g.elements();
  int n = static_cast<int>(h_elems.size());

  // Words: BFS from the identity, remembering a generator index per step.
  std::map<Permutation, std::vector<int>> word;
  word[Permutation::identity(h.degree())] = {};
  std::vector<Permutation> frontier{Permutation::identity(h.degree())};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& f : frontier) {
      for (std::size_t gi = 0; gi < h.generators().size(); ++gi) {
        Permutation e = f * h.generators()[gi];
        if (!word.count(e)) {
          auto w = word[f];
          w.push_back(static_cast<int>(gi));
          word[e] = std::move(w);
          next.push_back(e);
        }
      }
    }
    frontier = std::move(next);
  }
  REQUIRE(static_cast<int>(word.size()) == n);

  std::vector<std::size_t> choice(h.generators().size(), 0);
  while (true) {
    auto image = [&](const Permutation& e) {
      Permutation acc = Permutation::identity(g.degree());
      for (int gi : word.at(e)) acc = acc * g_elems[choice[gi]];
      return acc;
    };
    bool ok = true;
    std::set<Permutation> hit;
    for (const auto& x : h_elems) {
      if (!hit.insert(image(x)).second) {
        ok = false;  // not injective
        break;
      }
    }
    if (ok) {
      for (const auto& x : h_elems) {
        for (const auto& y : h_elems) {
          if (image(x * y) != image(x) * image(y)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
    }
    if (ok) return true;
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == g_elems.size()) choice[pos++] = 0;
    if (pos == choice.size()) return false;
  }
}

}  // namespace

TEST_CASE("monomorphism search agrees with the brute-force oracle") {
  struct Pair {
    GroupEntry sub, host;
    bool expect;
  };
  const Pair pairs[] = {
      {builtin_cyclic(2), builtin_symmetric(3), true},
      {builtin_cyclic(4), builtin_abelian({2, 2}), false},
      {builtin_cyclic(6), builtin_symmetric(3), false},
      {builtin_symmetric(3), builtin_symmetric(4), true},
      {builtin_abelian({2, 2}), builtin_dihedral(4), true},
      {builtin_cyclic(8), builtin_dihedral(4), false},
      {builtin_dihedral(3), builtin_alternating(4), false},  // A4 has no order-6 subgroup
  };
  for (const auto& p : pairs) {
    auto result = find_monomorphism(p.sub.group, p.host.group);
    REQUIRE(result.status != SearchStatus::inconclusive);
    CHECK((result.status == SearchStatus::found) == p.expect);
    CHECK(mono_exists_brute(p.sub.group, p.host.group) == p.expect);
    if (result.found()) {
      // The recorded images must generate an isomorphic copy: same order,
      // relations preserved via the oracle's word check above.
      PermGroup img(p.host.group.degree(), result.value->images);
      CHECK(img.order() == p.sub.group.order());
    }
  }
}

TEST_CASE("isomorphism classifier on small groups") {
  CHECK(isomorphic(builtin_cyclic(6).group, builtin_abelian({2, 3}).group) ==
        SearchStatus::found);
  CHECK(isomorphic(builtin_cyclic(6).group, builtin_symmetric(3).group) ==
        SearchStatus::absent);
  CHECK(isomorphic(builtin_dihedral(3).group, builtin_symmetric(3).group) ==
        SearchStatus::found);
  CHECK(isomorphic(builtin_abelian({2, 2, 2}).group, builtin_dihedral(4).group) ==
        SearchStatus::absent);
}

TEST_CASE("generating pair search") {
  auto s5 = find_generating_pair(builtin_symmetric(5).group);
  REQUIRE(s5.found());
  PermGroup regen(5, {s5.value->first, s5.value->second});
  CHECK(regen.order() == 120);

  CHECK(find_generating_pair(builtin_abelian({2, 2, 2}).group).status == SearchStatus::absent);
  CHECK(is_two_generated(builtin_abelian({2, 2, 2}).group).status == SearchStatus::absent);
  CHECK(is_two_generated(builtin_symmetric(5).group).found());
}

TEST_CASE("builtin families have the advertised orders") {
  CHECK(builtin_cyclic(40).group.order() == 40);
  CHECK(builtin_dihedral(10).group.order() == 20);
  CHECK(builtin_symmetric(6).group.order() == 720);
  CHECK(builtin_alternating(5).group.order() == 60);
  CHECK(builtin_abelian({4, 6}).group.order() == 24);
  CHECK(builtin_sl2(7).group.order() == 336);
  CHECK(builtin_psl2(7).group.order() == 168);
  CHECK(direct_product(builtin_cyclic(3), builtin_symmetric(3)).group.order() == 18);
  CHECK(builtin_sl2(3).group.order() == 24);
  CHECK(builtin_psl2(5).group.order() == 60);
  CHECK_THROWS_AS(builtin_sl2(6), std::invalid_argument);
  CHECK_THROWS_AS(builtin_dihedral(2), std::invalid_argument);
}
