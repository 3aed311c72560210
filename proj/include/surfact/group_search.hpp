#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfact/perm_group.hpp"
#include "surfact/permutation.hpp"

namespace surfact {

// Hard ceilings and search budgets. Ceilings throw; budgets make a search
// return `inconclusive`.
struct SearchLimits {
  std::uint64_t enumeration_ceiling = kEnumerationCeiling;
  std::uint64_t definitive_order_bound = 2000;  // below this, "absent" is exhaustive
  std::uint64_t subgroup_scan_ceiling = 2000;
  std::uint64_t node_budget = 10'000'000;
};

enum class SearchStatus {
  found,
  absent,        // search space exhausted; definitive
  inconclusive,  // budget ran out before exhaustion
};

std::string to_string(SearchStatus s);

template <typename T>
struct SearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<T> value;        // present iff status == found
  std::uint64_t nodes_used = 0;  // DFS nodes spent

  bool found() const { return status == SearchStatus::found; }
};

struct ConjugacyClass {
  Permutation representative;  // lexicographically least member
  std::uint64_t size = 0;
};

// Classes ordered by (element order of rep, image table of rep).
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g,
                                              const SearchLimits& limits = {});

// Some element of the given order, if any (lexicographically least).
std::optional<Permutation> element_of_order(const PermGroup& g, std::uint64_t n,
                                            const SearchLimits& limits = {});

// True iff g contains a subgroup C2 x C2: two distinct commuting involutions.
bool has_klein_four(const PermGroup& g, const SearchLimits& limits = {});

// First commuting pair of distinct involutions found, if any. Two such
// elements generate a Klein four-group.
std::optional<std::pair<Permutation, Permutation>> klein_four_witness(
    const PermGroup& g, const SearchLimits& limits = {});

// All subgroups of the given order, one representative per conjugacy class of
// subgroups. Throws CeilingExceeded when |g| exceeds the subgroup scan ceiling.
std::vector<PermGroup> subgroups_of_order(const PermGroup& g, std::uint64_t k,
                                          const SearchLimits& limits = {});

// An injective homomorphism, recorded by generator images.
struct Monomorphism {
  std::vector<Permutation> domain_generators;
  std::vector<Permutation> images;  // images[i] = phi(domain_generators[i])
};

// Searches for a monomorphism from h into g. The first generator image only
// ranges over conjugacy class representatives of g (conjugating an embedding
// moves the image class nowhere, so this keeps existence intact). "absent"
// means the pruned space was exhausted and is definitive.
SearchResult<Monomorphism> find_monomorphism(const PermGroup& h, const PermGroup& g,
                                             const SearchLimits& limits = {});

// Isomorphism test: equal orders plus monomorphisms both ways.
SearchStatus isomorphic(const PermGroup& a, const PermGroup& b,
                        const SearchLimits& limits = {});

// A generating pair (x, y) with <x, y> = g, if one exists. x ranges over
// conjugacy class representatives only.
SearchResult<std::pair<Permutation, Permutation>> find_generating_pair(
    const PermGroup& g, const SearchLimits& limits = {});

}  // namespace surfact
