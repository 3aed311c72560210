#pragma once

#include <cstdint>
#include <vector>

#include "surfact/perm_group.hpp"
#include "surfact/presentation.hpp"

namespace surfact {

enum class EnumerationStatus {
  completed,
  overflow,  // coset budget exhausted; no conclusion about the order
};

// Result of a coset enumeration over the trivial subgroup. On completion the
// live cosets are renumbered 0..count-1 in ascending order of their original
// (deterministic, definition-order) numbers.
struct CosetTableResult {
  EnumerationStatus status = EnumerationStatus::overflow;
  std::uint64_t coset_count = 0;                    // group order, when completed
  std::uint64_t cosets_defined = 0;                 // total definitions attempted
  std::vector<std::vector<int>> generator_actions;  // [gen][coset] -> coset
  bool verified = false;  // full re-check of the finished table passed
};

// HLT-style enumeration: scan every relator at every live coset, filling gaps
// by defining new cosets (lowest row first), with full coincidence processing.
// Deterministic: identical input yields the identical table.
CosetTableResult todd_coxeter(const Presentation& p, std::uint64_t max_cosets);

// The finished table read as permutations of the cosets: the regular action.
// Faithful by construction, so the group order equals the coset count.
PermGroup regular_representation(const CosetTableResult& table);

// The bounded-genus family: for sigma >= 2,
//   <x,y | x^4, y^(2(sigma+1)), (x*y)^2, (x^-1*y)^2>
// has order 8(sigma+1) and acts on genus sigma. The constructor enumerates the
// presentation and hands back the regular representation with the generator
// images exposed.
struct AmGroup {
  int sigma = 0;
  Presentation presentation;
  PermGroup group;
  Permutation x, y;

  Permutation xy() const { return x * y; }
  Permutation x_inv_y() const { return x.inverse() * y; }
};

// Throws GenusRegimeError for sigma < 2; coset budget is 16(sigma+1) cosets
// with a x4 safety factor.
AmGroup accola_maclachlan_group(int sigma);

}  // namespace surfact
