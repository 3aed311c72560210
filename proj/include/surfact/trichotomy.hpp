#pragma once

#include <string>

namespace surfact {

// Shape of the singular locus of the quotient space of an action.
enum class SingularKind { empty, zero_dim, positive_dim };

// Whether the profile describes a smooth ambient space or an arithmetic
// quotient presented by a lattice. Metadata only: the classification below
// runs on the same decision table for both.
enum class ProfileContext { manifold, lattice };

std::string to_string(SingularKind kind);
std::string to_string(ProfileContext context);

// The inputs the rigidity classification needs about one action.
struct GeometryProfile {
  int ambient_dim = 0;
  SingularKind singular = SingularKind::empty;
  bool has_order_two_with_fixed_points = false;
  ProfileContext context = ProfileContext::manifold;
};

enum class TrichotomyCase {
  unique_class,             // one equivalence class; locally and globally rigid
  countably_many,           // countably many classes, each locally rigid
  continuum,                // a positive-dimensional family of classes
  dim4_positive_continuum,  // dimension-4 special case of the continuum branch
  dim4_discrete_unknown,    // dimension 4, discrete singular locus: open case
  dim2_regime,              // dimension 2 falls under the surface theory
};

std::string to_string(TrichotomyCase outcome);

struct TrichotomyOutcome {
  TrichotomyCase outcome = TrichotomyCase::unique_class;
  bool locally_rigid = false;
};

// Classifies a profile into exactly one of the six outcomes.
//
// Throws std::invalid_argument when the profile is inconsistent:
//  - ambient_dim < 2;
//  - a zero-dimensional singular locus in odd ambient dimension (fixed loci
//    of orientation-preserving isometries have even codimension);
//  - an empty singular locus alongside an order-2 element with fixed points
//    (such an element forces singular points).
TrichotomyOutcome trichotomy_classify(const GeometryProfile& profile);

}  // namespace surfact
