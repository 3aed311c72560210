#include "surfact/trichotomy.hpp"

#include <stdexcept>

namespace surfact {

std::string to_string(SingularKind kind) {
  switch (kind) {
    case SingularKind::empty: return "empty";
    case SingularKind::zero_dim: return "zero_dim";
    case SingularKind::positive_dim: return "positive_dim";
  }
  throw std::logic_error("unreachable singular kind");
}

std::string to_string(ProfileContext context) {
  return context == ProfileContext::manifold ? "manifold" : "lattice";
}

std::string to_string(TrichotomyCase outcome) {
  switch (outcome) {
    case TrichotomyCase::unique_class: return "unique_class";
    case TrichotomyCase::countably_many: return "countably_many";
    case TrichotomyCase::continuum: return "continuum";
    case TrichotomyCase::dim4_positive_continuum: return "dim4_positive_continuum";
    case TrichotomyCase::dim4_discrete_unknown: return "dim4_discrete_unknown";
    case TrichotomyCase::dim2_regime: return "dim2_regime";
  }
  throw std::logic_error("unreachable trichotomy case");
}

TrichotomyOutcome trichotomy_classify(const GeometryProfile& profile) {
  const int dim = profile.ambient_dim;
  if (dim < 2) {
    throw std::invalid_argument("trichotomy_classify: ambient dimension must be >= 2, got " +
                                std::to_string(dim));
  }
  if (profile.singular == SingularKind::empty && profile.has_order_two_with_fixed_points) {
    throw std::invalid_argument(
        "trichotomy_classify: an order-2 element with fixed points contradicts an empty "
        "singular locus");
  }

  TrichotomyOutcome out;
  out.locally_rigid = profile.singular != SingularKind::positive_dim;

  if (dim == 2) {
    out.outcome = TrichotomyCase::dim2_regime;
    return out;
  }

  // Fixed loci of orientation-preserving isometries have even codimension,
  // so isolated singular points need an even ambient dimension.
  if (profile.singular == SingularKind::zero_dim && dim % 2 != 0) {
    throw std::invalid_argument(
        "trichotomy_classify: a zero-dimensional singular locus needs even ambient dimension, "
        "got " + std::to_string(dim));
  }

  if (dim == 4) {
    switch (profile.singular) {
      case SingularKind::empty:
        out.outcome = TrichotomyCase::unique_class;
        return out;
      case SingularKind::zero_dim:
        out.outcome = TrichotomyCase::dim4_discrete_unknown;
        return out;
      case SingularKind::positive_dim:
        out.outcome = TrichotomyCase::dim4_positive_continuum;
        return out;
    }
  }

  switch (profile.singular) {
    case SingularKind::empty:
      out.outcome = TrichotomyCase::unique_class;
      return out;
    case SingularKind::zero_dim:
      // Order-2 isotropy around an isolated point flips a half-dimensional
      // pair only when the dimension is 2 mod 4; that is the countable case.
      if (dim % 4 == 2 && profile.has_order_two_with_fixed_points) {
        out.outcome = TrichotomyCase::countably_many;
      } else {
        out.outcome = TrichotomyCase::unique_class;
      }
      return out;
    case SingularKind::positive_dim:
      out.outcome = TrichotomyCase::continuum;
      return out;
  }
  throw std::logic_error("unreachable profile");
}

}  // namespace surfact
