#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfact/catalog.hpp"
#include "surfact/group_search.hpp"
#include "surfact/perm_group.hpp"
#include "surfact/signature.hpp"

namespace surfact {

// The normalized area term: 2*rho - 2 + sum(1 - 1/m_i).
Rational rh_measure(const Signature& s);

// Genus of the covering surface when a group of the given order acts with this
// branching data: sigma = 1 + order * measure / 2. Empty when that is not an
// integer >= 2 (only the bounded regime sigma >= 2 is supported).
std::optional<int> rh_genus(std::uint64_t order, const Signature& s);

// All signatures a group of the given order could act with on genus sigma,
// sorted by (orbit genus, period count, periods). Complete: period terms lie
// in [1/2, 1), which bounds the period count by 2*measure + 4 and the orbit
// genus by (measure + 2)/2, and periods divide the order.
// Throws GenusRegimeError for sigma < 2.
std::vector<Signature> enumerate_signatures(int sigma, std::uint64_t order);

// Surface-kernel data: hyperbolic pairs (a_i, b_i) and elliptic elements c_j.
// The defining relation is  prod [a_i, b_i] * prod c_j = identity,  with
// order(c_j) equal to the j-th period and the whole tuple generating the group.
struct GeneratingVector {
  std::vector<Permutation> a, b;  // equal length
  std::vector<Permutation> c;

  std::vector<Permutation> flattened() const;  // a1,b1,a2,b2,...,c1,...,cr
};

Permutation vector_product(const GeneratingVector& v, int degree);
bool vector_generates(const PermGroup& g, const GeneratingVector& v);

enum class VectorVerdict { valid, invalid_as_declared };
std::string to_string(VectorVerdict v);  // "VALID" / "INVALID-AS-DECLARED"

// Everything verify_vector measured, kept side by side with the declaration.
struct VerificationReport {
  VectorVerdict verdict = VectorVerdict::invalid_as_declared;
  DeclaredSignature declared;
  bool counts_ok = false;     // tuple shape matches the declaration
  bool orders_ok = false;     // measured orders equal declared periods, in order
  bool product_ok = false;    // defining relation holds
  bool generates_ok = false;  // tuple generates the group
  std::vector<std::uint64_t> measured_orders;
  std::optional<int> declared_genus;  // genus implied by the declaration
  std::optional<int> measured_genus;  // genus implied by the measured orders
  std::vector<std::string> notes;

  std::string verdict_str() const { return to_string(verdict); }
};

// Measures a tuple against its declaration. Never throws on mismatch: a wrong
// declaration is a result (INVALID-AS-DECLARED), not an error.
VerificationReport verify_vector(const PermGroup& g, const DeclaredSignature& declared,
                                 const GeneratingVector& v);

// A fully verified action: constructing one re-checks the defining relation,
// the orders, generation, and the genus arithmetic, and throws on any failure.
struct ActionRecord {
  std::string group_id;
  PermGroup group;
  int genus = 0;
  Signature signature;
  GeneratingVector vector;
  std::string provenance;  // "constructed" | "searched" | "ingested"

  static ActionRecord make(std::string group_id, PermGroup group, int genus,
                           Signature signature, GeneratingVector vector,
                           std::string provenance);
};

// Searches for a generating vector realizing the signature. Precondition:
// rh_genus(|g|, s) must be nonempty, otherwise std::invalid_argument (asking
// for a vector with inconsistent branching data is a caller bug).
// The first chosen element ranges over conjugacy class representatives only;
// the final elliptic element is forced by the defining relation.
SearchResult<GeneratingVector> find_generating_vector(const PermGroup& g, const Signature& s,
                                                      const SearchLimits& limits = {});

// The two actions every genus sigma >= 2 admits: the free action of C_(sigma-1)
// on signature (2;-) and the C_sigma action on (1;sigma,sigma).
std::vector<ActionRecord> canonical_actions(int sigma);

// The order-8(sigma+1) action with signature (0;2,4,2(sigma+1)) realized by
// the bounded-genus family, witnessed by the triple ((xy)^-1, x, y).
ActionRecord bounded_family_action(int sigma);

// Free action of any two-generated group: vector (x, y, y, x) on (2;-), genus
// |G| + 1. The commutator identity [x,y][y,x] = 1 makes the relation automatic.
SearchResult<ActionRecord> free_action(const GroupEntry& entry, const SearchLimits& limits = {});

// Scans enumerate_signatures(sigma, |G|) in order and returns the first
// realized one. Work is spread over `workers` threads; the answer is selected
// by signature index, so it does not depend on the worker count.
SearchResult<ActionRecord> acts_on(const GroupEntry& entry, int sigma,
                                   const SearchLimits& limits = {}, int workers = 1);

}  // namespace surfact
