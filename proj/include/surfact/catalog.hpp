#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "surfact/group_search.hpp"
#include "surfact/perm_group.hpp"

namespace surfact {

// A named concrete group. `source` is "builtin" for constructed families or
// the file path an entry was ingested from.
struct GroupEntry {
  std::string id;
  PermGroup group;
  std::vector<std::string> tags;
  std::string source;
};

// A claim that a catalog file lists *every* group of some order (one entry per
// isomorphism class). Claims are trusted as stated and echoed verbatim in any
// verdict that relies on them.
struct CoverageClaim {
  std::uint64_t order = 0;

  std::string str() const { return "all-of-order:" + std::to_string(order); }
  friend bool operator==(const CoverageClaim&, const CoverageClaim&) = default;
};

class Catalog {
public:
  void add(GroupEntry entry);  // duplicate id -> ParseError
  void add_coverage(CoverageClaim claim);

  const GroupEntry* find(const std::string& id) const;
  std::vector<const GroupEntry*> of_order(std::uint64_t n) const;
  bool covers_order(std::uint64_t n) const;

  const std::vector<GroupEntry>& entries() const { return entries_; }
  const std::vector<CoverageClaim>& coverage() const { return coverage_; }
  std::size_t size() const { return entries_.size(); }

private:
  std::vector<GroupEntry> entries_;
  std::vector<CoverageClaim> coverage_;
};

// Stanza file format, one entry per line:
//   id=<name> degree=<d> gens=<cycles>[;<cycles>...] order=<n>
// plus standalone coverage directives:
//   coverage=all-of-order:<n>
// Blank lines and '#' comments are skipped. A declared order that disagrees
// with the generated group is a hard error (the file is corrupt, not the
// computation).
Catalog load_catalog(const std::string& path);
Catalog load_catalog_stream(std::istream& in, const std::string& name);
void save_catalog(const Catalog& c, const std::string& path);
void save_catalog_stream(const Catalog& c, std::ostream& out);

// Builtin families. Ids follow the constructor: "C12", "D6" (hexagon, order
// 12), "S5", "A5", "AB[2,4]" prints as "C2xC4", "SL2(7)", "PSL2(7)", "H4".
GroupEntry builtin_cyclic(int n);
GroupEntry builtin_dihedral(int ngon);  // order 2*ngon, ngon >= 3
GroupEntry builtin_abelian(const std::vector<int>& cyclic_factors);
GroupEntry builtin_symmetric(int n);
GroupEntry builtin_alternating(int n);
GroupEntry builtin_sl2(int p);   // prime p <= 31, on the p^2-1 nonzero vectors
GroupEntry builtin_psl2(int p);  // prime p <= 31, on the p+1 projective points
GroupEntry builtin_accola_maclachlan(int sigma);
GroupEntry direct_product(const GroupEntry& a, const GroupEntry& b);

// Generating pair search (x over class representatives); found iff the group
// can be generated by two elements. The trivial group counts (vacuously).
SearchResult<std::pair<Permutation, Permutation>> is_two_generated(
    const PermGroup& g, const SearchLimits& limits = {});

}  // namespace surfact
