#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "surfact/permutation.hpp"

namespace surfact {

inline constexpr std::uint64_t kEnumerationCeiling = 1'000'000;

// Finite permutation group given by generators, backed by a deterministic
// stabilizer chain (Schreier-Sims with Schreier-vector transversals; no
// randomization, so identical input always yields the identical chain).
class PermGroup {
public:
  PermGroup();  // trivial group on one point
  explicit PermGroup(int degree, std::vector<Permutation> generators = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool is_abelian() const;
  bool contains(const Permutation& p) const;

  const std::vector<int>& base() const { return base_; }

  // All elements, sorted by image table. Throws CeilingExceeded if the order
  // exceeds the ceiling.
  std::vector<Permutation> elements(std::uint64_t ceiling = kEnumerationCeiling) const;

private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;   // strong generators introduced at this level
    std::vector<int> orbit;          // BFS discovery order, orbit[0] == base_point
    std::vector<int> slot;           // point -> index into orbit, -1 if outside
    std::vector<int> tree_parent;    // point -> previous point on the BFS tree
    std::vector<int> tree_level;     // point -> level index owning the edge generator
    std::vector<int> tree_gen;       // point -> generator index within that level
  };

  void insert_generator(const Permutation& g);
  // Sift p through levels [from, end); returns the residue and the level where
  // sifting stopped (== levels_.size() when the residue must open a new level
  // or p sifted to the identity).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const;
  void add_strong_generator(Permutation g, std::size_t level);
  void rebuild_orbit(std::size_t level);
  Permutation transversal_rep(std::size_t level, int point) const;
  void close_chain();
  void recompute_order();

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::vector<int> base_;
  std::uint64_t order_ = 1;
};

}  // namespace surfact
