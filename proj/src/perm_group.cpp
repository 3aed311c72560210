#include "surfact/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "surfact/errors.hpp"

namespace surfact {

namespace {

int min_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i) {
    if (p(i) != i) return i;
  }
  return -1;
}

}  // namespace

PermGroup::PermGroup() : degree_(1) {}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("group degree must be >= 1");
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " + std::to_string(degree));
    }
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  for (const auto& g : generators_) insert_generator(g);
  close_chain();
  recompute_order();
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    }
  }
  return true;
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    if (p.is_identity()) return {std::move(p), levels_.size()};
    int moved = p(levels_[l].base_point);
    if (moved == levels_[l].base_point) continue;
    if (levels_[l].slot[moved] < 0) return {std::move(p), l};
    p = transversal_rep(l, moved).inverse() * p;
  }
  return {std::move(p), levels_.size()};
}

Permutation PermGroup::transversal_rep(std::size_t level, int point) const {
  const Level& lv = levels_[level];
  // Walk the Schreier tree back to the base point, collecting edges, then
  // multiply forward so that rep(base) = identity and rep(point)(base) = point.
  std::vector<std::pair<int, int>> edges;  // (owning level, generator index)
  int p = point;
  while (p != lv.base_point) {
    edges.emplace_back(lv.tree_level[p], lv.tree_gen[p]);
    p = lv.tree_parent[p];
  }
  Permutation rep = Permutation::identity(degree_);
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    rep = levels_[it->first].gens[it->second] * rep;
  }
  return rep;
}

void PermGroup::insert_generator(const Permutation& g) {
  auto [residue, level] = sift(g, 0);
  if (!residue.is_identity()) add_strong_generator(std::move(residue), level);
}

void PermGroup::add_strong_generator(Permutation g, std::size_t level) {
  if (level == levels_.size()) {
    Level lv;
    lv.base_point = min_moved_point(g);
    lv.slot.assign(degree_, -1);
    lv.tree_parent.assign(degree_, -1);
    lv.tree_level.assign(degree_, -1);
    lv.tree_gen.assign(degree_, -1);
    levels_.push_back(std::move(lv));
    base_.push_back(levels_.back().base_point);
  }
  levels_[level].gens.push_back(std::move(g));
  // The new generator lies in every stabilizer above this level, so orbits at
  // this level and all shallower ones can grow.
  for (std::size_t l = 0; l <= level && l < levels_.size(); ++l) rebuild_orbit(l);
}

void PermGroup::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.orbit.clear();
  std::fill(lv.slot.begin(), lv.slot.end(), -1);
  std::fill(lv.tree_parent.begin(), lv.tree_parent.end(), -1);
  lv.orbit.push_back(lv.base_point);
  lv.slot[lv.base_point] = 0;
  // Generators usable at this level: everything introduced at this level or
  // deeper (those fix all earlier base points).
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    int pt = lv.orbit[head];
    for (std::size_t l = level; l < levels_.size(); ++l) {
      for (std::size_t gi = 0; gi < levels_[l].gens.size(); ++gi) {
        int img = levels_[l].gens[gi](pt);
        if (lv.slot[img] < 0) {
          lv.slot[img] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(img);
          lv.tree_parent[img] = pt;
          lv.tree_level[img] = static_cast<int>(l);
          lv.tree_gen[img] = static_cast<int>(gi);
        }
      }
    }
  }
}

void PermGroup::close_chain() {
  // Keep testing Schreier generators until every one sifts to the identity.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t level = 0; level < levels_.size() && !changed; ++level) {
      const Level& lv = levels_[level];
      for (std::size_t oi = 0; oi < lv.orbit.size() && !changed; ++oi) {
        Permutation u = transversal_rep(level, lv.orbit[oi]);
        for (std::size_t l = level; l < levels_.size() && !changed; ++l) {
          for (const auto& s : levels_[l].gens) {
            int image = s(lv.orbit[oi]);
            Permutation schreier = transversal_rep(level, image).inverse() * (s * u);
            auto [residue, at] = sift(std::move(schreier), level + 1);
            if (!residue.is_identity()) {
              add_strong_generator(std::move(residue), at);
              changed = true;
              break;
            }
          }
        }
      }
    }
  }
}

void PermGroup::recompute_order() {
  order_ = 1;
  for (const auto& lv : levels_) {
    std::uint64_t sz = lv.orbit.size();
    if (order_ > std::numeric_limits<std::uint64_t>::max() / sz) {
      throw std::overflow_error("group order overflows 64 bits");
    }
    order_ *= sz;
  }
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw DegreeMismatch("membership test across degrees " + std::to_string(p.degree()) +
                         " and " + std::to_string(degree_));
  }
  auto [residue, level] = sift(p, 0);
  (void)level;
  return residue.is_identity();
}

std::vector<Permutation> PermGroup::elements(std::uint64_t ceiling) const {
  if (order_ > ceiling) {
    throw CeilingExceeded("element enumeration of order " + std::to_string(order_) +
                          " exceeds ceiling " + std::to_string(ceiling));
  }
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // Unique decomposition g = u_0 u_1 ... u_k over transversal reps: expand from
  // the deepest level outward.
  for (std::size_t level = levels_.size(); level-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[level].orbit.size());
    for (int pt : levels_[level].orbit) {
      Permutation u = transversal_rep(level, pt);
      for (const auto& tail : out) next.push_back(u * tail);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace surfact
