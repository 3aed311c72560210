#include "surfact/group_search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "surfact/errors.hpp"

namespace surfact {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Index lookup over a sorted element list.
int index_of(const std::vector<Permutation>& sorted_elements, const Permutation& p) {
  auto it = std::lower_bound(sorted_elements.begin(), sorted_elements.end(), p);
  if (it == sorted_elements.end() || *it != p) return -1;
  return static_cast<int>(it - sorted_elements.begin());
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, const SearchLimits& limits) {
  auto els = g.elements(limits.enumeration_ceiling);
  std::vector<char> visited(els.size(), 0);
  std::vector<ConjugacyClass> classes;
  for (std::size_t seed = 0; seed < els.size(); ++seed) {
    if (visited[seed]) continue;
    // Orbit of the conjugation action, BFS by group generators. The seed is
    // the least unvisited element, hence the least element of its class.
    std::vector<int> orbit{static_cast<int>(seed)};
    visited[seed] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& c : g.generators()) {
        Permutation conj = els[orbit[head]].conjugated_by(c);
        int idx = index_of(els, conj);
        if (idx < 0) throw std::logic_error("conjugate escaped the group");
        if (!visited[idx]) {
          visited[idx] = 1;
          orbit.push_back(idx);
        }
      }
    }
    classes.push_back({els[seed], orbit.size()});
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const ConjugacyClass& a, const ConjugacyClass& b) {
                     auto oa = a.representative.order(), ob = b.representative.order();
                     if (oa != ob) return oa < ob;
                     return a.representative < b.representative;
                   });
  return classes;
}

std::optional<Permutation> element_of_order(const PermGroup& g, std::uint64_t n,
                                            const SearchLimits& limits) {
  if (n == 0) throw std::invalid_argument("element order must be >= 1");
  if (g.order() % n != 0) return std::nullopt;  // Lagrange on the cyclic subgroup
  for (const auto& e : g.elements(limits.enumeration_ceiling)) {
    if (e.order() == n) return e;
  }
  return std::nullopt;
}

std::optional<std::pair<Permutation, Permutation>> klein_four_witness(const PermGroup& g,
                                                                      const SearchLimits& limits) {
  if (g.order() % 4 != 0) return std::nullopt;
  std::vector<Permutation> involutions;
  for (const auto& e : g.elements(limits.enumeration_ceiling)) {
    if (e.order() == 2) involutions.push_back(e);
  }
  for (std::size_t i = 0; i < involutions.size(); ++i) {
    for (std::size_t j = i + 1; j < involutions.size(); ++j) {
      if (involutions[i] * involutions[j] == involutions[j] * involutions[i]) {
        return std::make_pair(involutions[i], involutions[j]);
      }
    }
  }
  return std::nullopt;
}

bool has_klein_four(const PermGroup& g, const SearchLimits& limits) {
  return klein_four_witness(g, limits).has_value();
}

namespace {

// Shared scaffolding for subgroup scans: elements, index-space closure via a
// multiplication table.
struct IndexedGroup {
  std::vector<Permutation> els;
  std::vector<int> inverse;           // index -> index of inverse
  std::vector<std::uint32_t> mult;    // els[i]*els[j] at i*n+j
  std::vector<std::uint64_t> orders;  // element orders

  explicit IndexedGroup(const PermGroup& g, std::uint64_t ceiling) {
    els = g.elements(ceiling);
    std::size_t n = els.size();
    mult.resize(n * n);
    inverse.resize(n);
    orders.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      orders[i] = els[i].order();
      inverse[i] = index_of(els, els[i].inverse());
      for (std::size_t j = 0; j < n; ++j) {
        mult[i * n + j] = static_cast<std::uint32_t>(index_of(els, els[i] * els[j]));
      }
    }
  }

  std::size_t size() const { return els.size(); }
  std::uint32_t prod(std::uint32_t a, std::uint32_t b) const { return mult[a * size() + b]; }

  // Subgroup generated by the given element indices, as a sorted index list.
  std::vector<std::uint32_t> closure(std::vector<std::uint32_t> gens) const {
    std::set<std::uint32_t> have;
    std::vector<std::uint32_t> queue;
    auto push = [&](std::uint32_t x) {
      if (have.insert(x).second) queue.push_back(x);
    };
    push(static_cast<std::uint32_t>(index_of(els, Permutation::identity(els[0].degree()))));
    for (auto gi : gens) push(gi);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto gi : gens) {
        push(prod(queue[head], gi));
        push(prod(gi, queue[head]));
      }
    }
    std::vector<std::uint32_t> out(have.begin(), have.end());
    return out;
  }
};

}  // namespace

std::vector<PermGroup> subgroups_of_order(const PermGroup& g, std::uint64_t k,
                                          const SearchLimits& limits) {
  if (g.order() > limits.subgroup_scan_ceiling) {
    throw CeilingExceeded("subgroup scan over order " + std::to_string(g.order()) +
                          " exceeds ceiling " + std::to_string(limits.subgroup_scan_ceiling));
  }
  if (k == 0 || g.order() % k != 0) return {};
  IndexedGroup ig(g, limits.enumeration_ceiling);
  std::uint32_t n = static_cast<std::uint32_t>(ig.size());

  // Grow subgroups whose order divides k, adding one element at a time. Each
  // state is the sorted element-index list plus the generators that produced it.
  std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> seen;  // subgroup -> gens
  std::vector<std::vector<std::uint32_t>> work;
  auto consider = [&](std::vector<std::uint32_t> gens) {
    auto sub = ig.closure(gens);
    if (sub.size() > k || k % sub.size() != 0) return;
    if (seen.emplace(sub, std::move(gens)).second) work.push_back(sub);
  };
  consider({});
  for (std::size_t head = 0; head < work.size(); ++head) {
    auto sub = work[head];
    if (sub.size() == k) continue;
    auto gens = seen.at(sub);
    for (std::uint32_t cand = 0; cand < n; ++cand) {
      if (k % ig.orders[cand] != 0) continue;  // could not lie in an order-k group
      if (std::binary_search(sub.begin(), sub.end(), cand)) continue;
      auto extended = gens;
      extended.push_back(cand);
      consider(std::move(extended));
    }
  }

  std::vector<std::vector<std::uint32_t>> hits;
  for (const auto& [sub, gens] : seen) {
    if (sub.size() == k) hits.push_back(sub);
  }
  std::sort(hits.begin(), hits.end());

  // Fuse conjugate subgroups: orbit of the conjugation action on index sets.
  std::vector<std::vector<std::uint32_t>> conj_tables;
  for (const auto& c : g.generators()) {
    std::vector<std::uint32_t> table(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      table[i] = static_cast<std::uint32_t>(index_of(ig.els, ig.els[i].conjugated_by(c)));
    }
    conj_tables.push_back(std::move(table));
  }
  std::set<std::vector<std::uint32_t>> unclaimed(hits.begin(), hits.end());
  std::vector<PermGroup> out;
  for (const auto& rep : hits) {
    if (!unclaimed.count(rep)) continue;
    std::vector<std::vector<std::uint32_t>> orbit{rep};
    unclaimed.erase(rep);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& table : conj_tables) {
        std::vector<std::uint32_t> img;
        img.reserve(orbit[head].size());
        for (auto idx : orbit[head]) img.push_back(table[idx]);
        std::sort(img.begin(), img.end());
        if (unclaimed.erase(img)) orbit.push_back(std::move(img));
      }
    }
    std::vector<Permutation> gens;
    for (auto idx : seen.at(rep)) gens.push_back(ig.els[idx]);
    if (gens.empty()) gens.push_back(Permutation::identity(g.degree()));
    out.emplace_back(g.degree(), std::move(gens));
  }
  return out;
}

namespace {

// Element list of h plus the data needed to check a candidate homomorphism:
// a spanning word for every element (BFS over generators) and the index table
// h_el * gen.
struct DomainData {
  std::vector<Permutation> els;
  std::vector<std::uint64_t> orders;
  int identity_index = -1;
  std::vector<std::vector<int>> right_mult;  // [gen][el index] -> el index
  std::vector<int> bfs_order;                // discovery order, starts at identity
  std::vector<int> bfs_parent;               // el index -> parent el index
  std::vector<int> bfs_gen;                  // el index -> generator used
};

DomainData build_domain(const PermGroup& h, const std::vector<Permutation>& gens,
                        std::uint64_t ceiling) {
  DomainData d;
  d.els = h.elements(ceiling);
  d.orders.reserve(d.els.size());
  for (const auto& e : d.els) d.orders.push_back(e.order());
  d.identity_index = index_of(d.els, Permutation::identity(h.degree()));
  d.right_mult.assign(gens.size(), std::vector<int>(d.els.size()));
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    for (std::size_t e = 0; e < d.els.size(); ++e) {
      d.right_mult[gi][e] = index_of(d.els, d.els[e] * gens[gi]);
    }
  }
  d.bfs_parent.assign(d.els.size(), -1);
  d.bfs_gen.assign(d.els.size(), -1);
  std::vector<char> seen(d.els.size(), 0);
  d.bfs_order.push_back(d.identity_index);
  seen[d.identity_index] = 1;
  for (std::size_t head = 0; head < d.bfs_order.size(); ++head) {
    int e = d.bfs_order[head];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int to = d.right_mult[gi][e];
      if (!seen[to]) {
        seen[to] = 1;
        d.bfs_parent[to] = e;
        d.bfs_gen[to] = static_cast<int>(gi);
        d.bfs_order.push_back(to);
      }
    }
  }
  if (d.bfs_order.size() != d.els.size()) {
    throw std::logic_error("generators do not span the domain group");
  }
  return d;
}

// Full homomorphism-plus-injectivity check for candidate generator images.
// Builds phi over the whole domain along the BFS tree, then verifies
// phi(e * gen) == phi(e) * image for every element and generator; that is a
// complete check because every multiplication in h factors through generators.
bool check_embedding(const DomainData& d, const std::vector<Permutation>& images,
                     const std::vector<Permutation>& g_sorted) {
  std::vector<Permutation> phi(d.els.size(), Permutation::identity(images[0].degree()));
  for (std::size_t i = 1; i < d.bfs_order.size(); ++i) {
    int e = d.bfs_order[i];
    phi[e] = phi[d.bfs_parent[e]] * images[d.bfs_gen[e]];
  }
  for (std::size_t e = 0; e < d.els.size(); ++e) {
    for (std::size_t gi = 0; gi < images.size(); ++gi) {
      if (phi[d.right_mult[gi][e]] != phi[e] * images[gi]) return false;
    }
  }
  std::vector<Permutation> sorted_phi = phi;
  std::sort(sorted_phi.begin(), sorted_phi.end());
  if (std::adjacent_find(sorted_phi.begin(), sorted_phi.end()) != sorted_phi.end()) return false;
  for (const auto& v : sorted_phi) {
    if (index_of(g_sorted, v) < 0) return false;
  }
  return true;
}

}  // namespace

SearchResult<Monomorphism> find_monomorphism(const PermGroup& h, const PermGroup& g,
                                             const SearchLimits& limits) {
  SearchResult<Monomorphism> result;
  if (g.order() % h.order() != 0) {
    result.status = SearchStatus::absent;
    return result;
  }
  if (h.is_trivial()) {
    result.status = SearchStatus::found;
    result.value = Monomorphism{{}, {}};
    return result;
  }

  std::vector<Permutation> hgens;
  for (const auto& hg : h.generators()) {
    if (!hg.is_identity()) hgens.push_back(hg);
  }
  DomainData domain = build_domain(h, hgens, limits.enumeration_ceiling);
  auto g_els = g.elements(limits.enumeration_ceiling);

  // Order screen: every element order of h must occur in g.
  {
    std::set<std::uint64_t> g_orders;
    for (const auto& e : g_els) g_orders.insert(e.order());
    for (auto o : domain.orders) {
      if (!g_orders.count(o)) {
        result.status = SearchStatus::absent;
        return result;
      }
    }
  }

  // Candidate pools: class representatives for the first generator, all
  // order-matching elements afterwards.
  std::vector<std::vector<Permutation>> pools(hgens.size());
  {
    auto classes = conjugacy_classes(g, limits);
    std::uint64_t want = hgens[0].order();
    for (const auto& cl : classes) {
      if (cl.representative.order() == want) pools[0].push_back(cl.representative);
    }
  }
  for (std::size_t i = 1; i < hgens.size(); ++i) {
    std::uint64_t want = hgens[i].order();
    for (const auto& e : g_els) {
      if (e.order() == want) pools[i].push_back(e);
    }
  }

  std::vector<Permutation> images;
  std::uint64_t nodes = 0;
  bool budget_hit = false;

  auto dfs = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == hgens.size()) {
      return check_embedding(domain, images, g_els);
    }
    for (const auto& cand : pools[pos]) {
      if (++nodes > limits.node_budget) {
        budget_hit = true;
        return false;
      }
      images.push_back(cand);
      if (self(self, pos + 1)) return true;
      images.pop_back();
    }
    return false;
  };

  if (dfs(dfs, 0)) {
    result.status = SearchStatus::found;
    result.value = Monomorphism{hgens, images};
  } else {
    result.status = budget_hit ? SearchStatus::inconclusive : SearchStatus::absent;
  }
  result.nodes_used = nodes;
  return result;
}

SearchStatus isomorphic(const PermGroup& a, const PermGroup& b, const SearchLimits& limits) {
  if (a.order() != b.order()) return SearchStatus::absent;
  auto forward = find_monomorphism(a, b, limits);
  if (forward.status != SearchStatus::found) return forward.status;
  auto backward = find_monomorphism(b, a, limits);
  return backward.status;
}

SearchResult<std::pair<Permutation, Permutation>> find_generating_pair(
    const PermGroup& g, const SearchLimits& limits) {
  SearchResult<std::pair<Permutation, Permutation>> result;
  if (g.is_trivial()) {
    // The trivial group is generated by the empty set; a "pair" exists vacuously.
    Permutation e = Permutation::identity(g.degree());
    result.status = SearchStatus::found;
    result.value = {e, e};
    return result;
  }
  auto els = g.elements(limits.enumeration_ceiling);
  auto classes = conjugacy_classes(g, limits);
  std::uint64_t nodes = 0;
  for (const auto& cl : classes) {
    // <x, y> = g iff <x^c, y^c> = g, so x can be fixed to a class representative.
    for (const auto& y : els) {
      if (++nodes > limits.node_budget) {
        result.status = SearchStatus::inconclusive;
        result.nodes_used = nodes;
        return result;
      }
      PermGroup sub(g.degree(), {cl.representative, y});
      if (sub.order() == g.order()) {
        result.status = SearchStatus::found;
        result.value = {cl.representative, y};
        result.nodes_used = nodes;
        return result;
      }
    }
  }
  result.status = SearchStatus::absent;
  result.nodes_used = nodes;
  return result;
}

}  // namespace surfact
