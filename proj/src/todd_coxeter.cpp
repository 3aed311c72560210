#include "surfact/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "surfact/errors.hpp"

namespace surfact {

namespace {

constexpr int kUndef = -1;

struct Overflow {};  // internal signal: coset budget exhausted

// Coset table over the trivial subgroup with union-find coincidence tracking.
// Surviving coset of a merge is always the smaller number.
struct Table {
  int ncols;
  std::uint64_t max_cosets;
  std::vector<int> cells;   // ncosets * ncols
  std::vector<int> parent;  // union-find; parent[c] == c iff live
  std::uint64_t defined = 0;
  std::uint64_t merges = 0;

  Table(int ncols, std::uint64_t max_cosets) : ncols(ncols), max_cosets(max_cosets) {
    new_coset();
  }

  int ncosets() const { return static_cast<int>(parent.size()); }
  bool live(int c) const { return parent[c] == c; }

  int& at(int c, int col) { return cells[static_cast<std::size_t>(c) * ncols + col]; }
  int get(int c, int col) const { return cells[static_cast<std::size_t>(c) * ncols + col]; }

  int rep(int c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];
      c = parent[c];
    }
    return c;
  }

  int new_coset() {
    if (static_cast<std::uint64_t>(ncosets()) >= max_cosets) throw Overflow{};
    parent.push_back(ncosets());
    cells.resize(cells.size() + ncols, kUndef);
    ++defined;
    return ncosets() - 1;
  }

  int define(int c, int col) {
    int n = new_coset();
    at(c, col) = n;
    at(n, inverse_column(col)) = c;
    return n;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    int lo = std::min(a, b);
    int hi = std::max(a, b);
    parent[hi] = lo;
    queue.push_back(hi);
    ++merges;
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int dead = queue.front();
      queue.pop_front();
      for (int col = 0; col < ncols; ++col) {
        int to = get(dead, col);
        if (to == kUndef) continue;
        // Detach the mirror edge into the dead coset, then reattach the edge
        // at representative level (or record the forced coincidence).
        at(to, inverse_column(col)) = kUndef;
        int mu = rep(dead);
        int nu = rep(to);
        if (get(mu, col) != kUndef) {
          merge(nu, get(mu, col), queue);
        } else if (get(nu, inverse_column(col)) != kUndef) {
          merge(mu, get(nu, inverse_column(col)), queue);
        } else {
          at(mu, col) = nu;
          at(nu, inverse_column(col)) = mu;
        }
      }
    }
  }

  // Trace the relator from c both ways, defining cosets to close the gap.
  void scan_and_fill(int c, const Word& w) {
    int f = c;
    int i = 0;
    int b = c;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && get(f, w[i]) != kUndef) {
        f = get(f, w[i]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && get(b, inverse_column(w[j])) != kUndef) {
        b = get(b, inverse_column(w[j]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        at(f, w[i]) = b;
        at(b, inverse_column(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }
};

}  // namespace

CosetTableResult todd_coxeter(const Presentation& p, std::uint64_t max_cosets) {
  if (p.ngens() == 0) throw std::invalid_argument("presentation needs at least one generator");
  CosetTableResult result;
  Table t(p.columns(), max_cosets);
  try {
    // Repeat full passes until a pass makes no definition and no merge; HLT
    // normally needs one pass, the repetition makes completion independent of
    // coincidence timing.
    while (true) {
      std::uint64_t before = t.defined + t.merges;
      for (int c = 0; c < t.ncosets(); ++c) {
        if (!t.live(c)) continue;
        for (const Word& w : p.relators) {
          if (!t.live(c)) break;
          t.scan_and_fill(c, w);
        }
        if (!t.live(c)) continue;
        for (int col = 0; col < t.ncols; ++col) {
          if (t.get(c, col) == kUndef) t.define(c, col);
        }
      }
      if (t.defined + t.merges == before) break;
    }
  } catch (const Overflow&) {
    result.status = EnumerationStatus::overflow;
    result.cosets_defined = t.defined;
    return result;
  }

  // Compress: live cosets keep their relative order.
  std::vector<int> to_new(t.ncosets(), -1);
  int live_count = 0;
  for (int c = 0; c < t.ncosets(); ++c) {
    if (t.live(c)) to_new[c] = live_count++;
  }
  result.status = EnumerationStatus::completed;
  result.coset_count = static_cast<std::uint64_t>(live_count);
  result.cosets_defined = t.defined;
  result.generator_actions.assign(p.ngens(), std::vector<int>(live_count, kUndef));
  for (int c = 0; c < t.ncosets(); ++c) {
    if (!t.live(c)) continue;
    for (int g = 0; g < p.ngens(); ++g) {
      int img = t.get(c, gen_column(g, false));
      if (img == kUndef) throw std::logic_error("finished coset table has a hole");
      result.generator_actions[g][to_new[c]] = to_new[t.rep(img)];
    }
  }

  // Verification pass: columns are bijections, mirrors match, every relator
  // fixes every coset.
  for (int g = 0; g < p.ngens(); ++g) {
    std::vector<char> hit(live_count, 0);
    for (int c = 0; c < live_count; ++c) {
      int img = result.generator_actions[g][c];
      if (img < 0 || img >= live_count || hit[img]) {
        throw std::logic_error("generator action is not a bijection");
      }
      hit[img] = 1;
    }
  }
  std::vector<std::vector<int>> inverse_actions(p.ngens(), std::vector<int>(live_count));
  for (int g = 0; g < p.ngens(); ++g) {
    for (int c = 0; c < live_count; ++c) inverse_actions[g][result.generator_actions[g][c]] = c;
  }
  auto apply = [&](int coset, int col) {
    int g = col / 2;
    return (col & 1) == 0 ? result.generator_actions[g][coset] : inverse_actions[g][coset];
  };
  for (int c = 0; c < live_count; ++c) {
    for (const Word& w : p.relators) {
      int at = c;
      for (int col : w) at = apply(at, col);
      if (at != c) throw std::logic_error("relator does not fix a coset after completion");
    }
  }
  result.verified = true;
  return result;
}

PermGroup regular_representation(const CosetTableResult& table) {
  if (table.status != EnumerationStatus::completed) {
    throw std::invalid_argument("cannot build a representation from an unfinished enumeration");
  }
  int degree = static_cast<int>(table.coset_count);
  std::vector<Permutation> gens;
  gens.reserve(table.generator_actions.size());
  for (const auto& action : table.generator_actions) {
    gens.emplace_back(std::vector<int>(action.begin(), action.end()));
  }
  PermGroup g(std::max(degree, 1), std::move(gens));
  if (g.order() != table.coset_count) {
    throw std::logic_error("regular representation order disagrees with coset count");
  }
  return g;
}

AmGroup accola_maclachlan_group(int sigma) {
  if (sigma < 2) {
    throw GenusRegimeError("bounded-genus family needs sigma >= 2; below that no "
                           "uniform bound on finite actions exists");
  }
  AmGroup out;
  out.sigma = sigma;
  Presentation p;
  p.generators = {"x", "y"};
  const int X = gen_column(0, false), Xi = gen_column(0, true), Y = gen_column(1, false);
  p.relators.push_back(word_power({X}, 4));
  p.relators.push_back(word_power({Y}, 2 * (sigma + 1)));
  p.relators.push_back(word_power({X, Y}, 2));
  p.relators.push_back(word_power({Xi, Y}, 2));
  out.presentation = p;

  std::uint64_t budget = 16ull * (sigma + 1) * 4;  // expected size, x4 safety
  CosetTableResult table = todd_coxeter(p, budget);
  if (table.status != EnumerationStatus::completed) {
    throw CeilingExceeded("coset enumeration for sigma=" + std::to_string(sigma) +
                          " overflowed its budget of " + std::to_string(budget));
  }
  out.group = regular_representation(table);
  out.x = Permutation(std::vector<int>(table.generator_actions[0].begin(),
                                       table.generator_actions[0].end()));
  out.y = Permutation(std::vector<int>(table.generator_actions[1].begin(),
                                       table.generator_actions[1].end()));
  return out;
}

}  // namespace surfact
