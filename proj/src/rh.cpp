#include "surfact/rh.hpp"

#include <algorithm>
#include <functional>

#include "surfact/errors.hpp"
#include "surfact/parallel.hpp"
#include "surfact/todd_coxeter.hpp"

namespace surfact {

Rational rh_measure(const Signature& s) {
  Rational mu(2LL * s.orbit_genus - 2, 1);
  for (int m : s.periods) mu += Rational(1, 1) - Rational(1, m);
  return mu;
}

std::optional<int> rh_genus(std::uint64_t order, const Signature& s) {
  Rational mu = rh_measure(s);
  Rational doubled = Rational(static_cast<long long>(order), 1) * mu;  // 2*sigma - 2
  if (doubled.denominator() != 1) return std::nullopt;
  long long twice = doubled.numerator();
  if (twice % 2 != 0) return std::nullopt;
  long long sigma = twice / 2 + 1;
  if (sigma < 2) return std::nullopt;
  return static_cast<int>(sigma);
}

std::vector<Signature> enumerate_signatures(int sigma, std::uint64_t order) {
  if (sigma < 2) {
    throw GenusRegimeError("signature enumeration needs sigma >= 2; smaller genus admits "
                           "no uniform finiteness and is out of scope");
  }
  if (order == 0) throw std::invalid_argument("group order must be >= 1");
  Rational target(2LL * sigma - 2, static_cast<long long>(order));

  std::vector<int> divisors;  // divisors of the order that are >= 2 and fit in int
  for (std::uint64_t d = 2; d <= order; ++d) {
    if (order % d == 0 && d <= 1'000'000'000ull) divisors.push_back(static_cast<int>(d));
  }

  std::vector<Signature> out;
  std::vector<int> periods;
  // Periods ascend; each contributes 1 - 1/m in [1/2, 1), so once the next
  // candidate term exceeds the remaining measure the branch is dead, and a
  // positive remainder smaller than the current term can never be finished.
  std::function<void(Rational, std::size_t)> dfs = [&](Rational remaining, std::size_t from) {
    if (remaining.numerator() == 0) {
      out.push_back(Signature::make(0, periods));  // orbit genus patched by the rho loop
      return;
    }
    for (std::size_t i = from; i < divisors.size(); ++i) {
      Rational term = Rational(1, 1) - Rational(1, divisors[i]);
      if (term > remaining) break;
      Rational rest = remaining - term;
      if (rest.numerator() != 0 && rest < term) continue;
      periods.push_back(divisors[i]);
      dfs(rest, i);
      periods.pop_back();
    }
  };

  for (int rho = 0;; ++rho) {
    Rational base(2LL * rho - 2, 1);
    if (base > target) break;
    Rational remaining = target - base;
    std::size_t before = out.size();
    dfs(remaining, 0);
    for (std::size_t i = before; i < out.size(); ++i) out[i].orbit_genus = rho;
    periods.clear();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> GeneratingVector::flattened() const {
  std::vector<Permutation> out;
  out.reserve(2 * a.size() + c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(a[i]);
    out.push_back(b[i]);
  }
  for (const auto& e : c) out.push_back(e);
  return out;
}

Permutation vector_product(const GeneratingVector& v, int degree) {
  Permutation prod = Permutation::identity(degree);
  for (std::size_t i = 0; i < v.a.size(); ++i) {
    prod = prod * v.a[i] * v.b[i] * v.a[i].inverse() * v.b[i].inverse();
  }
  for (const auto& e : v.c) prod = prod * e;
  return prod;
}

bool vector_generates(const PermGroup& g, const GeneratingVector& v) {
  std::vector<Permutation> all = v.flattened();
  for (const auto& e : all) {
    if (!g.contains(e)) return false;
  }
  PermGroup sub(g.degree(), all);
  return sub.order() == g.order();
}

std::string to_string(VectorVerdict v) {
  return v == VectorVerdict::valid ? "VALID" : "INVALID-AS-DECLARED";
}

VerificationReport verify_vector(const PermGroup& g, const DeclaredSignature& declared,
                                 const GeneratingVector& v) {
  VerificationReport r;
  r.declared = declared;

  if (v.a.size() != v.b.size()) {
    r.notes.push_back("hyperbolic part is ragged: " + std::to_string(v.a.size()) + " a's vs " +
                      std::to_string(v.b.size()) + " b's");
  }
  r.counts_ok = v.a.size() == v.b.size() &&
                static_cast<int>(v.a.size()) == declared.orbit_genus &&
                v.c.size() == declared.periods.size();
  if (!r.counts_ok && v.a.size() == v.b.size()) {
    r.notes.push_back("tuple shape (" + std::to_string(v.a.size()) + " pairs, " +
                      std::to_string(v.c.size()) + " elliptic) does not match declaration " +
                      declared.str());
  }

  for (const auto& e : v.c) r.measured_orders.push_back(e.order());
  r.orders_ok = r.measured_orders.size() == declared.periods.size();
  for (std::size_t i = 0; i < r.measured_orders.size() && r.orders_ok; ++i) {
    if (r.measured_orders[i] != static_cast<std::uint64_t>(declared.periods[i])) {
      r.orders_ok = false;
      r.notes.push_back("declared period " + std::to_string(declared.periods[i]) +
                        " at position " + std::to_string(i + 1) + " but measured order " +
                        std::to_string(r.measured_orders[i]));
    }
  }

  bool degrees_ok = true;
  for (const auto& e : v.flattened()) {
    if (e.degree() != g.degree()) degrees_ok = false;
  }
  if (!degrees_ok) {
    r.notes.push_back("tuple elements live on a different point set than the group");
    r.product_ok = false;
    r.generates_ok = false;
  } else {
    r.product_ok = vector_product(v, g.degree()).is_identity();
    if (!r.product_ok) r.notes.push_back("defining relation fails: product is not the identity");
    r.generates_ok = vector_generates(g, v);
    if (!r.generates_ok) r.notes.push_back("tuple does not generate the group");
  }

  r.declared_genus = rh_genus(g.order(), declared.normalized());
  if (!r.measured_orders.empty() || declared.orbit_genus > 0) {
    std::vector<int> measured;
    bool fits = true;
    for (auto o : r.measured_orders) {
      if (o > 1'000'000'000ull) fits = false;
      measured.push_back(static_cast<int>(o));
    }
    if (fits) {
      r.measured_genus = rh_genus(g.order(), Signature::make(declared.orbit_genus, measured));
    }
  }
  if (!r.declared_genus) {
    r.notes.push_back("declared branching data does not solve the genus equation in the "
                      "supported regime");
  }

  bool valid = r.counts_ok && r.orders_ok && r.product_ok && r.generates_ok &&
               r.declared_genus.has_value();
  r.verdict = valid ? VectorVerdict::valid : VectorVerdict::invalid_as_declared;
  return r;
}

ActionRecord ActionRecord::make(std::string group_id, PermGroup group, int genus,
                                Signature signature, GeneratingVector vector,
                                std::string provenance) {
  DeclaredSignature declared{signature.orbit_genus,
                             std::vector<int>(signature.periods.begin(), signature.periods.end())};
  VerificationReport check = verify_vector(group, declared, vector);
  if (check.verdict != VectorVerdict::valid) {
    std::string why;
    for (const auto& n : check.notes) why += "; " + n;
    throw std::invalid_argument("action record fails verification" + why);
  }
  if (!check.declared_genus || *check.declared_genus != genus) {
    throw std::invalid_argument("action record genus " + std::to_string(genus) +
                                " disagrees with the genus equation");
  }
  ActionRecord rec;
  rec.group_id = std::move(group_id);
  rec.group = std::move(group);
  rec.genus = genus;
  rec.signature = std::move(signature);
  rec.vector = std::move(vector);
  rec.provenance = std::move(provenance);
  return rec;
}

SearchResult<GeneratingVector> find_generating_vector(const PermGroup& g, const Signature& s,
                                                      const SearchLimits& limits) {
  if (!rh_genus(g.order(), s).has_value()) {
    throw std::invalid_argument("branching data " + s.str() + " does not solve the genus "
                                "equation for order " + std::to_string(g.order()));
  }
  SearchResult<GeneratingVector> result;
  const int rho = s.orbit_genus;
  const int r = s.count();

  // Element pools. The final elliptic element is not searched: the defining
  // relation forces it, so only its order needs checking.
  auto els = g.elements(limits.enumeration_ceiling);
  std::vector<std::vector<const Permutation*>> period_pool(r);
  for (int i = 0; i < r; ++i) {
    for (const auto& e : els) {
      if (e.order() == static_cast<std::uint64_t>(s.periods[i])) period_pool[i].push_back(&e);
    }
    if (period_pool[i].empty()) {
      result.status = SearchStatus::absent;  // no element of a required order
      return result;
    }
  }

  // Class representatives for the very first chosen element: conjugating an
  // entire vector preserves validity and the signature.
  std::vector<Permutation> first_reps;
  {
    auto classes = conjugacy_classes(g, limits);
    if (rho > 0) {
      for (const auto& cl : classes) first_reps.push_back(cl.representative);
    } else if (r > 0) {
      for (const auto& cl : classes) {
        if (cl.representative.order() == static_cast<std::uint64_t>(s.periods[0])) {
          first_reps.push_back(cl.representative);
        }
      }
    }
  }

  std::uint64_t nodes = 0;
  bool budget_hit = false;
  GeneratingVector v;
  v.a.resize(rho, Permutation::identity(g.degree()));
  v.b.resize(rho, Permutation::identity(g.degree()));
  v.c.resize(r, Permutation::identity(g.degree()));

  // Choice positions: a1, b1, ..., a_rho, b_rho, c_1, ..., c_(r-1); c_r forced.
  const int positions = 2 * rho + std::max(0, r - 1);
  auto leaf_check = [&]() -> bool {
    if (r > 0) {
      Permutation prefix = Permutation::identity(g.degree());
      for (int i = 0; i < rho; ++i) {
        prefix = prefix * v.a[i] * v.b[i] * v.a[i].inverse() * v.b[i].inverse();
      }
      for (int i = 0; i + 1 < r; ++i) prefix = prefix * v.c[i];
      Permutation last = prefix.inverse();
      if (last.order() != static_cast<std::uint64_t>(s.periods[r - 1])) return false;
      v.c[r - 1] = last;
    } else {
      if (!vector_product(v, g.degree()).is_identity()) return false;
    }
    return vector_generates(g, v);
  };

  std::function<bool(int)> dfs = [&](int pos) -> bool {
    if (pos == positions) return leaf_check();
    bool first_choice = pos == 0;
    auto try_one = [&](const Permutation& cand) -> bool {
      if (++nodes > limits.node_budget) {
        budget_hit = true;
        return false;
      }
      if (pos < 2 * rho) {
        (pos % 2 == 0 ? v.a[pos / 2] : v.b[pos / 2]) = cand;
      } else {
        v.c[pos - 2 * rho] = cand;
      }
      return dfs(pos + 1);
    };
    if (first_choice && !first_reps.empty()) {
      for (const auto& cand : first_reps) {
        if (pos >= 2 * rho &&
            cand.order() != static_cast<std::uint64_t>(s.periods[pos - 2 * rho])) {
          continue;
        }
        if (try_one(cand)) return true;
        if (budget_hit) return false;
      }
      return false;
    }
    if (pos < 2 * rho) {
      for (const auto& cand : els) {
        if (try_one(cand)) return true;
        if (budget_hit) return false;
      }
    } else {
      for (const auto* cand : period_pool[pos - 2 * rho]) {
        if (try_one(*cand)) return true;
        if (budget_hit) return false;
      }
    }
    return false;
  };

  bool found;
  if (positions == 0) {
    // (0;m) with r == 1: the forced element must be an identity of order m;
    // or rho == 0, r == 0: measure -2, never reaches here (genus < 2).
    ++nodes;
    found = leaf_check();
  } else {
    found = dfs(0);
  }
  result.nodes_used = nodes;
  if (found) {
    result.status = SearchStatus::found;
    result.value = v;
  } else {
    result.status = budget_hit ? SearchStatus::inconclusive : SearchStatus::absent;
  }
  return result;
}

std::vector<ActionRecord> canonical_actions(int sigma) {
  if (sigma < 2) throw GenusRegimeError("canonical actions exist for sigma >= 2 only");
  std::vector<ActionRecord> out;
  {
    // Free action of C_(sigma-1) on (2;-).
    GroupEntry entry = builtin_cyclic(sigma - 1);
    Permutation gen = entry.group.generators().empty()
                          ? Permutation::identity(entry.group.degree())
                          : entry.group.generators()[0];
    Permutation e = Permutation::identity(entry.group.degree());
    GeneratingVector v;
    v.a = {gen, e};
    v.b = {e, e};
    out.push_back(ActionRecord::make(entry.id, entry.group, sigma, Signature::make(2, {}),
                                     std::move(v), "constructed"));
  }
  {
    // C_sigma on (1; sigma, sigma).
    GroupEntry entry = builtin_cyclic(sigma);
    Permutation gen = entry.group.generators()[0];
    Permutation e = Permutation::identity(entry.group.degree());
    GeneratingVector v;
    v.a = {e};
    v.b = {e};
    v.c = {gen, gen.inverse()};
    out.push_back(ActionRecord::make(entry.id, entry.group, sigma,
                                     Signature::make(1, {sigma, sigma}), std::move(v),
                                     "constructed"));
  }
  return out;
}

ActionRecord bounded_family_action(int sigma) {
  AmGroup am = accola_maclachlan_group(sigma);
  GeneratingVector v;
  v.c = {am.xy().inverse(), am.x, am.y};  // orders 2, 4, 2(sigma+1); product is 1
  return ActionRecord::make("H" + std::to_string(sigma), am.group, sigma,
                            Signature::make(0, {2, 4, 2 * (sigma + 1)}), std::move(v),
                            "constructed");
}

SearchResult<ActionRecord> free_action(const GroupEntry& entry, const SearchLimits& limits) {
  SearchResult<ActionRecord> result;
  auto pair = is_two_generated(entry.group, limits);
  result.status = pair.status;
  result.nodes_used = pair.nodes_used;
  if (pair.status != SearchStatus::found) return result;
  auto [x, y] = *pair.value;
  GeneratingVector v;
  v.a = {x, y};
  v.b = {y, x};
  std::uint64_t genus = entry.group.order() + 1;
  result.value = ActionRecord::make(entry.id, entry.group, static_cast<int>(genus),
                                    Signature::make(2, {}), std::move(v), "constructed");
  return result;
}

SearchResult<ActionRecord> acts_on(const GroupEntry& entry, int sigma,
                                   const SearchLimits& limits, int workers) {
  SearchResult<ActionRecord> result;
  if (entry.group.is_trivial()) {
    // The trivial group acts freely on every genus: signature (sigma;-).
    GeneratingVector v;
    Permutation e = Permutation::identity(entry.group.degree());
    v.a.assign(sigma, e);
    v.b.assign(sigma, e);
    result.status = SearchStatus::found;
    result.value = ActionRecord::make(entry.id, entry.group, sigma, Signature::make(sigma, {}),
                                      std::move(v), "constructed");
    return result;
  }
  auto signatures = enumerate_signatures(sigma, entry.group.order());
  if (signatures.empty()) {
    result.status = SearchStatus::absent;
    return result;
  }
  auto per_signature = parallel_map<SearchResult<GeneratingVector>>(
      signatures.size(), workers,
      [&](std::size_t i) { return find_generating_vector(entry.group, signatures[i], limits); });
  bool any_inconclusive = false;
  for (std::size_t i = 0; i < signatures.size(); ++i) {
    result.nodes_used += per_signature[i].nodes_used;
    if (per_signature[i].status == SearchStatus::found) {
      result.status = SearchStatus::found;
      result.value = ActionRecord::make(entry.id, entry.group, sigma, signatures[i],
                                        std::move(*per_signature[i].value), "searched");
      return result;
    }
    if (per_signature[i].status == SearchStatus::inconclusive) any_inconclusive = true;
  }
  result.status = any_inconclusive ? SearchStatus::inconclusive : SearchStatus::absent;
  return result;
}

}  // namespace surfact
