#include "surfact/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "surfact/errors.hpp"
#include "surfact/todd_coxeter.hpp"

namespace surfact {

void Catalog::add(GroupEntry entry) {
  if (find(entry.id)) throw ParseError("duplicate catalog id '" + entry.id + "'");
  entries_.push_back(std::move(entry));
}

void Catalog::add_coverage(CoverageClaim claim) {
  if (std::find(coverage_.begin(), coverage_.end(), claim) == coverage_.end()) {
    coverage_.push_back(claim);
  }
}

const GroupEntry* Catalog::find(const std::string& id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<const GroupEntry*> Catalog::of_order(std::uint64_t n) const {
  std::vector<const GroupEntry*> out;
  for (const auto& e : entries_) {
    if (e.group.order() == n) out.push_back(&e);
  }
  return out;
}

bool Catalog::covers_order(std::uint64_t n) const {
  for (const auto& c : coverage_) {
    if (c.order == n) return true;
  }
  return false;
}

namespace {

std::vector<Permutation> parse_gens(const std::string& value, int degree, const std::string& at) {
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t semi = value.find(';', start);
    std::string piece = value.substr(start, semi == std::string::npos ? semi : semi - start);
    if (piece.empty()) throw ParseError(at + ": empty generator in gens=");
    try {
      gens.push_back(Permutation::parse(piece, degree));
    } catch (const std::exception& e) {
      throw ParseError(at + ": bad generator '" + piece + "': " + e.what());
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return gens;
}

}  // namespace

Catalog load_catalog_stream(std::istream& in, const std::string& name) {
  Catalog cat;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string at = name + ":" + std::to_string(lineno);
    std::string_view sv(line);
    if (auto hash = sv.find('#'); hash != std::string_view::npos) sv = sv.substr(0, hash);
    std::istringstream tokens{std::string(sv)};
    std::string token;
    std::string id, gens_text;
    std::optional<int> degree;
    std::optional<std::uint64_t> declared_order, coverage_order;
    bool any = false;
    while (tokens >> token) {
      any = true;
      auto eq = token.find('=');
      if (eq == std::string::npos) throw ParseError(at + ": expected key=value, got '" + token + "'");
      std::string key = token.substr(0, eq);
      std::string value = token.substr(eq + 1);
      if (key == "id") {
        id = value;
      } else if (key == "degree") {
        degree = std::stoi(value);
      } else if (key == "gens") {
        gens_text = value;
      } else if (key == "order") {
        declared_order = std::stoull(value);
      } else if (key == "coverage") {
        const std::string prefix = "all-of-order:";
        if (value.rfind(prefix, 0) != 0) {
          throw ParseError(at + ": unknown coverage claim '" + value + "'");
        }
        coverage_order = std::stoull(value.substr(prefix.size()));
      } else {
        throw ParseError(at + ": unknown key '" + key + "'");
      }
    }
    if (!any) continue;
    if (coverage_order) {
      if (!id.empty() || degree || declared_order || !gens_text.empty()) {
        throw ParseError(at + ": coverage directives stand alone on their line");
      }
      cat.add_coverage(CoverageClaim{*coverage_order});
      continue;
    }
    if (id.empty() || !degree || !declared_order || gens_text.empty()) {
      throw ParseError(at + ": entry needs id=, degree=, gens= and order=");
    }
    if (*degree < 1) throw ParseError(at + ": degree must be >= 1");
    PermGroup g(*degree, parse_gens(gens_text, *degree, at));
    if (g.order() != *declared_order) {
      throw ParseError(at + ": declared order " + std::to_string(*declared_order) +
                       " but generators produce order " + std::to_string(g.order()));
    }
    GroupEntry entry{id, std::move(g), {"ingested"}, name};
    try {
      cat.add(std::move(entry));
    } catch (const ParseError& e) {
      throw ParseError(at + ": " + e.what());
    }
  }
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file '" + path + "'");
  return load_catalog_stream(in, path);
}

void save_catalog_stream(const Catalog& c, std::ostream& out) {
  for (const auto& e : c.entries()) {
    out << "id=" << e.id << " degree=" << e.group.degree() << " gens=";
    const auto& gens = e.group.generators();
    if (gens.empty()) {
      out << "()";
    } else {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out << ';';
        out << gens[i].str();
      }
    }
    out << " order=" << e.group.order() << "\n";
  }
  for (const auto& claim : c.coverage()) {
    out << "coverage=" << claim.str() << "\n";
  }
}

void save_catalog(const Catalog& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write catalog file '" + path + "'");
  save_catalog_stream(c, out);
}

namespace {

GroupEntry make_builtin(std::string id, PermGroup g, std::string family) {
  return GroupEntry{std::move(id), std::move(g), {"builtin", std::move(family)}, "builtin"};
}

Permutation full_cycle(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return Permutation(std::move(im));
}

}  // namespace

GroupEntry builtin_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic order must be >= 1");
  if (n == 1) return make_builtin("C1", PermGroup(1), "cyclic");
  return make_builtin("C" + std::to_string(n), PermGroup(n, {full_cycle(n)}), "cyclic");
}

GroupEntry builtin_dihedral(int ngon) {
  if (ngon < 3) throw std::invalid_argument("dihedral builtin wants an n-gon with n >= 3");
  std::vector<int> flip(ngon);
  for (int i = 0; i < ngon; ++i) flip[i] = (ngon - i) % ngon;
  return make_builtin("D" + std::to_string(ngon),
                      PermGroup(ngon, {full_cycle(ngon), Permutation(std::move(flip))}),
                      "dihedral");
}

GroupEntry builtin_abelian(const std::vector<int>& cyclic_factors) {
  if (cyclic_factors.empty()) throw std::invalid_argument("abelian builtin needs factors");
  GroupEntry acc = builtin_cyclic(cyclic_factors[0]);
  for (std::size_t i = 1; i < cyclic_factors.size(); ++i) {
    acc = direct_product(acc, builtin_cyclic(cyclic_factors[i]));
  }
  acc.tags = {"builtin", "abelian"};
  acc.source = "builtin";
  return acc;
}

GroupEntry builtin_symmetric(int n) {
  if (n < 1) throw std::invalid_argument("symmetric degree must be >= 1");
  std::string id = "S" + std::to_string(n);
  if (n == 1) return make_builtin(id, PermGroup(1), "symmetric");
  if (n == 2) return make_builtin(id, PermGroup(2, {full_cycle(2)}), "symmetric");
  Permutation transposition = Permutation::parse("(1,2)", n);
  return make_builtin(id, PermGroup(n, {transposition, full_cycle(n)}), "symmetric");
}

GroupEntry builtin_alternating(int n) {
  if (n < 3) throw std::invalid_argument("alternating builtin needs n >= 3");
  std::string id = "A" + std::to_string(n);
  Permutation three_cycle = Permutation::parse("(1,2,3)", n);
  if (n == 3) return make_builtin(id, PermGroup(3, {three_cycle}), "alternating");
  Permutation big;
  if (n % 2 == 1) {
    big = full_cycle(n);
  } else {
    // even n: an n-1 cycle on 2..n
    std::vector<int> im(n);
    im[0] = 0;
    for (int i = 1; i < n; ++i) im[i] = 1 + (i % (n - 1));
    big = Permutation(std::move(im));
  }
  return make_builtin(id, PermGroup(n, {three_cycle, big}), "alternating");
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_small_prime(int p, const char* family) {
  if (!is_prime(p) || p > 31) {
    throw std::invalid_argument(std::string(family) + " builtin wants a prime p <= 31");
  }
}

}  // namespace

GroupEntry builtin_sl2(int p) {
  require_small_prime(p, "SL2");
  // Points: nonzero vectors (a,b) of F_p^2, indexed a*p + b - 1.
  int npoints = p * p - 1;
  auto index = [p](int a, int b) { return a * p + b - 1; };
  std::vector<int> t(npoints), s(npoints);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      t[index(a, b)] = index((a + b) % p, b);          // [[1,1],[0,1]]
      s[index(a, b)] = index(b, (p - a) % p);          // [[0,1],[-1,0]]
    }
  }
  return make_builtin("SL2(" + std::to_string(p) + ")",
                      PermGroup(npoints, {Permutation(std::move(t)), Permutation(std::move(s))}),
                      "sl2");
}

GroupEntry builtin_psl2(int p) {
  require_small_prime(p, "PSL2");
  // Points: the projective line, z in {0..p-1} plus infinity at index p.
  int npoints = p + 1;
  int inf = p;
  auto inv_mod = [p](int x) {
    int r = 1, base = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<int> t(npoints), s(npoints);
  for (int z = 0; z < p; ++z) {
    t[z] = (z + 1) % p;               // z -> z + 1
    s[z] = z == 0 ? inf : (p - inv_mod(z)) % p;  // z -> -1/z
  }
  t[inf] = inf;
  s[inf] = 0;
  return make_builtin("PSL2(" + std::to_string(p) + ")",
                      PermGroup(npoints, {Permutation(std::move(t)), Permutation(std::move(s))}),
                      "psl2");
}

GroupEntry builtin_accola_maclachlan(int sigma) {
  AmGroup am = accola_maclachlan_group(sigma);
  GroupEntry e = make_builtin("H" + std::to_string(sigma), am.group, "accola-maclachlan");
  return e;
}

GroupEntry direct_product(const GroupEntry& a, const GroupEntry& b) {
  int degree = a.group.degree() + b.group.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.group.generators()) gens.push_back(g.extended_to(degree));
  for (const auto& g : b.group.generators()) gens.push_back(g.shifted(a.group.degree(), degree));
  GroupEntry e = make_builtin(a.id + "x" + b.id, PermGroup(degree, std::move(gens)), "product");
  return e;
}

SearchResult<std::pair<Permutation, Permutation>> is_two_generated(const PermGroup& g,
                                                                   const SearchLimits& limits) {
  return find_generating_pair(g, limits);
}

}  // namespace surfact
