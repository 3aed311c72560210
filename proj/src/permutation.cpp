#include "surfact/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "surfact/errors.hpp"

namespace surfact {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) {
      throw std::invalid_argument("image table is not a bijection");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) {
    throw DegreeMismatch("cannot compose permutations of degrees " +
                         std::to_string(degree()) + " and " + std::to_string(rhs.degree()));
  }
  std::vector<int> im(degree());
  for (int i = 0; i < degree(); ++i) im[i] = images_[rhs.images_[i]];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(degree());
  for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::power(std::int64_t exponent) const {
  std::uint64_t n = order();
  std::int64_t e = exponent % static_cast<std::int64_t>(n);
  if (e < 0) e += static_cast<std::int64_t>(n);
  Permutation result = identity(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g * (*this) * g.inverse();
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& cyc : cycles()) {
    result = lcm_checked(result, cyc.size());
  }
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<int> cyc;
    int p = start;
    do {
      cyc.push_back(p);
      seen[p] = 1;
      p = images_[p];
    } while (p != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::str() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cycs) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ',';
      os << cyc[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::vector<std::vector<int>> cycs;
  int max_point = 0;
  std::vector<char> used;  // grows on demand, 1-based point -> seen
  auto mark = [&](int pt) {
    if (pt > static_cast<int>(used.size())) used.resize(pt, 0);
    if (used[pt - 1]) throw ParseError("point " + std::to_string(pt) + " repeats across cycles");
    used[pt - 1] = 1;
  };

  skip_ws();
  if (pos >= text.size()) throw ParseError("empty permutation text");
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    skip_ws();
    std::vector<int> cyc;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;  // "()" empty cycle: identity contribution
    } else {
      while (true) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a point number in cycle");
        long val = 0;
        for (std::size_t i = start; i < pos; ++i) {
          val = val * 10 + (text[i] - '0');
          if (val > std::numeric_limits<int>::max() / 2) throw ParseError("point out of range");
        }
        if (val < 1) throw ParseError("points are 1-based");
        int pt = static_cast<int>(val);
        mark(pt);
        max_point = std::max(max_point, pt);
        cyc.push_back(pt - 1);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw ParseError("expected ',' or ')' in cycle");
      }
      if (cyc.size() == 1) throw ParseError("cycles of length 1 are not written explicitly");
      cycs.push_back(std::move(cyc));
    }
    skip_ws();
  }

  int deg = std::max(max_point, 1);
  if (degree != 0) {
    if (degree < deg) {
      throw ParseError("declared degree " + std::to_string(degree) +
                       " is smaller than largest point " + std::to_string(max_point));
    }
    deg = degree;
  }
  std::vector<int> im(deg);
  std::iota(im.begin(), im.end(), 0);
  for (const auto& cyc : cycs) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      im[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
  }
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::extended_to(int new_degree) const {
  if (new_degree < degree()) throw std::invalid_argument("extended_to cannot shrink a permutation");
  std::vector<int> im(new_degree);
  std::iota(im.begin(), im.end(), 0);
  for (int i = 0; i < degree(); ++i) im[i] = images_[i];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::shifted(int offset, int new_degree) const {
  if (offset < 0 || degree() + offset > new_degree) {
    throw std::invalid_argument("shifted permutation does not fit the new degree");
  }
  std::vector<int> im(new_degree);
  std::iota(im.begin(), im.end(), 0);
  for (int i = 0; i < degree(); ++i) im[i + offset] = images_[i] + offset;
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("lcm of zero");
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t q = a / g;
  if (q > std::numeric_limits<std::uint64_t>::max() / b) {
    throw std::overflow_error("lcm overflows 64 bits");
  }
  return q * b;
}

}  // namespace surfact
