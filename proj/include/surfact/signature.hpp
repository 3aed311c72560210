#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace surfact {

// Exact arithmetic only; a floating-point measure anywhere in this library is
// a bug.
using Rational = boost::rational<long long>;

std::string rational_str(const Rational& r);        // "1/42", "2", "-1/6"
Rational parse_rational(std::string_view text);

// Normalized branching data (orbit genus; periods m_1 <= ... <= m_r, each
// >= 2). Period-1 entries contribute nothing and are dropped on construction;
// `had_trivial_periods` remembers that normalization happened.
//
// Text form: "(0;2,3,7)", empty period list "(2;-)".
struct Signature {
  int orbit_genus = 0;
  std::vector<int> periods;
  bool had_trivial_periods = false;

  static Signature make(int orbit_genus, std::vector<int> periods);
  static Signature parse(std::string_view text);

  std::string str() const;
  int count() const { return static_cast<int>(periods.size()); }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.orbit_genus == b.orbit_genus && a.periods == b.periods;
  }
  // (orbit genus, period count, periods lexicographically)
  friend std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
    if (auto c = a.orbit_genus <=> b.orbit_genus; c != 0) return c;
    if (auto c = a.periods.size() <=> b.periods.size(); c != 0) return c;
    return a.periods <=> b.periods;
  }
};

// A signature exactly as a caller stated it: period order kept, period-1
// entries kept. Verification compares measured data against this, position by
// position.
struct DeclaredSignature {
  int orbit_genus = 0;
  std::vector<int> periods;

  static DeclaredSignature parse(std::string_view text);
  std::string str() const;
  Signature normalized() const;

  friend bool operator==(const DeclaredSignature&, const DeclaredSignature&) = default;
};

}  // namespace surfact
