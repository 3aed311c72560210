#include "surfact/signature.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "surfact/errors.hpp"

namespace surfact {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    long long num = std::stoll(std::string(text.substr(0, slash)));
    long long den = slash == std::string_view::npos
                        ? 1
                        : std::stoll(std::string(text.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator");
    return Rational(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + std::string(text) + "'");
  }
}

Signature Signature::make(int orbit_genus, std::vector<int> periods) {
  if (orbit_genus < 0) throw std::invalid_argument("orbit genus must be >= 0");
  Signature s;
  s.orbit_genus = orbit_genus;
  for (int m : periods) {
    if (m < 1) throw std::invalid_argument("periods must be >= 1");
    if (m == 1) {
      s.had_trivial_periods = true;
      continue;
    }
    s.periods.push_back(m);
  }
  std::sort(s.periods.begin(), s.periods.end());
  return s;
}

namespace {

struct SigText {
  int genus;
  std::vector<int> periods;
};

SigText parse_signature_text(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> int {
    skip_ws();
    std::size_t start = pos;
    long val = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      val = val * 10 + (text[pos] - '0');
      if (val > 1'000'000'000) throw ParseError("number out of range in signature");
      ++pos;
    }
    if (pos == start) throw ParseError("expected a number in signature at offset " +
                                       std::to_string(pos));
    return static_cast<int>(val);
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '(') throw ParseError("signature must start with '('");
  ++pos;
  SigText out;
  out.genus = number();
  skip_ws();
  if (pos >= text.size() || text[pos] != ';') throw ParseError("signature needs ';' after genus");
  ++pos;
  skip_ws();
  if (pos < text.size() && text[pos] == '-') {
    ++pos;
  } else if (pos < text.size() && text[pos] != ')') {
    while (true) {
      out.periods.push_back(number());
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  skip_ws();
  if (pos >= text.size() || text[pos] != ')') throw ParseError("signature must end with ')'");
  ++pos;
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing text after signature");
  return out;
}

std::string signature_text(int genus, const std::vector<int>& periods) {
  std::ostringstream os;
  os << '(' << genus << ';';
  if (periods.empty()) {
    os << '-';
  } else {
    for (std::size_t i = 0; i < periods.size(); ++i) {
      if (i) os << ',';
      os << periods[i];
    }
  }
  os << ')';
  return os.str();
}

}  // namespace

Signature Signature::parse(std::string_view text) {
  SigText t = parse_signature_text(text);
  return make(t.genus, std::move(t.periods));
}

std::string Signature::str() const { return signature_text(orbit_genus, periods); }

DeclaredSignature DeclaredSignature::parse(std::string_view text) {
  SigText t = parse_signature_text(text);
  for (int m : t.periods) {
    if (m < 1) throw ParseError("periods must be >= 1");
  }
  if (t.genus < 0) throw ParseError("orbit genus must be >= 0");
  return DeclaredSignature{t.genus, std::move(t.periods)};
}

std::string DeclaredSignature::str() const { return signature_text(orbit_genus, periods); }

Signature DeclaredSignature::normalized() const { return Signature::make(orbit_genus, periods); }

}  // namespace surfact
