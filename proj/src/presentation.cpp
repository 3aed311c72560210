#include "surfact/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "surfact/errors.hpp"

namespace surfact {

Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_column(*it));
  return out;
}

Word word_power(const Word& w, int exponent) {
  Word base = exponent < 0 ? word_inverse(w) : w;
  int n = exponent < 0 ? -exponent : exponent;
  Word out;
  out.reserve(base.size() * n);
  for (int i = 0; i < n; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const std::map<std::string, int, std::less<>>* gen_index = nullptr;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* where) {
    if (!eat(c)) {
      throw ParseError(std::string("expected '") + c + "' in " + where + " at offset " +
                       std::to_string(pos));
    }
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_')) {
        ++pos;
      }
    }
    if (pos == start) throw ParseError("expected a generator name at offset " + std::to_string(pos));
    return std::string(text.substr(start, pos - start));
  }

  int integer() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    std::size_t start = pos;
    long val = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      val = val * 10 + (text[pos] - '0');
      if (val > 1'000'000) throw ParseError("exponent out of range");
      ++pos;
    }
    if (pos == start) throw ParseError("expected an integer at offset " + std::to_string(pos));
    return static_cast<int>(neg ? -val : val);
  }

  Word factor() {
    skip_ws();
    if (eat('(')) {
      Word w = relator();
      expect(')', "parenthesized word");
      return w;
    }
    std::string id = name();
    auto it = gen_index->find(id);
    if (it == gen_index->end()) throw ParseError("unknown generator '" + id + "'");
    return Word{gen_column(it->second, false)};
  }

  Word term() {
    Word f = factor();
    skip_ws();
    if (eat('^')) return word_power(f, integer());
    return f;
  }

  Word relator() {
    Word w = term();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        Word t = term();
        w.insert(w.end(), t.begin(), t.end());
      } else {
        break;
      }
    }
    return w;
  }
};

}  // namespace

Presentation Presentation::parse(std::string_view text) {
  Parser p{text};
  p.expect('<', "presentation");
  Presentation out;
  std::map<std::string, int, std::less<>> index;
  while (true) {
    std::string id = p.name();
    if (index.count(id)) throw ParseError("generator '" + id + "' declared twice");
    index[id] = static_cast<int>(out.generators.size());
    out.generators.push_back(std::move(id));
    if (!p.eat(',')) break;
  }
  p.gen_index = &index;
  p.skip_ws();
  if (p.eat('|')) {
    p.skip_ws();
    if (p.pos < p.text.size() && p.text[p.pos] != '>') {
      while (true) {
        out.relators.push_back(p.relator());
        if (!p.eat(',')) break;
      }
    }
  }
  p.expect('>', "presentation");
  p.skip_ws();
  if (p.pos != p.text.size()) {
    throw ParseError("trailing text after presentation at offset " + std::to_string(p.pos));
  }
  return out;
}

std::string Presentation::str() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) os << ',';
    os << generators[i];
  }
  os << " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) os << ", ";
    const Word& w = relators[r];
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!first) os << '*';
      first = false;
      os << generators[w[i] / 2];
      long run = static_cast<long>(j - i);
      long exp = (w[i] & 1) ? -run : run;
      if (exp != 1) os << '^' << exp;
      i = j;
    }
    if (w.empty()) os << "()";
  }
  os << '>';
  return os.str();
}

}  // namespace surfact
