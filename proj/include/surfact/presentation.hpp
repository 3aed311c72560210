#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace surfact {

// Letters of words over a generating set are encoded as table columns:
// generator i occupies column 2i, its inverse column 2i+1.
inline int gen_column(int gen, bool inverse) { return 2 * gen + (inverse ? 1 : 0); }
inline int inverse_column(int col) { return col ^ 1; }

using Word = std::vector<int>;  // column-encoded letters

Word word_power(const Word& w, int exponent);
Word word_inverse(const Word& w);

// Finite presentation <gens | relators>.
//
// Text grammar:
//   presentation := '<' names '|' relators '>'
//   names        := name (',' name)*
//   relators     := relator (',' relator)*
//   relator      := term ('*' term)*
//   term         := factor ('^' signed-int)?
//   factor       := name | '(' relator ')'
// Example: <x,y | x^4, y^18, (x*y)^2, (x^-1*y)^2>
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  static Presentation parse(std::string_view text);
  std::string str() const;

  int ngens() const { return static_cast<int>(generators.size()); }
  int columns() const { return 2 * ngens(); }
};

}  // namespace surfact
