#pragma once

#include <stdexcept>
#include <string>

namespace surfact {

// Malformed textual input (cycles, signatures, presentations, catalog stanzas).
class ParseError : public std::invalid_argument {
public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Operands live on incompatible point sets.
class DegreeMismatch : public std::invalid_argument {
public:
  explicit DegreeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A hard resource ceiling was hit (element enumeration, subgroup scan, ...).
// Distinct from a search budget running out: ceilings are refusals, not
// inconclusive answers.
class CeilingExceeded : public std::runtime_error {
public:
  explicit CeilingExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Request outside the supported genus regime (sigma >= 2). Below that the
// group-theoretic setup changes character (no bound on finite actions), so we
// refuse rather than answer.
class GenusRegimeError : public std::invalid_argument {
public:
  explicit GenusRegimeError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace surfact
