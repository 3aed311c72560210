#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "surfact/report.hpp"

namespace surfact {

// Append-only result store, one JSON object per line under a version header.
// Entries are keyed by (operation, canonical input digest). Values are
// whatever the operation serialized; callers re-validate on use (action
// records go back through ActionRecord::make). Corrupt lines and entries
// with the wrong shape are skipped with a warning on stderr, never trusted.
class ResultCache {
 public:
  static constexpr const char* kMagic = "surfact-cache-v1";

  // Loads the file when present. A missing file is an empty cache; a file
  // with the wrong header is ignored wholesale (warned, then rewritten with
  // a fresh header on the next store).
  explicit ResultCache(std::string path);

  std::optional<Json> lookup(const std::string& operation, const std::string& key) const;

  // Appends and remembers. Re-storing an existing key overwrites in memory
  // and appends a new line; the last line for a key wins on reload.
  void store(const std::string& operation, const std::string& key, const Json& value);

  std::size_t size() const { return entries_.size(); }
  std::size_t corrupt_lines() const { return corrupt_lines_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  bool header_ok_ = false;
  std::size_t corrupt_lines_ = 0;
  std::map<std::pair<std::string, std::string>, Json> entries_;
};

// Canonical digests used as cache keys.
std::string group_digest(const PermGroup& g);
std::string catalog_digest(const Catalog& catalog);

}  // namespace surfact
