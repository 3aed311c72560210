#include "surfact/cache.hpp"

#include <fstream>
#include <iostream>

namespace surfact {

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // no file yet: empty cache, header written on first store
  std::string line;
  if (!std::getline(in, line) || line != kMagic) {
    std::cerr << "warning: cache " << path_ << " has no '" << kMagic
              << "' header; ignoring its contents\n";
    return;
  }
  header_ok_ = true;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("op") || !j.contains("key") ||
        !j.contains("value") || !j.at("op").is_string() || !j.at("key").is_string()) {
      std::cerr << "warning: cache " << path_ << ":" << lineno << ": corrupt entry skipped\n";
      ++corrupt_lines_;
      continue;
    }
    entries_[{j.at("op").get<std::string>(), j.at("key").get<std::string>()}] = j.at("value");
  }
}

std::optional<Json> ResultCache::lookup(const std::string& operation,
                                        const std::string& key) const {
  const auto it = entries_.find({operation, key});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const std::string& operation, const std::string& key, const Json& value) {
  entries_[{operation, key}] = value;
  if (!header_ok_) {
    std::ofstream out(path_, std::ios::trunc);
    out << kMagic << "\n";
    header_ok_ = static_cast<bool>(out);
  }
  std::ofstream out(path_, std::ios::app);
  Json line;
  line["op"] = operation;
  line["key"] = key;
  line["value"] = value;
  out << line.dump() << "\n";
}

std::string group_digest(const PermGroup& g) {
  std::string d = "deg=" + std::to_string(g.degree());
  for (const auto& gen : g.generators()) d += ";" + gen.str();
  return d;
}

std::string catalog_digest(const Catalog& catalog) {
  std::string d = "n=" + std::to_string(catalog.size());
  for (const auto& e : catalog.entries()) {
    d += ";" + e.id + ":" + std::to_string(e.group.order());
  }
  for (const auto& c : catalog.coverage()) d += ";" + c.str();
  return d;
}

}  // namespace surfact
