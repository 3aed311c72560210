#pragma once

#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "surfact/group_search.hpp"

namespace surfact {

// Run-wide knobs, assembled from CLI flags and the environment.
struct RunConfig {
  std::uint64_t search_node_budget = 10'000'000;
  std::uint64_t coset_budget = 100'000;
  std::vector<std::string> catalog_paths;
  int parallelism = default_parallelism();
  std::string output_format = "markdown";
  std::string cache_path;  // empty: caching off

  static int default_parallelism() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }

  SearchLimits limits() const {
    SearchLimits l;
    l.node_budget = search_node_budget;
    return l;
  }
};

}  // namespace surfact
