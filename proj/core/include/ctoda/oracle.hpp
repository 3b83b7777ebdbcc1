#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ctoda/rational.hpp"

// Brute-force census of labelled maps as pairs (sigma, tau) of permutations
// of darts: sigma rotates the darts around each vertex, tau is a fixed-point
// free involution pairing darts into edges.
namespace ctoda::oracle {

struct OracleTask {
  int nu = 2;
  int vertices = 1;
  int legs = 0;  // 0, or 2 univalent leg vertices
  int darts() const { return 2 * nu * vertices + legs; }
};

struct MapCensus {
  OracleTask task;
  std::map<int, std::uint64_t> by_genus;  // connected pairs only
  std::uint64_t disconnected = 0;
  std::uint64_t total = 0;

  std::uint64_t count(int genus) const {
    const auto it = by_genus.find(genus);
    return it == by_genus.end() ? 0 : it->second;
  }
};

struct CensusOptions {
  unsigned threads = 1;
  bool force = false;
  std::uint64_t budget = 100'000'000;  // matchings allowed without force
};

// (d-1)!!, the number of perfect matchings of d darts.
BigInt matching_count(int darts);

// sigma = n disjoint 2nu-cycles on consecutive darts, with the legs as fixed
// points on the highest-numbered darts.
std::vector<int> standard_rotation(const OracleTask& task);

MapCensus census(const OracleTask& task, const CensusOptions& options = {});
MapCensus two_leg_census(int nu, int vertices, const CensusOptions& options = {});
// Census for an arbitrary vertex rotation on the task's dart set; the genus
// uses the cycle count of `rotation` as the vertex count.
MapCensus census_with_rotation(const OracleTask& task, std::span<const int> rotation,
                               const CensusOptions& options = {});

// (2 - V + E - F) / 2 when that is a nonnegative integer.
std::optional<int> euler_genus(int vertices, int edges, int faces);

}  // namespace ctoda::oracle
