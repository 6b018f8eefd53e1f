#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "tdim/report.hpp"

namespace tdim {

// splitmix64; fixed so that batches are reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  int uniform(int n);  // [0, n)
  bool chance(int percent) { return uniform(100) < percent; }

 private:
  std::uint64_t state_;
};

struct FuzzConfig {
  std::uint64_t seed = 1;
  int count = 10;
  SpaceSpec space;
  Division division;
  int max_level = 3;   // highest refinement level
  int max_level0 = 6;  // level-0 cells per direction
  bool require_n2 = false;
  ReportOptions report;
};

HMesh random_hmesh(std::uint64_t seed, const FuzzConfig& config);

struct FuzzCase {
  int index = 0;
  std::uint64_t seed = 0;
  HMesh mesh;
  DimReport report;
};

struct FuzzSummary {
  std::vector<FuzzCase> cases;
  int mismatches = 0;
  std::map<ComponentClass, int> classes;
};

FuzzSummary run_fuzz(const FuzzConfig& config);
nlohmann::json fuzz_to_json(const FuzzConfig& config, const FuzzSummary& summary);

}  // namespace tdim
