#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyk/json_io.hpp"

namespace cyk {

struct VerifyConfig {
  std::uint64_t seed = 7;
  int g = 3;         // upper genus cap where a criterion allows a choice
  bool parallel = true;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  json details = json::object();
  std::string error;  // set when the criterion threw
};

inline constexpr int kCriteriaCount = 11;

// Runs criterion id in 1..kCriteriaCount. Never throws; errors become failures.
CriterionResult run_criterion(int id, const VerifyConfig& cfg);
std::vector<CriterionResult> run_all(const VerifyConfig& cfg);
json to_json(const CriterionResult& r);

// K(k) with modulus k via the arithmetic-geometric mean.
double elliptic_k_agm(double k);

}  // namespace cyk
