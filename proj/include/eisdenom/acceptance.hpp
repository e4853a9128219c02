#pragma once

#include <random>
#include <string>
#include <vector>

#include "eisdenom/sympoly.hpp"

namespace eisdenom {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string tolerance;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs the acceptance criteria (all of 1..11 when ids is empty).
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});

// One line per criterion: "[PASS] 3 ...".
std::string format_results(const std::vector<CriterionResult>& results);

// Uniform-ish element of SL2(Z) with entries in [-bound, bound].
Mat2 random_sl2(std::mt19937_64& rng, long bound);

}  // namespace eisdenom
