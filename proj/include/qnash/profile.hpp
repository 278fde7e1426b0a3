#pragma once

#include <vector>

#include "qnash/game.hpp"

namespace qnash {

inline constexpr double kProbabilityTolerance = 1e-9;

// A mixed strategy profile: x for the row player, y for the column player.
// Entries must be nonnegative and each vector must sum to 1 within
// kProbabilityTolerance.
struct MixedProfile {
  std::vector<double> x;
  std::vector<double> y;

  int k() const { return static_cast<int>(x.size()); }
  bool operator==(const MixedProfile&) const = default;
};

// Validation helpers. validate_* throw std::invalid_argument on bad input.
bool is_distribution(const std::vector<double>& v);
void validate_distribution(const std::vector<double>& v, const char* what);
void validate_profile(const MixedProfile& profile, int k);

std::vector<double> uniform_distribution(int k);
std::vector<double> pure_distribution(int k, int index);

MixedProfile uniform_profile(int k);
MixedProfile pure_profile(int k, int row, int col);

// Indices with strictly positive mass.
std::vector<int> support(const std::vector<double>& v);

// In-place normalization to sum 1 (throws if the sum is not positive).
void normalize(std::vector<double>& v);

}  // namespace qnash
