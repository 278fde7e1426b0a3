#include "qnash/profile.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnash {

bool is_distribution(const std::vector<double>& v) {
  if (v.empty()) return false;
  double sum = 0.0;
  for (double p : v) {
    if (!std::isfinite(p) || p < 0.0) return false;
    sum += p;
  }
  return std::abs(sum - 1.0) <= kProbabilityTolerance;
}

void validate_distribution(const std::vector<double>& v, const char* what) {
  if (!is_distribution(v))
    throw std::invalid_argument(std::string(what) +
                                ": not a probability distribution (negative, non-finite, or "
                                "sum differs from 1 by more than 1e-9)");
}

void validate_profile(const MixedProfile& profile, int k) {
  if (profile.x.size() != static_cast<size_t>(k) || profile.y.size() != static_cast<size_t>(k))
    throw std::invalid_argument("MixedProfile: dimension mismatch");
  validate_distribution(profile.x, "MixedProfile.x");
  validate_distribution(profile.y, "MixedProfile.y");
}

std::vector<double> uniform_distribution(int k) {
  if (k < 1) throw std::invalid_argument("uniform_distribution: k must be positive");
  return std::vector<double>(k, 1.0 / k);
}

std::vector<double> pure_distribution(int k, int index) {
  if (index < 0 || index >= k) throw std::out_of_range("pure_distribution: index out of range");
  std::vector<double> v(k, 0.0);
  v[index] = 1.0;
  return v;
}

MixedProfile uniform_profile(int k) {
  return {uniform_distribution(k), uniform_distribution(k)};
}

MixedProfile pure_profile(int k, int row, int col) {
  return {pure_distribution(k, row), pure_distribution(k, col)};
}

std::vector<int> support(const std::vector<double>& v) {
  std::vector<int> out;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0.0) out.push_back(static_cast<int>(i));
  return out;
}

void normalize(std::vector<double>& v) {
  double sum = 0.0;
  for (double p : v) sum += p;
  if (!(sum > 0.0)) throw std::invalid_argument("normalize: total mass not positive");
  for (double& p : v) p /= sum;
}

}  // namespace qnash
