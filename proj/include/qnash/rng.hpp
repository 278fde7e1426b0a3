#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace qnash {

// splitmix64 finalizer. Used to derive independent substreams from a root
// seed so that trial t of an experiment is reproducible in isolation.
inline uint64_t splitmix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t root, uint64_t stream) {
  return splitmix64(root ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL));
}

// Seedable PRNG with hand-rolled distributions. std::mt19937_64 is specified
// bit-exactly by the standard; the standard *distributions* are not, so the
// uniform/discrete draws below are implemented here to keep experiment output
// byte-stable.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n).
  int next_index(int n) {
    if (n <= 0) throw std::invalid_argument("Rng::next_index: n must be positive");
    // Rejection sampling to avoid modulo bias.
    const uint64_t un = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return static_cast<int>(v % un);
  }

  // One draw from a discrete distribution given by nonnegative weights
  // (need not be normalized). Linear CDF scan; callers with many draws from
  // a fixed distribution should use CdfSampler instead.
  int sample_weights(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0)) throw std::invalid_argument("Rng::sample_weights: total weight not positive");
    double u = next_double() * total;
    double acc = 0.0;
    for (size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
  }

 private:
  std::mt19937_64 engine_;
};

// Precomputed CDF for repeated draws from one fixed distribution
// (binary search per draw).
class CdfSampler {
 public:
  explicit CdfSampler(std::span<const double> probs) : cdf_(probs.size()) {
    double acc = 0.0;
    for (size_t i = 0; i < probs.size(); ++i) {
      if (probs[i] < 0.0) throw std::invalid_argument("CdfSampler: negative probability");
      acc += probs[i];
      cdf_[i] = acc;
    }
    if (!(acc > 0.0)) throw std::invalid_argument("CdfSampler: total mass not positive");
    total_ = acc;
  }

  int draw(Rng& rng) const {
    double u = rng.next_double() * total_;
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) return static_cast<int>(cdf_.size()) - 1;
    return static_cast<int>(it - cdf_.begin());
  }

 private:
  std::vector<double> cdf_;
  double total_ = 0.0;
};

}  // namespace qnash
