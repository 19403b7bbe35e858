#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <utility>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/polygon.hpp"

namespace hyperpoly {

/// SplitMix64: state advances by the golden-ratio increment
/// 0x9E3779B97F4A7C15 per draw, output is the standard 64-bit finalizer.
/// Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::string_view kName = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t state_;
};

/// Seed of the k-th polygon with n vertices in a corpus rooted at `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n, std::uint64_t k);

enum class Family { ConvexRandom, PerturbedRegular, Shrink };
const char* to_string(Family f);

struct GenSpec {
  int n = 6;
  std::uint64_t seed = 0;
  double r_min = 0.3;   ///< Poincare radii range for ConvexRandom
  double r_max = 0.6;
  double jitter = 1e-2; ///< PerturbedRegular offset magnitude bound
  double radius = 0.5;  ///< PerturbedRegular base Poincare radius
  double lambda = 1.0;  ///< Shrink factor applied after ConvexRandom
  Family family = Family::ConvexRandom;
  int max_attempts = 10000;
};

/// Default ConvexRandom spec for a corpus of n-gons: Poincare radii in
/// 0.5 +- 0.2/n, narrow enough that acceptable candidates are common at every
/// n in 4..12.
GenSpec default_spec(int n, std::uint64_t seed);

struct GenStats {
  long attempts = 0;
  long rejected_simple = 0;
  long rejected_generic = 0;   ///< includes near-tied adjacent radii and cusp-boundary cases
  long rejected_coherent = 0;
  long rejected_convex = 0;
};

struct Generated {
  HPolygon polygon;
  GenStats stats;
};

/// Raised when max_attempts candidates were all rejected.
class GenerationExhausted : public ExhaustionError {
 public:
  GenerationExhausted(const std::string& what, const GenStats& stats)
      : ExhaustionError(what), stats_(stats) {}
  const GenStats& stats() const { return stats_; }

 private:
  GenStats stats_;
};

/// Throws std::invalid_argument on a malformed spec and GenerationExhausted when
/// no acceptable polygon turns up within spec.max_attempts.
Generated random_convex_polygon(const GenSpec& spec, const Tolerances& tol = kDefaultTolerances);

Generated perturbed_regular(int n, double jitter, std::uint64_t seed, double radius = 0.5,
                            const Tolerances& tol = kDefaultTolerances, int max_attempts = 10000);

/// Dispatches on spec.family.
Generated generate(const GenSpec& spec, const Tolerances& tol = kDefaultTolerances);

/// Scales every vertex's Poincare coordinates by lambda and revalidates.
/// Throws ValidationError if the result is not a valid convex polygon.
HPolygon shrink(const HPolygon& p, double lambda);

}  // namespace hyperpoly
