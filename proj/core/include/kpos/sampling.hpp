#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kpos/matrix.hpp"
#include "kpos/rng.hpp"
#include "kpos/tolerance.hpp"

namespace kpos {

enum class Profile {
  generic,        // shifted Gaussian, shift randomized upward past the threshold
  strict,         // in Gamma_k but S_{k+1} < 0 (requires k < n)
  near_boundary,  // just past the threshold shift
  near_diagonal,  // diag(lambda) plus small entrywise noise, no rotation
};

std::string_view to_string(Profile p);
/// Accepts "generic", "strict" (alias "strictly-k-not-k+1"), "near-boundary",
/// "near-diagonal".
Profile profile_from_string(std::string_view s);

struct SampleSpec {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t count = 1;
  std::uint64_t master_seed = 0;
  Profile profile = Profile::generic;

  /// Throws DomainError if the profile is not defined for (n, k).
  void validate() const;
};

inline constexpr int kRejectionBudget = 10000;
/// Relative noise of the near-diagonal profile.
inline constexpr double kNearDiagonalNoise = 1e-3;
/// Emitted samples clear the cone boundary by this many multiples of tol.rel.
inline constexpr double kSampleMarginFactor = 10.0;

/// Haar-distributed orthogonal matrix: Gram-Schmidt (twice) on a Gaussian
/// matrix, which is the QR factorization with a positive diagonal in R.
OrthogonalMatrix haar_orthogonal(std::size_t n, Rng& rng);
OrthogonalMatrix haar_orthogonal(std::size_t n, std::uint64_t seed);

/// Independent entries uniform on [lo, hi].
SymMatrix random_symmetric(std::size_t n, Rng& rng, double lo = -5.0, double hi = 5.0);

/// Point mu + t (1,..,1) with mu Gaussian, where t is placed relative to the
/// threshold shift t* = inf{t : margin(mu + t 1) > factor * tol.rel}. The
/// margin function must be nondecreasing along (1,..,1), as it is for any
/// cone containing that direction.
using ConeMarginFn = std::function<double(std::span<const double>)>;

struct ShiftThresholds {
  std::vector<double> base;  // mu
  double threshold = 0;      // t*
};

ShiftThresholds find_shift_threshold(std::size_t n, Rng& rng, const ConeMarginFn& margin,
                                     double required);

/// lambda in Gamma_k(n) with margin above kSampleMarginFactor * tol.rel.
/// Throws SamplingError once kRejectionBudget attempts are spent.
std::vector<double> sample_gamma(std::size_t n, std::size_t k, Rng& rng,
                                 Profile profile = Profile::generic,
                                 const Tolerance& tol = default_tolerance);
std::vector<double> sample_gamma(std::size_t n, std::size_t k, std::uint64_t seed,
                                 Profile profile = Profile::generic,
                                 const Tolerance& tol = default_tolerance);

/// x with margin(x) > kSampleMarginFactor * tol.rel for an arbitrary cone
/// containing (1,..,1) (generic profile placement).
std::vector<double> sample_cone_point(std::size_t n, Rng& rng, const ConeMarginFn& margin,
                                      const Tolerance& tol = default_tolerance);

/// One k-positive matrix W diag(lambda) W^T (or the near-diagonal form),
/// re-verified against its profile before it is returned.
SymMatrix sample_k_positive_one(std::size_t n, std::size_t k, Profile profile, Rng& rng,
                                const Tolerance& tol = default_tolerance);

/// Trial i draws from Rng::for_trial(master_seed, i).
std::vector<SymMatrix> sample_k_positive(const SampleSpec& spec,
                                         const Tolerance& tol = default_tolerance);

/// One line of the sample dump (JSON lines).
nlohmann::json sample_to_json(const SymMatrix& a, const SampleSpec& spec, std::uint64_t trial);

}  // namespace kpos
