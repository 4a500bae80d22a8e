#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "poly.hpp"

namespace rootdisk {

/// Parameters for constructive instance generation. Gates are the target
/// checker's: n >= 3 and k <= n-3 for the off-center modulus-split family,
/// k (and m) <= n-1 for the real/imaginary-split family.
struct GenSpec {
    int n = 3;
    int k = 0;
    std::optional<int> m;  // imaginary-part peak; nullopt -> all-real instance
    double t1 = 1.0;
    double t2 = 0.0;
    double alpha = 0.0;  // max sector half-angle for the argument jitter
    std::uint64_t seed = 0;
};

/// Deterministic uniform double source; identical across platforms for a
/// given seed (unlike the standard distributions, whose output is
/// implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    std::mt19937_64 eng_;
};

/// Strictly positive values v_0..v_n whose scaled sequence t^j v_j rises to a
/// peak at index k and falls after it, with consecutive ratios drawn
/// uniformly from [ratio_lo, ratio_hi]. ratio_lo > 1 keeps every comparison
/// safely away from equality.
std::vector<double> unimodal_chain(int n, int k, double t, Rng& rng,
                                   double ratio_lo = 1.05, double ratio_hi = 3.0);

/// Random polynomial passing the off-center modulus-split hypotheses at
/// (spec.t1, spec.t2) with split index spec.k: moduli from unimodal_chain,
/// arguments jittered uniformly within [-alpha, alpha] about axis 0.
/// Construction is exact at t2 = 0; t2 > 0 rejection-samples the same family.
/// Every instance is re-verified through the checker before being returned;
/// throws when 100 resamples cannot produce a verified instance or the
/// requested parameters violate the gates.
Polynomial gen_thm17_instance(const GenSpec& spec);

/// Random polynomial passing the real/imaginary-split hypotheses at
/// (spec.t1, spec.t2): positive real parts peaking at spec.k, nonnegative
/// imaginary parts peaking at spec.m (identically zero when m is absent).
/// Same verification and resampling contract as gen_thm17_instance.
Polynomial gen_thm110_instance(const GenSpec& spec);

}  // namespace rootdisk
