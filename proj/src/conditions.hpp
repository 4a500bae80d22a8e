#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "wedge.hpp"

namespace rootdisk {

/// The containment results this library evaluates. Enum order doubles as the
/// deterministic tie-break order when several disks have equal size.
enum class Theorem {
    EK,           // positive nondecreasing real chain -> unit disk
    AzizReal,     // real coefficients, one-sided s_r conditions -> |z| <= t1
    GovilRahman,  // sector + nondecreasing modulus chain
    AzizT,        // sector + t-scaled unimodal modulus chain
    RsmComplex,   // sector + modulus split at k
    RsmParts,     // real/imag splits at k and m, origin-centered
    Thm17,        // sector + modulus split, off-center disk (k <= n-3)
    Cor19,        // Thm17 at t2 = 0 with the unimodal-chain hypothesis
    Thm110,       // real/imag splits, off-center disk (k, m <= n-1)
    Cor112,       // Thm110 for positive real coefficients, as printed
};

inline constexpr std::array<Theorem, 10> kAllTheorems = {
    Theorem::EK,         Theorem::AzizReal, Theorem::GovilRahman, Theorem::AzizT,
    Theorem::RsmComplex, Theorem::RsmParts, Theorem::Thm17,       Theorem::Cor19,
    Theorem::Thm110,     Theorem::Cor112,
};

std::string_view theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(std::string_view name);

/// Whether the theorem takes (t1, t2) [or a single t, reported as t1].
bool theorem_is_parameterized(Theorem t);
/// Whether the theorem uses a second split index m.
bool theorem_uses_m(Theorem t);
/// Whether the theorem's radius involves a coefficient sector (alpha, beta).
bool theorem_uses_wedge(Theorem t);

/// Resolve a user-facing tolerance: negative means "use the scale-relative
/// default" 1e-10 * max_j |a_j|.
double resolve_tol(const Polynomial& p, double tol);

/// The sequence s_r = t1 t2 c_r + (t1 - t2) c_{r-1} - c_{r-2} for r = 1..n+1,
/// with c_{-1} = c_{n+1} = 0. values[i] holds s_{i+1}.
struct ConditionSeq {
    std::vector<double> values;
};

/// Builds the condition sequence for c indexed 0..n. Requires t1 > 0 and
/// t1 >= t2 >= 0; throws on empty input.
ConditionSeq condition_seq(std::span<const double> c, double t1, double t2);

/// Closed integer interval of admissible split indices.
struct SplitRange {
    int lo = 0;
    int hi = -1;
    bool contains(int k) const { return k >= lo && k <= hi; }
    int size() const { return hi < lo ? 0 : hi - lo + 1; }
};

/// Split indices for one (or two) condition sequences: canonical k is the
/// smallest admissible index. Theorem-specific caps (k <= n-3 etc.) are the
/// caller's business.
struct SplitIndices {
    int k = 0;
    std::optional<int> m;
    SplitRange k_range;
    std::optional<SplitRange> m_range;
};

/// Finds every k with s_r >= -tol for r <= k+1 and s_r <= tol for r >= k+2.
/// The admissible set is always a contiguous interval; returns nullopt when
/// it is empty. Requires tol >= 0.
std::optional<SplitIndices> split_index(const ConditionSeq& s, double tol);

/// Outcome of evaluating one theorem's coefficient conditions.
struct HypothesisReport {
    Theorem theorem{};
    bool ok = false;
    double t1 = 0.0;
    double t2 = 0.0;
    std::optional<int> k;
    std::optional<int> m;
    std::optional<SplitRange> k_range;  // already intersected with the theorem's gate
    std::optional<SplitRange> m_range;
    std::optional<Wedge> wedge;
    std::vector<std::string> violations;
    std::vector<std::string> notes;  // diagnostics; not part of the wire format
};

// Per-theorem hypothesis checks. tol < 0 selects the relative default.
// Checks never throw on hypothesis failure; reports carry the violations.

/// Positive nondecreasing real chain a_n >= ... >= a_1 >= a_0 > 0.
bool check_ek(const Polynomial& p, double tol);

/// Fitted sector plus nondecreasing modulus chain |a_n| >= ... >= |a_0|.
/// The wedge part is nullopt when no sector with half-angle <= pi/2 exists;
/// the boolean reports the chain only.
std::pair<std::optional<Wedge>, bool> check_govil_rahman(const Polynomial& p, double tol);

/// Unimodal scaled chain: t^j|a_j| nondecreasing up to a peak k and
/// nonincreasing after it, with |a_0| > 0. Returns the full feasible peak
/// range (canonical k = smallest), or nullopt when no peak works. Requires
/// t > 0. This scans the chain directly and is deliberately not routed
/// through condition_seq, so the two formulations cross-check each other.
std::optional<SplitIndices> check_monotone_t(const Polynomial& p, double t, double tol);

HypothesisReport check_aziz_real(const Polynomial& p, double t1, double t2, double tol);
HypothesisReport check_aziz_t(const Polynomial& p, double t, double tol);
HypothesisReport check_rsm_complex(const Polynomial& p, double t1, double t2, double tol);
HypothesisReport check_rsm_parts(const Polynomial& p, double t1, double t2, double tol);
HypothesisReport check_thm17(const Polynomial& p, double t1, double t2, double tol);
HypothesisReport check_cor19(const Polynomial& p, double t, double tol);
HypothesisReport check_thm110(const Polynomial& p, double t1, double t2, double tol);
HypothesisReport check_cor112(const Polynomial& p, double t1, double t2, double tol);

/// Uniform entry point: evaluates the named theorem's hypotheses at (t1, t2).
/// For EK and GovilRahman the parameters are ignored (reported as t1 = 1,
/// t2 = 0); for the single-parameter chains t1 is the scale t.
HypothesisReport check_theorem(const Polynomial& p, Theorem thm, double t1, double t2,
                               double tol);

}  // namespace rootdisk
