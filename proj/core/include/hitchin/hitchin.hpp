#pragma once

#include "hitchin/degrees.hpp"
#include "hitchin/lie.hpp"
#include "hitchin/tribool.hpp"
#include "hitchin/type_d.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hitchin {

/// Generator names in the fixed order: c2.., p<n> last in type D.
std::vector<std::string> generator_names(const LieRealization& g);

/// Throws `StructuralError` unless every t^k coefficient of phi lies in span(g).
void require_in_algebra(const LieRealization& g, const SeriesMatrix& phi);

struct ChiImage {
    std::vector<std::string> names;
    std::vector<Series> values;
    [[nodiscard]] std::vector<Valuation> valuations() const;
};

/// A: (c_2..c_n); B, C: (c_2, c_4, .., c_2n); D: (c_2, .., c_{2n-2}, Pf(J phi)); G2: (c_2, c_6).
ChiImage chi(const LieRealization& g, const SeriesMatrix& phi, bool check_membership = true);

/// t^k . (x_1, .., x_n) = (t^{k d_1} x_1, .., t^{k d_n} x_n).
std::vector<Series> weighted_action(const LieRealization& g, const std::vector<Series>& values, int k);

/// Default working precision 2 max(d_i) + 4.
int default_precision(const LieRealization& g);

/// Worker threads: HITCHIN_THREADS if set and positive, otherwise the hardware count.
unsigned default_threads();

struct CampaignConfig {
    int trials = 100;
    int precision = 0;  // 0: default_precision
    std::uint64_t seed = 1;
    int bound = 10;
    unsigned threads = 0;  // 0: default_threads
    /// Precision may be raised this far above the starting value on undecided trials.
    int max_extra_precision = 24;
};

struct CoordinateReport {
    std::string name;
    int d = 0;
    std::optional<int> m;
    std::optional<int> bound;
    std::optional<int> min_val_observed;  // over trials with a known valuation
    int undecided = 0;
    std::string status;  // "pass", "fail" or "unknown"
};

struct Failure {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    int precision = 0;
    std::string detail;
    std::string phi;
};

struct CampaignReport {
    std::string parabolic;
    std::string mode;  // "box" or "newton"
    int precision = 0;
    int max_precision_used = 0;
    int trials = 0;
    int passes = 0;
    int undecided = 0;
    std::vector<CoordinateReport> per_coordinate;
    std::vector<Failure> failures;
    // newton mode
    std::optional<Partition> delta;
    int square_checks = 0;           // quadratic edges tested with y^2 = 4xz
    int square_check_failures = 0;
    int pfaffian_vertex_checks = 0;  // rho_{mu,0} = sign * (t^{mu/2} coefficient of p_n)^2
    int pfaffian_vertex_failures = 0;
    [[nodiscard]] bool ok() const noexcept {
        return failures.empty() && undecided == 0 && square_check_failures == 0 && pfaffian_vertex_failures == 0;
    }
};

/// Samples phi in t^-1 n + g(O) and checks the predicted image: val(chi_i) >= bound_i for
/// good parabolics (bounds default to -d_i + m_i), d-membership of t . chi(phi) for bad
/// type-D ones. Undecided trials are re-run at higher precision.
CampaignReport verify_inclusion(const ParabolicSpec& P, const CampaignConfig& cfg,
                                const std::optional<std::vector<int>>& bounds = std::nullopt);

struct WitnessCoordinate {
    std::string name;
    int target = 0;
    bool found = false;
    std::optional<std::size_t> trial;
    std::optional<int> valuation;
};

struct WitnessReport {
    std::string parabolic;
    std::string method;  // "companion" or "random"
    int budget = 0;
    int samples_used = 0;
    std::vector<WitnessCoordinate> coordinates;
    /// The companion witness (type A) as series-matrix text.
    std::optional<std::string> phi;
    [[nodiscard]] bool all_found() const noexcept;
};

/// Type A: the trace-free companion matrix, which hits every target at once. Other types:
/// random samples, one coordinate at a time; not finding a target is inconclusive.
/// Targets default to the predicted minima; targets below them are rejected.
WitnessReport witness_search(const ParabolicSpec& P, const std::optional<std::vector<int>>& targets,
                             const CampaignConfig& cfg, int budget);

struct TracePowerReport {
    bool found = false;
    std::size_t samples = 0;
    std::optional<int> val_trace_a4;
    std::vector<std::optional<int>> val_c;  // c_2, c_3, c_4
    std::string phi;
};

/// Searches t^-1 n + g(O) of the sl_4 (3,1) parabolic for A with val(tr A^4) = -2 and
/// val(c_j(A)) >= -1.
TracePowerReport trace_power_check(const ParabolicSpec& P, std::uint64_t seed, int budget, int bound = 10);

}  // namespace hitchin
