#pragma once

#include "hitchin/lie.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hitchin {

/// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    /// Sorts descending and drops zeros; throws `PreconditionError` on negative parts.
    static Partition from(std::vector<int> parts);
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] std::size_t length() const noexcept { return parts.size(); }
    [[nodiscard]] Partition conjugate() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

std::string to_string(const Partition& p);

/// Degrees of the generators in the fixed order: A (2..n+1), B/C (2,4,..,2n),
/// D (2,4,..,2n-2, n), G2 (2,6).
std::vector<int> fundamental_degrees(LieType t, int rank);

enum class LeviFactorKind { GL, SO_ODD, SP, SO_EVEN };

/// gl_size, so_{2 size + 1}, sp_{2 size} or so_{2 size}.
struct LeviFactor {
    LeviFactorKind kind;
    int size;
};

/// Simple and abelian factors of the Levi (classical types only).
std::vector<LeviFactor> levi_factors(const ParabolicSpec& P);

/// Fundamental degrees of the Levi, ascending. Type A drops one degree 1 (trace-free Levi).
std::vector<int> levi_degrees(const ParabolicSpec& P);

/// The gl_n sequence m_0..m_{n-1}: value k repeated delta_k times, delta the conjugate of the blocks.
std::vector<int> gl_m_sequence(const std::vector<int>& blocks);

/// Odd-position subsequence m~_1, m~_3, ... of the ambient gl flag's sequence, one entry per rank.
std::vector<int> interleaved_ambient_degrees(const ParabolicSpec& P);

struct GoodReport {
    bool good = true;
    /// For type D: 2s and max(r_1, .., r_k, 4).
    int lhs = 0;
    int rhs = 0;
    std::string reason;
};

/// Every A, B, C, G2 parabolic is good; type D needs 2s >= max(r_1, .., r_k, 4).
GoodReport is_good_parabolic(const ParabolicSpec& P);

struct DegreeProfile {
    std::vector<int> d;
    std::vector<int> m;
    std::vector<int> exponents;  // -d_i + m_i
};

/// Pairs each generator degree with a Levi degree. Throws `UnsupportedCase` for bad type-D
/// parabolics. Type D pairs the Pfaffian with the Pfaffian degree s of the so_{2s} factor and
/// the c_{2i} with the remaining Levi degrees in ascending order.
DegreeProfile predicted_image(const ParabolicSpec& P);

/// Cells (a, b) with 1 <= b <= j_a, listed block by block.
std::vector<std::pair<int, int>> cells(const std::vector<int>& js);

/// Decreases of a permutation of `cells(js)` given as the image index of each cell.
int count_decreases(const std::vector<int>& js, const std::vector<std::size_t>& sigma);
/// r - max(j_1, .., j_k).
int lambda_of(const std::vector<int>& js);
/// Maximum of `count_decreases` over all permutations; at most 9 cells.
int lambda_brute_force(const std::vector<int>& js);
/// r - m_{r-1} for the gl sequence of the blocks; 1 <= r <= n - 1.
int mu_of(int r, const std::vector<int>& blocks);
/// Maximum of lambda_of over all (j_1, .., j_k) with 0 <= j_a <= n_a summing to r.
int mu_brute_force(int r, const std::vector<int>& blocks);

struct DimensionAudit {
    int genus = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::int64_t sum_2d_minus_1 = 0;
    std::int64_t dim_g = 0;
    std::int64_t dim_n = 0;
    [[nodiscard]] bool ok() const noexcept { return lhs == rhs && sum_2d_minus_1 == dim_g; }
};

/// sum_i [(2 d_i - 1)(g - 1) + (d_i - m_i)] against dim(G)(g - 1) + dim(G/P).
/// Requires genus >= 2 and a good parabolic.
DimensionAudit dimension_audit(const ParabolicSpec& P, int genus);

}  // namespace hitchin
