#pragma once

#include "hitchin/matrix.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hitchin {

enum class LieType { A, B, C, D, G2 };

std::string to_string(LieType t);
/// Accepts A, B, C, D, G2 (case-insensitive); throws `PreconditionError` otherwise.
LieType parse_lie_type(const std::string& s);

/// Coefficient of e^i ^ e^j ^ e^k with i < j < k.
struct ThreeFormTerm {
    int i;
    int j;
    int k;
    Rational coeff;
};

/// A Lie algebra in its defining matrix realization.
///
/// B, C, D preserve an anti-diagonal form J (J(i, N-1-i) = eps_i); G2 is cut out of
/// sl_7 by a 3-form and preserves a symmetric form. Every basis element is a weight
/// vector for the diagonal Cartan, and positive roots are upper triangular.
struct LieRealization {
    LieType type = LieType::A;
    int rank = 0;
    std::size_t matrix_size = 0;
    std::vector<QMatrix> basis;
    std::optional<QMatrix> form;
    std::vector<ThreeFormTerm> three_form;
    /// Weight of each coordinate, in a fixed coordinate system for the Cartan dual.
    std::vector<std::vector<Rational>> weights;
    /// Simple roots alpha_1..alpha_rank in the same coordinates (Bourbaki numbering).
    std::vector<std::vector<Rational>> simple_roots;

    [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
    [[nodiscard]] std::string label() const;
    /// The root of a basis element (zero vector for Cartan elements).
    [[nodiscard]] std::vector<Rational> root_of(const QMatrix& x) const;
    /// Coefficients of a root in the simple roots.
    [[nodiscard]] std::vector<Rational> simple_coordinates(const std::vector<Rational>& root) const;
};

/// Dimension formula per type: A n(n+2), B n(2n+1), C n(2n+1), D n(2n-1), G2 14.
std::size_t classical_dimension(LieType t, int rank);

/// Throws `PreconditionError` on an unsupported rank (A >= 1, B/C >= 1, D >= 2, G2 == 2).
LieRealization build_algebra(LieType t, int rank);

/// Structural self-checks: closure under bracket, form or 3-form preservation,
/// tracelessness, dimension. Returns human-readable problems (empty when sound).
std::vector<std::string> check_realization(const LieRealization& g);

/// Value of the 3-form on three vectors.
Rational three_form_value(const LieRealization& g, const std::vector<Rational>& a, const std::vector<Rational>& b,
                          const std::vector<Rational>& c);

enum class G2Parabolic { Borel, Line, Plane };
std::string to_string(G2Parabolic p);
G2Parabolic parse_g2_parabolic(const std::string& s);

/// Flag block data. Type A: r = (n_1..n_k), s unused. B/C/D: isotropic blocks r_1..r_k and
/// the middle block W of dimension 2s+1 (B) or 2s (C, D), with sum r + s = rank.
struct BlockData {
    std::vector<int> r;
    int s = 0;
    friend bool operator==(const BlockData&, const BlockData&) = default;
};

std::string blocks_to_string(const BlockData& b, LieType t);

/// Parabolic subalgebra p = l + n of a realization.
struct ParabolicSpec {
    std::shared_ptr<const LieRealization> algebra;
    /// Marked simple roots (1-based); the parabolic is the nonnegative part of the induced grading.
    std::vector<int> marked;
    /// Equivalent flag data (absent for G2).
    std::optional<BlockData> blocks;
    std::optional<G2Parabolic> g2;
    /// Type D with alpha_{n-1} marked but not alpha_n: the flag model is conjugated by the
    /// coordinate swap n-1 <-> n (0-based), and the two fork parabolics are not identified.
    bool fork_swapped = false;
    std::vector<QMatrix> p;
    std::vector<QMatrix> n;
    std::vector<QMatrix> l;

    [[nodiscard]] std::size_t dim_n() const noexcept { return n.size(); }
    [[nodiscard]] std::size_t dim_l() const noexcept { return l.size(); }
    [[nodiscard]] const LieRealization& g() const { return *algebra; }
    [[nodiscard]] std::string description() const;
};

/// Parabolic from marked simple roots, computed from the root grading.
ParabolicSpec parabolic_from_marked_roots(std::shared_ptr<const LieRealization> g, std::vector<int> marked);
/// Parabolic from flag blocks, computed as the stabiliser of the coordinate flag.
ParabolicSpec parabolic_from_blocks(std::shared_ptr<const LieRealization> g, const BlockData& blocks);
ParabolicSpec g2_parabolic(std::shared_ptr<const LieRealization> g, G2Parabolic kind);

/// Marked roots equivalent to block data (type D with s = 0 uses alpha_n).
std::vector<int> marked_from_blocks(LieType t, int rank, const BlockData& b);
/// Block data equivalent to marked roots; sets `swapped` for the alpha_{n-1}-only fork case.
BlockData blocks_from_marked(LieType t, int rank, const std::vector<int>& marked, bool* swapped = nullptr);

/// Block sizes of the flag in the defining representation (ambient sl_N parabolic).
std::vector<int> ambient_flag_partition(const ParabolicSpec& P);

/// Structural self-checks of p = l + n (see `check_realization`), including the
/// agreement of the flag and root descriptions and, for G2, the geometric flags.
std::vector<std::string> check_parabolic(const ParabolicSpec& P);

/// Every parabolic of the algebra, one per subset of simple roots (G2: Borel, line, plane).
std::vector<ParabolicSpec> enumerate_parabolics(const std::shared_ptr<const LieRealization>& g,
                                                bool include_whole_algebra = false);

/// Same subspace of matrices.
bool same_span(const std::vector<QMatrix>& a, const std::vector<QMatrix>& b);

/// Per-trial generator seed from a campaign seed and a trial index.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Random integer combination of the given matrices with coefficients in [-bound, bound].
QMatrix random_combination(const std::vector<QMatrix>& basis, std::size_t size, std::mt19937_64& rng, int bound);

/// t^-1 Y + sum_{k<N} t^k Z_k with Y a random combination of the n-basis and Z_k of the
/// g-basis, coefficients uniform in [-bound, bound]; entries have precision N.
SeriesMatrix sample_pperp(const ParabolicSpec& P, int precision, std::uint64_t seed, int bound);
SeriesMatrix sample_pperp(const ParabolicSpec& P, int precision, std::mt19937_64& rng, int bound);

}  // namespace hitchin
