#pragma once

#include "hitchin/degrees.hpp"
#include "hitchin/lie.hpp"
#include "hitchin/polynomial.hpp"
#include "hitchin/tribool.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hitchin {

/// Jordan type of a nilpotent matrix from the ranks of its powers.
Partition jordan_type(const QMatrix& nilpotent);

/// Jordan type of a generic element of n: three independent samples must agree.
/// Retries with a larger coefficient bound; throws `StructuralError` on persistent disagreement.
Partition richardson_jordan_type(const ParabolicSpec& P, std::uint64_t seed = 1, int bound = 5);

/// Violations of the orthogonal-partition rules (even parts with even multiplicity,
/// consecutive pairs of equal parity, even number of parts). Empty when valid.
std::vector<std::string> orthogonal_partition_problems(const Partition& delta);

/// Edge of slope -value on the boundary of the polygon, with the lattice points on it.
struct PolygonEdge {
    int index = 0;  // 1-based among distinct parts, largest first
    int slope = 0;  // the distinct part delta~_j
    int multiplicity = 0;  // e_j
    /// (alpha, beta) for s = 0..e_j.
    std::vector<std::pair<int, int>> pairs;
};

/// The region of (alpha, beta) allowed for a monic polynomial of degree |delta| in lambda:
/// the coefficient of lambda^beta t^alpha may be nonzero only when alpha >= j, where
/// delta_1 + .. + delta_{j-1} < deg - beta <= delta_1 + .. + delta_j.
class NewtonPolygon {
public:
    explicit NewtonPolygon(Partition delta);

    [[nodiscard]] const Partition& delta() const noexcept { return delta_; }
    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] int parts() const noexcept { return static_cast<int>(delta_.parts.size()); }
    /// Lowest allowed t-exponent of the coefficient f_k of lambda^(deg - k), 1 <= k <= deg.
    [[nodiscard]] int min_alpha(int k) const;
    [[nodiscard]] bool allows(int alpha, int beta) const;
    /// All edges, largest slope first.
    [[nodiscard]] std::vector<PolygonEdge> edges() const;
    /// Edges of even slope.
    [[nodiscard]] std::vector<PolygonEdge> even_edges() const;

private:
    Partition delta_;
    int degree_ = 0;
    std::vector<int> partial_;  // partial_[j] = delta_1 + .. + delta_j
};

/// Coefficients f_1..f_D of lambda^D + f_1 lambda^(D-1) + .. + f_D.
using CharPoly = std::vector<Series>;

/// f from a type-D point (c_2, .., c_{2n-2}, p_n): odd coefficients vanish and
/// f_{2n} = pfaffian_sign * p_n^2.
CharPoly char_poly_from_point(const std::vector<Series>& point, int pfaffian_sign);

/// Every coefficient respects the polygon; unknown when precision runs out first.
Tribool polygon_membership(const CharPoly& f, const NewtonPolygon& polygon);

struct EdgePolynomial {
    PolygonEdge edge;
    /// q_j(u) = sum_s rho_{alpha_s, beta_s} u^(e_j - s); absent when a coefficient is unknown.
    std::optional<QPoly> q;
};

std::vector<EdgePolynomial> edge_polynomials(const CharPoly& f, const NewtonPolygon& polygon);

/// Polygon membership and squareness of every even-slope edge polynomial.
Tribool d_membership(const CharPoly& f, const NewtonPolygon& polygon);

/// For an edge with e_j = 2: q = x u^2 + y u + z is a square iff y^2 = 4 x z.
struct QuadraticEdge {
    Rational x;
    Rational y;
    Rational z;
    [[nodiscard]] bool discriminant_vanishes() const { return y * y == Rational(4) * x * z; }
};
std::optional<QuadraticEdge> quadratic_edge(const EdgePolynomial& e);

struct Segment {
    int a = 0;
    int b = 0;
    int kind = 0;  // 1..4 as in the component classification
};

struct ComponentReport {
    Partition delta;
    std::vector<int> index_set;
    std::vector<Segment> segments;
    int components = 1;
    bool singular = false;
    bool two_components = false;
};

/// Segments of the vertex indices lying on even-slope edges and their cases:
/// (1) interior, (2) starts at 0, (3) ends at mu, (4) the whole range [0, mu].
ComponentReport component_analysis(const Partition& delta);

struct CodimReport {
    int n = 0;
    Partition delta;
    Partition conjugate;
    int mu = 0;
    int n_ev = 0;
    int n_odd = 0;
    std::vector<int> m_tilde;  // m~_0..m~_{2n-1}
    std::vector<int> m;        // m_j = m~_{2j-1}
    int sum_m = 0;
    int sum_j_delta = 0;
    int sum_conjugate_squares = 0;
    int dim_l = 0;
    int dim_n = 0;
    int b_tr_dim = 0;       // sum of the generator degrees
    int dprime_tr_dim = 0;  // counted from the polygon
    bool conjugate_square_identity = false;  // -2n + 2 sum j delta_j == sum n'^2
    bool levi_dimension_identity = false;    // dim l == sum n'^2 / 2 - n_odd
    bool sum_m_matches_dims = false;     // sum m == n^2 - dim n - n_ev
    bool sum_m_matches_delta = false;    // 2 sum m == sum j delta_j + n_odd - mu
    bool codim_matches_polygon = false;  // b_tr_dim - dprime_tr_dim == sum m
    [[nodiscard]] bool ok() const noexcept {
        return conjugate_square_identity && levi_dimension_identity && sum_m_matches_dims && sum_m_matches_delta &&
               codim_matches_polygon;
    }
};

/// Type D only; uses the Richardson oracle and the constructed Levi.
CodimReport codim_report(const ParabolicSpec& P, std::uint64_t seed = 1);
CodimReport codim_report(const ParabolicSpec& P, const Partition& delta);

/// Pfaffian sign of the realization: c_{2n} = sign * Pf(J x)^2 for x in so(J).
int pfaffian_sign(const LieRealization& g);

}  // namespace hitchin
