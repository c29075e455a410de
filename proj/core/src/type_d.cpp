#include "hitchin/type_d.hpp"

#include "hitchin/errors.hpp"
#include "hitchin/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hitchin {

Partition jordan_type(const QMatrix& y) {
    detail::require_square(y.rows(), y.cols(), "jordan_type");
    const std::size_t n = y.rows();
    std::vector<std::size_t> ranks{n};
    QMatrix power = QMatrix::identity(n);
    while (ranks.back() > 0) {
        power = power * y;
        ranks.push_back(rank(power));
        if (ranks.size() > n + 1) {
            throw StructuralError("jordan_type: matrix is not nilpotent");
        }
    }
    std::vector<int> at_least;  // number of blocks of size >= k, k = 1, 2, ..
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        at_least.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
    }
    return Partition::from(at_least).conjugate();
}

Partition richardson_jordan_type(const ParabolicSpec& P, std::uint64_t seed, int bound) {
    if (P.n.empty()) {
        return Partition::from(std::vector<int>(P.g().matrix_size, 1));
    }
    for (int attempt = 0; attempt < 4; ++attempt, bound *= 4) {
        std::vector<Partition> found;
        for (std::uint64_t s = 0; s < 3; ++s) {
            std::mt19937_64 rng(trial_seed(seed, 3 * static_cast<std::uint64_t>(attempt) + s));
            found.push_back(jordan_type(random_combination(P.n, P.g().matrix_size, rng, bound)));
        }
        if (found[0] == found[1] && found[1] == found[2]) {
            return found[0];
        }
    }
    throw StructuralError("richardson_jordan_type: samples disagree for " + P.description());
}

std::vector<std::string> orthogonal_partition_problems(const Partition& delta) {
    std::vector<std::string> problems;
    const auto& p = delta.parts;
    if (p.size() % 2 != 0) {
        problems.push_back("odd number of parts");
    }
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) {
            ++j;
        }
        if (p[i] % 2 == 0 && (j - i) % 2 != 0) {
            problems.push_back("even part " + std::to_string(p[i]) + " has odd multiplicity");
        }
        i = j;
    }
    for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
        if (p[i] % 2 != p[i + 1] % 2) {
            problems.push_back("parts " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                               " differ in parity");
        }
    }
    return problems;
}

NewtonPolygon::NewtonPolygon(Partition delta) : delta_(std::move(delta)) {
    partial_.push_back(0);
    for (int d : delta_.parts) {
        partial_.push_back(partial_.back() + d);
    }
    degree_ = partial_.back();
}

int NewtonPolygon::min_alpha(int k) const {
    if (k < 1 || k > degree_) {
        throw PreconditionError("min_alpha: index outside 1..degree");
    }
    for (std::size_t j = 1; j < partial_.size(); ++j) {
        if (partial_[j - 1] < k && k <= partial_[j]) {
            return static_cast<int>(j);
        }
    }
    throw StructuralError("min_alpha: unreachable");
}

bool NewtonPolygon::allows(int alpha, int beta) const {
    if (beta >= degree_ || beta < 0 || alpha < 0) {
        return beta == degree_ && alpha == 0;
    }
    return alpha >= min_alpha(degree_ - beta);
}

std::vector<PolygonEdge> NewtonPolygon::edges() const {
    std::vector<PolygonEdge> out;
    int alpha0 = 0;
    int beta0 = degree_;
    const auto& p = delta_.parts;
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) {
            ++j;
        }
        PolygonEdge e;
        e.index = static_cast<int>(out.size()) + 1;
        e.slope = p[i];
        e.multiplicity = static_cast<int>(j - i);
        for (int s = 0; s <= e.multiplicity; ++s) {
            e.pairs.emplace_back(alpha0 + s, beta0 - s * e.slope);
        }
        alpha0 += e.multiplicity;
        beta0 -= e.multiplicity * e.slope;
        out.push_back(std::move(e));
        i = j;
    }
    return out;
}

std::vector<PolygonEdge> NewtonPolygon::even_edges() const {
    auto all = edges();
    all.erase(std::remove_if(all.begin(), all.end(), [](const PolygonEdge& e) { return e.slope % 2 != 0; }),
              all.end());
    return all;
}

CharPoly char_poly_from_point(const std::vector<Series>& point, int pfaffian_sign) {
    if (point.empty()) {
        throw PreconditionError("char_poly_from_point: empty point");
    }
    const std::size_t n = point.size();
    CharPoly f(2 * n);
    for (std::size_t j = 1; j < n; ++j) {
        f[2 * j - 1] = point[j - 1];
    }
    f[2 * n - 1] = point.back() * point.back();
    if (pfaffian_sign < 0) {
        f[2 * n - 1] = -f[2 * n - 1];
    }
    return f;
}

Tribool polygon_membership(const CharPoly& f, const NewtonPolygon& polygon) {
    if (static_cast<int>(f.size()) != polygon.degree()) {
        throw PreconditionError("polygon_membership: degree mismatch");
    }
    Tribool ok = Tribool::True;
    for (int k = 1; k <= polygon.degree(); ++k) {
        ok = ok && f[static_cast<std::size_t>(k - 1)].valuation().at_least_value(polygon.min_alpha(k));
        if (ok == Tribool::False) {
            break;
        }
    }
    return ok;
}

std::vector<EdgePolynomial> edge_polynomials(const CharPoly& f, const NewtonPolygon& polygon) {
    if (static_cast<int>(f.size()) != polygon.degree()) {
        throw PreconditionError("edge_polynomials: degree mismatch");
    }
    std::vector<EdgePolynomial> out;
    for (auto& edge : polygon.even_edges()) {
        EdgePolynomial ep;
        ep.edge = edge;
        const auto e = static_cast<std::size_t>(edge.multiplicity);
        std::vector<Rational> coeffs(e + 1);
        bool known = true;
        for (std::size_t s = 0; s <= e; ++s) {
            const auto [alpha, beta] = edge.pairs[s];
            const int k = polygon.degree() - beta;
            Rational rho;
            if (k == 0) {
                rho = Rational(alpha == 0 ? 1 : 0);
            } else {
                const Series& fk = f[static_cast<std::size_t>(k - 1)];
                if (alpha >= fk.precision()) {
                    known = false;
                    break;
                }
                rho = fk.coeff(alpha);
            }
            coeffs[e - s] = rho;
        }
        if (known) {
            ep.q = QPoly(std::move(coeffs));
        }
        out.push_back(std::move(ep));
    }
    return out;
}

Tribool d_membership(const CharPoly& f, const NewtonPolygon& polygon) {
    Tribool ok = polygon_membership(f, polygon);
    if (ok == Tribool::False) {
        return ok;
    }
    for (const auto& ep : edge_polynomials(f, polygon)) {
        if (ep.edge.multiplicity % 2 != 0) {
            continue;
        }
        ok = ok && (ep.q ? to_tribool(is_square(*ep.q)) : Tribool::Unknown);
    }
    return ok;
}

std::optional<QuadraticEdge> quadratic_edge(const EdgePolynomial& e) {
    if (e.edge.multiplicity != 2 || !e.q) {
        return std::nullopt;
    }
    return QuadraticEdge{e.q->coeff(2), e.q->coeff(1), e.q->coeff(0)};
}

ComponentReport component_analysis(const Partition& delta) {
    ComponentReport rep;
    rep.delta = delta;
    const int mu = static_cast<int>(delta.parts.size());
    const NewtonPolygon polygon(delta);
    std::vector<bool> in(static_cast<std::size_t>(mu) + 1, false);
    for (const auto& e : polygon.even_edges()) {
        for (const auto& pr : e.pairs) {
            in[static_cast<std::size_t>(pr.first)] = true;
        }
    }
    for (int i = 0; i <= mu; ++i) {
        if (in[static_cast<std::size_t>(i)]) {
            rep.index_set.push_back(i);
        }
    }
    for (std::size_t i = 0; i < rep.index_set.size();) {
        std::size_t j = i;
        while (j + 1 < rep.index_set.size() && rep.index_set[j + 1] == rep.index_set[j] + 1) {
            ++j;
        }
        Segment seg{rep.index_set[i], rep.index_set[j], 0};
        const bool starts = seg.a == 0;
        const bool ends = seg.b == mu;
        seg.kind = starts ? (ends ? 4 : 2) : (ends ? 3 : 1);
        rep.segments.push_back(seg);
        i = j + 1;
    }
    for (const auto& seg : rep.segments) {
        rep.two_components = rep.two_components || seg.kind == 4;
        rep.singular = rep.singular || seg.kind == 1 || seg.kind == 3;
    }
    rep.components = rep.two_components ? 2 : 1;
    return rep;
}

CodimReport codim_report(const ParabolicSpec& P, std::uint64_t seed) {
    return codim_report(P, richardson_jordan_type(P, seed));
}

CodimReport codim_report(const ParabolicSpec& P, const Partition& delta) {
    if (P.g().type != LieType::D) {
        throw PreconditionError("codim_report: type D only");
    }
    CodimReport r;
    r.n = P.g().rank;
    r.delta = delta;
    r.conjugate = delta.conjugate();
    r.mu = static_cast<int>(delta.parts.size());
    if (delta.size() != 2 * r.n || r.mu % 2 != 0) {
        throw StructuralError("codim_report: Jordan type " + to_string(delta) + " is not orthogonal for D" +
                              std::to_string(r.n));
    }
    for (std::size_t j = 0; j + 1 < delta.parts.size(); j += 2) {
        (delta.parts[j] % 2 == 0 ? r.n_ev : r.n_odd) += 1;
    }
    for (int j = 1; j <= r.mu; ++j) {
        const int dj = delta.parts[static_cast<std::size_t>(j - 1)];
        r.m_tilde.insert(r.m_tilde.end(), static_cast<std::size_t>(j == r.mu ? dj - 1 : dj), j);
        r.sum_j_delta += j * dj;
    }
    r.m_tilde.push_back(r.mu / 2);
    for (int j = 1; j <= r.n; ++j) {
        r.m.push_back(r.m_tilde[static_cast<std::size_t>(2 * j - 1)]);
    }
    r.sum_m = std::accumulate(r.m.begin(), r.m.end(), 0);
    for (int c : r.conjugate.parts) {
        r.sum_conjugate_squares += c * c;
    }
    r.dim_l = static_cast<int>(P.dim_l());
    r.dim_n = static_cast<int>(P.dim_n());
    r.conjugate_square_identity = -2 * r.n + 2 * r.sum_j_delta == r.sum_conjugate_squares;
    r.levi_dimension_identity = 2 * r.dim_l == r.sum_conjugate_squares - 2 * r.n_odd;
    r.sum_m_matches_dims = r.sum_m == r.n * r.n - r.dim_n - r.n_ev;
    r.sum_m_matches_delta = 2 * r.sum_m == r.sum_j_delta + r.n_odd - r.mu;

    const NewtonPolygon polygon(delta);
    for (int j = 1; j < r.n; ++j) {
        r.b_tr_dim += 2 * j;
        for (int alpha = 0; alpha < 2 * j; ++alpha) {
            r.dprime_tr_dim += polygon.allows(alpha, 2 * r.n - 2 * j) ? 1 : 0;
        }
    }
    r.b_tr_dim += r.n;
    for (int alpha = 0; alpha < r.n; ++alpha) {
        // p_n^2 has valuation 2 val(p_n), which must reach the last vertex
        r.dprime_tr_dim += polygon.allows(2 * alpha, 0) ? 1 : 0;
    }
    r.codim_matches_polygon = r.b_tr_dim - r.dprime_tr_dim == r.sum_m;
    return r;
}

int pfaffian_sign(const LieRealization& g) {
    if (!g.form || g.type != LieType::D) {
        throw PreconditionError("pfaffian_sign: type D only");
    }
    const Rational det = determinant(*g.form);
    if (det == Rational(1)) return 1;
    if (det == Rational(-1)) return -1;
    throw StructuralError("pfaffian_sign: form has determinant " + det.str());
}

}  // namespace hitchin
