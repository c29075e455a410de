#include "hitchin/lie.hpp"

#include "hitchin/errors.hpp"
#include "hitchin/linalg.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace hitchin {

namespace {

using Vec = std::vector<Rational>;

Vec unit(std::size_t dim, std::size_t i) {
    Vec v(dim);
    v[i] = Rational(1);
    return v;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] -= b[i];
    }
    return r;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] += b[i];
    }
    return r;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec scaled(Vec v, const Rational& c) {
    for (auto& x : v) {
        x *= c;
    }
    return v;
}

std::string upper(std::string s) {
    for (auto& c : s) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return s;
}

// Positive integer multiple with coprime entries and positive first nonzero entry.
Vec primitive(Vec v) {
    mpz_class den = 1;
    for (const auto& x : v) {
        if (!x.is_zero()) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
        }
    }
    v = scaled(std::move(v), Rational(mpq_class(den)));
    mpz_class g = 0;
    for (const auto& x : v) {
        if (!x.is_zero()) {
            mpz_class num = x.numerator();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        }
    }
    if (g == 0) {
        return v;
    }
    Rational f{mpq_class(mpz_class(1), g)};
    for (const auto& x : v) {
        if (!x.is_zero()) {
            if (x.sign() < 0) {
                f = -f;
            }
            break;
        }
    }
    return scaled(std::move(v), f);
}

QMatrix primitive(const QMatrix& m) {
    return unflatten(primitive(flatten(m)), m.rows(), m.cols());
}

// Antisymmetric tensor of a 3-form.
std::vector<Rational> three_tensor(const std::vector<ThreeFormTerm>& terms, std::size_t n) {
    std::vector<Rational> t(n * n * n);
    auto at = [&](int a, int b, int c) -> Rational& {
        return t[(static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n + static_cast<std::size_t>(c)];
    };
    for (const auto& term : terms) {
        const std::array<int, 3> idx{term.i, term.j, term.k};
        std::array<int, 3> perm{0, 1, 2};
        do {
            int inversions = 0;
            for (int x = 0; x < 3; ++x) {
                for (int y = x + 1; y < 3; ++y) {
                    inversions += perm[static_cast<std::size_t>(x)] > perm[static_cast<std::size_t>(y)] ? 1 : 0;
                }
            }
            Rational v = term.coeff;
            if (inversions % 2 != 0) {
                v = -v;
            }
            at(idx[static_cast<std::size_t>(perm[0])], idx[static_cast<std::size_t>(perm[1])],
               idx[static_cast<std::size_t>(perm[2])]) += v;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return t;
}

ThreeFormTerm normalized_term(int a, int b, int c, Rational coeff) {
    std::array<int, 3> v{a, b, c};
    int swaps = 0;
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 2 - x; ++y) {
            if (v[static_cast<std::size_t>(y)] > v[static_cast<std::size_t>(y + 1)]) {
                std::swap(v[static_cast<std::size_t>(y)], v[static_cast<std::size_t>(y + 1)]);
                ++swaps;
            }
        }
    }
    if (swaps % 2 != 0) {
        coeff = -coeff;
    }
    return {v[0], v[1], v[2], coeff};
}

// Rows: (a<b<c); columns: X(p, q) flattened. Linear map X -> X . phi.
QMatrix three_form_action_system(const std::vector<Rational>& t, std::size_t n) {
    auto T = [&](std::size_t a, std::size_t b, std::size_t c) -> const Rational& { return t[(a * n + b) * n + c]; };
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                triples.push_back({a, b, c});
            }
        }
    }
    QMatrix sys(triples.size(), n * n);
    for (std::size_t r = 0; r < triples.size(); ++r) {
        const auto [a, b, c] = triples[r];
        for (std::size_t d = 0; d < n; ++d) {
            sys(r, d * n + a) += T(d, b, c);
            sys(r, d * n + b) += T(a, d, c);
            sys(r, d * n + c) += T(a, b, d);
        }
    }
    return sys;
}

LieRealization build_type_a(int rank) {
    LieRealization g;
    g.type = LieType::A;
    g.rank = rank;
    const auto n = static_cast<std::size_t>(rank + 1);
    g.matrix_size = n;
    for (std::size_t i = 1; i < n; ++i) {
        QMatrix h(n, n);
        h(i - 1, i - 1) = Rational(1);
        h(i, i) = Rational(-1);
        g.basis.push_back(std::move(h));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                g.basis.push_back(elementary(n, i, j));
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        g.weights.push_back(unit(n, p));
    }
    for (std::size_t i = 1; i < n; ++i) {
        g.simple_roots.push_back(unit(n, i - 1) - unit(n, i));
    }
    return g;
}

LieRealization build_form_type(LieType type, int rank) {
    LieRealization g;
    g.type = type;
    g.rank = rank;
    const auto n = static_cast<std::size_t>(rank);
    const std::size_t N = type == LieType::B ? 2 * n + 1 : 2 * n;
    g.matrix_size = N;
    std::vector<int> eps(N, 1);
    if (type == LieType::C) {
        for (std::size_t i = n; i < N; ++i) {
            eps[i] = -1;
        }
    }
    QMatrix J(N, N);
    for (std::size_t i = 0; i < N; ++i) {
        J(i, N - 1 - i) = Rational(eps[i]);
    }
    g.form = J;
    auto bar = [N](std::size_t i) { return N - 1 - i; };
    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
            const std::size_t pa = bar(b);
            const std::size_t pb = bar(a);
            // X(pa, pb) = kappa * X(a, b)
            const int kappa = -eps[bar(a)] * eps[bar(b)];  // eps values are +-1
            if (pa == a && pb == b) {
                if (kappa == 1) {
                    g.basis.push_back(elementary(N, a, b));
                }
                continue;
            }
            if (std::make_pair(a, b) < std::make_pair(pa, pb)) {
                QMatrix x = elementary(N, a, b);
                x(pa, pb) += Rational(kappa);
                g.basis.push_back(std::move(x));
            }
        }
    }
    for (std::size_t p = 0; p < N; ++p) {
        if (p < n) {
            g.weights.push_back(unit(n, p));
        } else if (p >= N - n) {
            g.weights.push_back(scaled(unit(n, N - 1 - p), Rational(-1)));
        } else {
            g.weights.push_back(Vec(n));
        }
    }
    for (std::size_t i = 1; i < n; ++i) {
        g.simple_roots.push_back(unit(n, i - 1) - unit(n, i));
    }
    switch (type) {
        case LieType::B: g.simple_roots.push_back(unit(n, n - 1)); break;
        case LieType::C: g.simple_roots.push_back(scaled(unit(n, n - 1), Rational(2))); break;
        default: g.simple_roots.push_back(unit(n, n - 2) + unit(n, n - 1)); break;
    }
    return g;
}

LieRealization build_g2() {
    constexpr std::size_t N = 7;
    // coordinates u1 u2 u3 u0 w1 w2 w3
    std::vector<ThreeFormTerm> raw{
        normalized_term(0, 1, 2, Rational(1)), normalized_term(4, 5, 6, Rational(1)),
        normalized_term(0, 4, 3, Rational(1)), normalized_term(1, 5, 3, Rational(1)),
        normalized_term(2, 6, 3, Rational(1)),
    };
    const auto tensor = three_tensor(raw, N);
    std::vector<QMatrix> stab;
    for (const auto& v : nullspace(three_form_action_system(tensor, N))) {
        stab.push_back(unflatten(v, N, N));
    }
    if (stab.size() != 14) {
        throw StructuralError("G2: stabiliser of the 3-form has dimension " + std::to_string(stab.size()));
    }
    const auto cartan = restrict_span(stab, [](std::size_t i, std::size_t j) { return i == j; });
    if (cartan.size() != 2) {
        throw StructuralError("G2: diagonal part has dimension " + std::to_string(cartan.size()));
    }
    std::vector<Vec> w(N);
    for (std::size_t p = 0; p < N; ++p) {
        w[p] = {cartan[0](p, p), cartan[1](p, p)};
    }
    std::map<Vec, std::vector<std::pair<std::size_t, std::size_t>>> classes;
    for (std::size_t p = 0; p < N; ++p) {
        for (std::size_t q = 0; q < N; ++q) {
            if (p != q) {
                classes[w[p] - w[q]].emplace_back(p, q);
            }
        }
    }
    std::vector<QMatrix> basis = cartan;
    for (const auto& [diff, cells] : classes) {
        if (is_zero_vec(diff)) {
            throw StructuralError("G2: repeated coordinate weight");
        }
        std::set<std::pair<std::size_t, std::size_t>> cellset(cells.begin(), cells.end());
        for (auto& x : restrict_span(stab, [&](std::size_t i, std::size_t j) { return cellset.count({i, j}) > 0; })) {
            basis.push_back(primitive(x));
        }
    }
    if (basis.size() != 14) {
        throw StructuralError("G2: root decomposition has dimension " + std::to_string(basis.size()));
    }
    // generic functional separating all coordinate weights
    Vec ell;
    for (int k = 2;; ++k) {
        ell = {Rational(k), Rational(1)};
        std::set<Rational> values;
        for (const auto& wp : w) {
            values.insert(ell[0] * wp[0] + ell[1] * wp[1]);
        }
        if (values.size() == N) {
            break;
        }
    }
    auto ell_of = [&](const Vec& v) { return ell[0] * v[0] + ell[1] * v[1]; };
    std::vector<std::size_t> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ell_of(w[a]) > ell_of(w[b]); });
    std::vector<std::size_t> where(N);
    for (std::size_t i = 0; i < N; ++i) {
        where[order[i]] = i;
    }

    LieRealization g;
    g.type = LieType::G2;
    g.rank = 2;
    g.matrix_size = N;
    for (const auto& x : basis) {
        QMatrix y(N, N);
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                y(i, j) = x(order[i], order[j]);
            }
        }
        g.basis.push_back(std::move(y));
    }
    for (const auto& t : raw) {
        g.three_form.push_back(normalized_term(static_cast<int>(where[static_cast<std::size_t>(t.i)]),
                                               static_cast<int>(where[static_cast<std::size_t>(t.j)]),
                                               static_cast<int>(where[static_cast<std::size_t>(t.k)]), t.coeff));
    }
    std::sort(g.three_form.begin(), g.three_form.end(), [](const ThreeFormTerm& a, const ThreeFormTerm& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (std::size_t i = 0; i < N; ++i) {
        g.weights.push_back(w[order[i]]);
    }

    // invariant symmetric form: J symmetric with X^T J + J X = 0 for all basis X
    std::vector<std::pair<std::size_t, std::size_t>> sym;
    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = a; b < N; ++b) {
            sym.emplace_back(a, b);
        }
    }
    auto var = [&](std::size_t a, std::size_t b) {
        if (a > b) {
            std::swap(a, b);
        }
        return static_cast<std::size_t>(std::find(sym.begin(), sym.end(), std::make_pair(a, b)) - sym.begin());
    };
    QMatrix sys(g.basis.size() * N * N, sym.size());
    std::size_t row = 0;
    for (const auto& x : g.basis) {
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j, ++row) {
                // (X^T J)_{ij} + (J X)_{ij} = sum_k X_{ki} J_{kj} + J_{ik} X_{kj}
                for (std::size_t k = 0; k < N; ++k) {
                    if (!x(k, i).is_zero()) {
                        sys(row, var(k, j)) += x(k, i);
                    }
                    if (!x(k, j).is_zero()) {
                        sys(row, var(i, k)) += x(k, j);
                    }
                }
            }
        }
    }
    const auto forms = nullspace(sys);
    if (forms.size() != 1) {
        throw StructuralError("G2: invariant symmetric forms span dimension " + std::to_string(forms.size()));
    }
    const Vec f = primitive(forms.front());
    QMatrix J(N, N);
    for (std::size_t v = 0; v < sym.size(); ++v) {
        J(sym[v].first, sym[v].second) = f[v];
        J(sym[v].second, sym[v].first) = f[v];
    }
    g.form = J;

    // simple roots: indecomposable positive roots, short one first
    std::vector<Vec> positive;
    for (std::size_t k = 2; k < g.basis.size(); ++k) {
        const Vec r = g.root_of(g.basis[k]);
        if (ell_of(r).sign() > 0) {
            positive.push_back(r);
        }
    }
    std::vector<Vec> simple;
    for (const auto& r : positive) {
        bool decomposable = false;
        for (const auto& a : positive) {
            for (const auto& b : positive) {
                if (a + b == r) {
                    decomposable = true;
                }
            }
        }
        if (!decomposable) {
            simple.push_back(r);
        }
    }
    if (simple.size() != 2) {
        throw StructuralError("G2: found " + std::to_string(simple.size()) + " simple roots");
    }
    auto is_short = [&](const Vec& r) { return std::find(g.weights.begin(), g.weights.end(), r) != g.weights.end(); };
    if (!is_short(simple[0])) {
        std::swap(simple[0], simple[1]);
    }
    if (!is_short(simple[0]) || is_short(simple[1])) {
        throw StructuralError("G2: simple roots are not one short and one long");
    }
    g.simple_roots = simple;
    return g;
}

std::vector<int> levels_from_blocks(const std::vector<int>& sizes) {
    std::vector<int> level;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        for (int i = 0; i < sizes[b]; ++i) {
            level.push_back(static_cast<int>(b));
        }
    }
    return level;
}

std::vector<int> flag_block_sizes(LieType t, const BlockData& b) {
    if (t == LieType::A) {
        return b.r;
    }
    std::vector<int> sizes = b.r;
    const int w = t == LieType::B ? 2 * b.s + 1 : 2 * b.s;
    if (w > 0) {
        sizes.push_back(w);
    }
    for (auto it = b.r.rbegin(); it != b.r.rend(); ++it) {
        sizes.push_back(*it);
    }
    return sizes;
}

void validate_blocks(LieType t, int rank, const BlockData& b) {
    for (int x : b.r) {
        if (x <= 0) {
            throw PreconditionError("blocks: block sizes must be positive");
        }
    }
    const int sum = std::accumulate(b.r.begin(), b.r.end(), 0);
    if (t == LieType::A) {
        if (sum != rank + 1) {
            throw PreconditionError("blocks: sizes sum to " + std::to_string(sum) + ", expected " +
                                    std::to_string(rank + 1));
        }
        return;
    }
    if (t == LieType::G2) {
        throw PreconditionError("blocks: G2 parabolics are given as borel, line or plane");
    }
    if (b.s < 0) {
        throw PreconditionError("blocks: s must be nonnegative");
    }
    if (sum + b.s != rank) {
        throw PreconditionError("blocks: r_1 + ... + r_k + s = " + std::to_string(sum + b.s) + ", expected rank " +
                                std::to_string(rank));
    }
}

std::vector<int> validated_marked(const LieRealization& g, std::vector<int> marked) {
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    for (int m : marked) {
        if (m < 1 || m > g.rank) {
            throw PreconditionError("marked roots: index " + std::to_string(m) + " outside 1.." +
                                    std::to_string(g.rank));
        }
    }
    return marked;
}

void fill_from_levels(ParabolicSpec& P, const std::vector<int>& level) {
    const auto& basis = P.g().basis;
    P.p = restrict_span(basis, [&](std::size_t i, std::size_t j) { return level[i] <= level[j]; });
    P.n = restrict_span(basis, [&](std::size_t i, std::size_t j) { return level[i] < level[j]; });
    P.l = restrict_span(basis, [&](std::size_t i, std::size_t j) { return level[i] == level[j]; });
}

ParabolicSpec flag_parabolic(std::shared_ptr<const LieRealization> g, const BlockData& b, bool swapped) {
    ParabolicSpec P;
    P.algebra = std::move(g);
    P.blocks = b;
    P.fork_swapped = swapped;
    std::vector<int> level = levels_from_blocks(flag_block_sizes(P.g().type, b));
    if (swapped) {
        const auto n = static_cast<std::size_t>(P.g().rank);
        std::swap(level[n - 1], level[n]);
    }
    fill_from_levels(P, level);
    return P;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::string to_string(LieType t) {
    switch (t) {
        case LieType::A: return "A";
        case LieType::B: return "B";
        case LieType::C: return "C";
        case LieType::D: return "D";
        default: return "G2";
    }
}

LieType parse_lie_type(const std::string& s) {
    const std::string u = upper(s);
    if (u == "A") return LieType::A;
    if (u == "B") return LieType::B;
    if (u == "C") return LieType::C;
    if (u == "D") return LieType::D;
    if (u == "G2" || u == "G") return LieType::G2;
    throw PreconditionError("type: unknown Lie type '" + s + "'");
}

std::string LieRealization::label() const {
    return type == LieType::G2 ? "G2" : to_string(type) + std::to_string(rank);
}

std::vector<Rational> LieRealization::root_of(const QMatrix& x) const {
    std::optional<Vec> root;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (x(i, j).is_zero()) {
                continue;
            }
            Vec r = i == j ? Vec(weights.front().size()) : weights[i] - weights[j];
            if (!root) {
                root = std::move(r);
            } else if (*root != r) {
                throw StructuralError("root_of: matrix is not a weight vector");
            }
        }
    }
    if (!root) {
        throw StructuralError("root_of: zero matrix");
    }
    return *root;
}

std::vector<Rational> LieRealization::simple_coordinates(const std::vector<Rational>& root) const {
    const SpanSolver solver(simple_roots);
    auto c = solver.coordinates(root);
    if (!c) {
        throw StructuralError("simple_coordinates: not in the root lattice span");
    }
    return *c;
}

std::size_t classical_dimension(LieType t, int rank) {
    const auto n = static_cast<std::size_t>(rank);
    switch (t) {
        case LieType::A: return n * (n + 2);
        case LieType::B:
        case LieType::C: return n * (2 * n + 1);
        case LieType::D: return n * (2 * n - 1);
        default: return 14;
    }
}

LieRealization build_algebra(LieType t, int rank) {
    switch (t) {
        case LieType::A:
            if (rank < 1) throw PreconditionError("rank: type A needs rank >= 1");
            return build_type_a(rank);
        case LieType::B:
        case LieType::C:
            if (rank < 1) throw PreconditionError("rank: types B and C need rank >= 1");
            return build_form_type(t, rank);
        case LieType::D:
            if (rank < 2) throw PreconditionError("rank: type D needs rank >= 2");
            return build_form_type(t, rank);
        default:
            if (rank != 2) throw PreconditionError("rank: G2 has rank 2");
            return build_g2();
    }
}

Rational three_form_value(const LieRealization& g, const std::vector<Rational>& a, const std::vector<Rational>& b,
                          const std::vector<Rational>& c) {
    Rational total;
    for (const auto& t : g.three_form) {
        const auto i = static_cast<std::size_t>(t.i);
        const auto j = static_cast<std::size_t>(t.j);
        const auto k = static_cast<std::size_t>(t.k);
        Rational det = a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
                       a[k] * (b[i] * c[j] - b[j] * c[i]);
        total += t.coeff * det;
    }
    return total;
}

std::vector<std::string> check_realization(const LieRealization& g) {
    std::vector<std::string> problems;
    if (g.dim() != classical_dimension(g.type, g.rank)) {
        problems.push_back("dimension " + std::to_string(g.dim()) + " differs from " +
                           std::to_string(classical_dimension(g.type, g.rank)));
    }
    const SpanSolver span(g.basis);
    if (span.rank() != g.dim()) {
        problems.push_back("basis is linearly dependent");
    }
    for (std::size_t a = 0; a < g.dim(); ++a) {
        for (std::size_t b = a + 1; b < g.dim(); ++b) {
            if (!span.contains(bracket(g.basis[a], g.basis[b]))) {
                problems.push_back("bracket of basis elements " + std::to_string(a) + "," + std::to_string(b) +
                                   " leaves the span");
                return problems;
            }
        }
    }
    for (std::size_t a = 0; a < g.dim(); ++a) {
        const auto& x = g.basis[a];
        if (!x.trace().is_zero()) {
            problems.push_back("basis element " + std::to_string(a) + " has nonzero trace");
        }
        if (g.form && !(x.transpose() * *g.form + *g.form * x).is_zero()) {
            problems.push_back("basis element " + std::to_string(a) + " does not preserve the form");
        }
        try {
            (void)g.root_of(x);
        } catch (const StructuralError&) {
            problems.push_back("basis element " + std::to_string(a) + " is not a weight vector");
        }
    }
    if (g.type == LieType::G2) {
        const auto t = three_tensor(g.three_form, g.matrix_size);
        const QMatrix sys = three_form_action_system(t, g.matrix_size);
        for (std::size_t a = 0; a < g.dim(); ++a) {
            const auto v = flatten(g.basis[a]);
            for (std::size_t r = 0; r < sys.rows(); ++r) {
                Rational acc;
                for (std::size_t c = 0; c < sys.cols(); ++c) {
                    if (!sys(r, c).is_zero() && !v[c].is_zero()) {
                        acc += sys(r, c) * v[c];
                    }
                }
                if (!acc.is_zero()) {
                    problems.push_back("basis element " + std::to_string(a) + " does not annihilate the 3-form");
                    break;
                }
            }
        }
    }
    return problems;
}

std::string to_string(G2Parabolic p) {
    switch (p) {
        case G2Parabolic::Borel: return "borel";
        case G2Parabolic::Line: return "line";
        default: return "plane";
    }
}

G2Parabolic parse_g2_parabolic(const std::string& s) {
    std::string l = s;
    for (auto& c : l) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (l == "borel") return G2Parabolic::Borel;
    if (l == "line" || l == "isotropic-line") return G2Parabolic::Line;
    if (l == "plane" || l == "isotropic-plane" || l == "phi-isotropic-plane") return G2Parabolic::Plane;
    throw PreconditionError("parabolic: expected borel, line or plane, got '" + s + "'");
}

std::string blocks_to_string(const BlockData& b, LieType t) {
    if (t == LieType::A) {
        return join(b.r);
    }
    return join(b.r) + ";" + std::to_string(b.s);
}

std::string ParabolicSpec::description() const {
    std::string s = g().label() + " ";
    if (g2) {
        return s + to_string(*g2);
    }
    s += "marked {" + join(marked) + "}";
    if (blocks) {
        s += " blocks (" + blocks_to_string(*blocks, g().type) + ")";
    }
    if (fork_swapped) {
        s += " [fork-swapped]";
    }
    return s;
}

std::vector<int> marked_from_blocks(LieType t, int rank, const BlockData& b) {
    validate_blocks(t, rank, b);
    std::vector<int> partial;
    int acc = 0;
    for (int x : b.r) {
        acc += x;
        partial.push_back(acc);
    }
    if (t == LieType::A) {
        partial.pop_back();
        return partial;
    }
    if (t == LieType::D && b.s == 1) {
        partial.push_back(rank);
    }
    return partial;
}

BlockData blocks_from_marked(LieType t, int rank, const std::vector<int>& marked_in, bool* swapped) {
    std::vector<int> marked = marked_in;
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    if (swapped) {
        *swapped = false;
    }
    BlockData b;
    auto diffs = [](const std::vector<int>& points) {
        std::vector<int> r;
        int prev = 0;
        for (int p : points) {
            r.push_back(p - prev);
            prev = p;
        }
        return r;
    };
    if (t == LieType::A) {
        std::vector<int> points = marked;
        points.push_back(rank + 1);
        b.r = diffs(points);
        return b;
    }
    if (t == LieType::B || t == LieType::C) {
        b.r = diffs(marked);
        b.s = rank - (marked.empty() ? 0 : marked.back());
        return b;
    }
    if (t != LieType::D) {
        throw PreconditionError("blocks: not available for G2");
    }
    const int n = rank;
    const bool a_last = std::find(marked.begin(), marked.end(), n) != marked.end();
    const bool a_prev = std::find(marked.begin(), marked.end(), n - 1) != marked.end();
    std::vector<int> others;
    for (int m : marked) {
        if (m < n - 1) {
            others.push_back(m);
        }
    }
    if (!a_last && !a_prev) {
        b.r = diffs(others);
        b.s = n - (others.empty() ? 0 : others.back());
    } else if (a_last && a_prev) {
        others.push_back(n - 1);
        b.r = diffs(others);
        b.s = 1;
    } else {
        others.push_back(n);
        b.r = diffs(others);
        b.s = 0;
        if (a_prev && swapped) {
            *swapped = true;
        }
    }
    return b;
}

ParabolicSpec parabolic_from_marked_roots(std::shared_ptr<const LieRealization> g, std::vector<int> marked) {
    ParabolicSpec P;
    P.algebra = std::move(g);
    P.marked = validated_marked(P.g(), std::move(marked));
    const auto& G = P.g();
    std::vector<int> degree;
    for (const auto& x : G.basis) {
        const auto coords = G.simple_coordinates(G.root_of(x));
        Rational d;
        for (int m : P.marked) {
            d += coords[static_cast<std::size_t>(m - 1)];
        }
        if (!d.is_integer()) {
            throw StructuralError("parabolic: non-integral root grading");
        }
        degree.push_back(static_cast<int>(d.numerator().get_si()));
    }
    for (std::size_t k = 0; k < G.basis.size(); ++k) {
        if (degree[k] >= 0) P.p.push_back(G.basis[k]);
        if (degree[k] > 0) P.n.push_back(G.basis[k]);
        if (degree[k] == 0) P.l.push_back(G.basis[k]);
    }
    if (G.type == LieType::G2) {
        if (P.marked == std::vector<int>{1}) P.g2 = G2Parabolic::Line;
        else if (P.marked == std::vector<int>{2}) P.g2 = G2Parabolic::Plane;
        else if (P.marked == std::vector<int>{1, 2}) P.g2 = G2Parabolic::Borel;
    } else {
        bool swapped = false;
        P.blocks = blocks_from_marked(G.type, G.rank, P.marked, &swapped);
        P.fork_swapped = swapped;
    }
    return P;
}

ParabolicSpec parabolic_from_blocks(std::shared_ptr<const LieRealization> g, const BlockData& blocks) {
    validate_blocks(g->type, g->rank, blocks);
    ParabolicSpec P = flag_parabolic(g, blocks, false);
    P.marked = marked_from_blocks(g->type, g->rank, blocks);
    return P;
}

ParabolicSpec g2_parabolic(std::shared_ptr<const LieRealization> g, G2Parabolic kind) {
    if (g->type != LieType::G2) {
        throw PreconditionError("parabolic: borel/line/plane apply to G2 only");
    }
    switch (kind) {
        case G2Parabolic::Line: return parabolic_from_marked_roots(std::move(g), {1});
        case G2Parabolic::Plane: return parabolic_from_marked_roots(std::move(g), {2});
        default: return parabolic_from_marked_roots(std::move(g), {1, 2});
    }
}

std::vector<int> ambient_flag_partition(const ParabolicSpec& P) {
    if (P.g().type == LieType::G2) {
        switch (P.g2.value_or(G2Parabolic::Borel)) {
            case G2Parabolic::Line: return {1, 2, 1, 2, 1};
            case G2Parabolic::Plane: return {2, 3, 2};
            default: return {1, 1, 1, 1, 1, 1, 1};
        }
    }
    return flag_block_sizes(P.g().type, P.blocks.value());
}

bool same_span(const std::vector<QMatrix>& a, const std::vector<QMatrix>& b) {
    const SpanSolver sa(a);
    const SpanSolver sb(b);
    if (sa.rank() != sb.rank()) {
        return false;
    }
    return std::all_of(a.begin(), a.end(), [&](const QMatrix& x) { return sb.contains(x); });
}

namespace {

bool stabilises(const std::vector<QMatrix>& algebra, const std::vector<Vec>& subspace) {
    const SpanSolver s(subspace);
    for (const auto& x : algebra) {
        for (const auto& v : subspace) {
            Vec xv(v.size());
            for (std::size_t i = 0; i < x.rows(); ++i) {
                for (std::size_t j = 0; j < x.cols(); ++j) {
                    if (!x(i, j).is_zero() && !v[j].is_zero()) {
                        xv[i] += x(i, j) * v[j];
                    }
                }
            }
            if (!s.contains(xv)) {
                return false;
            }
        }
    }
    return true;
}

bool isotropic(const QMatrix& J, const std::vector<Vec>& subspace) {
    for (const auto& a : subspace) {
        for (const auto& b : subspace) {
            Rational acc;
            for (std::size_t i = 0; i < J.rows(); ++i) {
                for (std::size_t j = 0; j < J.cols(); ++j) {
                    if (!J(i, j).is_zero() && !a[i].is_zero() && !b[j].is_zero()) {
                        acc += a[i] * J(i, j) * b[j];
                    }
                }
            }
            if (!acc.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

void check_g2_flags(const ParabolicSpec& P, std::vector<std::string>& problems) {
    const auto& G = P.g();
    const std::size_t N = G.matrix_size;
    const Vec e0 = unit(N, 0);
    const Vec e1 = unit(N, 1);
    const std::vector<Vec> F1{e0};
    const std::vector<Vec> F2{e0, e1};
    // F3 = { v : phi(v, e0, .) = 0 }
    QMatrix M(N, N);
    for (std::size_t c = 0; c < N; ++c) {
        for (std::size_t a = 0; a < N; ++a) {
            M(c, a) = three_form_value(G, unit(N, a), e0, unit(N, c));
        }
    }
    const auto F3 = nullspace(M);
    const auto& J = *G.form;
    if (F3.size() != 3) {
        problems.push_back("G2: {v : phi(v, e0, .) = 0} has dimension " + std::to_string(F3.size()));
    } else {
        if (!SpanSolver(F3).contains(e0)) problems.push_back("G2: F3 does not contain F1");
        if (!isotropic(J, F3)) problems.push_back("G2: F3 is not isotropic");
    }
    if (!isotropic(J, F1)) problems.push_back("G2: F1 is not isotropic");
    for (std::size_t c = 0; c < N; ++c) {
        if (!three_form_value(G, e0, e1, unit(N, c)).is_zero()) {
            problems.push_back("G2: span(e0, e1) is not phi-isotropic");
            break;
        }
    }
    if (!isotropic(J, F2)) problems.push_back("G2: F2 is not isotropic");
    const auto kind = P.g2.value_or(G2Parabolic::Borel);
    if (kind != G2Parabolic::Plane) {
        if (!stabilises(P.p, F1)) problems.push_back("G2: parabolic does not stabilise F1");
        if (F3.size() == 3 && !stabilises(P.p, F3)) problems.push_back("G2: parabolic does not stabilise F3");
    }
    if (kind != G2Parabolic::Line) {
        if (!stabilises(P.p, F2)) problems.push_back("G2: parabolic does not stabilise F2");
    }
    // maximality: the line parabolic must not stabilise F2, the plane one not F1
    if (kind == G2Parabolic::Line && stabilises(P.p, F2)) problems.push_back("G2: line parabolic stabilises F2");
    if (kind == G2Parabolic::Plane && stabilises(P.p, F1)) problems.push_back("G2: plane parabolic stabilises F1");
}

}  // namespace

std::vector<std::string> check_parabolic(const ParabolicSpec& P) {
    std::vector<std::string> problems;
    const auto& G = P.g();
    if (P.p.size() != P.l.size() + P.n.size()) {
        problems.push_back("dim p != dim l + dim n");
    }
    if (G.dim() != P.l.size() + 2 * P.n.size()) {
        problems.push_back("dim g != dim l + 2 dim n");
    }
    std::vector<QMatrix> ln = P.l;
    ln.insert(ln.end(), P.n.begin(), P.n.end());
    if (!same_span(ln, P.p)) {
        problems.push_back("p is not l + n");
    }
    const SpanSolver nspan(P.n);
    const SpanSolver pspan(P.p);
    for (const auto& x : P.p) {
        for (const auto& y : P.n) {
            if (!nspan.contains(bracket(x, y))) {
                problems.push_back("n is not an ideal of p");
                goto ideal_done;
            }
        }
        for (const auto& y : P.p) {
            if (!pspan.contains(bracket(x, y))) {
                problems.push_back("p is not closed under bracket");
                goto ideal_done;
            }
        }
    }
ideal_done:
    {
        std::mt19937_64 rng(12345);
        const QMatrix y = random_combination(P.n, G.matrix_size, rng, 5);
        QMatrix pw = QMatrix::identity(G.matrix_size);
        for (std::size_t k = 0; k < G.matrix_size; ++k) {
            pw = pw * y;
        }
        if (!pw.is_zero()) {
            problems.push_back("generic element of n is not nilpotent");
        }
    }
    if (P.blocks) {
        const auto& b = *P.blocks;
        if (G.form) {
            int dim = 0;
            for (int r : b.r) {
                dim += r;
                std::vector<Vec> F;
                for (int i = 0; i < dim; ++i) {
                    auto idx = static_cast<std::size_t>(i);
                    if (P.fork_swapped) {
                        const auto n = static_cast<std::size_t>(G.rank);
                        idx = idx == n - 1 ? n : (idx == n ? n - 1 : idx);
                    }
                    F.push_back(unit(G.matrix_size, idx));
                }
                if (!isotropic(*G.form, F)) {
                    problems.push_back("flag subspace of dimension " + std::to_string(dim) + " is not isotropic");
                }
                if (!stabilises(P.p, F)) {
                    problems.push_back("p does not stabilise the flag subspace of dimension " + std::to_string(dim));
                }
            }
        }
        const ParabolicSpec flag = flag_parabolic(P.algebra, b, P.fork_swapped);
        const ParabolicSpec roots = parabolic_from_marked_roots(P.algebra, P.marked);
        if (!same_span(flag.p, roots.p) || !same_span(flag.n, roots.n) || !same_span(flag.l, roots.l)) {
            problems.push_back("flag and marked-root descriptions disagree");
        }
    }
    if (G.type == LieType::G2) {
        check_g2_flags(P, problems);
    }
    return problems;
}

std::vector<ParabolicSpec> enumerate_parabolics(const std::shared_ptr<const LieRealization>& g,
                                                bool include_whole_algebra) {
    std::vector<ParabolicSpec> out;
    if (g->type == LieType::G2) {
        for (auto kind : {G2Parabolic::Borel, G2Parabolic::Line, G2Parabolic::Plane}) {
            out.push_back(g2_parabolic(g, kind));
        }
        return out;
    }
    const int r = g->rank;
    for (std::uint32_t mask = include_whole_algebra ? 0 : 1; mask < (1U << r); ++mask) {
        std::vector<int> marked;
        for (int i = 0; i < r; ++i) {
            if ((mask >> i) & 1U) {
                marked.push_back(i + 1);
            }
        }
        out.push_back(parabolic_from_marked_roots(g, marked));
    }
    return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(seed) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

QMatrix random_combination(const std::vector<QMatrix>& basis, std::size_t size, std::mt19937_64& rng, int bound) {
    QMatrix x(size, size);
    std::uniform_int_distribution<int> dist(-bound, bound);
    for (const auto& b : basis) {
        const int c = bound > 0 ? dist(rng) : 0;
        if (c == 0) {
            continue;
        }
        const Rational rc(c);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                if (!b(i, j).is_zero()) {
                    x(i, j) += rc * b(i, j);
                }
            }
        }
    }
    return x;
}

SeriesMatrix sample_pperp(const ParabolicSpec& P, int precision, std::mt19937_64& rng, int bound) {
    if (precision < 1) {
        throw PreconditionError("precision: N must be >= 1");
    }
    const std::size_t n = P.g().matrix_size;
    std::vector<QMatrix> layers;
    layers.reserve(static_cast<std::size_t>(precision) + 1);
    layers.push_back(random_combination(P.n, n, rng, bound));
    for (int k = 0; k < precision; ++k) {
        layers.push_back(random_combination(P.g().basis, n, rng, bound));
    }
    SeriesMatrix phi(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> coeffs;
            coeffs.reserve(layers.size());
            for (const auto& layer : layers) {
                coeffs.push_back(layer(i, j));
            }
            phi(i, j) = Series::from_coefficients(-1, std::move(coeffs), precision);
        }
    }
    return phi;
}

SeriesMatrix sample_pperp(const ParabolicSpec& P, int precision, std::uint64_t seed, int bound) {
    std::mt19937_64 rng(seed);
    return sample_pperp(P, precision, rng, bound);
}

}  // namespace hitchin
