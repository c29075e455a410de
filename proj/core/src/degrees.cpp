#include "hitchin/degrees.hpp"

#include "hitchin/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hitchin {

Partition Partition::from(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) {
            throw PreconditionError("partition: negative part " + std::to_string(p));
        }
    }
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition{std::move(parts)};
}

int Partition::size() const noexcept {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    const int top = parts.empty() ? 0 : parts.front();
    for (int k = 1; k <= top; ++k) {
        c.push_back(static_cast<int>(std::count_if(parts.begin(), parts.end(), [k](int p) { return p >= k; })));
    }
    return Partition{std::move(c)};
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        s += (i ? "," : "") + std::to_string(p.parts[i]);
    }
    return s + ")";
}

std::vector<int> fundamental_degrees(LieType t, int rank) {
    std::vector<int> d;
    switch (t) {
        case LieType::A:
            for (int k = 2; k <= rank + 1; ++k) d.push_back(k);
            break;
        case LieType::B:
        case LieType::C:
            for (int k = 1; k <= rank; ++k) d.push_back(2 * k);
            break;
        case LieType::D:
            for (int k = 1; k < rank; ++k) d.push_back(2 * k);
            d.push_back(rank);
            break;
        case LieType::G2:
            if (rank != 2) throw PreconditionError("rank: G2 has rank 2");
            d = {2, 6};
            break;
    }
    return d;
}

std::vector<LeviFactor> levi_factors(const ParabolicSpec& P) {
    const auto t = P.g().type;
    if (t == LieType::G2 || !P.blocks) {
        throw PreconditionError("levi_factors: needs flag block data (classical types)");
    }
    std::vector<LeviFactor> out;
    for (int r : P.blocks->r) {
        out.push_back({LeviFactorKind::GL, r});
    }
    const int s = P.blocks->s;
    if (t != LieType::A && s > 0) {
        const auto kind = t == LieType::B ? LeviFactorKind::SO_ODD
                        : t == LieType::C ? LeviFactorKind::SP
                                          : LeviFactorKind::SO_EVEN;
        out.push_back({kind, s});
    }
    return out;
}

namespace {

std::vector<int> factor_degrees(const LeviFactor& f) {
    std::vector<int> d;
    switch (f.kind) {
        case LeviFactorKind::GL:
            for (int k = 1; k <= f.size; ++k) d.push_back(k);
            break;
        case LeviFactorKind::SO_ODD:
        case LeviFactorKind::SP:
            for (int k = 1; k <= f.size; ++k) d.push_back(2 * k);
            break;
        case LeviFactorKind::SO_EVEN:
            if (f.size == 1) {
                d.push_back(1);  // so_2 is abelian
            } else {
                for (int k = 1; k < f.size; ++k) d.push_back(2 * k);
                d.push_back(f.size);
            }
            break;
    }
    return d;
}

}  // namespace

std::vector<int> levi_degrees(const ParabolicSpec& P) {
    if (P.g().type == LieType::G2) {
        if (P.g2 == G2Parabolic::Borel) return {1, 1};
        return {1, 2};
    }
    std::vector<int> m;
    for (const auto& f : levi_factors(P)) {
        const auto d = factor_degrees(f);
        m.insert(m.end(), d.begin(), d.end());
    }
    std::sort(m.begin(), m.end());
    if (P.g().type == LieType::A) {
        m.erase(m.begin());
    }
    return m;
}

std::vector<int> gl_m_sequence(const std::vector<int>& blocks) {
    const Partition delta = Partition::from(blocks).conjugate();
    std::vector<int> m;
    for (std::size_t k = 0; k < delta.parts.size(); ++k) {
        m.insert(m.end(), static_cast<std::size_t>(delta.parts[k]), static_cast<int>(k + 1));
    }
    return m;
}

std::vector<int> interleaved_ambient_degrees(const ParabolicSpec& P) {
    const auto ambient = gl_m_sequence(ambient_flag_partition(P));
    std::vector<int> out;
    for (int i = 1; i <= P.g().rank; ++i) {
        const auto idx = static_cast<std::size_t>(2 * i - 1);
        if (idx < ambient.size()) {
            out.push_back(ambient[idx]);
        }
    }
    return out;
}

GoodReport is_good_parabolic(const ParabolicSpec& P) {
    GoodReport rep;
    if (P.g().type != LieType::D) {
        return rep;
    }
    const auto& b = P.blocks.value();
    rep.lhs = 2 * b.s;
    rep.rhs = 4;
    for (int r : b.r) {
        rep.rhs = std::max(rep.rhs, r);
    }
    rep.good = rep.lhs >= rep.rhs;
    if (!rep.good) {
        rep.reason = "2s = " + std::to_string(rep.lhs) + " < max(r_1, .., r_k, 4) = " + std::to_string(rep.rhs);
    }
    return rep;
}

DegreeProfile predicted_image(const ParabolicSpec& P) {
    const auto& G = P.g();
    DegreeProfile prof;
    prof.d = fundamental_degrees(G.type, G.rank);
    auto m = levi_degrees(P);
    if (G.type == LieType::D) {
        const auto good = is_good_parabolic(P);
        if (!good.good) {
            throw UnsupportedCase("bad type-D parabolic (" + good.reason +
                                  "): use the Newton-polygon description");
        }
        const int s = P.blocks->s;
        m.erase(std::find(m.begin(), m.end(), s));
        m.push_back(s);
    }
    if (m.size() != prof.d.size()) {
        throw StructuralError("predicted_image: " + std::to_string(m.size()) + " Levi degrees for rank " +
                              std::to_string(G.rank));
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 1 || m[i] > prof.d[i]) {
            throw StructuralError("predicted_image: m_" + std::to_string(i + 1) + " = " + std::to_string(m[i]) +
                                  " outside [1, d_i = " + std::to_string(prof.d[i]) + "]");
        }
        prof.exponents.push_back(m[i] - prof.d[i]);
    }
    prof.m = std::move(m);
    return prof;
}

std::vector<std::pair<int, int>> cells(const std::vector<int>& js) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < js.size(); ++a) {
        if (js[a] < 0) {
            throw PreconditionError("cells: negative j");
        }
        for (int b = 1; b <= js[a]; ++b) {
            out.emplace_back(static_cast<int>(a + 1), b);
        }
    }
    return out;
}

int count_decreases(const std::vector<int>& js, const std::vector<std::size_t>& sigma) {
    const auto S = cells(js);
    if (sigma.size() != S.size()) {
        throw PreconditionError("count_decreases: permutation has the wrong length");
    }
    std::vector<bool> seen(S.size(), false);
    int dec = 0;
    for (std::size_t u = 0; u < S.size(); ++u) {
        if (sigma[u] >= S.size() || seen[sigma[u]]) {
            throw PreconditionError("count_decreases: not a permutation");
        }
        seen[sigma[u]] = true;
        if (S[sigma[u]].first < S[u].first) {
            ++dec;
        }
    }
    return dec;
}

int lambda_of(const std::vector<int>& js) {
    if (js.empty()) {
        return 0;
    }
    const auto S = cells(js);
    return static_cast<int>(S.size()) - *std::max_element(js.begin(), js.end());
}

int lambda_brute_force(const std::vector<int>& js) {
    const auto S = cells(js);
    if (S.size() > 9) {
        throw PreconditionError("lambda_brute_force: more than 9 cells");
    }
    std::vector<std::size_t> sigma(S.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    int best = 0;
    do {
        best = std::max(best, count_decreases(js, sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

int mu_of(int r, const std::vector<int>& blocks) {
    const auto m = gl_m_sequence(blocks);
    if (r < 1 || r > static_cast<int>(m.size())) {
        throw PreconditionError("mu_of: r outside 1..n");
    }
    return r - m[static_cast<std::size_t>(r - 1)];
}

int mu_brute_force(int r, const std::vector<int>& blocks) {
    const int n = std::accumulate(blocks.begin(), blocks.end(), 0);
    if (r < 0 || r > n) {
        throw PreconditionError("mu_brute_force: r outside 0..n");
    }
    std::vector<int> js(blocks.size(), 0);
    int best = -1;
    auto rec = [&](auto&& self, std::size_t a, int left) -> void {
        if (a == blocks.size()) {
            if (left == 0) {
                best = std::max(best, lambda_of(js));
            }
            return;
        }
        for (int j = 0; j <= std::min(blocks[a], left); ++j) {
            js[a] = j;
            self(self, a + 1, left - j);
        }
        js[a] = 0;
    };
    rec(rec, 0, r);
    return best;
}

DimensionAudit dimension_audit(const ParabolicSpec& P, int genus) {
    if (genus < 2) {
        throw PreconditionError("genus: must be >= 2");
    }
    const auto prof = predicted_image(P);
    DimensionAudit a;
    a.genus = genus;
    a.dim_g = static_cast<std::int64_t>(P.g().dim());
    a.dim_n = static_cast<std::int64_t>(P.dim_n());
    for (std::size_t i = 0; i < prof.d.size(); ++i) {
        a.sum_2d_minus_1 += 2 * prof.d[i] - 1;
        a.lhs += static_cast<std::int64_t>(2 * prof.d[i] - 1) * (genus - 1) + (prof.d[i] - prof.m[i]);
    }
    a.rhs = a.dim_g * (genus - 1) + a.dim_n;
    return a;
}

}  // namespace hitchin
