// One PASS/FAIL line per acceptance criterion; exit status 1 if any criterion fails.

#include "hitchin/companion.hpp"
#include "hitchin/degrees.hpp"
#include "hitchin/errors.hpp"
#include "hitchin/hitchin.hpp"
#include "hitchin/linalg.hpp"
#include "hitchin/type_d.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

using namespace hitchin;

namespace {

// Pinned budgets and limits. All comparisons are exact; only runtimes have tolerances.
constexpr double kLimit1Seconds = 5.0;
constexpr double kLimit2Seconds = 30.0;
constexpr double kLimit3Seconds = 60.0;
constexpr int kTrials1 = 500;
constexpr int kCompanionMaxN = 7;
constexpr int kCompanionTuples = 20;
constexpr int kDecreaseMaxSum = 7;
constexpr int kVanishingMaxN = 5;
constexpr int kVanishingTuples = 1000;
constexpr int kInterleavingMaxRank = 6;
constexpr int kTrials6 = 200;
constexpr int kWitnessBudget = 1000;
constexpr int kTrials7 = 200;
constexpr int kIdentitiesMaxRank = 6;
constexpr int kAuditMaxRank = 5;
constexpr int kTraceBudget = 1000;
constexpr int kLibraryInstances = 100;
constexpr std::size_t kPfaffianMaxSize = 10;
constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
    bool pass = true;
    std::string detail;
};

std::shared_ptr<const LieRealization> algebra(LieType t, int rank) {
    return std::make_shared<const LieRealization>(build_algebra(t, rank));
}

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        return {{}};
    }
    for (int first = 1; first <= n; ++first) {
        for (auto rest : compositions(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

CampaignConfig campaign(int trials, std::uint64_t seed) {
    CampaignConfig c;
    c.trials = trials;
    c.seed = seed;
    return c;
}

Verdict criterion1() {
    Verdict v;
    const auto P = parabolic_from_blocks(algebra(LieType::A, 3), BlockData{{3, 1}, 0});
    const auto prof = predicted_image(P);
    const auto rep = verify_inclusion(P, campaign(kTrials1, kSeed));
    const auto w = witness_search(P, std::nullopt, campaign(0, kSeed), 1);
    v.pass = prof.exponents == std::vector<int>{-1, -1, -1} && rep.failures.empty() && rep.undecided == 0 &&
             rep.passes == kTrials1 && w.method == "companion" && w.all_found();
    for (const auto& c : w.coordinates) {
        v.pass = v.pass && c.valuation == -1;
    }
    v.detail = "exponents " + join(prof.exponents) + ", " + std::to_string(rep.passes) + "/" +
               std::to_string(kTrials1) + " trials pass, " + std::to_string(rep.failures.size()) +
               " failures, companion witness " + (w.all_found() ? "attains" : "misses") + " every minimum";
    return v;
}

Verdict criterion2() {
    Verdict v;
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    int checked = 0;
    int bad = 0;
    for (int n = 1; n <= kCompanionMaxN; ++n) {
        std::optional<SpanSolver> nspan;
        for (const auto& blocks : compositions(n)) {
            const auto plan = build_plan(blocks);
            const auto m = gl_m_sequence(blocks);
            if (n >= 2) {
                nspan.emplace(parabolic_from_blocks(algebra(LieType::A, n - 1), BlockData{blocks, 0}).n);
            }
            for (int t = 0; t < kCompanionTuples; ++t) {
                std::vector<Series> f;
                for (int j = 0; j < n; ++j) {
                    f.push_back(Series::from_coefficients(0, {Rational(coeff(rng)), Rational(coeff(rng)), Rational(coeff(rng))}));
                }
                const SeriesMatrix A = companion_matrix(plan, f);
                const auto c = char_poly_coeffs(shifted(A, 1));
                bool ok = low_bound(A) >= -1 && (!nspan || nspan->contains(coefficient(A, -1)));
                for (int j = 1; j <= n; ++j) {
                    const auto jj = static_cast<std::size_t>(j - 1);
                    ok = ok && c[jj] == f[jj].shifted(m[jj]);
                }
                ++checked;
                bad += ok ? 0 : 1;
            }
        }
    }
    v.pass = bad == 0 && checked == ((1 << kCompanionMaxN) - 1) * kCompanionTuples;
    v.detail = std::to_string(checked) + " companion matrices over all compositions of n <= 7, " +
               std::to_string(bad) + " mismatches";
    return v;
}

Verdict criterion3() {
    Verdict v;
    std::map<std::vector<int>, int> brute;
    auto lambda_brute = [&](std::vector<int> js) {
        js.erase(std::remove(js.begin(), js.end(), 0), js.end());
        auto it = brute.find(js);
        if (it == brute.end()) {
            it = brute.emplace(js, lambda_brute_force(js)).first;
        }
        return it->second;
    };
    int lambda_checked = 0;
    int lambda_bad = 0;
    for (int s = 1; s <= kDecreaseMaxSum; ++s) {
        for (const auto& js : compositions(s)) {
            ++lambda_checked;
            lambda_bad += lambda_of(js) == lambda_brute(js) ? 0 : 1;
        }
    }
    int mu_checked = 0;
    int mu_bad = 0;
    for (int n = 1; n <= kDecreaseMaxSum; ++n) {
        for (const auto& blocks : compositions(n)) {
            for (int r = 1; r <= n; ++r) {
                // maximum over (j_1, .., j_k), 0 <= j_a <= n_a, sum r, of the permutation brute force
                int best = -1;
                std::vector<int> js(blocks.size(), 0);
                std::function<void(std::size_t, int)> rec = [&](std::size_t a, int left) {
                    if (a == blocks.size()) {
                        if (left == 0) {
                            best = std::max(best, lambda_brute(js));
                        }
                        return;
                    }
                    for (int j = 0; j <= std::min(blocks[a], left); ++j) {
                        js[a] = j;
                        rec(a + 1, left - j);
                    }
                    js[a] = 0;
                };
                rec(0, r);
                ++mu_checked;
                mu_bad += mu_of(r, blocks) == best ? 0 : 1;
            }
        }
    }
    v.pass = lambda_bad == 0 && mu_bad == 0;
    v.detail = "lambda: " + std::to_string(lambda_checked) + " tuples, " + std::to_string(lambda_bad) +
               " mismatches; mu: " + std::to_string(mu_checked) + " (blocks, r) pairs, " + std::to_string(mu_bad) +
               " mismatches";
    return v;
}

Verdict criterion4() {
    Verdict v;
    std::mt19937_64 rng(kSeed);
    int parabolics = 0;
    int tuples = 0;
    int nonzero = 0;
    int sharp_nonzero = 0;  // one argument fewer in n: expected to be nonzero sometimes
    for (int n = 2; n <= kVanishingMaxN; ++n) {
        const auto g = algebra(LieType::A, n - 1);
        for (const auto& blocks : compositions(n)) {
            const auto P = parabolic_from_blocks(g, BlockData{blocks, 0});
            const auto m = gl_m_sequence(blocks);
            ++parabolics;
            for (int t = 0; t < kVanishingTuples; ++t) {
                const int j = 1 + t % n;
                const int need = j + 1 - m[static_cast<std::size_t>(j - 1)];
                std::uniform_int_distribution<int> pick(need, j);
                const int in_n = pick(rng);
                std::vector<QMatrix> xs;
                for (int u = 0; u < j; ++u) {
                    xs.push_back(u < in_n ? random_combination(P.n, static_cast<std::size_t>(n), rng, 3)
                                          : oracle::random_matrix(static_cast<std::size_t>(n), rng, 3));
                }
                std::shuffle(xs.begin(), xs.end(), rng);
                ++tuples;
                nonzero += polarized_invariant(static_cast<std::size_t>(j), xs).is_zero() ? 0 : 1;
                if (need >= 1 && t % 10 == 0) {
                    std::vector<QMatrix> ys;
                    for (int u = 0; u < j; ++u) {
                        ys.push_back(u < need - 1 ? random_combination(P.n, static_cast<std::size_t>(n), rng, 3)
                                                  : oracle::random_matrix(static_cast<std::size_t>(n), rng, 3));
                    }
                    sharp_nonzero += polarized_invariant(static_cast<std::size_t>(j), ys).is_zero() ? 0 : 1;
                }
            }
        }
    }
    v.pass = nonzero == 0 && tuples == parabolics * kVanishingTuples;
    v.detail = std::to_string(parabolics) + " parabolics, " + std::to_string(tuples) + " tuples, " +
               std::to_string(nonzero) + " nonvanishing; control with one fewer argument in n: " +
               std::to_string(sharp_nonzero) + " nonzero";
    return v;
}

Verdict criterion5() {
    Verdict v;
    int count = 0;
    int bad = 0;
    for (LieType t : {LieType::B, LieType::C}) {
        for (int rank = 1; rank <= kInterleavingMaxRank; ++rank) {
            for (const auto& P : enumerate_parabolics(algebra(t, rank))) {
                ++count;
                bad += predicted_image(P).m == interleaved_ambient_degrees(P) ? 0 : 1;
            }
        }
    }
    v.pass = bad == 0 && count == 2 * ((1 << (kInterleavingMaxRank + 1)) - 2 - kInterleavingMaxRank);
    v.detail = std::to_string(count) + " B/C parabolics, " + std::to_string(bad) + " mismatches";
    return v;
}

Verdict criterion6() {
    Verdict v;
    const auto g = algebra(LieType::G2, 2);
    const std::vector<int> bounds{-1, -5};
    std::ostringstream d;
    const char* sep = "";
    for (auto kind : {G2Parabolic::Line, G2Parabolic::Plane, G2Parabolic::Borel}) {
        const auto P = g2_parabolic(g, kind);
        const auto rep = verify_inclusion(P, campaign(kTrials6, kSeed), bounds);
        const auto prof = predicted_image(P);
        const auto w = witness_search(P, std::nullopt, campaign(0, kSeed), kWitnessBudget);
        const bool ok = rep.failures.empty() && rep.undecided == 0 && rep.passes == kTrials6 && w.all_found() &&
                        w.coordinates[0].target == -1;
        v.pass = v.pass && ok;
        d << sep << to_string(kind) << ": " << rep.passes << "/" << kTrials6 << " within (-1,-5), min val (c2,c6) = ("
          << rep.per_coordinate[0].min_val_observed.value_or(99) << ","
          << rep.per_coordinate[1].min_val_observed.value_or(99) << "), witness c2=" << w.coordinates[0].target
          << (w.coordinates[0].found ? " found" : " missing") << " c6=" << prof.exponents[1]
          << (w.coordinates[1].found ? " found" : " missing");
        sep = "; ";
    }
    v.detail = d.str();
    return v;
}

Verdict criterion7() {
    Verdict v;
    const auto P = parabolic_from_marked_roots(algebra(LieType::D, 5), {4, 5});
    const Partition delta = richardson_jordan_type(P);
    const NewtonPolygon polygon(delta);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : polygon.even_edges()) {
        pairs.insert(pairs.end(), e.pairs.begin(), e.pairs.end());
    }
    const auto rep = verify_inclusion(P, campaign(kTrials7, kSeed));
    const auto comp = component_analysis(delta);
    const bool delta_ok = delta.parts == std::vector<int>{3, 3, 2, 2};
    const bool pairs_ok = pairs == std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {4, 0}};
    const bool samples_ok = rep.mode == "newton" && rep.passes == kTrials7 && rep.failures.empty() &&
                            rep.square_checks == kTrials7 && rep.square_check_failures == 0 &&
                            rep.pfaffian_vertex_checks == kTrials7 && rep.pfaffian_vertex_failures == 0;
    const bool comp_ok = comp.components == 1 && comp.singular;
    v.pass = delta_ok && pairs_ok && samples_ok && comp_ok;
    v.detail = "delta " + to_string(delta) + ", relevant pairs " + (pairs_ok ? "(2,4),(3,2),(4,0)" : "WRONG") + ", " +
               std::to_string(rep.passes) + "/" + std::to_string(kTrials7) + " in d, y^2=4xz " +
               std::to_string(rep.square_checks - rep.square_check_failures) + "/" + std::to_string(rep.square_checks) +
               ", z=sign*w^2 " +
               std::to_string(rep.pfaffian_vertex_checks - rep.pfaffian_vertex_failures) + "/" +
               std::to_string(rep.pfaffian_vertex_checks) + ", components " + std::to_string(comp.components) +
               (comp.singular ? " singular" : " smooth");
    return v;
}

Verdict criterion8() {
    Verdict v;
    int count = 0;
    int bad = 0;
    for (int rank = 2; rank <= kIdentitiesMaxRank; ++rank) {
        for (const auto& P : enumerate_parabolics(algebra(LieType::D, rank))) {
            ++count;
            const auto r = codim_report(P);
            // Levi of the flag: gl_{r_i} blocks and so_{2s}; compared with the constructed basis
            int levi = P.blocks->s * (2 * P.blocks->s - 1);
            for (int b : P.blocks->r) {
                levi += b * b;
            }
            const bool ok = r.ok() && r.dim_l == levi && r.dim_l == static_cast<int>(P.dim_l()) &&
                            2 * r.dim_n + r.dim_l == static_cast<int>(P.g().dim());
            bad += ok ? 0 : 1;
            if (!ok) {
                v.detail += P.description() + " fails; ";
            }
        }
    }
    const auto ex = codim_report(parabolic_from_marked_roots(algebra(LieType::D, 5), {4, 5}));
    const bool example_ok = ex.sum_m == 10 && ex.n * ex.n - ex.dim_n - ex.n_ev == 10 && ex.dim_n == 14 && ex.n_ev == 1;
    v.pass = bad == 0 && example_ok;
    v.detail += std::to_string(count) + " D parabolics, " + std::to_string(bad) + " failing; D5 {4,5}: sum m = " +
                std::to_string(ex.sum_m) + " = 25 - " + std::to_string(ex.dim_n) + " - " + std::to_string(ex.n_ev);
    return v;
}

Verdict criterion9() {
    Verdict v;
    int count = 0;
    int skipped = 0;
    int bad = 0;
    std::vector<std::shared_ptr<const LieRealization>> algebras{algebra(LieType::G2, 2)};
    for (int rank = 1; rank <= kAuditMaxRank; ++rank) {
        algebras.push_back(algebra(LieType::A, rank));
        algebras.push_back(algebra(LieType::B, rank));
        algebras.push_back(algebra(LieType::C, rank));
        if (rank >= 2) {
            algebras.push_back(algebra(LieType::D, rank));
        }
    }
    for (const auto& g : algebras) {
        for (const auto& P : enumerate_parabolics(g)) {
            if (!is_good_parabolic(P).good) {
                ++skipped;
                continue;
            }
            for (int genus : {2, 3}) {
                ++count;
                bad += dimension_audit(P, genus).ok() ? 0 : 1;
            }
        }
    }
    v.pass = bad == 0;
    v.detail = std::to_string(count) + " (parabolic, genus) audits, " + std::to_string(bad) + " failing; " +
               std::to_string(skipped) + " bad type-D parabolics outside the box description skipped";
    return v;
}

Verdict criterion10() {
    Verdict v;
    const auto P = parabolic_from_blocks(algebra(LieType::A, 3), BlockData{{3, 1}, 0});
    const auto r = trace_power_check(P, kSeed, kTraceBudget);
    bool cs = true;
    for (const auto& c : r.val_c) {
        cs = cs && (!c || *c >= -1);
    }
    v.pass = r.found && r.val_trace_a4 == -2 && cs;
    v.detail = r.found ? "val tr(A^4) = -2 with val(c_j) >= -1 after " + std::to_string(r.samples) + " samples"
                       : "no witness in " + std::to_string(kTraceBudget) + " samples";
    return v;
}

Verdict criterion11() {
    Verdict v;
    std::mt19937_64 rng(kSeed);
    int pf_bad = 0;
    int pol_bad = 0;
    int conj_bad = 0;
    for (int i = 0; i < kLibraryInstances; ++i) {
        const std::size_t size = 2 + 2 * static_cast<std::size_t>(i % (kPfaffianMaxSize / 2));
        const QMatrix a = oracle::random_skew(size, rng, 4);
        const Rational pf = pfaffian(a);
        pf_bad += pf * pf == determinant(a) ? 0 : 1;
    }
    for (int i = 0; i < kLibraryInstances; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
        const QMatrix x = oracle::random_matrix(n, rng, 4);
        const auto c = char_poly_coeffs(x);
        for (std::size_t j = 1; j <= n; ++j) {
            pol_bad += polarized_invariant(j, std::vector<QMatrix>(j, x)) == c[j - 1] ? 0 : 1;
        }
    }
    for (int i = 0; i < kLibraryInstances; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
        const QMatrix x = oracle::random_matrix(n, rng, 4);
        QMatrix h = oracle::random_matrix(n, rng, 4);
        while (determinant(h).is_zero()) {
            h = oracle::random_matrix(n, rng, 4);
        }
        conj_bad += char_poly_coeffs(h * x * inverse(h)) == char_poly_coeffs(x) ? 0 : 1;
        // Pf(h a h^T) = det(h) Pf(a) for skew a
        const QMatrix a = oracle::random_skew(2 * (n / 2 + 1), rng, 4);
        const QMatrix k = oracle::random_matrix(a.rows(), rng, 3);
        conj_bad += pfaffian(k * a * k.transpose()) == determinant(k) * pfaffian(a) ? 0 : 1;
    }
    v.pass = pf_bad == 0 && pol_bad == 0 && conj_bad == 0;
    v.detail = "Pf^2 = det: " + std::to_string(pf_bad) + " mismatches (sizes 2..10); polarization diagonal: " +
               std::to_string(pol_bad) + "; conjugation invariance: " + std::to_string(conj_bad);
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;  // 0: no runtime criterion
        Verdict (*run)();
    };
    const std::vector<Criterion> criteria{
        {1, "sl4 (3,1) example", kLimit1Seconds, criterion1},
        {2, "companion identity", kLimit2Seconds, criterion2},
        {3, "decrease counts", kLimit3Seconds, criterion3},
        {4, "polarized vanishing", 0, criterion4},
        {5, "B/C interleaving", 0, criterion5},
        {6, "G2 parabolics", 0, criterion6},
        {7, "D5 bad parabolic", 0, criterion7},
        {8, "type-D identities", 0, criterion8},
        {9, "dimension audit", 0, criterion9},
        {10, "tr(A^4) remark", 0, criterion10},
        {11, "library identities", 0, criterion11},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream timing;
        timing.setf(std::ios::fixed);
        timing.precision(2);
        timing << secs << "s";
        if (c.limit_seconds > 0) {
            timing << " < " << c.limit_seconds << "s";
            if (secs >= c.limit_seconds) {
                v.pass = false;
                v.detail += "; runtime limit exceeded";
            }
        }
        failed += v.pass ? 0 : 1;
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << " [" << c.name << "] " << v.detail << " ["
                  << timing.str() << "]" << std::endl;
    }
    std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
    return failed == 0 ? 0 : 1;
}
