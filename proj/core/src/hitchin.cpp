#include "hitchin/hitchin.hpp"

#include "hitchin/companion.hpp"
#include "hitchin/errors.hpp"
#include "hitchin/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace hitchin {

namespace {

// Runs body(i) for i in [0, count) on `threads` workers; rethrows the first exception.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next = count;
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

void check_in_span(const SpanSolver& span, const SeriesMatrix& phi, const char* what) {
    std::set<int> exponents;
    for (const auto& s : phi.data()) {
        for (const auto& [e, c] : s.terms()) {
            exponents.insert(e);
        }
    }
    for (int e : exponents) {
        QMatrix layer(phi.rows(), phi.cols());
        for (std::size_t i = 0; i < phi.rows(); ++i) {
            for (std::size_t j = 0; j < phi.cols(); ++j) {
                const Series& s = phi(i, j);
                if (e < s.precision()) {
                    layer(i, j) = s.coeff(e);
                }
            }
        }
        if (!span.contains(layer)) {
            throw StructuralError(std::string(what) + ": the t^" + std::to_string(e) +
                                  " coefficient is not in the span");
        }
    }
}

std::optional<int> known_value(const Valuation& v) {
    return v.is_known() ? std::optional<int>(v.value()) : std::nullopt;
}

struct TrialOutcome {
    Tribool verdict = Tribool::Unknown;
    int precision = 0;
    std::vector<Valuation> valuations;
    std::string detail;
    std::string phi;
    int square_checks = 0;
    int square_failures = 0;
    int vertex_checks = 0;
    int vertex_failures = 0;
};

}  // namespace

std::vector<std::string> generator_names(const LieRealization& g) {
    std::vector<std::string> names;
    const auto d = fundamental_degrees(g.type, g.rank);
    for (std::size_t i = 0; i < d.size(); ++i) {
        const bool pf = g.type == LieType::D && i + 1 == d.size();
        names.push_back((pf ? "p" : "c") + std::to_string(d[i]));
    }
    return names;
}

void require_in_algebra(const LieRealization& g, const SeriesMatrix& phi) {
    if (phi.rows() != g.matrix_size || phi.cols() != g.matrix_size) {
        throw StructuralError("chi: matrix size " + std::to_string(phi.rows()) + " does not match " + g.label());
    }
    check_in_span(SpanSolver(g.basis), phi, "chi: phi is not in g(K)");
}

std::vector<Valuation> ChiImage::valuations() const {
    std::vector<Valuation> v;
    v.reserve(values.size());
    for (const auto& s : values) {
        v.push_back(s.valuation());
    }
    return v;
}

ChiImage chi(const LieRealization& g, const SeriesMatrix& phi, bool check_membership) {
    if (check_membership) {
        require_in_algebra(g, phi);
    }
    ChiImage out;
    out.names = generator_names(g);
    const auto n = static_cast<std::size_t>(g.rank);
    switch (g.type) {
        case LieType::A: {
            auto c = char_poly_coeffs(phi);
            out.values.assign(c.begin() + 1, c.end());
            break;
        }
        case LieType::B:
        case LieType::C: {
            const auto c = char_poly_coeffs(phi, 2 * n);
            for (std::size_t j = 1; j <= n; ++j) {
                out.values.push_back(c[2 * j - 1]);
            }
            break;
        }
        case LieType::D: {
            const auto c = char_poly_coeffs(phi, 2 * n - 2);
            for (std::size_t j = 1; j < n; ++j) {
                out.values.push_back(c[2 * j - 1]);
            }
            out.values.push_back(pfaffian(to_series(*g.form) * phi));
            break;
        }
        case LieType::G2: {
            const auto c = char_poly_coeffs(phi, 6);
            out.values = {c[1], c[5]};
            break;
        }
    }
    return out;
}

std::vector<Series> weighted_action(const LieRealization& g, const std::vector<Series>& values, int k) {
    const auto d = fundamental_degrees(g.type, g.rank);
    if (values.size() != d.size()) {
        throw PreconditionError("weighted_action: expected " + std::to_string(d.size()) + " values");
    }
    std::vector<Series> out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        out.push_back(values[i].shifted(k * d[i]));
    }
    return out;
}

int default_precision(const LieRealization& g) {
    const auto d = fundamental_degrees(g.type, g.rank);
    return 2 * *std::max_element(d.begin(), d.end()) + 4;
}

unsigned default_threads() {
    if (const char* env = std::getenv("HITCHIN_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

CampaignReport verify_inclusion(const ParabolicSpec& P, const CampaignConfig& cfg,
                                const std::optional<std::vector<int>>& bounds_in) {
    const auto& G = P.g();
    if (cfg.trials < 0) {
        throw PreconditionError("trials: must be nonnegative");
    }
    CampaignReport rep;
    rep.parabolic = P.description();
    rep.precision = cfg.precision > 0 ? cfg.precision : default_precision(G);
    rep.trials = cfg.trials;
    const auto names = generator_names(G);
    const auto d = fundamental_degrees(G.type, G.rank);
    const bool good = is_good_parabolic(P).good;
    rep.mode = good ? "box" : "newton";

    std::optional<DegreeProfile> prof;
    std::vector<int> bounds;
    std::optional<NewtonPolygon> polygon;
    int sign = 1;
    if (good) {
        prof = predicted_image(P);
        bounds = bounds_in.value_or(prof->exponents);
        if (bounds.size() != d.size()) {
            throw PreconditionError("bounds: expected " + std::to_string(d.size()) + " values");
        }
    } else {
        if (bounds_in) {
            throw PreconditionError("bounds: not applicable to a bad type-D parabolic");
        }
        rep.delta = richardson_jordan_type(P, cfg.seed);
        polygon.emplace(*rep.delta);
        sign = pfaffian_sign(G);
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        CoordinateReport c;
        c.name = names[i];
        c.d = d[i];
        if (prof) {
            c.m = prof->m[i];
            c.bound = bounds[i];
        }
        rep.per_coordinate.push_back(std::move(c));
    }

    const SpanSolver nspan(P.n);
    const int mu = polygon ? polygon->parts() : 0;

    auto run_trial = [&](std::size_t index) {
        TrialOutcome out;
        const std::uint64_t seed = trial_seed(cfg.seed, index);
        for (int N = rep.precision; N <= rep.precision + cfg.max_extra_precision; N += 4) {
            const SeriesMatrix phi = sample_pperp(P, N, seed, cfg.bound);
            const ChiImage image = chi(G, phi, false);
            out = TrialOutcome{};
            out.precision = N;
            out.valuations = image.valuations();
            if (good) {
                out.verdict = Tribool::True;
                for (std::size_t i = 0; i < d.size(); ++i) {
                    const Tribool t = out.valuations[i].at_least_value(bounds[i]);
                    if (t == Tribool::False) {
                        out.detail += names[i] + " has valuation " + out.valuations[i].str() + " < " +
                                      std::to_string(bounds[i]) + "; ";
                    }
                    out.verdict = out.verdict && t;
                }
            } else {
                const auto point = weighted_action(G, image.values, 1);
                const CharPoly f = char_poly_from_point(point, sign);
                out.verdict = d_membership(f, *polygon);
                if (out.verdict == Tribool::False) {
                    out.detail = polygon_membership(f, *polygon) == Tribool::False
                                     ? "t . chi(phi) leaves the Newton polygon"
                                     : "an even edge polynomial is not a square";
                }
                for (const auto& ep : edge_polynomials(f, *polygon)) {
                    if (const auto qe = quadratic_edge(ep)) {
                        ++out.square_checks;
                        if (!qe->discriminant_vanishes()) {
                            ++out.square_failures;
                        }
                    }
                    if (ep.edge.pairs.back().second == 0 && mu % 2 == 0 && ep.q) {
                        const Series& pn = point.back();
                        if (mu / 2 < pn.precision()) {
                            ++out.vertex_checks;
                            const Rational w = pn.coeff(mu / 2);
                            Rational expect = w * w;
                            if (sign < 0) {
                                expect = -expect;
                            }
                            if (!(ep.q->coeff(0) == expect)) {
                                ++out.vertex_failures;
                            }
                        }
                    }
                }
            }
            if (out.verdict == Tribool::False) {
                out.phi = to_text(phi);
            }
            if (out.verdict != Tribool::Unknown) {
                break;
            }
        }
        // the residue must lie in n by construction
        if (out.verdict == Tribool::False) {
            const SeriesMatrix phi = sample_pperp(P, out.precision, seed, cfg.bound);
            QMatrix residue(phi.rows(), phi.cols());
            for (std::size_t i = 0; i < phi.rows(); ++i) {
                for (std::size_t j = 0; j < phi.cols(); ++j) {
                    residue(i, j) = phi(i, j).coeff(-1);
                }
            }
            if (!nspan.contains(residue)) {
                out.detail += "residue outside n; ";
            }
        }
        return out;
    };

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(cfg.trials));
    parallel_for(outcomes.size(), cfg.threads ? cfg.threads : default_threads(),
                 [&](std::size_t i) { outcomes[i] = run_trial(i); });

    rep.max_precision_used = rep.precision;
    for (std::size_t t = 0; t < outcomes.size(); ++t) {
        const auto& o = outcomes[t];
        rep.max_precision_used = std::max(rep.max_precision_used, o.precision);
        rep.square_checks += o.square_checks;
        rep.square_check_failures += o.square_failures;
        rep.pfaffian_vertex_checks += o.vertex_checks;
        rep.pfaffian_vertex_failures += o.vertex_failures;
        if (o.verdict == Tribool::True) {
            ++rep.passes;
        } else if (o.verdict == Tribool::Unknown) {
            ++rep.undecided;
        } else {
            rep.failures.push_back({t, trial_seed(cfg.seed, t), o.precision, o.detail, o.phi});
        }
        for (std::size_t i = 0; i < d.size(); ++i) {
            auto& c = rep.per_coordinate[i];
            if (const auto v = known_value(o.valuations[i])) {
                c.min_val_observed = c.min_val_observed ? std::min(*c.min_val_observed, *v) : *v;
            } else if (c.bound && o.valuations[i].at_least_value(*c.bound) == Tribool::Unknown) {
                ++c.undecided;
            }
        }
    }
    for (auto& c : rep.per_coordinate) {
        if (!c.bound) {
            c.status = rep.failures.empty() ? (rep.undecided ? "unknown" : "pass") : "fail";
        } else if (c.min_val_observed && *c.min_val_observed < *c.bound) {
            c.status = "fail";
        } else {
            c.status = c.undecided ? "unknown" : "pass";
        }
    }
    return rep;
}

bool WitnessReport::all_found() const noexcept {
    return std::all_of(coordinates.begin(), coordinates.end(), [](const WitnessCoordinate& c) { return c.found; });
}

WitnessReport witness_search(const ParabolicSpec& P, const std::optional<std::vector<int>>& targets_in,
                             const CampaignConfig& cfg, int budget) {
    const auto& G = P.g();
    if (!is_good_parabolic(P).good) {
        throw UnsupportedCase("witness: bad type-D parabolic; the image is not a box");
    }
    const auto prof = predicted_image(P);
    const auto targets = targets_in.value_or(prof.exponents);
    const auto names = generator_names(G);
    if (targets.size() != prof.exponents.size()) {
        throw PreconditionError("targets: expected " + std::to_string(prof.exponents.size()) + " values");
    }
    WitnessReport rep;
    rep.parabolic = P.description();
    rep.budget = budget;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < prof.exponents[i]) {
            throw PreconditionError("targets: " + names[i] + " target " + std::to_string(targets[i]) +
                                    " is below the predicted minimum " + std::to_string(prof.exponents[i]));
        }
        rep.coordinates.push_back({names[i], targets[i], false, std::nullopt, std::nullopt});
    }

    if (G.type == LieType::A) {
        rep.method = "companion";
        const auto plan = build_plan(P.blocks->r);
        const SeriesMatrix phi = sl_companion_witness(plan, targets);
        require_in_algebra(G, phi);
        QMatrix residue(phi.rows(), phi.cols());
        for (std::size_t i = 0; i < phi.rows(); ++i) {
            for (std::size_t j = 0; j < phi.cols(); ++j) {
                residue(i, j) = phi(i, j).coeff(-1);
            }
            for (std::size_t j = 0; j < phi.cols(); ++j) {
                if (phi(i, j).low_bound() < -1) {
                    throw StructuralError("witness: companion matrix has a pole of order > 1");
                }
            }
        }
        if (!SpanSolver(P.n).contains(residue)) {
            throw StructuralError("witness: companion residue is not in n");
        }
        const auto vals = chi(G, phi, false).valuations();
        for (std::size_t i = 0; i < vals.size(); ++i) {
            auto& c = rep.coordinates[i];
            c.valuation = known_value(vals[i]);
            c.found = c.valuation == c.target;
        }
        rep.phi = to_text(phi);
        return rep;
    }

    rep.method = "random";
    const int base = cfg.precision > 0 ? cfg.precision : default_precision(G);
    const int N = std::max(base, *std::max_element(targets.begin(), targets.end()) + 2 * G.rank + 8);
    for (int t = 0; t < budget && !rep.all_found(); ++t) {
        const auto index = static_cast<std::size_t>(t);
        const SeriesMatrix phi = sample_pperp(P, N, trial_seed(cfg.seed, index), cfg.bound);
        const auto vals = chi(G, phi, false).valuations();
        ++rep.samples_used;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            auto& c = rep.coordinates[i];
            if (!c.found && vals[i].is_known() && vals[i].value() == c.target) {
                c.found = true;
                c.trial = index;
                c.valuation = c.target;
            }
        }
    }
    return rep;
}

TracePowerReport trace_power_check(const ParabolicSpec& P, std::uint64_t seed, int budget, int bound) {
    const auto& G = P.g();
    if (G.type != LieType::A || G.rank != 3 || !P.blocks || P.blocks->r != std::vector<int>{3, 1}) {
        throw PreconditionError("trace-check: needs the sl_4 parabolic with blocks (3,1)");
    }
    TracePowerReport rep;
    const int N = 8;
    for (int t = 0; t < budget; ++t) {
        const SeriesMatrix A = sample_pperp(P, N, trial_seed(seed, static_cast<std::uint64_t>(t)), bound);
        ++rep.samples;
        const SeriesMatrix A2 = A * A;
        const Series tr = (A2 * A2).trace();
        const auto vals = chi(G, A, false).valuations();
        const auto vt = tr.valuation();
        bool ok = vt.is_known() && vt.value() == -2;
        for (const auto& v : vals) {
            ok = ok && v.at_least_value(-1) == Tribool::True;
        }
        if (ok) {
            rep.found = true;
            rep.val_trace_a4 = vt.value();
            for (const auto& v : vals) {
                rep.val_c.push_back(known_value(v));
            }
            rep.phi = to_text(A);
            break;
        }
    }
    return rep;
}

}  // namespace hitchin
