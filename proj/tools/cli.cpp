#include "cli.hpp"

#include "hitchin/errors.hpp"
#include "hitchin/hitchin.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace hitchin::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    std::string type;
    int rank = 0;
    std::string blocks;
    std::string marked;
    std::string g2;
    int precision = 0;
    int trials = 100;
    std::uint64_t seed = 1;
    int bound = 10;
    int genus = 2;
    int budget = 1000;
    unsigned threads = 0;
    std::string targets;
    std::string bounds;
    std::string output;
    std::string format = "json";
    std::string svg;

    // which optional flags were given
    bool has_rank = false;
    bool has_blocks = false;
    bool has_marked = false;
    bool has_g2 = false;
    bool has_targets = false;
    bool has_bounds = false;
};

struct Outcome {
    Json report;
    int status = kPass;
    std::string svg;  // newton only
};

std::vector<int> parse_int_list(const std::string& text, const std::string& field) {
    std::vector<int> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw PreconditionError(field + ": '" + item + "' is not an integer");
        }
        if (used != item.size()) {
            throw PreconditionError(field + ": '" + item + "' is not an integer");
        }
        out.push_back(v);
    }
    return out;
}

BlockData parse_blocks(const std::string& text, LieType t) {
    BlockData b;
    const auto semi = text.find(';');
    if (t == LieType::A) {
        if (semi != std::string::npos) {
            throw PreconditionError("blocks: type A takes n1,..,nk without ';s'");
        }
        b.r = parse_int_list(text, "blocks");
        return b;
    }
    if (semi == std::string::npos) {
        throw PreconditionError("blocks: type " + to_string(t) + " takes r1,..,rk;s");
    }
    b.r = parse_int_list(text.substr(0, semi), "blocks");
    const auto s = parse_int_list(text.substr(semi + 1), "blocks");
    if (s.size() != 1) {
        throw PreconditionError("blocks: expected a single s after ';'");
    }
    b.s = s[0];
    return b;
}

ParabolicSpec build_parabolic(const RunConfig& c) {
    const LieType t = parse_lie_type(c.type);
    int rank = c.rank;
    if (t == LieType::G2) {
        if (c.has_rank && c.rank != 2) {
            throw PreconditionError("rank: G2 has rank 2");
        }
        rank = 2;
    } else if (!c.has_rank) {
        throw PreconditionError("rank: required for type " + to_string(t));
    }
    const int given = static_cast<int>(c.has_blocks) + static_cast<int>(c.has_marked) + static_cast<int>(c.has_g2);
    if (given != 1) {
        throw PreconditionError("parabolic: give exactly one of --blocks, --marked-roots, --parabolic");
    }
    if ((t == LieType::G2) != c.has_g2) {
        throw PreconditionError(t == LieType::G2 ? "parabolic: G2 needs --parabolic borel|line|plane"
                                                 : "parabolic: --parabolic applies to G2 only");
    }
    auto g = std::make_shared<const LieRealization>(build_algebra(t, rank));
    if (c.has_g2) {
        return g2_parabolic(g, parse_g2_parabolic(c.g2));
    }
    if (c.has_marked) {
        return parabolic_from_marked_roots(g, parse_int_list(c.marked, "marked-roots"));
    }
    return parabolic_from_blocks(g, parse_blocks(c.blocks, t));
}

Json opt(const std::optional<int>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json parabolic_json(const ParabolicSpec& P) {
    const auto& g = P.g();
    Json j;
    j["algebra"] = g.label();
    j["type"] = to_string(g.type);
    j["rank"] = g.rank;
    j["description"] = P.description();
    j["marked_roots"] = P.marked;
    j["blocks"] = P.blocks ? Json(blocks_to_string(*P.blocks, g.type)) : Json(nullptr);
    j["g2_parabolic"] = P.g2 ? Json(to_string(*P.g2)) : Json(nullptr);
    j["fork_swapped"] = P.fork_swapped;
    j["dim_g"] = g.dim();
    j["dim_l"] = P.dim_l();
    j["dim_n"] = P.dim_n();
    return j;
}

Json header(const std::string& command, const ParabolicSpec& P) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["parabolic"] = parabolic_json(P);
    return j;
}

Outcome describe(const RunConfig&, const ParabolicSpec& P) {
    Outcome o;
    Json& j = o.report;
    j = header("describe", P);
    const auto problems = check_parabolic(P);
    j["self_check"] = problems;
    const auto good = is_good_parabolic(P);
    j["good"] = {{"good", good.good}, {"lhs", good.lhs}, {"rhs", good.rhs}, {"reason", good.reason}};
    const auto& g = P.g();
    if (g.type != LieType::G2) {
        j["ambient_flag"] = ambient_flag_partition(P);
    }
    j["levi_degrees"] = levi_degrees(P);
    const auto names = generator_names(g);
    const auto d = fundamental_degrees(g.type, g.rank);
    j["d"] = d;
    if (good.good) {
        const auto prof = predicted_image(P);
        j["m"] = prof.m;
        j["exponents"] = prof.exponents;
        Json gens = Json::array();
        for (std::size_t i = 0; i < d.size(); ++i) {
            gens.push_back({{"name", names[i]}, {"d", d[i]}, {"m", prof.m[i]}, {"exponent", prof.exponents[i]}});
        }
        j["generators"] = gens;
        j["image"] = "box";
        if (g.type == LieType::B || g.type == LieType::C) {
            const auto ambient = interleaved_ambient_degrees(P);
            j["interleaving"] = {{"m_from_levi", prof.m}, {"m_from_ambient_flag", ambient}, {"agree", ambient == prof.m}};
            if (ambient != prof.m) {
                o.status = kAssertionFailure;
            }
        }
    } else {
        j["m"] = nullptr;
        j["exponents"] = nullptr;
        j["image"] = "newton";
    }
    if (g.type == LieType::D) {
        j["richardson_delta"] = richardson_jordan_type(P).parts;
    }
    if (!problems.empty()) {
        o.status = kAssertionFailure;
    }
    j["status"] = o.status == kPass ? "pass" : "fail";
    return o;
}

Json config_json(const RunConfig& c, const CampaignConfig& cc) {
    return {{"trials", cc.trials}, {"precision", cc.precision}, {"seed", c.seed}, {"coeff_bound", cc.bound}};
}

CampaignConfig campaign_config(const RunConfig& c, int budget_trials) {
    if (budget_trials < 0) {
        throw PreconditionError("trials: must be nonnegative");
    }
    if (c.bound < 1) {
        throw PreconditionError("coeff-bound: must be positive");
    }
    if (c.precision < 0) {
        throw PreconditionError("precision: must be positive");
    }
    CampaignConfig cc;
    cc.trials = budget_trials;
    cc.seed = c.seed;
    cc.bound = c.bound;
    cc.threads = c.threads;
    cc.precision = c.precision;
    return cc;
}

Outcome verify(const RunConfig& c, const ParabolicSpec& P) {
    Outcome o;
    Json& j = o.report;
    j = header("verify", P);
    auto cc = campaign_config(c, c.trials);
    std::optional<std::vector<int>> bounds;
    if (c.has_bounds) {
        bounds = parse_int_list(c.bounds, "bounds");
    }
    const auto rep = verify_inclusion(P, cc, bounds);
    cc.precision = rep.precision;
    j["config"] = config_json(c, cc);
    j["mode"] = rep.mode;
    j["precision"] = rep.precision;
    j["max_precision_used"] = rep.max_precision_used;
    j["trials"] = rep.trials;
    j["passes"] = rep.passes;
    j["undecided"] = rep.undecided;
    j["failures_count"] = rep.failures.size();
    Json coords = Json::array();
    for (const auto& cr : rep.per_coordinate) {
        coords.push_back({{"name", cr.name},
                          {"d", cr.d},
                          {"m", opt(cr.m)},
                          {"bound", opt(cr.bound)},
                          {"min_val_observed", opt(cr.min_val_observed)},
                          {"undecided", cr.undecided},
                          {"status", cr.status}});
    }
    j["coordinates"] = coords;
    if (rep.delta) {
        const NewtonPolygon polygon(*rep.delta);
        Json pairs = Json::array();
        for (const auto& e : polygon.even_edges()) {
            for (const auto& [a, b] : e.pairs) {
                pairs.push_back({a, b});
            }
        }
        j["newton"] = {{"delta", rep.delta->parts},
                       {"relevant_pairs", pairs},
                       {"square_checks", rep.square_checks},
                       {"square_check_failures", rep.square_check_failures},
                       {"pfaffian_vertex_checks", rep.pfaffian_vertex_checks},
                       {"pfaffian_vertex_failures", rep.pfaffian_vertex_failures}};
    }
    Json fails = Json::array();
    for (const auto& f : rep.failures) {
        fails.push_back(
            {{"trial", f.trial}, {"seed", f.seed}, {"precision", f.precision}, {"detail", f.detail}, {"phi", f.phi}});
    }
    j["failures"] = fails;
    const bool failed = !rep.failures.empty() || rep.square_check_failures != 0 || rep.pfaffian_vertex_failures != 0;
    o.status = failed ? kAssertionFailure : kPass;
    j["status"] = failed ? "fail" : (rep.undecided != 0 ? "pass-with-undecided" : "pass");
    return o;
}

Outcome witness(const RunConfig& c, const ParabolicSpec& P) {
    Outcome o;
    Json& j = o.report;
    j = header("witness", P);
    if (c.budget < 1) {
        throw PreconditionError("budget: must be positive");
    }
    const auto cc = campaign_config(c, 0);
    std::optional<std::vector<int>> targets;
    if (c.has_targets) {
        targets = parse_int_list(c.targets, "targets");
    }
    const auto rep = witness_search(P, targets, cc, c.budget);
    j["config"] = {{"seed", c.seed}, {"budget", c.budget}, {"coeff_bound", c.bound}, {"precision", c.precision}};
    j["method"] = rep.method;
    j["samples_used"] = rep.samples_used;
    Json coords = Json::array();
    for (const auto& w : rep.coordinates) {
        coords.push_back({{"name", w.name},
                          {"target", w.target},
                          {"found", w.found},
                          {"trial", w.trial ? Json(*w.trial) : Json(nullptr)},
                          {"valuation", opt(w.valuation)}});
    }
    j["coordinates"] = coords;
    j["phi"] = rep.phi ? Json(*rep.phi) : Json(nullptr);
    o.status = rep.all_found() ? kPass : kAssertionFailure;
    j["status"] = rep.all_found() ? "pass" : (rep.method == "random" ? "inconclusive" : "fail");
    return o;
}

Outcome trace_check(const RunConfig& c, const ParabolicSpec& P) {
    Outcome o;
    Json& j = o.report;
    j = header("trace-check", P);
    if (c.budget < 1) {
        throw PreconditionError("budget: must be positive");
    }
    const auto rep = trace_power_check(P, c.seed, c.budget, c.bound);
    j["config"] = {{"seed", c.seed}, {"budget", c.budget}, {"coeff_bound", c.bound}};
    j["found"] = rep.found;
    j["samples"] = rep.samples;
    j["val_trace_a4"] = opt(rep.val_trace_a4);
    Json vc = Json::array();
    for (const auto& v : rep.val_c) {
        vc.push_back(opt(v));
    }
    j["val_c"] = vc;
    j["phi"] = rep.found ? Json(rep.phi) : Json(nullptr);
    o.status = rep.found ? kPass : kAssertionFailure;
    j["status"] = rep.found ? "pass" : "fail";
    return o;
}

void require_type_d(const ParabolicSpec& P, const std::string& command) {
    if (P.g().type != LieType::D) {
        throw PreconditionError("type: " + command + " applies to type D only");
    }
}

Json components_json(const ComponentReport& r) {
    Json segs = Json::array();
    for (const auto& s : r.segments) {
        segs.push_back({{"a", s.a}, {"b", s.b}, {"kind", s.kind}});
    }
    return {{"index_set", r.index_set},
            {"segments", segs},
            {"components", r.components},
            {"singular", r.singular},
            {"two_components", r.two_components}};
}

Outcome newton(const RunConfig& c, const ParabolicSpec& P) {
    require_type_d(P, "newton");
    Outcome o;
    Json& j = o.report;
    j = header("newton", P);
    const Partition delta = richardson_jordan_type(P, c.seed);
    const auto problems = orthogonal_partition_problems(delta);
    const NewtonPolygon polygon(delta);
    j["good"] = is_good_parabolic(P).good;
    j["delta"] = delta.parts;
    j["orthogonal_partition_problems"] = problems;
    j["degree"] = polygon.degree();
    Json edges = Json::array();
    Json relevant = Json::array();
    for (const auto& e : polygon.edges()) {
        Json pairs = Json::array();
        for (const auto& [a, b] : e.pairs) {
            pairs.push_back({a, b});
            if (e.slope % 2 == 0) {
                relevant.push_back({a, b});
            }
        }
        edges.push_back(
            {{"index", e.index}, {"slope", e.slope}, {"multiplicity", e.multiplicity}, {"even", e.slope % 2 == 0}, {"pairs", pairs}});
    }
    j["edges"] = edges;
    j["relevant_pairs"] = relevant;
    const auto comp = component_analysis(delta);
    j["components"] = components_json(comp);
    j["singular"] = comp.singular;
    o.svg = newton_svg(polygon);
    if (!c.svg.empty()) {
        j["svg_path"] = c.svg;
    }
    o.status = problems.empty() ? kPass : kAssertionFailure;
    j["status"] = problems.empty() ? "pass" : "fail";
    return o;
}

Outcome components(const RunConfig& c, const ParabolicSpec& P) {
    require_type_d(P, "components");
    Outcome o;
    o.report = header("components", P);
    const Partition delta = richardson_jordan_type(P, c.seed);
    o.report["delta"] = delta.parts;
    o.report["report"] = components_json(component_analysis(delta));
    o.report["status"] = "pass";
    return o;
}

Outcome codim(const RunConfig& c, const ParabolicSpec& P) {
    require_type_d(P, "codim");
    Outcome o;
    Json& j = o.report;
    j = header("codim", P);
    const auto r = codim_report(P, c.seed);
    j["delta"] = r.delta.parts;
    j["conjugate"] = r.conjugate.parts;
    j["mu"] = r.mu;
    j["n_ev"] = r.n_ev;
    j["n_odd"] = r.n_odd;
    j["m_tilde"] = r.m_tilde;
    j["m"] = r.m;
    j["sum_m"] = r.sum_m;
    j["sum_j_delta"] = r.sum_j_delta;
    j["sum_conjugate_squares"] = r.sum_conjugate_squares;
    j["dim_l"] = r.dim_l;
    j["dim_n"] = r.dim_n;
    j["b_tr_dim"] = r.b_tr_dim;
    j["dprime_tr_dim"] = r.dprime_tr_dim;
    j["checks"] = {{"conjugate_square_identity", r.conjugate_square_identity},
                   {"levi_dimension_identity", r.levi_dimension_identity},
                   {"sum_m_matches_dims", r.sum_m_matches_dims},
                   {"sum_m_matches_delta", r.sum_m_matches_delta},
                   {"codim_matches_polygon", r.codim_matches_polygon}};
    o.status = r.ok() ? kPass : kAssertionFailure;
    j["status"] = r.ok() ? "pass" : "fail";
    return o;
}

Outcome audit_dim(const RunConfig& c, const ParabolicSpec& P) {
    Outcome o;
    Json& j = o.report;
    j = header("audit-dim", P);
    const auto a = dimension_audit(P, c.genus);
    j["genus"] = a.genus;
    j["lhs"] = a.lhs;
    j["rhs"] = a.rhs;
    j["sum_2d_minus_1"] = a.sum_2d_minus_1;
    j["dim_g"] = a.dim_g;
    j["dim_n"] = a.dim_n;
    o.status = a.ok() ? kPass : kAssertionFailure;
    j["status"] = a.ok() ? "pass" : "fail";
    return o;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        }
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
        }
    } else if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s.find('\n') == std::string::npos) {
            out << prefix << ": " << s << '\n';
        } else {
            out << prefix << ":\n" << s << (s.back() == '\n' ? "" : "\n");
        }
    } else {
        out << prefix << ": " << j.dump() << '\n';
    }
}

void add_parabolic_options(CLI::App* s, RunConfig& c) {
    s->add_option("--type", c.type, "Lie type: A, B, C, D or G2")->required();
    s->add_option("--rank", c.rank, "rank (G2: 2, may be omitted)");
    s->add_option("--blocks", c.blocks, "flag blocks: n1,..,nk (A) or r1,..,rk;s (B, C, D)");
    s->add_option("--marked-roots", c.marked, "marked simple roots, 1-based, comma separated");
    s->add_option("--parabolic", c.g2, "G2 parabolic: borel, line or plane");
    s->add_option("--format", c.format, "report format")->check(CLI::IsMember({"json", "text", "svg"}));
    s->add_option("--output", c.output, "write the report to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Local parabolic Hitchin map: predicted images and exact verification campaigns", "hitchin"};
    app.require_subcommand(1);

    app.add_subcommand("describe", "degrees, Levi degrees and the predicted image");
    auto* verify_cmd = app.add_subcommand("verify", "random inclusion campaign on t^-1 n + g(O)");
    auto* witness_cmd = app.add_subcommand("witness", "search for germs attaining the predicted minima");
    auto* trace_cmd = app.add_subcommand("trace-check", "tr(A^4) versus c_4 on the sl_4 (3,1) parabolic");
    auto* newton_cmd = app.add_subcommand("newton", "type-D Newton polygon, relevant pairs and SVG plot");
    auto* components_cmd = app.add_subcommand("components", "type-D component and singularity report");
    auto* codim_cmd = app.add_subcommand("codim", "type-D codimension identities");
    auto* audit_cmd = app.add_subcommand("audit-dim", "dimension count of the global parabolic Hitchin base");

    for (auto* s : app.get_subcommands({})) {
        add_parabolic_options(s, c);
    }
    for (auto* s : {verify_cmd, witness_cmd, trace_cmd}) {
        s->add_option("--coeff-bound", c.bound, "sample coefficients uniformly from [-b, b]")->capture_default_str();
    }
    for (auto* s : {verify_cmd, witness_cmd}) {
        s->add_option("--seed", c.seed, "campaign seed")->required();
        s->add_option("--precision", c.precision, "working precision N (default 2 max d + 4)");
    }
    for (auto* s : {trace_cmd, newton_cmd, components_cmd, codim_cmd}) {
        s->add_option("--seed", c.seed, "seed of the Richardson oracle / sampler")->capture_default_str();
    }
    verify_cmd->add_option("--trials", c.trials, "number of random germs")->capture_default_str();
    verify_cmd->add_option("--bounds", c.bounds, "override the valuation lower bounds, comma separated");
    verify_cmd->add_option("--threads", c.threads, "worker threads (default: HITCHIN_THREADS or all cores)");
    witness_cmd->add_option("--targets", c.targets, "target valuations, comma separated");
    for (auto* s : {witness_cmd, trace_cmd}) {
        s->add_option("--budget", c.budget, "maximum number of samples")->capture_default_str();
    }
    newton_cmd->add_option("--svg", c.svg, "also write the SVG plot to this file");
    audit_cmd->add_option("--genus", c.genus, "genus of the curve, at least 2")->capture_default_str();

    std::vector<std::string> argv_store{"hitchin"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kPass;
        }
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    c.command = chosen->get_name();
    c.has_rank = chosen->count("--rank") > 0;
    c.has_blocks = chosen->count("--blocks") > 0;
    c.has_marked = chosen->count("--marked-roots") > 0;
    c.has_g2 = chosen->count("--parabolic") > 0;
    c.has_targets = c.command == "witness" && chosen->count("--targets") > 0;
    c.has_bounds = c.command == "verify" && chosen->count("--bounds") > 0;

    Outcome o;
    try {
        if (c.format == "svg" && c.command != "newton") {
            throw PreconditionError("format: svg is only available for newton");
        }
        const ParabolicSpec P = build_parabolic(c);
        if (c.command == "describe") {
            o = describe(c, P);
        } else if (c.command == "verify") {
            o = verify(c, P);
        } else if (c.command == "witness") {
            o = witness(c, P);
        } else if (c.command == "trace-check") {
            o = trace_check(c, P);
        } else if (c.command == "newton") {
            o = newton(c, P);
        } else if (c.command == "components") {
            o = components(c, P);
        } else if (c.command == "codim") {
            o = codim(c, P);
        } else {
            o = audit_dim(c, P);
        }
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const UnsupportedCase& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const Error& e) {
        err << "assertion failure: " << e.what() << '\n';
        return kAssertionFailure;
    }

    std::ostringstream body;
    if (c.format == "json") {
        body << o.report.dump(2) << '\n';
    } else if (c.format == "text") {
        flatten(o.report, "", body);
    } else {
        body << o.svg;
    }
    if (!c.svg.empty()) {
        std::ofstream f(c.svg, std::ios::binary);
        if (!f || !(f << o.svg)) {
            err << "error: svg: cannot write " << c.svg << '\n';
            return kConfigError;
        }
    }
    if (c.output.empty()) {
        out << body.str();
    } else {
        std::ofstream f(c.output, std::ios::binary);
        if (!f || !(f << body.str())) {
            err << "error: output: cannot write " << c.output << '\n';
            return kConfigError;
        }
    }
    return o.status;
}

}  // namespace hitchin::cli
