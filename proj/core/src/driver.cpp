#include <rcl/containers.hpp>
#include <rcl/copies.hpp>
#include <rcl/densities.hpp>
#include <rcl/driver.hpp>
#include <rcl/errors.hpp>
#include <rcl/freeness.hpp>
#include <rcl/random_harness.hpp>
#include <rcl/ramsey.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace rcl {

namespace {

struct OptionError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Options
{
    const std::map<std::string, std::string> & raw;

    bool has(const std::string & key) const { return raw.count(key) > 0; }

    std::string str(const std::string & key) const
    {
        auto it = raw.find(key);
        if (it == raw.end())
            throw OptionError("missing required option '" + key + "'");
        return it->second;
    }

    std::string str_or(const std::string & key, const std::string & fallback) const
    {
        auto it = raw.find(key);
        return it == raw.end() ? fallback : it->second;
    }

    long integer(const std::string & key) const
    {
        try {
            return std::stol(str(key));
        }
        catch (const std::invalid_argument &) {
            throw OptionError("option '" + key + "' must be an integer");
        }
    }

    long integer_or(const std::string & key, long fallback) const
    {
        return has(key) ? integer(key) : fallback;
    }

    Rat rational(const std::string & key) const { return rat_from_string(str(key)); }

    std::vector<std::string> list(const std::string & key) const
    {
        std::vector<std::string> out;
        std::istringstream in(str(key));
        std::string tok;
        while (std::getline(in, tok, ','))
            if (! tok.empty())
                out.push_back(tok);
        if (out.empty())
            throw OptionError("option '" + key + "' must be a nonempty comma list");
        return out;
    }
};

int default_workers(const Options & opt)
{
    if (opt.has("workers"))
        return static_cast<int>(opt.integer("workers"));
    if (const char * env = std::getenv("RCL_WORKERS"))
        return std::max(1, std::atoi(env));
    return 1;
}

const char * verdict_str(Verdict v)
{
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

std::vector<KHypergraph> load_patterns(const Options & opt, const std::string & key)
{
    std::vector<KHypergraph> out;
    for (const auto & path : opt.list(key))
        out.push_back(parse_hypergraph_file(path));
    return out;
}

std::vector<LinearSystem> load_systems(const Options & opt, const std::string & key, int r)
{
    std::vector<LinearSystem> systems;
    for (const auto & path : opt.list(key))
        systems.push_back(parse_matrix_file(path));
    if (r > 0) {
        if (systems.size() == 1)
            systems.assign(r, systems.front());
        else if (static_cast<int>(systems.size()) != r)
            throw OptionError("expected 1 or r matrices, got " + std::to_string(systems.size()));
    }
    return systems;
}

SolutionMode mode_of(const Options & opt, const std::string & key = "mode")
{
    auto m = opt.str_or(key, "distinct");
    if (m == "distinct")
        return SolutionMode::KDistinct;
    if (m == "strong")
        return SolutionMode::Strong;
    throw OptionError(key + " must be 'distinct' or 'strong'");
}

json colouring_json(const ColoringAssignment & a)
{
    json edges = json::array();
    for (std::size_t i = 0; i < a.target.edges.size(); ++i)
        edges.push_back({{"edge", a.target.edges[i]}, {"colour", a.colours[i]}});
    return edges;
}

json trials_json(const std::vector<TrialRecord> & records)
{
    json arr = json::array();
    for (const auto & r : records) {
        json row;
        row["trial"] = r.trial;
        row["sample_size"] = r.sample_size;
        row["verdict"] = verdict_str(r.property_holds);
        if (r.res_lower >= 0) {
            row["res_lower"] = r.res_lower;
            row["res_upper"] = r.res_upper;
            row["res_exact"] = r.res_exact;
        }
        row["wall_ms"] = 0.0; // masked so seeded payloads stay byte-identical
        arr.push_back(std::move(row));
    }
    return arr;
}

RandomModelConfig model_config(const Options & opt, bool require_p = true)
{
    RandomModelConfig cfg;
    auto model = opt.str("model");
    if (model == "gnp_k")
        cfg.model = RandomModel::GnpK;
    else if (model == "np_set")
        cfg.model = RandomModel::NpSet;
    else
        throw OptionError("model must be 'gnp_k' or 'np_set'");
    cfg.n = static_cast<int>(opt.integer("n"));
    cfg.k = static_cast<int>(opt.integer_or("k", 2));
    if (! opt.has("seed"))
        throw OptionError("--seed is required for randomised subcommands");
    cfg.seed = static_cast<std::uint64_t>(std::stoull(opt.str("seed")));
    cfg.trials = opt.integer_or("trials", 20);
    if (! require_p)
        return cfg;
    if (opt.has("p"))
        cfg.p = opt.rational("p");
    else if (opt.has("C")) {
        Rat m;
        auto src = opt.str("exponent-from");
        auto colon = src.find(':');
        if (colon == std::string::npos)
            throw OptionError("exponent-from must be graph:<path> or matrix:<path>");
        auto kind = src.substr(0, colon);
        auto path = src.substr(colon + 1);
        if (kind == "graph")
            m = m_k(parse_hypergraph_file(path)).m_k;
        else if (kind == "matrix")
            m = m_A(parse_matrix_file(path)).value;
        else
            throw OptionError("exponent-from must be graph:<path> or matrix:<path>");
        cfg.p = threshold_p(opt.rational("C"), m, cfg.n);
    }
    else
        throw OptionError("either --p or --C with --exponent-from is required");
    if (cfg.p < 0 || cfg.p > 1)
        throw OptionError("p must lie in [0,1]");
    return cfg;
}

HarnessProperty harness_property(const Options & opt)
{
    bool has_ramsey = opt.has("ramsey");
    bool has_rado = opt.has("rado");
    if (has_ramsey == has_rado)
        throw OptionError("exactly one of --ramsey or --rado is required");
    if (has_ramsey) {
        RamseyProperty prop;
        for (const auto & path : opt.list("ramsey"))
            prop.patterns.push_back(parse_hypergraph_file(path));
        return prop;
    }
    RadoProperty prop;
    int r = static_cast<int>(opt.integer_or("r", 1));
    prop.systems = load_systems(opt, "rado", r);
    prop.mode = mode_of(opt);
    return prop;
}

// ---- subcommand handlers ----------------------------------------------

json run_density(const Options & opt, RunVerdict & verdict)
{
    auto h = parse_hypergraph_file(opt.str("graph"));
    auto rep = m_k(h);
    json out;
    out["k"] = h.k;
    out["n"] = h.n;
    out["edges"] = h.edge_count();
    out["d_k"] = rat_to_string(rep.d_k);
    out["m_k"] = rat_to_string(rep.m_k);
    out["witness"] = rep.witness;
    if (opt.has("with")) {
        auto h2 = parse_hypergraph_file(opt.str("with"));
        auto asym = asymmetric_m_k(h, h2);
        out["asymmetric"] = {
            {"with", opt.str("with")},
            {"value", rat_to_string(asym.value)},
            {"maximizer", asym.maximizer},
            {"strictly_balanced", asym.strictly_balanced},
        };
    }
    if (h.k == 2 && opt.has("chromatic") && opt.str("chromatic") == "true")
        out["chromatic_number"] = chromatic_number(h);
    verdict = RunVerdict::Ok;
    return out;
}

KHypergraph target_graph(const Options & opt)
{
    if (opt.has("graph"))
        return parse_hypergraph_file(opt.str("graph"));
    if (opt.has("n")) {
        int k = static_cast<int>(opt.integer_or("k", 2));
        return complete_khypergraph(k, static_cast<int>(opt.integer("n")));
    }
    throw OptionError("either --graph or --n (complete host) is required");
}

json run_ramsey_check(const Options & opt, RunVerdict & verdict)
{
    auto g = target_graph(opt);
    auto patterns = load_patterns(opt, "patterns");
    auto res = is_ramsey(g, patterns, opt.integer_or("budget", 50'000'000));
    json out;
    out["is_ramsey"] = verdict_str(res.is_ramsey);
    out["nodes"] = res.nodes;
    if (res.free_colouring)
        out["free_colouring"] = colouring_json(*res.free_colouring);
    verdict = (res.is_ramsey == Verdict::Unknown) ? RunVerdict::Unknown : RunVerdict::Ok;
    return out;
}

json run_ramsey_ex(const Options & opt, RunVerdict & verdict)
{
    auto patterns = load_patterns(opt, "patterns");
    auto rec = ex_r(static_cast<int>(opt.integer("n")), patterns, opt.integer_or("budget", 400'000'000));
    json out;
    out["n"] = rec.n;
    out["k"] = rec.k;
    out["ex"] = rec.ex_value;
    out["nodes"] = rec.nodes;
    out["extremal_graph"] = format_hypergraph_text(rec.extremal_graph);
    out["free_colouring"] = colouring_json(rec.free_colouring);
    verdict = RunVerdict::Ok;
    return out;
}

json run_ramsey_number(const Options & opt, RunVerdict & verdict)
{
    std::vector<int> ells;
    for (const auto & tok : opt.list("ell"))
        ells.push_back(std::stoi(tok));
    auto res = ramsey_number(ells, opt.integer_or("budget", 200'000'000));
    json out;
    out["nodes"] = res.nodes;
    if (res.exact == Verdict::Yes) {
        out["value"] = res.value;
        verdict = RunVerdict::Ok;
    }
    else {
        out["lower_bound"] = res.lower_bound;
        verdict = RunVerdict::Unknown;
    }
    return out;
}

json run_ramsey_resilience(const Options & opt, RunVerdict & verdict)
{
    auto g = target_graph(opt);
    auto patterns = load_patterns(opt, "patterns");
    auto res = resilience_exact(g, patterns, opt.integer_or("budget", 400'000'000));
    json out;
    out["edges"] = g.edge_count();
    out["nodes"] = res.nodes;
    out["exact"] = (res.exact == Verdict::Yes);
    out["res_lower"] = res.lower;
    out["res_upper"] = res.upper;
    if (res.exact == Verdict::Yes)
        out["res"] = res.lower;
    verdict = (res.exact == Verdict::Yes) ? RunVerdict::Ok : RunVerdict::Unknown;
    return out;
}

json run_rado_classify(const Options & opt, RunVerdict & verdict)
{
    auto a = parse_matrix_file(opt.str("matrix"));
    auto ef = rank_and_echelon(a);
    auto irr = is_irredundant(a, opt.integer_or("bound", 50));
    json out;
    out["rows"] = a.rows;
    out["cols"] = a.cols;
    out["rank"] = ef.rank;
    out["satisfies_star"] = satisfies_star(a);
    auto cp = columns_property(a);
    out["columns_property"] = cp.has_property;
    out["partition_regular"] = cp.has_property;
    if (cp.has_property)
        out["columns_witness"] = cp.blocks;
    out["irredundant"] = (irr.verdict == TriState::True) ? "true" : "unknown";
    if (irr.verdict == TriState::True)
        out["irredundant_witness"] = irr.witness;
    if (irr.verdict == TriState::True && satisfies_star(a)) {
        auto rep = matrix_fact_checks(a, true);
        json clauses = json::array();
        for (const auto & c : rep.clauses)
            clauses.push_back({{"name", c.name}, {"holds", c.holds}, {"witness_w", c.witness_w}});
        out["matrix_fact_checks"] = clauses;
        out["matrix_facts_all_hold"] = rep.all_hold;
    }
    verdict = (irr.verdict == TriState::True) ? RunVerdict::Ok : RunVerdict::Unknown;
    return out;
}

json run_rado_ma(const Options & opt, RunVerdict & verdict)
{
    auto a = parse_matrix_file(opt.str("matrix"));
    // m(A) presumes an irredundant system; callers without a verified
    // witness must override explicitly
    bool assumed = opt.str_or("assume-irredundant", "false") == "true";
    json out;
    if (! assumed) {
        auto irr = is_irredundant(a, opt.integer_or("bound", 50));
        if (irr.verdict != TriState::True)
            throw OptionError("irredundancy is UNKNOWN at this search bound; rerun with a larger "
                              "--bound or pass --assume-irredundant");
        out["irredundant_witness"] = irr.witness;
    }
    auto res = m_A(a);
    out["m_A"] = rat_to_string(res.value);
    out["witness_W"] = res.witness;
    verdict = RunVerdict::Ok;
    return out;
}

json run_rado_mu(const Options & opt, RunVerdict & verdict)
{
    int r = static_cast<int>(opt.integer_or("r", 1));
    auto systems = load_systems(opt, "matrix", r);
    auto res = mu(static_cast<int>(opt.integer("n")), systems, mode_of(opt),
                  opt.integer_or("budget", 400'000'000));
    json out;
    out["nodes"] = res.nodes;
    out["mu_lower"] = res.lower;
    out["mu_upper"] = res.upper;
    if (res.exact == Verdict::Yes)
        out["mu"] = res.lower;
    if (res.certificate) {
        out["witness_elements"] = res.certificate->elements;
        out["witness_colouring"] = res.certificate->colouring;
    }
    verdict = (res.exact == Verdict::Yes) ? RunVerdict::Ok : RunVerdict::Unknown;
    return out;
}

json run_rado_schur(const Options & opt, RunVerdict & verdict)
{
    json out;
    long budget = opt.integer_or("budget", 400'000'000);
    if (opt.has("f"))
        out["f"] = schur_f(static_cast<int>(opt.integer("f")), budget);
    if (opt.has("h"))
        out["h"] = schur_h(static_cast<int>(opt.integer("h")), budget);
    if (! opt.has("f") && ! opt.has("h"))
        throw OptionError("rado schur requires --f R or --h R");
    verdict = RunVerdict::Ok;
    return out;
}

ContainerFamily build_family_from_options(const Options & opt)
{
    ContainerParams params;
    params.density_ceiling = opt.has("ceiling") ? opt.rational("ceiling") : frac(1, 2);
    params.fingerprint_budget = static_cast<int>(opt.integer_or("budget", 1 << 20));
    params.refine_depth = static_cast<int>(opt.integer_or("refine", 0));
    int r = static_cast<int>(opt.integer_or("r", 1));

    std::vector<KHypergraph> bases;
    if (opt.has("hypergraph")) {
        auto base = parse_hypergraph_file(opt.str("hypergraph"));
        bases.assign(r, base);
    }
    else if (opt.has("matrix")) {
        auto systems = load_systems(opt, "matrix", r);
        int n = static_cast<int>(opt.integer("n"));
        for (const auto & s : systems)
            bases.push_back(solution_khypergraph(s, n));
    }
    else if (opt.has("patterns")) {
        auto patterns = load_patterns(opt, "patterns");
        if (static_cast<int>(patterns.size()) == 1 && r > 1)
            patterns.assign(r, patterns.front());
        int n = static_cast<int>(opt.integer("n"));
        for (const auto & p : patterns)
            bases.push_back(build_copies_hypergraph(p, n).derived);
    }
    else
        throw OptionError("containers: one of --hypergraph, --matrix or --patterns is required");
    return lift_tuple(bases, params);
}

json run_containers_build(const Options & opt, RunVerdict & verdict)
{
    auto family = build_family_from_options(opt);
    json out;
    out["family"] = json::parse(family_to_json(family));
    out["certified"] = family.certified;
    std::size_t total = 0;
    for (const auto & c : family.coords)
        total += c.fingerprints.size();
    out["fingerprints_per_coordinate"] = total / family.coords.size();
    if (opt.has("out")) {
        std::ofstream f(opt.str("out"));
        f << family_to_json(family) << '\n';
    }
    verdict = family.certified ? RunVerdict::Ok : RunVerdict::Uncertified;
    return out;
}

json verify_report_json(const VerifyReport & rep)
{
    json out;
    out["all_hold"] = rep.all_hold;
    json clauses = json::array();
    for (const auto & c : rep.clauses)
        clauses.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    out["clauses"] = clauses;
    out["independent_sets_checked"] = rep.independent_sets_checked;
    out["tuples_counted"] = rep.tuples_counted;
    out["fitted_D"] = rep.fitted_D;
    out["max_fingerprint_sum"] = rep.max_fingerprint_sum;
    out["max_union_size"] = rep.max_union_size;
    out["exact_reference"] = rep.mu_or_ex_value;
    return out;
}

json run_containers_verify(const Options & opt, RunVerdict & verdict)
{
    auto mode = opt.str("mode");
    int r = static_cast<int>(opt.integer_or("r", 1));
    int n = static_cast<int>(opt.integer("n"));
    Rat delta = opt.has("delta") ? opt.rational("delta") : frac(1, 2);
    ContainerFamily family = opt.has("family")
        ? family_from_json([&] {
              std::ifstream f(opt.str("family"));
              if (! f)
                  throw OptionError("cannot open family file " + opt.str("family"));
              std::stringstream ss;
              ss << f.rdbuf();
              return ss.str();
          }())
        : build_family_from_options(opt);
    VerifyReport rep;
    if (mode == "rado") {
        auto systems = load_systems(opt, "matrix", r);
        rep = verify_matcontainer(systems, n, delta, family, mode_of(opt, "solution-mode"));
    }
    else if (mode == "ramsey") {
        auto patterns = load_patterns(opt, "patterns");
        if (static_cast<int>(patterns.size()) == 1 && r > 1)
            patterns.assign(r, patterns.front());
        rep = verify_ramseycont(patterns, n, delta, family);
    }
    else
        throw OptionError("containers verify: mode must be 'rado' or 'ramsey'");
    json out = verify_report_json(rep);
    out["family_certified"] = family.certified;
    if (! rep.all_hold)
        verdict = RunVerdict::Error;
    else if (! family.certified)
        verdict = RunVerdict::Uncertified;
    else
        verdict = RunVerdict::Ok;
    return out;
}

json estimate_json(const McEstimate & est, bool with_trials)
{
    json out;
    out["true_count"] = est.true_count;
    out["false_count"] = est.false_count;
    out["unknown_count"] = est.unknown_count;
    out["estimate"] = est.estimate;
    out["ci_low"] = est.ci_low;
    out["ci_high"] = est.ci_high;
    if (with_trials)
        out["trials"] = trials_json(est.records);
    return out;
}

json run_mc(const Options & opt, RunVerdict & verdict)
{
    auto cfg = model_config(opt);
    auto prop = harness_property(opt);
    auto est = mc_probability(cfg, prop, opt.integer_or("budget", 20'000'000), default_workers(opt));
    json out = estimate_json(est, true);
    verdict = (est.unknown_count > 0) ? RunVerdict::Unknown : RunVerdict::Ok;
    return out;
}

json run_scan(const Options & opt, RunVerdict & verdict)
{
    auto cfg = model_config(opt, false);
    auto prop = harness_property(opt);
    std::vector<Rat> grid;
    for (const auto & tok : opt.list("p-grid"))
        grid.push_back(rat_from_string(tok));
    Rat m;
    if (opt.has("exponent-from")) {
        auto src = opt.str("exponent-from");
        auto colon = src.find(':');
        if (colon == std::string::npos)
            throw OptionError("exponent-from must be graph:<path> or matrix:<path>");
        auto kind = src.substr(0, colon);
        auto path = src.substr(colon + 1);
        m = (kind == "graph") ? m_k(parse_hypergraph_file(path)).m_k : m_A(parse_matrix_file(path)).value;
    }
    else
        m = 2;
    auto rep = threshold_scan(cfg, prop, grid, m, opt.integer_or("budget", 20'000'000),
                              default_workers(opt));
    json out;
    out["density_m"] = rat_to_string(rep.density_m);
    json points = json::array();
    long unknowns = 0;
    for (const auto & pt : rep.points) {
        json jp = estimate_json(pt.estimate, false);
        jp["p"] = rat_to_string(pt.p);
        unknowns += pt.estimate.unknown_count;
        points.push_back(std::move(jp));
    }
    out["points"] = points;
    if (rep.crossing_p) {
        out["crossing_p"] = *rep.crossing_p;
        out["crossing_C"] = *rep.crossing_C;
    }
    verdict = (unknowns > 0) ? RunVerdict::Unknown : RunVerdict::Ok;
    return out;
}

json run_resilience_mc(const Options & opt, RunVerdict & verdict)
{
    auto cfg = model_config(opt);
    auto prop = harness_property(opt);
    auto rep = resilience_mc(cfg, prop, opt.integer_or("budget", 50'000'000), default_workers(opt));
    json out;
    out["trials"] = trials_json(rep.records);
    out["exact_trials"] = rep.exact_trials;
    out["bracket_trials"] = rep.bracket_trials;
    out["empty_samples"] = rep.empty_samples;
    out["mean_ratio"] = rat_to_string(rep.mean_ratio);
    out["mean_ratio_value"] = rat_to_double(rep.mean_ratio);
    if (rep.predicted_available)
        out["predicted_center"] = rat_to_string(rep.predicted_center);
    verdict = (rep.bracket_trials > 0) ? RunVerdict::Unknown : RunVerdict::Ok;
    return out;
}

} // namespace

std::map<std::string, std::string> parse_config_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open config file " + path);
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return (b == std::string::npos) ? std::string{} : s.substr(b, e - b + 1);
        };
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

ReportEnvelope run(const RunConfig & config)
{
    ReportEnvelope env;
    env.command = config.command;
    env.config_echo = config.options;
    auto start = std::chrono::steady_clock::now();
    Options opt{config.options};
    try {
        RunVerdict verdict = RunVerdict::Ok;
        json result;
        if (config.command == "density")
            result = run_density(opt, verdict);
        else if (config.command == "ramsey.check")
            result = run_ramsey_check(opt, verdict);
        else if (config.command == "ramsey.ex")
            result = run_ramsey_ex(opt, verdict);
        else if (config.command == "ramsey.number")
            result = run_ramsey_number(opt, verdict);
        else if (config.command == "ramsey.resilience")
            result = run_ramsey_resilience(opt, verdict);
        else if (config.command == "rado.classify")
            result = run_rado_classify(opt, verdict);
        else if (config.command == "rado.mA")
            result = run_rado_ma(opt, verdict);
        else if (config.command == "rado.mu")
            result = run_rado_mu(opt, verdict);
        else if (config.command == "rado.schur")
            result = run_rado_schur(opt, verdict);
        else if (config.command == "containers.build")
            result = run_containers_build(opt, verdict);
        else if (config.command == "containers.verify")
            result = run_containers_verify(opt, verdict);
        else if (config.command == "mc")
            result = run_mc(opt, verdict);
        else if (config.command == "scan")
            result = run_scan(opt, verdict);
        else if (config.command == "resilience")
            result = run_resilience_mc(opt, verdict);
        else
            throw OptionError("unknown subcommand '" + config.command + "'");
        env.verdict = verdict;
        env.result_json = result.dump();
        env.has_result = true;
    }
    catch (const std::exception & e) {
        env.verdict = RunVerdict::Error;
        env.error_message = e.what();
        env.has_result = false;
    }
    env.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return env;
}

std::string render_output(const ReportEnvelope & env, const std::string & format)
{
    if (format == "json" || format.empty())
        return envelope_to_json(env);
    if (format == "text") {
        std::ostringstream out;
        out << env.command << ": " << verdict_name(env.verdict) << '\n';
        if (! env.error_message.empty())
            out << "error: " << env.error_message << '\n';
        else if (env.has_result)
            out << json::parse(env.result_json).dump(2) << '\n';
        return out.str();
    }
    if (format == "csv") {
        std::ostringstream out;
        if (! env.has_result) {
            out << "error\n" << env.error_message << '\n';
            return out.str();
        }
        json result = json::parse(env.result_json);
        if (result.contains("trials")) {
            out << "trial,sample_size,verdict,res_lower,res_upper,res_exact\n";
            for (const auto & row : result["trials"]) {
                out << row["trial"].get<long>() << ',' << row["sample_size"].get<long>() << ','
                    << row["verdict"].get<std::string>() << ',';
                if (row.contains("res_lower"))
                    out << row["res_lower"].get<long>() << ',' << row["res_upper"].get<long>() << ','
                        << (row["res_exact"].get<bool>() ? 1 : 0);
                else
                    out << ",,";
                out << '\n';
            }
            return out.str();
        }
        if (result.contains("points")) {
            out << "p,estimate,ci_low,ci_high,true_count,false_count,unknown_count\n";
            for (const auto & pt : result["points"])
                out << pt["p"].get<std::string>() << ',' << pt["estimate"].get<double>() << ','
                    << pt["ci_low"].get<double>() << ',' << pt["ci_high"].get<double>() << ','
                    << pt["true_count"].get<long>() << ',' << pt["false_count"].get<long>() << ','
                    << pt["unknown_count"].get<long>() << '\n';
            return out.str();
        }
        throw std::runtime_error("csv output is defined for mc/scan/resilience results only");
    }
    throw std::runtime_error("unknown output format '" + format + "'");
}

} // namespace rcl
