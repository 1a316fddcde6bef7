#include <obstruct/canonical.hpp>
#include <obstruct/cli.hpp>
#include <obstruct/constructions.hpp>
#include <obstruct/errors.hpp>
#include <obstruct/family.hpp>
#include <obstruct/graph6.hpp>
#include <obstruct/homomorphism.hpp>
#include <obstruct/pattern.hpp>

#include "reference_lists.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace obstruct::cli {

using json = nlohmann::ordered_json;

Graph parse_graph_literal(std::string_view text)
{
    try {
        return build(parse_name(text));
    }
    catch (const ParseError& name_error) {
        try {
            return graph6_decode(text);
        }
        catch (const ParseError&) {
            throw name_error;
        }
    }
}

std::uint64_t parse_count(std::string_view text)
{
    auto digits = [&](std::string_view s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("expected a count, got '" + std::string(text) + "'", 0);
        std::uint64_t v = 0;
        for (char c : s) {
            if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10)
                throw ParseError("count too large: '" + std::string(text) + "'", 0);
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return v;
    };
    auto power = [&](std::uint64_t base, std::uint64_t exp) {
        std::uint64_t v = 1;
        for (std::uint64_t k = 0; k < exp; ++k) {
            if (base != 0 && v > std::numeric_limits<std::uint64_t>::max() / base)
                throw ParseError("count too large: '" + std::string(text) + "'", 0);
            v *= base;
        }
        return v;
    };
    if (auto caret = text.find('^'); caret != std::string_view::npos)
        return power(digits(text.substr(0, caret)), digits(text.substr(caret + 1)));
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::uint64_t mantissa = digits(text.substr(0, e));
        std::uint64_t scale = power(10, digits(text.substr(e + 1)));
        if (mantissa != 0 && scale > std::numeric_limits<std::uint64_t>::max() / mantissa)
            throw ParseError("count too large: '" + std::string(text) + "'", 0);
        return mantissa * scale;
    }
    return digits(text);
}

std::vector<Graph> normalize(std::vector<Graph> graphs)
{
    std::vector<std::pair<Certificate, Graph>> keyed;
    for (auto& g : graphs)
        keyed.emplace_back(canonical_form(g), std::move(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.second.order() != b.second.order())
            return a.second.order() < b.second.order();
        return a.first < b.first;
    });
    std::vector<Graph> out;
    for (std::size_t k = 0; k < keyed.size(); ++k)
        if (k == 0 || keyed[k].first != keyed[k - 1].first)
            out.push_back(std::move(keyed[k].second));
    return out;
}

std::map<std::size_t, std::size_t> counts_by_order(const std::vector<Graph>& graphs)
{
    std::map<std::size_t, std::size_t> out;
    for (const auto& g : graphs)
        ++out[g.order()];
    return out;
}

std::string format_counts(const std::map<std::size_t, std::size_t>& counts)
{
    std::string s = "{";
    for (auto it = counts.begin(); it != counts.end(); ++it) {
        if (it != counts.begin())
            s += ", ";
        s += std::to_string(it->first) + ":" + std::to_string(it->second);
    }
    return s + "}";
}

namespace {

template <std::size_t N>
std::vector<Graph> reference_graphs(const std::array<std::string_view, N>& list, const std::vector<Pattern>& forbidden)
{
    std::vector<Graph> out;
    for (auto line : list) {
        Graph g = graph6_decode(line);
        if (is_family_free(g, forbidden))
            out.push_back(std::move(g));
    }
    return out;
}

GenerationConfig base_config(const std::string& seed, std::vector<Pattern> forbidden)
{
    GenerationConfig cfg;
    cfg.target = build(GraphName::cycle(5));
    cfg.forbidden = std::move(forbidden);
    cfg.seed = build(parse_name(seed));
    return cfg;
}

} // namespace

Recipe recipe(std::string_view name)
{
    Recipe r;
    r.name = std::string(name);
    auto add = [&](const std::string& seed, Pattern f, RuleSchedule schedule = {}) {
        GenerationConfig cfg = base_config(seed, {std::move(f)});
        cfg.schedule = std::move(schedule);
        r.steps.push_back({seed, std::move(cfg)});
    };
    if (name == "p6") {
        add("K1", Pattern::path(6));
        r.expected_counts = reference::p6_counts;
        r.expected_graphs = reference_graphs(reference::p8_free, {Pattern::path(6)});
    }
    else if (name == "p7") {
        RuleSchedule schedule;
        schedule.set(10, Rule::EdgesFirst);
        add("C5", Pattern::path(7), schedule);
        add("C7", Pattern::path(7), schedule);
        r.expected_counts = reference::p7_counts;
        r.expected_graphs = reference_graphs(reference::p8_free, {Pattern::path(7)});
    }
    else if (name == "p8") {
        for (const char* seed : {"Q1", "Q2", "Q3", "Q4"})
            add(seed, Pattern::path(8));
        r.expected_counts = reference::p8_counts;
        r.expected_graphs = reference_graphs(reference::p8_free, {Pattern::path(8)});
    }
    else if (name == "s221" || name == "s311") {
        Pattern claw = Pattern::from_name(name == "s221" ? GraphName::subdivided_claw(2, 2, 1)
                                                         : GraphName::subdivided_claw(3, 1, 1));
        r.expected_graphs = reference_graphs(reference::claw_free, {claw});
        add("C5", std::move(claw));
        r.expected_counts = name == "s221" ? reference::s221_counts : reference::s311_counts;
    }
    else {
        throw ParameterError("unknown recipe '" + std::string(name) + "'");
    }
    return r;
}

namespace {

std::set<Certificate> certificates(const std::vector<Graph>& graphs)
{
    std::set<Certificate> out;
    for (const auto& g : graphs)
        out.insert(canonical_form(g));
    return out;
}

bool verify_obstruction(const Graph& g, const Graph& h, const std::vector<Pattern>& forbidden)
{
    return is_minimal_obstruction(g, h, Oracle::Primary) && is_minimal_obstruction(g, h, Oracle::Independent)
           && is_family_free(g, forbidden);
}

void attach_progress(GenerationConfig& cfg, std::ostream* progress, const std::string& label)
{
    if (!progress)
        return;
    cfg.progress = [progress, label](const GenerationProgress& p) {
        *progress << label << ": nodes " << p.nodes_visited << ", stored " << p.seen << ", found " << p.obstructions
                  << ", order " << p.current_order << std::endl;
    };
}

} // namespace

RecipeOutcome run_recipe(const Recipe& r, unsigned workers, std::ostream* progress)
{
    RecipeOutcome outcome;
    const auto start = std::chrono::steady_clock::now();
    std::vector<Graph> all;
    outcome.verified = true;
    for (const auto& step : r.steps) {
        GenerationConfig cfg = step.config;
        cfg.workers = workers;
        attach_progress(cfg, progress, r.name + "/" + step.seed);
        GenerationReport report = expand(cfg);
        outcome.complete = outcome.complete && report.status == GenerationStatus::Complete;
        for (const auto& g : report.obstructions) {
            if (!verify_obstruction(g, cfg.target, cfg.forbidden))
                outcome.verified = false;
            all.push_back(g);
        }
        outcome.reports.push_back(std::move(report));
    }
    outcome.obstructions = normalize(std::move(all));
    outcome.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    outcome.counts_match = counts_by_order(outcome.obstructions) == r.expected_counts;
    outcome.graphs_match = certificates(outcome.obstructions) == certificates(r.expected_graphs);
    return outcome;
}

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::vector<Graph> read_inputs(const std::vector<std::string>& inputs)
{
    std::vector<Graph> out;
    for (const auto& item : inputs) {
        std::error_code ec;
        if (std::filesystem::is_regular_file(item, ec)) {
            std::ifstream in(item);
            if (!in)
                throw UsageError("cannot read '" + item + "'");
            for (auto& g : read_graph6(in))
                out.push_back(std::move(g));
        }
        else {
            out.push_back(parse_graph_literal(item));
        }
    }
    return out;
}

std::vector<Pattern> parse_patterns(const std::string& list)
{
    std::vector<Pattern> out;
    if (list.empty() || list == "none")
        return out;
    for (const auto& name : parse_name_list(list))
        out.push_back(Pattern::from_name(name));
    return out;
}

json counts_json(const std::map<std::size_t, std::size_t>& counts)
{
    json j = json::object();
    for (auto [order, count] : counts)
        j[std::to_string(order)] = count;
    return j;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// --- gen --------------------------------------------------------------

struct GenOptions {
    std::string target, forbidden, seed = "K1", budget, rule_order = "vertices", rule_choice = "low-degree", report;
    std::size_t max_order = 64;
    unsigned workers = 1;
    bool no_prune = false, quiet = false;
};

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err)
{
    GenerationConfig cfg;
    cfg.target = parse_graph_literal(o.target);
    cfg.forbidden = parse_patterns(o.forbidden);
    cfg.seed = parse_graph_literal(o.seed);
    cfg.schedule = RuleSchedule::parse(o.rule_order);
    if (o.rule_choice == "first")
        cfg.rule_choice = RuleChoice::First;
    else if (o.rule_choice != "low-degree")
        throw UsageError("--rule-choice must be first or low-degree");
    cfg.max_order = o.max_order;
    if (cfg.max_order > 64)
        throw UsageError("--max-order above 64 is not supported");
    if (cfg.seed.order() > cfg.max_order)
        throw UsageError("the seed is larger than --max-order");
    if (!o.budget.empty())
        cfg.node_budget = parse_count(o.budget);
    if (cfg.node_budget == 0)
        throw UsageError("--budget must be positive");
    cfg.workers = std::max(1u, o.workers);
    cfg.comparable_rules = !o.no_prune;
    cfg.triangle_prune = !o.no_prune && !has_triangle(cfg.target);
    if (!o.quiet)
        attach_progress(cfg, &err, "gen");

    const auto start = std::chrono::steady_clock::now();
    GenerationReport report = expand(cfg);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::vector<Graph> found = normalize(report.obstructions);
    for (const auto& g : found)
        out << graph6_encode(g) << '\n';

    json j;
    j["config"] = {
        {"target", o.target},
        {"forbidden", o.forbidden},
        {"seed", o.seed},
        {"max_order", cfg.max_order},
        {"budget", o.budget.empty() ? json(nullptr) : json(cfg.node_budget)},
        {"rule_order", cfg.schedule.to_string()},
        {"rule_choice", o.rule_choice},
        {"workers", cfg.workers},
        {"prune", !o.no_prune},
        {"triangle_prune", cfg.triangle_prune},
    };
    j["status"] = to_string(report.status);
    j["counts_by_order"] = counts_json(counts_by_order(found));
    j["nodes_visited"] = report.nodes_visited;
    j["prunes"] = report.prunes_by_rule;
    j["duplicates"] = report.duplicates_rejected;
    j["forbidden_rejected"] = report.forbidden_rejected;
    j["largest_order"] = report.largest_order;
    j["wall_seconds"] = seconds;
    if (o.report.empty()) {
        err << j.dump(2) << '\n';
    }
    else {
        std::ofstream rep(o.report);
        if (!rep)
            throw UsageError("cannot write '" + o.report + "'");
        rep << j.dump(2) << '\n';
    }
    return report.status == GenerationStatus::Complete ? Exit::ok : Exit::truncated;
}

// --- check ------------------------------------------------------------

struct CheckOptions {
    std::string target, free;
    std::vector<std::string> inputs;
    bool as_json = false;
};

int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err)
{
    const Graph h = parse_graph_literal(o.target);
    const std::vector<Pattern> patterns = parse_patterns(o.free);
    const std::vector<Graph> graphs = read_inputs(o.inputs);
    bool mismatch = false;
    json all = json::array();
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        const Graph& g = graphs[k];
        const bool col = exists_hom(g, h, {}, Oracle::Primary);
        const bool col2 = exists_hom(g, h, {}, Oracle::Independent);
        const bool min = is_minimal_obstruction(g, h, Oracle::Primary);
        const bool min2 = is_minimal_obstruction(g, h, Oracle::Independent);
        if (col != col2 || min != min2) {
            mismatch = true;
            err << "oracle disagreement on " << graph6_encode(g) << ": colorable " << col << "/" << col2
                << ", minimal " << min << "/" << min2 << '\n';
        }
        const std::string& label = k < o.inputs.size() && graphs.size() == o.inputs.size() ? o.inputs[k]
                                                                                           : graph6_encode(g);
        json entry = {{"input", label}, {"graph6", graph6_encode(g)}, {"order", g.order()},
                      {"colorable", col}, {"minimal_obstruction", min}};
        json free = json::object();
        std::ostringstream line;
        line << label << ": order " << g.order() << ", colorable " << yes_no(col) << ", minimal obstruction "
             << yes_no(min);
        for (const auto& f : patterns) {
            const bool is_free = !contains_induced(g, f);
            free[f.label()] = is_free;
            line << ", " << f.label() << "-free " << yes_no(is_free);
        }
        if (!patterns.empty())
            entry["free"] = free;
        all.push_back(entry);
        if (!o.as_json)
            out << line.str() << '\n';
    }
    if (o.as_json)
        out << all.dump(2) << '\n';
    return mismatch ? Exit::oracle_mismatch : Exit::ok;
}

// --- family -----------------------------------------------------------

struct FamilyOptions {
    unsigned q = 0;
    std::optional<unsigned> p;
    std::string p_range, target, free;
    bool certify = false, lowerpath = false, sweep = false;
};

std::pair<unsigned, unsigned> parse_range(const std::string& text)
{
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw UsageError("--p-range expects a..b");
    auto a = parse_count(text.substr(0, dots));
    auto b = parse_count(text.substr(dots + 2));
    if (a == 0 || b < a || b > 1000)
        throw UsageError("--p-range needs 1 <= a <= b");
    return {static_cast<unsigned>(a), static_cast<unsigned>(b)};
}

int cmd_family(const FamilyOptions& o, std::ostream& out, std::ostream&)
{
    make_family_params(o.q, 1);
    std::vector<unsigned> ps;
    if (o.p)
        ps.push_back(*o.p);
    if (!o.p_range.empty()) {
        if (o.p)
            throw UsageError("--p and --p-range are mutually exclusive");
        auto [a, b] = parse_range(o.p_range);
        for (unsigned p = a; p <= b; ++p)
            ps.push_back(p);
    }
    if (ps.empty() && o.lowerpath)
        ps.push_back(2 * o.q + 1);
    const std::vector<Pattern> patterns = parse_patterns(o.free);
    const bool any_action = o.certify || o.lowerpath || o.sweep || !patterns.empty();
    if (ps.empty() && (o.certify || o.sweep))
        throw UsageError("--certify and --sweep need --p or --p-range");
    if (ps.empty() && !any_action)
        throw UsageError("nothing to do: give --p, --p-range or an action");

    Graph h = o.target.empty() ? build(GraphName::cycle(o.q)) : parse_graph_literal(o.target);
    const std::string target_label = o.target.empty() ? "C" + std::to_string(o.q) : o.target;

    if (ps.empty()) {
        for (const auto& f : patterns) {
            FreenessVerdict v = family_is_f_free(o.q, f);
            if (v.free)
                out << f.label() << ": free for every p (checked p=1.." << v.checked_up_to << ")\n";
            else
                out << f.label() << ": contained at p=" << *v.violating_p << "\n";
        }
        return Exit::ok;
    }
    for (unsigned p : ps) {
        const FamilyParams params = make_family_params(o.q, p);
        const std::string name = "G" + std::to_string(o.q) + "," + std::to_string(p);
        if (!any_action)
            out << graph6_encode(build_gqp(params)) << '\n';
        if (o.certify) {
            const bool certified = certify_minimal_obstruction(params, h);
            out << name << " minimal obstruction to " << target_label << "-coloring: " << yes_no(certified) << '\n';
        }
        for (const auto& f : patterns)
            out << name << " " << f.label() << "-free: " << yes_no(!gqp_contains(params, f)) << '\n';
        if (o.lowerpath) {
            auto seq = lowerpath_witness(o.q, p);
            out << name << " induced P" << seq.size() << ":";
            for (Vertex v : seq)
                out << ' ' << v;
            out << '\n';
        }
        if (o.sweep)
            out << name << " longest induced path: " << gqp_longest_induced_path(params) << '\n';
    }
    return Exit::ok;
}

// --- reproduce --------------------------------------------------------

struct ReproduceOptions {
    std::string preset, out_path;
    unsigned workers = 1;
    bool quiet = false;
};

bool report_recipe(const Recipe& r, const RecipeOutcome& res, std::ostream& out)
{
    for (std::size_t k = 0; k < r.steps.size(); ++k) {
        const auto& rep = res.reports[k];
        out << r.name << " seed " << r.steps[k].seed << ": " << to_string(rep.status) << ", "
            << rep.obstructions.size() << " found, " << rep.nodes_visited << " nodes\n";
    }
    const auto counts = counts_by_order(res.obstructions);
    const bool ok = res.complete && res.counts_match && res.graphs_match && res.verified;
    out << "total " << res.obstructions.size() << ": " << format_counts(counts) << (res.counts_match ? " OK" : " MISMATCH")
        << '\n';
    if (!res.counts_match)
        out << "expected " << format_counts(r.expected_counts) << '\n';
    out << "isomorphism classes match reference list: " << (res.graphs_match ? "OK" : "MISMATCH") << '\n';
    if (!res.complete)
        out << "some run was truncated\n";
    if (!res.verified)
        out << "an output failed re-verification\n";
    out << "time " << res.seconds << " s\n";
    return ok;
}

int reproduce_theorem3(std::ostream& out)
{
    const std::vector<std::string> names = {"P13", "P10+P2", "S2,2,2", "S5,5,1", "S11,1,1", "S8,2,1"};
    bool all = true;
    for (const auto& n : names) {
        const auto start = std::chrono::steady_clock::now();
        FreenessVerdict v = family_is_f_free(5, Pattern::from_name(parse_name(n)));
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && v.free;
        out << n << ": " << (v.free ? "free for p=1.." + std::to_string(v.checked_up_to) + " OK"
                                    : "contained at p=" + std::to_string(*v.violating_p) + " MISMATCH")
            << " (" << s << " s)\n";
    }
    out << names.size() << " freeness certificates " << (all ? "OK" : "MISMATCH") << '\n';
    return all ? Exit::ok : Exit::reproduction_mismatch;
}

int reproduce_table(unsigned workers, std::ostream* progress, std::ostream& out)
{
    const std::vector<std::string> presets = {"p6", "p7", "p8"};
    std::vector<std::map<std::size_t, std::size_t>> got, want;
    bool ok = true;
    for (const auto& p : presets) {
        Recipe r = recipe(p);
        RecipeOutcome res = run_recipe(r, workers, progress);
        ok = ok && res.complete && res.counts_match && res.graphs_match && res.verified;
        got.push_back(counts_by_order(res.obstructions));
        want.push_back(r.expected_counts);
    }
    out << "n\\t  6  7  8\n";
    std::vector<std::size_t> totals(presets.size(), 0);
    for (std::size_t n = 3; n <= 13; ++n) {
        out << (n < 10 ? " " : "") << n << "  ";
        for (std::size_t k = 0; k < presets.size(); ++k) {
            std::size_t c = got[k].count(n) ? got[k].at(n) : 0;
            totals[k] += c;
            out << "  " << c;
        }
        out << '\n';
    }
    out << "total";
    for (auto t : totals)
        out << "  " << t;
    out << '\n' << (ok ? "table OK" : "table MISMATCH") << '\n';
    return ok ? Exit::ok : Exit::reproduction_mismatch;
}

int cmd_reproduce(const ReproduceOptions& o, std::ostream& out, std::ostream& err)
{
    std::ostream* progress = o.quiet ? nullptr : &err;
    if (o.preset == "theorem3")
        return reproduce_theorem3(out);
    if (o.preset == "table1")
        return reproduce_table(o.workers, progress, out);
    Recipe r = recipe(o.preset);
    RecipeOutcome res = run_recipe(r, o.workers, progress);
    const bool ok = report_recipe(r, res, out);
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f)
            throw UsageError("cannot write '" + o.out_path + "'");
        for (const auto& g : res.obstructions)
            f << graph6_encode(g) << '\n';
    }
    return ok ? Exit::ok : Exit::reproduction_mismatch;
}

// --- convert ----------------------------------------------------------

int cmd_convert(const std::vector<std::string>& inputs, const std::string& to, std::ostream& out)
{
    if (to != "graph6" && to != "edges" && to != "json")
        throw UsageError("--to must be graph6, edges or json");
    for (const auto& g : read_inputs(inputs)) {
        if (to == "graph6") {
            out << graph6_encode(g) << '\n';
        }
        else if (to == "edges") {
            out << g.order() << ':';
            for (auto [u, v] : g.edges())
                out << ' ' << u << '-' << v;
            out << '\n';
        }
        else {
            json edges = json::array();
            for (auto [u, v] : g.edges())
                edges.push_back({u, v});
            out << json{{"order", g.order()}, {"edges", edges}}.dump() << '\n';
        }
    }
    return Exit::ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generate and certify minimal obstructions to graph homomorphisms", "obstruct"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate F-free minimal obstructions from a seed graph");
    gen_cmd->add_option("--target", gen.target, "Target graph H (name or graph6)")->required();
    gen_cmd->add_option("--forbidden", gen.forbidden, "Comma-separated forbidden induced subgraphs")->required();
    gen_cmd->add_option("--seed", gen.seed, "Seed graph (default K1)");
    gen_cmd->add_option("--max-order", gen.max_order, "Do not expand graphs of this order");
    gen_cmd->add_option("--budget", gen.budget, "Node budget, e.g. 10^6 or 1e6");
    gen_cmd->add_option("--rule-order", gen.rule_order, "Rule schedule, e.g. vertices,10:edges");
    gen_cmd->add_option("--rule-choice", gen.rule_choice, "first: first comparable pair in index order; low-degree (default): lowest-degree pair");
    gen_cmd->add_option("--workers", gen.workers, "Worker threads");
    gen_cmd->add_option("--report", gen.report, "Write the JSON report here instead of standard error");
    gen_cmd->add_flag("--no-prune", gen.no_prune, "Disable comparable-pair and triangle pruning");
    gen_cmd->add_flag("--quiet", gen.quiet, "No progress messages");

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Check colorability, minimality and freeness of graphs");
    check_cmd->add_option("--target", check.target, "Target graph H")->required();
    check_cmd->add_option("--free", check.free, "Comma-separated patterns to test for");
    check_cmd->add_flag("--json", check.as_json, "Machine-readable output");
    check_cmd->add_option("graphs", check.inputs, "Graph names, graph6 strings or graph6 files")->required();

    FamilyOptions fam;
    auto* fam_cmd = app.add_subcommand("family", "Build and certify the circulant family G(q,p)");
    fam_cmd->add_option("--q", fam.q, "Odd q >= 3")->required();
    fam_cmd->add_option("--p", fam.p, "Single p");
    fam_cmd->add_option("--p-range", fam.p_range, "Range a..b of p");
    fam_cmd->add_option("--target", fam.target, "Target H for --certify (default C_q)");
    fam_cmd->add_option("--free", fam.free, "Patterns to test; without --p, sweep p up to |V(F)|+1");
    fam_cmd->add_flag("--certify", fam.certify, "Certify G(q,p) as a minimal obstruction");
    fam_cmd->add_flag("--lowerpath", fam.lowerpath, "Print the explicit induced path on 3q-3 vertices");
    fam_cmd->add_flag("--sweep", fam.sweep, "Report the longest induced path");

    ReproduceOptions rep;
    auto* rep_cmd = app.add_subcommand("reproduce", "Run a reproduction preset and compare with the expected census");
    rep_cmd->add_option("preset", rep.preset, "p6, p7, p8, s221, s311, table1 or theorem3")
        ->required()
        ->check(CLI::IsMember({"p6", "p7", "p8", "s221", "s311", "table1", "theorem3"}));
    rep_cmd->add_option("--workers", rep.workers, "Worker threads");
    rep_cmd->add_option("--out", rep.out_path, "Write the obstructions as graph6");
    rep_cmd->add_flag("--quiet", rep.quiet, "No progress messages");

    std::vector<std::string> convert_inputs;
    std::string convert_to = "graph6";
    auto* conv_cmd = app.add_subcommand("convert", "Convert graph names or graph6 to graph6, edge lists or JSON");
    conv_cmd->add_option("graphs", convert_inputs, "Graph names, graph6 strings or graph6 files")->required();
    conv_cmd->add_option("--to", convert_to, "graph6, edges or json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (gen_cmd->parsed())
            return cmd_gen(gen, out, err);
        if (check_cmd->parsed())
            return cmd_check(check, out, err);
        if (fam_cmd->parsed())
            return cmd_family(fam, out, err);
        if (rep_cmd->parsed())
            return cmd_reproduce(rep, out, err);
        if (conv_cmd->parsed())
            return cmd_convert(convert_inputs, convert_to, out);
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return Exit::usage;
    }
    return Exit::usage;
}

} // namespace obstruct::cli
