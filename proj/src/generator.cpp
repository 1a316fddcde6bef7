#include <obstruct/canonical.hpp>
#include <obstruct/constructions.hpp>
#include <obstruct/errors.hpp>
#include <obstruct/generator.hpp>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>

namespace obstruct {

Rule RuleSchedule::at(std::size_t order) const
{
    auto it = by_order_.find(order);
    return it == by_order_.end() ? fallback_ : it->second;
}

namespace {

std::optional<Rule> parse_rule(std::string_view s)
{
    if (s == "vertices" || s == "v" || s == "VerticesFirst")
        return Rule::VerticesFirst;
    if (s == "edges" || s == "e" || s == "EdgesFirst")
        return Rule::EdgesFirst;
    return std::nullopt;
}

const char* rule_name(Rule r) { return r == Rule::VerticesFirst ? "vertices" : "edges"; }

} // namespace

RuleSchedule RuleSchedule::parse(std::string_view text)
{
    RuleSchedule schedule;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view token = text.substr(start, end - start);
        auto colon = token.find(':');
        if (colon == std::string_view::npos) {
            auto r = parse_rule(token);
            if (!r)
                throw ParseError("unknown rule '" + std::string(token) + "'", start);
            schedule.fallback_ = *r;
        }
        else {
            std::string_view num = token.substr(0, colon);
            auto r = parse_rule(token.substr(colon + 1));
            std::size_t order = 0;
            if (num.empty() || !r)
                throw ParseError("bad rule override '" + std::string(token) + "'", start);
            for (char c : num) {
                if (c < '0' || c > '9')
                    throw ParseError("bad order in rule override '" + std::string(token) + "'", start);
                order = order * 10 + static_cast<std::size_t>(c - '0');
            }
            schedule.by_order_[order] = *r;
        }
        start = end + 1;
    }
    return schedule;
}

std::string RuleSchedule::to_string() const
{
    std::string s = rule_name(fallback_);
    for (auto [order, rule] : by_order_)
        s += "," + std::to_string(order) + ":" + rule_name(rule);
    return s;
}

VertexSet ComparablePair::domain() const
{
    if (kind == Kind::Retraction)
        return set;
    VertexSet s = VertexSet::singleton(u);
    if (kind == Kind::Edge)
        s.insert(v);
    return s;
}

Vertex ComparablePair::image(Vertex r) const
{
    if (kind == Kind::Retraction)
        return images.at(r);
    return r == u ? u_image : v_image;
}

std::string to_string(GenerationStatus s)
{
    switch (s) {
        case GenerationStatus::Complete: return "Complete";
        case GenerationStatus::TruncatedByOrder: return "TruncatedByOrder";
        case GenerationStatus::TruncatedByBudget: return "TruncatedByBudget";
    }
    return "?";
}

namespace {

// Every member of `need` is a hull neighbor of t.
bool dominated_by(HullOracle& j, const VertexSet& need, Vertex t)
{
    for (Vertex y : need)
        if (!j.adjacent(t, y))
            return false;
    return true;
}

void require_colorable(const HomSolver& solver, const Graph& i)
{
    if (!solver.colorable(i, i.vertices()))
        throw PreconditionError("comparable pairs need a colorable graph");
}

// First w for which (u, w) is a comparable pair.
std::optional<ComparablePair> comparable_vertex_for(const HomSolver& solver, const Graph& i, Vertex u)
{
    VertexSet rest = i.vertices();
    rest.erase(u);
    HullOracle j(solver, i, rest);
    const VertexSet& nu = i.neighbors(u);
    for (Vertex w : rest) {
        if (nu.contains(w))
            continue;
        if (nu.is_subset_of(i.neighbors(w)) || dominated_by(j, nu, w))
            return ComparablePair::vertices(u, w);
    }
    return std::nullopt;
}

// First image edge making uv part of a comparable pair.
std::optional<ComparablePair> comparable_edge_for(const HomSolver& solver, const Graph& i, Vertex u, Vertex v)
{
    const std::size_t n = i.order();
    VertexSet rest = i.vertices();
    rest.erase(u);
    rest.erase(v);
    HullOracle j(solver, i, rest);
    const VertexSet nu = i.neighbors(u) - VertexSet::singleton(v);
    const VertexSet nv = i.neighbors(v) - VertexSet::singleton(u);
    // Lazily evaluated domination flags per candidate image.
    std::vector<std::int8_t> takes_u(n, -1), takes_v(n, -1);
    auto flag = [&](std::vector<std::int8_t>& memo, const VertexSet& need, Vertex t) {
        if (memo[t] < 0)
            memo[t] = dominated_by(j, need, t) ? 1 : 0;
        return memo[t] == 1;
    };
    for (Vertex a : rest)
        for (Vertex b : rest) {
            if (b <= a)
                continue;
            const bool forward = flag(takes_u, nu, a) && flag(takes_v, nv, b);
            const bool backward = !forward && flag(takes_u, nu, b) && flag(takes_v, nv, a);
            if (!forward && !backward)
                continue;
            if (!j.adjacent(a, b))
                continue;
            return forward ? ComparablePair::edges(u, v, a, b) : ComparablePair::edges(u, v, b, a);
        }
    return std::nullopt;
}

// Images whose domination holds in i itself, before any hull edge.
std::optional<ComparablePair> graph_dominated_vertex(const Graph& i, Vertex u)
{
    const VertexSet& nu = i.neighbors(u);
    for (Vertex w : i.vertices())
        if (w != u && !nu.contains(w) && nu.is_subset_of(i.neighbors(w)))
            return ComparablePair::vertices(u, w);
    return std::nullopt;
}

std::optional<ComparablePair> graph_dominated_edge(const Graph& i, Vertex u, Vertex v)
{
    const VertexSet nu = i.neighbors(u) - VertexSet::singleton(v);
    const VertexSet nv = i.neighbors(v) - VertexSet::singleton(u);
    for (auto [a, b] : i.edges()) {
        if (a == u || a == v || b == u || b == v)
            continue;
        if (nu.is_subset_of(i.neighbors(a)) && nv.is_subset_of(i.neighbors(b)))
            return ComparablePair::edges(u, v, a, b);
        if (nu.is_subset_of(i.neighbors(b)) && nv.is_subset_of(i.neighbors(a)))
            return ComparablePair::edges(u, v, b, a);
    }
    return std::nullopt;
}

} // namespace

std::optional<ComparablePair> find_comparable_vertices(const HomSolver& solver, const Graph& i)
{
    for (Vertex u = 0; u < i.order(); ++u)
        if (auto p = comparable_vertex_for(solver, i, u))
            return p;
    return std::nullopt;
}

std::optional<ComparablePair> find_comparable_edges(const HomSolver& solver, const Graph& i)
{
    for (auto [u, v] : i.edges())
        if (auto p = comparable_edge_for(solver, i, u, v))
            return p;
    return std::nullopt;
}

std::optional<ComparablePair> find_low_degree_pair(const HomSolver& solver, const Graph& i, Rule first)
{
    struct Domain {
        std::size_t weight;
        bool edge;
        Vertex u, v;
    };
    std::vector<Domain> domains;
    for (Vertex u = 0; u < i.order(); ++u)
        domains.push_back({i.neighbors(u).count(), false, u, 0});
    for (auto [u, v] : i.edges())
        domains.push_back({std::max(i.neighbors(u).count(), i.neighbors(v).count()), true, u, v});
    const bool edges_first = first == Rule::EdgesFirst;
    std::stable_sort(domains.begin(), domains.end(), [&](const Domain& a, const Domain& b) {
        if (a.weight != b.weight)
            return a.weight < b.weight;
        return a.edge != b.edge && a.edge == edges_first;
    });
    for (const Domain& d : domains) {
        std::optional<ComparablePair> p =
            d.edge ? graph_dominated_edge(i, d.u, d.v) : graph_dominated_vertex(i, d.u);
        if (!p)
            p = d.edge ? comparable_edge_for(solver, i, d.u, d.v) : comparable_vertex_for(solver, i, d.u);
        if (p)
            return p;
    }
    return std::nullopt;
}

std::optional<ComparablePair> find_comparable_vertices(const Graph& i, const Graph& h)
{
    HomSolver solver(h);
    require_colorable(solver, i);
    return find_comparable_vertices(solver, i);
}

std::optional<ComparablePair> find_comparable_edges(const Graph& i, const Graph& h)
{
    HomSolver solver(h);
    require_colorable(solver, i);
    return find_comparable_edges(solver, i);
}

std::optional<ComparablePair> find_low_degree_pair(const Graph& i, const Graph& h, Rule first)
{
    HomSolver solver(h);
    require_colorable(solver, i);
    return find_low_degree_pair(solver, i, first);
}

namespace {

// Components of i restricted to `within`, each as a vertex set.
std::vector<VertexSet> components(const Graph& i, VertexSet within)
{
    std::vector<VertexSet> out;
    while (!within.empty()) {
        VertexSet comp = VertexSet::singleton(*within.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex y : frontier)
                next |= i.neighbors(y);
            next = (next & within) - comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        within -= comp;
    }
    return out;
}

// psi for U = `part`, a component of i - sep, or nullopt.
std::optional<std::vector<Vertex>> retract(const Graph& i, const Graph& h, const VertexSet& part, const VertexSet& sep)
{
    const VertexSet rest = i.vertices() - part;
    const std::vector<Vertex> rest_list(rest.begin(), rest.end());
    std::vector<Vertex> local(i.order(), 0);
    for (Vertex k = 0; k < rest_list.size(); ++k)
        local[rest_list[k]] = k;
    const Graph j = hull(induced_subgraph(i, rest), h);

    // Guest: part plus the separator, which stays fixed.
    const VertexSet guest_set = part | sep;
    const std::vector<Vertex> guest_list(guest_set.begin(), guest_set.end());
    const Graph guest = induced_subgraph(i, guest_set);
    PartialAssignment pre(guest.order());
    for (Vertex k = 0; k < guest_list.size(); ++k)
        if (sep.contains(guest_list[k]))
            pre.assign(k, local[guest_list[k]]);
    const std::optional<Coloring> psi = find_hom(guest, j, pre);
    if (!psi)
        return std::nullopt;
    std::vector<Vertex> images(i.order(), 0);
    for (Vertex k = 0; k < guest_list.size(); ++k)
        images[guest_list[k]] = rest_list[(*psi)[k]];
    return images;
}

} // namespace

std::optional<ComparablePair> find_comparable_retraction(const Graph& i, const Graph& h)
{
    std::optional<ComparablePair> best;
    auto try_separator = [&](const VertexSet& sep) {
        const std::vector<VertexSet> parts = components(i, i.vertices() - sep);
        if (parts.size() < 2)
            return;
        for (const VertexSet& part : parts) {
            if (best && part.count() >= best->set.count())
                continue;
            // Only components that see the whole separator; the others hang
            // off a smaller one, which is tried on its own.
            bool sees_all = true;
            for (Vertex c : sep)
                sees_all = sees_all && i.neighbors(c).intersects(part);
            if (!sees_all)
                continue;
            if (auto images = retract(i, h, part, sep))
                best = ComparablePair::retraction(part, std::move(*images));
        }
    };
    const std::size_t n = i.order();
    for (Vertex c = 0; c < n; ++c)
        try_separator(VertexSet::singleton(c));
    for (Vertex c = 0; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d)
            try_separator(VertexSet{c, d});
    return best;
}

bool rule_admits(const HomSolver& solver, const Graph& child, const ComparablePair& rule)
{
    const auto x = static_cast<Vertex>(child.order() - 1);
    const VertexSet& s = child.neighbors(x);
    const VertexSet removed = rule.domain();
    if (!s.intersects(removed))
        return false;
    const VertexSet rest = child.vertices() - removed;
    for (Vertex r : s & removed) {
        const Vertex image = rule.image(r);
        if (s.contains(image))
            continue; // x is already adjacent to the image
        if (solver.find_separating(child, rest, image, x))
            return true;
    }
    // No separating coloring: either the hull forces every edge, or it is
    // undefined because the reduced graph has no coloring at all.
    return !solver.colorable(child, rest);
}

namespace {

struct CandidateWalker {
    const Graph& g;
    bool independent;
    const std::function<bool(const VertexSet&)>& accept;
    const CandidatePrune& prune;
    std::optional<VertexSet> must_meet;

    bool walk(const VertexSet& s, const VertexSet& allowed)
    {
        if (!must_meet || s.intersects(*must_meet))
            if (!accept(s))
                return false;
        if (prune && !allowed.empty() && prune(s, allowed))
            return true;
        VertexSet remaining = allowed;
        for (Vertex v : allowed) {
            remaining.erase(v);
            VertexSet next = remaining;
            if (independent)
                next -= g.neighbors(v);
            VertexSet grown = s;
            grown.insert(v);
            if (!walk(grown, next))
                return false;
        }
        return true;
    }
};

} // namespace

void for_each_candidate(const Graph& i, const std::optional<ComparablePair>& rule, bool triangle_prune,
                        const std::function<bool(const VertexSet&)>& fn, bool nonempty, const CandidatePrune& prune)
{
    CandidateWalker walker{i, triangle_prune, fn, prune, std::nullopt};
    if (rule && rule->kind == ComparablePair::Kind::Vertex) {
        VertexSet allowed = i.vertices();
        allowed.erase(rule->u);
        if (triangle_prune)
            allowed -= i.neighbors(rule->u);
        walker.walk(VertexSet::singleton(rule->u), allowed);
        return;
    }
    if (rule)
        walker.must_meet = rule->domain();
    else if (nonempty)
        walker.must_meet = i.vertices();
    walker.walk(VertexSet{}, i.vertices());
}

std::vector<VertexSet> admissible_neighborhoods(const Graph& i, const Graph& h, const std::optional<ComparablePair>& rule,
                                                bool triangle_prune)
{
    HomSolver solver(h);
    std::vector<VertexSet> out;
    for_each_candidate(i, rule, triangle_prune, [&](const VertexSet& s) {
        if (!rule || rule_admits(solver, add_vertex(i, s), *rule))
            out.push_back(s);
        return true;
    });
    return out;
}

namespace {

class Engine {
public:
    explicit Engine(const GenerationConfig& cfg)
        : cfg_(cfg), solver_(cfg.target), nonempty_(cfg.connected_only && is_connected(cfg.seed))
    {
    }

    GenerationReport run()
    {
        if (cfg_.seed.order() > cfg_.max_order)
            throw ParameterError("seed order exceeds max_order");
        if (cfg_.node_budget == 0)
            throw ParameterError("node budget must be positive");
        if (cfg_.triangle_prune && has_triangle(cfg_.target))
            throw ParameterError("triangle pruning needs a triangle-free target");

        if (cfg_.triangle_prune) {
            const Graph k3 = build(GraphName::complete(3));
            if (is_family_free(k3, cfg_.forbidden) && is_minimal_obstruction(k3, cfg_.target)) {
                seen_.insert_if_new(canonical_form(k3));
                found_.push_back(k3);
            }
        }

        if (is_family_free(cfg_.seed, cfg_.forbidden)) {
            if (cfg_.workers > 1)
                run_parallel();
            else if (charge(cfg_.seed.order()))
                node(cfg_.seed, std::nullopt);
        }
        else {
            ++forbidden_rejected_;
        }

        GenerationReport report;
        report.obstructions = std::move(found_);
        report.nodes_visited = std::min<std::uint64_t>(nodes_.load(), cfg_.node_budget);
        report.prunes_by_rule = prunes_.load();
        report.duplicates_rejected = duplicates_.load();
        report.forbidden_rejected = forbidden_rejected_.load();
        report.vertex_rules = vertex_rules_.load();
        report.edge_rules = edge_rules_.load();
        report.retraction_rules = retraction_rules_.load();
        report.largest_order = largest_.load();
        if (budget_hit_)
            report.status = GenerationStatus::TruncatedByBudget;
        else if (order_hit_)
            report.status = GenerationStatus::TruncatedByOrder;
        return report;
    }

private:
    std::optional<ComparablePair> choose_rule(const Graph& i)
    {
        if (!cfg_.comparable_rules)
            return std::nullopt;
        const Rule first = cfg_.schedule.at(i.order());
        std::optional<ComparablePair> rule;
        if (cfg_.rule_choice == RuleChoice::LowDegree) {
            rule = find_low_degree_pair(solver_, i, first);
        }
        else {
            const bool vertices_first = first == Rule::VerticesFirst;
            rule = vertices_first ? find_comparable_vertices(solver_, i) : find_comparable_edges(solver_, i);
            if (!rule)
                rule = vertices_first ? find_comparable_edges(solver_, i) : find_comparable_vertices(solver_, i);
        }
        if (!rule && cfg_.retraction_rules)
            rule = find_comparable_retraction(i, cfg_.target);
        count_rule(rule);
        return rule;
    }

    // Whether i restricted to the vertices outside `open`, plus x joined to
    // s, has a forbidden pattern through x. Membership of the open vertices
    // cannot destroy such a copy, so every extension of s contains it too.
    bool decided_part_contains_forbidden(const Graph& i, const VertexSet& s, const VertexSet& open) const
    {
        const VertexSet decided = i.vertices() - open;
        VertexSet local_s;
        Vertex k = 0;
        for (Vertex v : decided) {
            if (s.contains(v))
                local_s.insert(k);
            ++k;
        }
        const Graph part = add_vertex(induced_subgraph(i, decided), local_s);
        const auto x = static_cast<Vertex>(part.order() - 1);
        for (const Pattern& f : cfg_.forbidden)
            if (contains_induced_using(part, f, x))
                return true;
        return false;
    }

    // Vertex-deletion minimality; deleting `skip` is known to leave a
    // colorable graph.
    bool minimal(const Graph& i, std::optional<Vertex> skip) const
    {
        for (Vertex v = 0; v < i.order(); ++v) {
            if (skip && v == *skip)
                continue;
            VertexSet rest = i.vertices();
            rest.erase(v);
            if (!solver_.colorable(i, rest))
                return false;
        }
        return true;
    }

    void report_progress(std::uint64_t visited, std::size_t order)
    {
        if (!cfg_.progress || cfg_.progress_interval == 0 || visited % cfg_.progress_interval != 0)
            return;
        GenerationProgress p;
        p.nodes_visited = visited;
        p.seen = seen_.size();
        p.current_order = order;
        {
            std::lock_guard lock(found_mutex_);
            p.obstructions = found_.size();
        }
        cfg_.progress(p);
    }

    // `i` is already known to be free of the forbidden patterns; `x` is the
    // vertex added last, if any.
    // Every candidate child counts as a visit, including those rejected as
    // containing a forbidden pattern. Otherwise a single wide node can run for
    // hours inside a small budget.
    bool charge(std::size_t order)
    {
        if (budget_hit_)
            return false;
        const std::uint64_t visited = nodes_.fetch_add(1);
        if (visited >= cfg_.node_budget) {
            budget_hit_ = true;
            return false;
        }
        report_progress(visited + 1, order);
        return true;
    }

    // The caller has already charged the visit.
    void node(const Graph& i, std::optional<Vertex> x)
    {
        if (budget_hit_)
            return;
        for (std::size_t cur = largest_.load(); i.order() > cur && !largest_.compare_exchange_weak(cur, i.order());)
            ;

        if (!solver_.colorable(i, i.vertices())) {
            if (!seen_.insert_if_new(canonical_form(i))) {
                ++duplicates_;
                return;
            }
            if (minimal(i, x)) {
                std::lock_guard lock(found_mutex_);
                found_.push_back(i);
            }
            return;
        }
        if (!seen_.insert_if_new(canonical_form(i))) {
            ++duplicates_;
            return;
        }
        if (i.order() >= cfg_.max_order) {
            order_hit_ = true;
            return;
        }

        const auto new_vertex = static_cast<Vertex>(i.order());
        each_child(i, choose_rule(i), [&](const VertexSet& s) {
            dispatch(add_vertex(i, s), new_vertex);
            return !budget_hit_;
        });
    }

    // Calls fn(S) for each neighborhood S whose child is free of the
    // forbidden patterns and passes the filter of `rule`, charging every
    // candidate. Stops when fn returns false or the budget runs out.
    void each_child(const Graph& i, const std::optional<ComparablePair>& rule,
                    const std::function<bool(const VertexSet&)>& fn)
    {
        // Set when the last candidate contained a forbidden pattern; only
        // then can the decided part alone contain one.
        bool last_rejected = false;
        const CandidatePrune prune = [&](const VertexSet& s, const VertexSet& open) {
            return last_rejected && decided_part_contains_forbidden(i, s, open);
        };
        const auto new_vertex = static_cast<Vertex>(i.order());
        for_each_candidate(i, rule, cfg_.triangle_prune, [&](const VertexSet& s) {
            if (!charge(i.order() + 1))
                return false;
            const Graph child = add_vertex(i, s);
            last_rejected = false;
            for (const Pattern& f : cfg_.forbidden)
                if (contains_induced_using(child, f, new_vertex)) {
                    ++forbidden_rejected_;
                    last_rejected = true;
                    return true;
                }
            if (rule && !rule_admits(solver_, child, *rule)) {
                ++prunes_;
                return true;
            }
            return fn(s);
        }, nonempty_, prune);
    }

    void count_rule(const std::optional<ComparablePair>& rule)
    {
        if (rule)
            ++(rule->kind == ComparablePair::Kind::Vertex ? vertex_rules_
               : rule->kind == ComparablePair::Kind::Edge ? edge_rules_
                                                           : retraction_rules_);
    }

    struct Task {
        Graph graph;
        std::optional<Vertex> last;
    };

    void dispatch(Graph child, Vertex x)
    {
        if (cfg_.workers > 1 && waiting_.load() > 0) {
            {
                std::lock_guard lock(queue_mutex_);
                queue_.push_back(Task{std::move(child), x});
            }
            queue_cv_.notify_one();
            return;
        }
        node(child, x);
    }

    void worker()
    {
        std::unique_lock lock(queue_mutex_);
        for (;;) {
            if (done_)
                return;
            if (!queue_.empty()) {
                Task task = std::move(queue_.front());
                queue_.pop_front();
                ++busy_;
                lock.unlock();
                try {
                    // Only the seed arrives uncharged.
                    if (task.last || charge(task.graph.order()))
                        node(task.graph, task.last);
                }
                catch (...) {
                    std::lock_guard err(error_mutex_);
                    if (!error_)
                        error_ = std::current_exception();
                    budget_hit_ = true;
                }
                lock.lock();
                --busy_;
                if (busy_ == 0 && queue_.empty()) {
                    done_ = true;
                    queue_cv_.notify_all();
                    return;
                }
                continue;
            }
            ++waiting_;
            queue_cv_.wait(lock, [&] { return done_ || !queue_.empty(); });
            --waiting_;
        }
    }

    void run_parallel()
    {
        queue_.push_back(Task{cfg_.seed, std::nullopt});
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < cfg_.workers; ++k)
            pool.emplace_back([this] { worker(); });
        for (auto& t : pool)
            t.join();
        if (error_)
            std::rethrow_exception(error_);
    }

    const GenerationConfig& cfg_;
    HomSolver solver_;
    bool nonempty_;
    SeenStore seen_;

    std::mutex found_mutex_;
    std::vector<Graph> found_;

    std::atomic<std::uint64_t> nodes_{0}, prunes_{0}, duplicates_{0}, forbidden_rejected_{0};
    std::atomic<std::uint64_t> vertex_rules_{0}, edge_rules_{0}, retraction_rules_{0};
    std::atomic<std::size_t> largest_{0};
    std::atomic<bool> budget_hit_{false}, order_hit_{false};

    std::mutex queue_mutex_;
    std::condition_variable queue_cv_;
    std::deque<Task> queue_;
    std::atomic<unsigned> waiting_{0};
    unsigned busy_ = 0;
    bool done_ = false;
    std::mutex error_mutex_;
    std::exception_ptr error_;
};

} // namespace

GenerationReport expand(const GenerationConfig& cfg)
{
    return Engine(cfg).run();
}

} // namespace obstruct
