#include <obstruct/constructions.hpp>
#include <obstruct/errors.hpp>
#include <obstruct/family.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>

namespace obstruct {

GraphName GraphName::path(unsigned t) { return {Kind::Path, {t}, {}}; }
GraphName GraphName::cycle(unsigned t) { return {Kind::Cycle, {t}, {}}; }
GraphName GraphName::complete(unsigned n) { return {Kind::Complete, {n}, {}}; }
GraphName GraphName::matching(unsigned q) { return {Kind::Matching, {q}, {}}; }
GraphName GraphName::q_gadget(unsigned i) { return {Kind::QGadget, {i}, {}}; }
GraphName GraphName::gqp(unsigned q, unsigned p) { return {Kind::Gqp, {q, p}, {}}; }

GraphName GraphName::subdivided_claw(unsigned a, unsigned b, unsigned c)
{
    std::vector<unsigned> legs{a, b, c};
    std::sort(legs.begin(), legs.end(), std::greater<>());
    return {Kind::SubdividedClaw, legs, {}};
}

GraphName GraphName::disjoint_union(GraphName a, GraphName b)
{
    return {Kind::DisjointUnion, {}, {std::move(a), std::move(b)}};
}

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw ParameterError(what);
}

Graph build_path(unsigned t)
{
    GraphBuilder b(t);
    for (Vertex i = 0; i + 1 < t; ++i)
        b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph build_cycle(unsigned t)
{
    GraphBuilder b(t);
    for (Vertex i = 0; i < t; ++i)
        b.add_edge(i, (i + 1) % t);
    return std::move(b).build();
}

Graph build_complete(unsigned n)
{
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            b.add_edge(i, j);
    return std::move(b).build();
}

Graph build_claw(unsigned a, unsigned b, unsigned c)
{
    GraphBuilder g(1 + a + b + c);
    Vertex next = 1;
    for (unsigned leg : {a, b, c}) {
        Vertex prev = 0;
        for (unsigned k = 0; k < leg; ++k, ++next) {
            g.add_edge(prev, next);
            prev = next;
        }
    }
    return std::move(g).build();
}

Graph build_matching(unsigned q)
{
    GraphBuilder b(2 * q);
    for (Vertex k = 0; k < q; ++k)
        b.add_edge(2 * k, 2 * k + 1);
    return std::move(b).build();
}

Graph build_q_gadget(unsigned i)
{
    GraphBuilder b(10 - i);
    for (Vertex v = 0; v < 4; ++v)
        b.add_edge(v, v + 1);
    b.add_edge(4, 0);
    // Second cycle: i-1 -> 5 -> ... -> 9-i -> 0.
    Vertex prev = i - 1;
    for (Vertex v = 5; v <= 9 - i; ++v) {
        b.add_edge(prev, v);
        prev = v;
    }
    b.add_edge(prev, 0);
    return std::move(b).build();
}

} // namespace

Graph build(const GraphName& name)
{
    const auto& p = name.params;
    switch (name.kind) {
        case GraphName::Kind::Path:
            require(p.size() == 1 && p[0] >= 1, "path needs t >= 1");
            return build_path(p[0]);
        case GraphName::Kind::Cycle:
            require(p.size() == 1 && p[0] >= 3, "cycle needs t >= 3");
            return build_cycle(p[0]);
        case GraphName::Kind::Complete:
            require(p.size() == 1 && p[0] >= 1, "complete graph needs n >= 1");
            return build_complete(p[0]);
        case GraphName::Kind::SubdividedClaw:
            require(p.size() == 3 && p[0] >= p[1] && p[1] >= p[2] && p[2] >= 1,
                    "subdivided claw needs a >= b >= c >= 1");
            return build_claw(p[0], p[1], p[2]);
        case GraphName::Kind::Matching:
            require(p.size() == 1 && p[0] >= 1, "matching needs q >= 1");
            return build_matching(p[0]);
        case GraphName::Kind::QGadget:
            require(p.size() == 1 && p[0] >= 1 && p[0] <= 4, "Q gadget needs i in 1..4");
            return build_q_gadget(p[0]);
        case GraphName::Kind::Gqp:
            require(p.size() == 2, "G needs q and p");
            return build_gqp(make_family_params(p[0], p[1]));
        case GraphName::Kind::DisjointUnion:
            require(name.parts.size() == 2, "disjoint union needs two parts");
            return disjoint_union(build(name.parts[0]), build(name.parts[1]));
    }
    throw ParameterError("unknown graph name kind");
}

std::string to_string(const GraphName& name)
{
    auto join = [](const std::vector<unsigned>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(v[i]);
        }
        return s;
    };
    switch (name.kind) {
        case GraphName::Kind::Path: return "P" + join(name.params);
        case GraphName::Kind::Cycle: return "C" + join(name.params);
        case GraphName::Kind::Complete: return "K" + join(name.params);
        case GraphName::Kind::SubdividedClaw: return "S" + join(name.params);
        case GraphName::Kind::Matching: return join(name.params) + "K2";
        case GraphName::Kind::QGadget: return "Q" + join(name.params);
        case GraphName::Kind::Gqp: return "G" + join(name.params);
        case GraphName::Kind::DisjointUnion: return to_string(name.parts[0]) + "+" + to_string(name.parts[1]);
    }
    return "?";
}

namespace {

class NameParser {
public:
    explicit NameParser(std::string_view text) : s_(text) {}

    GraphName parse()
    {
        GraphName g = term();
        while (pos_ < s_.size() && s_[pos_] == '+') {
            ++pos_;
            g = GraphName::disjoint_union(std::move(g), term());
        }
        if (pos_ != s_.size())
            fail("unexpected character");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("graph name '" + std::string(s_) + "': " + what, pos_);
    }

    bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

    unsigned number()
    {
        if (!digit())
            fail("expected a number");
        unsigned long v = 0;
        while (digit()) {
            v = v * 10 + static_cast<unsigned>(s_[pos_++] - '0');
            if (v > 1000000)
                fail("number too large");
        }
        return static_cast<unsigned>(v);
    }

    bool separator()
    {
        if (pos_ < s_.size() && (s_[pos_] == ',' || s_[pos_] == '-')) {
            ++pos_;
            return true;
        }
        return false;
    }

    GraphName term()
    {
        if (digit()) {
            unsigned m = number();
            if (pos_ >= s_.size() || s_[pos_] != 'K')
                fail("expected 'K' after multiplicity");
            ++pos_;
            unsigned n = number();
            if (m == 0)
                fail("multiplicity must be positive");
            if (n == 2)
                return GraphName::matching(m);
            GraphName g = GraphName::complete(n);
            for (unsigned k = 1; k < m; ++k)
                g = GraphName::disjoint_union(std::move(g), GraphName::complete(n));
            return g;
        }
        if (pos_ >= s_.size())
            fail("expected a graph name");
        const char c = s_[pos_++];
        switch (c) {
            case 'P': return GraphName::path(number());
            case 'C': return GraphName::cycle(number());
            case 'K': return GraphName::complete(number());
            case 'Q': return GraphName::q_gadget(number());
            case 'S': return claw();
            case 'G': {
                unsigned q = number();
                if (!separator())
                    fail("expected ',' or '-' between q and p");
                return GraphName::gqp(q, number());
            }
            default: --pos_; fail(std::string("unknown graph name '") + c + "'");
        }
    }

    GraphName claw()
    {
        const std::size_t start = pos_;
        unsigned a = number();
        if (separator()) {
            unsigned b = number();
            if (!separator())
                fail("expected ',' or '-' before the third leg");
            return GraphName::subdivided_claw(a, b, number());
        }
        // Compact form: exactly three single digits.
        if (pos_ - start != 3)
            fail("subdivided claw needs three legs");
        auto d = [&](std::size_t k) { return static_cast<unsigned>(s_[start + k] - '0'); };
        return GraphName::subdivided_claw(d(0), d(1), d(2));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

// Number of parameters still missing from the trailing S/G term of a token.
int missing_params(std::string_view token)
{
    auto plus = token.rfind('+');
    std::string_view last = plus == std::string_view::npos ? token : token.substr(plus + 1);
    if (last.empty())
        return 0;
    int needed = 0;
    if (last[0] == 'S')
        needed = 3;
    else if (last[0] == 'G')
        needed = 2;
    else
        return 0;
    int have = 1 + static_cast<int>(std::count(last.begin(), last.end(), ',')
                                    + std::count(last.begin(), last.end(), '-'));
    if (needed == 3 && have == 1 && last.size() == 4)
        return 0; // compact S311
    return std::max(0, needed - have);
}

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

} // namespace

GraphName parse_name(std::string_view text) { return NameParser(text).parse(); }

std::vector<GraphName> parse_name_list(std::string_view text)
{
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view tok = text.substr(start, comma - start);
        if (!tokens.empty() && all_digits(tok) && missing_params(tokens.back()) > 0)
            tokens.back() += "," + std::string(tok);
        else
            tokens.emplace_back(tok);
        start = comma + 1;
    }
    std::vector<GraphName> out;
    for (const auto& t : tokens) {
        if (t.empty())
            throw ParseError("empty graph name in list '" + std::string(text) + "'", 0);
        out.push_back(parse_name(t));
    }
    return out;
}

} // namespace obstruct
