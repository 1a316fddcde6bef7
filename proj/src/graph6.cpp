#include <obstruct/errors.hpp>
#include <obstruct/graph6.hpp>

#include <algorithm>
#include <istream>

namespace obstruct {

namespace {

constexpr std::string_view header = ">>graph6<<";

void encode_order(std::string& out, std::size_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    }
    else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
}

unsigned chunk(std::string_view s, std::size_t pos, std::size_t base)
{
    if (pos >= s.size())
        throw ParseError("graph6: unexpected end of line", base + pos);
    auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: byte outside printable range 63..126", base + pos);
    return c - 63U;
}

} // namespace

std::string graph6_encode(const Graph& g)
{
    const std::size_t n = g.order();
    std::string out;
    encode_order(out, n);
    unsigned acc = 0;
    int bits = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph graph6_decode(std::string_view line)
{
    std::size_t base = 0;
    if (line.substr(0, header.size()) == header) {
        line.remove_prefix(header.size());
        base = header.size();
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw ParseError("graph6: empty line", base);

    std::size_t pos = 0;
    std::size_t n = 0;
    if (line[0] != '~') {
        n = chunk(line, 0, base);
        pos = 1;
    }
    else if (line.size() > 1 && line[1] == '~') {
        for (std::size_t k = 0; k < 6; ++k)
            n = (n << 6) | chunk(line, 2 + k, base);
        pos = 8;
    }
    else {
        for (std::size_t k = 0; k < 3; ++k)
            n = (n << 6) | chunk(line, 1 + k, base);
        pos = 4;
    }
    if (n > Graph::capacity)
        throw CapacityError("graph6: order " + std::to_string(n) + " exceeds capacity");

    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = pos + (pairs + 5) / 6;
    if (line.size() != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " bytes, found "
                             + std::to_string(line.size()),
                         base + std::min(line.size(), expected));

    GraphBuilder b(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            unsigned c = chunk(line, pos + k / 6, base);
            if ((c >> (5 - k % 6)) & 1U)
                b.add_edge(i, j);
        }
    // Padding bits must be zero.
    if (pairs % 6 != 0) {
        unsigned last = chunk(line, expected - 1, base);
        if (last & ((1U << (6 - pairs % 6)) - 1))
            throw ParseError("graph6: non-zero padding bits", base + expected - 1);
    }
    return std::move(b).build();
}

std::vector<Graph> read_graph6(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r")
            continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

} // namespace obstruct
