#include "dompoly/graph_io.hpp"

#include "dompoly/numeric.hpp"
#include "dompoly/rng.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace dompoly {

namespace {

    constexpr std::string_view g6_header = ">>graph6<<";

    // Reads the graph6 size field; advances pos past it.
    long long read_g6_size(std::string_view rec, std::size_t& pos)
    {
        auto byte_at = [&](std::size_t i) -> unsigned {
            if (i >= rec.size())
                throw ParseError("graph6 record truncated in size field", i);
            unsigned c = static_cast<unsigned char>(rec[i]);
            if (c < 63 || c > 126)
                throw ParseError("graph6 byte outside printable range 63..126", i);
            return c - 63;
        };
        unsigned first = byte_at(pos);
        if (first < 63) {
            ++pos;
            return first;
        }
        // 126: three 6-bit groups; 126 126: six 6-bit groups
        if (pos + 1 < rec.size() && static_cast<unsigned char>(rec[pos + 1]) == 126) {
            long long n = 0;
            for (std::size_t i = 0; i < 6; ++i)
                n = (n << 6) | byte_at(pos + 2 + i);
            pos += 8;
            return n;
        }
        long long n = 0;
        for (std::size_t i = 0; i < 3; ++i)
            n = (n << 6) | byte_at(pos + 1 + i);
        pos += 4;
        return n;
    }

} // namespace

Graph parse_graph6(std::string_view record)
{
    std::size_t pos = 0;
    if (record.substr(0, g6_header.size()) == g6_header)
        pos = g6_header.size();
    if (pos >= record.size())
        throw ParseError("empty graph6 record", pos);

    long long n = read_g6_size(record, pos);
    if (n < 1)
        throw ParseError("graph6 record encodes a graph with no vertices", 0);
    if (n > 100000)
        throw ParseError("graph6 record header claims an implausibly large graph", 0);

    const long long bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (record.size() - pos < need)
        throw ParseError("graph6 record too short for its vertex count", record.size());
    if (record.size() - pos > need)
        throw ParseError("trailing garbage after graph6 record", pos + need);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int col = 1, row = 0;
    for (std::size_t i = pos; i < record.size(); ++i) {
        unsigned c = static_cast<unsigned char>(record[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte outside printable range 63..126", i);
        unsigned group = c - 63;
        for (int b = 5; b >= 0 && bit < bits; --b, ++bit) {
            if ((group >> b) & 1)
                edges.emplace_back(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g)
{
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    unsigned group = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.adjacent(row, col) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

Graph parse_edgelist(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;

    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("edge list line " + std::to_string(lineno) + ": " + msg, lineno);
    };

    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        if (n < 0) {
            std::string tag;
            fields >> tag >> n;
            if (tag != "n" || fields.fail() || n < 1)
                fail("expected header \"n <count>\" with count >= 1");
            std::string rest;
            if (fields >> rest)
                fail("unexpected token \"" + rest + "\" after vertex count");
            continue;
        }
        int u, v;
        fields >> u >> v;
        if (fields.fail())
            fail("expected \"u v\"");
        std::string rest;
        if (fields >> rest)
            fail("unexpected token \"" + rest + "\" after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("vertex index out of range [0, " + std::to_string(n) + ")");
        if (u == v)
            fail("self-loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
    }
    if (n < 0)
        throw ParseError("edge list is missing the \"n <count>\" header", 0);
    return Graph::from_edges(n, edges);
}

std::string write_edgelist(const Graph& g)
{
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            if (v < u)
                out += std::to_string(v) + " " + std::to_string(u) + "\n";
    return out;
}

Graph generate_complete(int n)
{
    if (n < 1)
        throw std::invalid_argument("complete: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph generate_path(int n)
{
    if (n < 1)
        throw std::invalid_argument("path: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph generate_cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph generate_star(int n)
{
    if (n < 1)
        throw std::invalid_argument("star: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(0, v);
    return Graph::from_edges(n, edges);
}

Graph generate_petersen()
{
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return Graph::from_edges(10, edges);
}

Graph generate_gnp(int n, double p, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("gnp: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("gnp: p must be in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (bernoulli_draw(rng.next(), p))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph join_universal(const Graph& base, int count)
{
    if (count < 0)
        throw std::invalid_argument("join_universal: count must be >= 0");
    const int n0 = base.order();
    const int n = n0 + count;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n0; ++v)
        for (int u : base.neighbors(v))
            if (v < u)
                edges.emplace_back(v, u);
    for (int w = n0; w < n; ++w)
        for (int v = 0; v < w; ++v)
            edges.emplace_back(v, w);
    return Graph::from_edges(n, edges);
}

std::optional<std::vector<int>> shortest_cycle(const Graph& g)
{
    const int n = g.order();
    int best = -1;
    std::vector<int> best_cycle;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));

    // BFS from every root; a non-tree edge (x, y) closes a cycle of length
    // dist(x) + dist(y) + 1 through the root. The minimum over all roots is
    // exact for unweighted graphs.
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{root};
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (best >= 0 && 2 * dist[static_cast<std::size_t>(x)] >= best)
                break;
            for (int y : g.neighbors(x)) {
                if (y == parent[static_cast<std::size_t>(x)])
                    continue;
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    parent[static_cast<std::size_t>(y)] = x;
                    queue.push_back(y);
                    continue;
                }
                int len = dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1;
                if (best < 0 || len < best) {
                    best = len;
                    std::vector<int> up, down;
                    for (int w = x; w >= 0; w = parent[static_cast<std::size_t>(w)])
                        up.push_back(w);
                    for (int w = y; w >= 0; w = parent[static_cast<std::size_t>(w)])
                        down.push_back(w);
                    // join the two root paths; drop the shared root from one side
                    std::reverse(up.begin(), up.end());
                    up.insert(up.end(), down.begin(), down.end() - 1);
                    best_cycle = std::move(up);
                }
            }
        }
    }
    if (best < 0)
        return std::nullopt;
    return best_cycle;
}

std::optional<int> girth(const Graph& g)
{
    auto cycle = shortest_cycle(g);
    if (!cycle)
        return std::nullopt;
    return static_cast<int>(cycle->size());
}

Graph construction_graph(const Graph& base)
{
    const int n = base.order();
    const int d0 = base.degree(0);
    for (int v = 1; v < n; ++v)
        if (base.degree(v) != d0)
            throw std::invalid_argument(
                "construction base is not regular: vertex 0 has degree " + std::to_string(d0) +
                " but vertex " + std::to_string(v) + " has degree " +
                std::to_string(base.degree(v)));
    if (auto cycle = shortest_cycle(base); cycle && cycle->size() < 5) {
        std::string desc;
        for (int v : *cycle)
            desc += (desc.empty() ? "" : "-") + std::to_string(v);
        throw std::invalid_argument("construction base has girth " +
                                    std::to_string(cycle->size()) + " < 5 (cycle " + desc + ")");
    }
    return join_universal(base, 1);
}

int construction_degree(long long n)
{
    if (n < 1)
        throw std::invalid_argument("construction_degree: n must be >= 1");
    // floor(log2(4n) / 2) = floor(floor(log2(4n)) / 2)
    int l = floor_log2(static_cast<unsigned long long>(4 * n));
    return 2 * (l / 2) + 2;
}

Graph generate(const FamilySpec& spec)
{
    if (spec.name == "complete")
        return generate_complete(spec.n);
    if (spec.name == "path")
        return generate_path(spec.n);
    if (spec.name == "cycle")
        return generate_cycle(spec.n);
    if (spec.name == "star")
        return generate_star(spec.n);
    if (spec.name == "petersen") {
        if (spec.n != 0 && spec.n != 10)
            throw std::invalid_argument("petersen has exactly 10 vertices");
        return generate_petersen();
    }
    if (spec.name == "gnp")
        return generate_gnp(spec.n, spec.p, spec.seed);
    throw std::invalid_argument("unknown graph family \"" + spec.name + "\"");
}

} // namespace dompoly
