#include "dompoly/graph.hpp"

#include <algorithm>
#include <bit>

namespace dompoly {

namespace {
    std::size_t words_for(int universe)
    {
        return static_cast<std::size_t>(universe + 63) / 64;
    }
}

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(words_for(universe), 0)
{
    if (universe < 0)
        throw std::invalid_argument("VertexSet: negative universe");
}

VertexSet VertexSet::full_set(int universe)
{
    VertexSet s(universe);
    for (auto& w : s.words_)
        w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty())
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vertices)
{
    VertexSet s(universe);
    for (int v : vertices)
        s.add(v);
    return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask)
{
    if (universe > 64)
        throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
    VertexSet s(universe);
    if (universe < 64 && (mask >> universe) != 0)
        throw std::invalid_argument("VertexSet::from_mask: mask has bits outside universe");
    if (!s.words_.empty())
        s.words_[0] = mask;
    return s;
}

void VertexSet::check_vertex(int v) const
{
    if (v < 0 || v >= universe_)
        throw std::invalid_argument("vertex index " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(universe_) + ")");
}

void VertexSet::check_same_universe(const VertexSet& other) const
{
    if (universe_ != other.universe_)
        throw std::invalid_argument("vertex sets over different universes");
}

int VertexSet::count() const
{
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const
{
    for (auto w : words_)
        if (w != 0)
            return false;
    return true;
}

bool VertexSet::is_full() const
{
    return count() == universe_;
}

bool VertexSet::contains(int v) const
{
    check_vertex(v);
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1;
}

void VertexSet::add(int v)
{
    check_vertex(v);
    words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::remove(int v)
{
    check_vertex(v);
    words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n < 1)
        throw std::invalid_argument("graph must have at least one vertex");
    Graph g;
    g.n_ = n;
    g.adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    for (const auto& nb : g.adj_)
        g.edges_ += nb.size();
    g.edges_ /= 2;

    g.closed_.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        VertexSet s(n);
        s.add(v);
        for (int u : g.adj_[static_cast<std::size_t>(v)])
            s.add(u);
        g.closed_.push_back(std::move(s));
    }
    if (n <= 64) {
        g.closed_word_.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            g.closed_word_.push_back(g.closed_[static_cast<std::size_t>(v)].low_word());
    }
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex index " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n_) + ")");
}

const std::vector<int>& Graph::neighbors(int v) const
{
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const
{
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool Graph::adjacent(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

const VertexSet& Graph::closed_neighborhood_of(int v) const
{
    check_vertex(v);
    return closed_[static_cast<std::size_t>(v)];
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        throw std::invalid_argument("vertex set does not match graph order");
    VertexSet out(g.order());
    for (int v : s.members())
        out |= g.closed_neighborhood_of(v);
    return out;
}

bool dominates(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    if (t.universe() != g.order())
        throw std::invalid_argument("vertex set does not match graph order");
    return t.is_subset_of(closed_neighborhood(g, s));
}

bool is_dominating(const Graph& g, const VertexSet& s)
{
    return closed_neighborhood(g, s).is_full();
}

int universal_vertex_count(const Graph& g)
{
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.closed_neighborhood_of(v).is_full())
            ++count;
    return count;
}

} // namespace dompoly
