#ifndef DOMPOLY_GRAPH_HPP
#define DOMPOLY_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dompoly {

/// Set of vertex indices in [0, universe). Stored as a packed bit vector so
/// unions and subset tests are word-parallel for any graph size.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);

    static VertexSet full_set(int universe);
    static VertexSet of(int universe, std::initializer_list<int> vertices);
    static VertexSet from_mask(int universe, std::uint64_t mask); // universe <= 64

    int universe() const { return universe_; }
    int count() const;
    bool empty() const;
    bool is_full() const;

    bool contains(int v) const;
    void add(int v);
    void remove(int v);

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    /// this \ other
    VertexSet& operator-=(const VertexSet& other);

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    std::vector<int> members() const;
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;

    void check_vertex(int v) const;
    void check_same_universe(const VertexSet& other) const;
};

/// Immutable simple undirected graph with closed neighborhoods N[v]
/// precomputed at construction. Safe to share across threads.
class Graph {
public:
    /// Builds from an edge list; duplicate edges collapse, self-loops and
    /// out-of-range endpoints are rejected. n >= 1.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return edges_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;

    const VertexSet& closed_neighborhood_of(int v) const;

    /// N[v] as a single word; only valid when order() <= 64.
    std::uint64_t closed_mask64(int v) const { return closed_word_[static_cast<std::size_t>(v)]; }
    bool fits_word() const { return n_ <= 64; }

private:
    Graph() = default;

    int n_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> closed_;
    std::vector<std::uint64_t> closed_word_; // populated when n_ <= 64

    void check_vertex(int v) const;
};

/// N(s) = union of closed neighborhoods over s; empty for empty s.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// true iff t is contained in N(s).
bool dominates(const Graph& g, const VertexSet& s, const VertexSet& t);

/// true iff N(s) = V.
bool is_dominating(const Graph& g, const VertexSet& s);

/// Number of vertices v with N[v] = V.
int universal_vertex_count(const Graph& g);

} // namespace dompoly

#endif
