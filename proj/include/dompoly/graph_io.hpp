#ifndef DOMPOLY_GRAPH_IO_HPP
#define DOMPOLY_GRAPH_IO_HPP

#include "dompoly/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dompoly {

/// Malformed input; `offset` is the byte offset (graph6) or a line-oriented
/// position (edge lists) of the first offending byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes one graph6 record: size field N(n), then the upper-triangle bits
/// x(0,1), x(0,2), x(1,2), x(0,3), ... packed into big-endian 6-bit groups
/// offset by 63. The optional ">>graph6<<" header prefix is accepted.
Graph parse_graph6(std::string_view record);

/// Inverse of parse_graph6; short size form for n <= 62, long forms above.
std::string write_graph6(const Graph& g);

/// Text format: first line "n <count>", then one "u v" line per edge with
/// 0 <= u, v < count and u != v. Duplicate edges collapse; blank lines and
/// lines starting with '#' are skipped.
Graph parse_edgelist(std::string_view text);

std::string write_edgelist(const Graph& g);

Graph generate_complete(int n);
Graph generate_path(int n);
Graph generate_cycle(int n); // n >= 3
/// Star K_{1,n-1} with the center at index 0.
Graph generate_star(int n);
Graph generate_petersen();

/// G(n, p) with the documented SplitMix64 draw per vertex pair, pairs in
/// lexicographic order (0,1), (0,2), ..., (n-2,n-1). Identical (n, p, seed)
/// give identical graphs in any implementation of the same rule.
Graph generate_gnp(int n, double p, std::uint64_t seed);

/// Appends `count` new vertices adjacent to everything (indices n, n+1, ...).
Graph join_universal(const Graph& base, int count);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// A shortest cycle as a vertex sequence, when one exists.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

/// Validates that `base` is regular with girth >= 5, then adds one universal
/// vertex. Violations raise std::invalid_argument naming the offending
/// degrees or cycle.
Graph construction_graph(const Graph& base);

/// Required base degree for the universal-vertex construction at order n:
/// d = 2*floor(log2(4n)/2) + 2, computed with integer bit operations.
int construction_degree(long long n);

/// Named-family dispatcher used by the CLI.
struct FamilySpec {
    std::string name;      // complete | path | cycle | star | petersen | gnp
    int n = 0;
    double p = 0.0;        // gnp only
    std::uint64_t seed = 0; // gnp only
};

Graph generate(const FamilySpec& spec);

} // namespace dompoly

#endif
