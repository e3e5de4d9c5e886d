#pragma once

// Finite acyclic quivers (directed multigraphs) with a nonnegative summand
// vector d attached to the vertices. Vertices and arrows keep their file
// order; every deterministic ordering in the library derives from that order
// plus lexicographic arrow-id tie-breaks.

#include <string>
#include <utility>
#include <vector>

namespace radcount {

struct Arrow {
    std::string id; // "a0", "a1", ... in file order unless constructed by a rewrite
    int src = -1;
    int dst = -1;
};

class Quiver {
public:
    Quiver() = default;
    // Throws std::invalid_argument on duplicate ids, dangling endpoints, or a
    // directed cycle.
    Quiver(std::vector<std::string> vertex_ids, std::vector<Arrow> arrows);

    int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }

    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
    int vertex_index(const std::string& id) const; // -1 when absent

    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    // Arrow indices leaving/entering v, sorted by arrow id.
    const std::vector<int>& out_arrows(int v) const { return out_[v]; }
    const std::vector<int>& in_arrows(int v) const { return in_[v]; }

    bool is_source(int v) const { return in_[v].empty() && !out_[v].empty(); }
    bool is_sink(int v) const { return out_[v].empty() && !in_[v].empty(); }
    // A vertex with both incoming and outgoing arrows.
    bool is_internal(int v) const { return !in_[v].empty() && !out_[v].empty(); }

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_, in_;
};

// Summand multiplicities, aligned with the quiver's vertex order.
class SummandVector {
public:
    SummandVector() = default;
    SummandVector(const Quiver& q, std::vector<long> counts);

    long at(int v) const { return counts_[v]; }
    long& at(int v) { return counts_[v]; }
    int size() const { return static_cast<int>(counts_.size()); }
    const std::vector<long>& counts() const { return counts_; }

private:
    std::vector<long> counts_;
};

struct Path {
    int from = -1;
    int to = -1;
    std::vector<int> arrows; // arrow indices; empty means the constant path at from == to

    int length() const { return static_cast<int>(arrows.size()); }
    bool is_constant() const { return arrows.empty(); }
    bool operator==(const Path& o) const {
        return from == o.from && to == o.to && arrows == o.arrows;
    }
};

// Parse the normative JSON schema
//   {"vertices": ["1","2"], "arrows": [["1","2"], ...], "d": {"1": 1, ...}}
// into a quiver plus summand vector. Arrow ids are assigned "a0", "a1", ...
// in file order. Throws std::invalid_argument with a specific message on
// malformed JSON, duplicate vertices, dangling arrows, cycles, d-key
// mismatches, or negative d entries.
std::pair<Quiver, SummandVector> parse_quiver(const std::string& json_text);

// Serialize back to the same schema (deterministic key and element order).
std::string to_json(const Quiver& q, const SummandVector& d);

// All paths from 'from' to 'to' of length >= min_len, ordered
// lexicographically by their arrow-id sequences (so the constant path, when
// admissible, comes first).
std::vector<Path> enumerate_paths(const Quiver& q, int from, int to, int min_len = 0);

// Concatenation c then p (first traverse c, then p); requires c.to == p.from.
Path concat(const Path& c, const Path& p);

// Reverse every arrow; vertex order, arrow order and all ids survive.
Quiver opposite(const Quiver& q);

// Weakly connected components as vertex index sets, ordered by smallest
// member, members in file order.
std::vector<std::vector<int>> connected_components(const Quiver& q);

// Restriction to a vertex subset (indices into q); arrows with both ends in
// the subset survive with their ids and relative order.
std::pair<Quiver, SummandVector> induced_subquiver(const Quiver& q, const SummandVector& d,
                                                   const std::vector<int>& vertices);

} // namespace radcount
