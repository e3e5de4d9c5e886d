#pragma once

// Count-preserving rewrite rules on (quiver, summand vector) pairs, the
// normalize driver that reduces an input to classified leaves, and the
// dispatch counter that evaluates leaves by closed form where one exists and
// by brute force otherwise. Every rule validates its hypotheses and throws
// std::invalid_argument when they fail.

#include "radcount/count.hpp"
#include "radcount/polynomial.hpp"
#include "radcount/quiver.hpp"

#include <string>
#include <utility>
#include <vector>

namespace radcount {

using QuiverWithD = std::pair<Quiver, SummandVector>;

// Reverse all arrows; the count is invariant under taking opposites.
QuiverWithD apply_opposite(const Quiver& q, const SummandVector& d);

// Delete a vertex with d_v = 0, replacing each in/out arrow pair through it
// by a composite arrow (id = concatenation, de-collided deterministically).
QuiverWithD remove_zero_vertex(const Quiver& q, const SummandVector& d, int v);

// Split into weakly connected components; the count is the product over
// components.
std::vector<QuiverWithD> split_components(const Quiver& q, const SummandVector& d);

// Source conversion: set d_v to 1 and replace each outgoing arrow by d_v
// parallel copies (d_v = 0 removes the arrows and still sets d_v = 1).
// Requires v to have no incoming arrows.
QuiverWithD convert_source(const Quiver& q, const SummandVector& d, int v);
// Mirror image for a vertex with no outgoing arrows.
QuiverWithD convert_sink(const Quiver& q, const SummandVector& d, int v);

// Split a source v into v^A (the given nonempty proper subset of its
// out-arrows) and v^B (the rest), both keeping d_v.
QuiverWithD split_source(const Quiver& q, const SummandVector& d, int v,
                         const std::vector<int>& arrows_a);
QuiverWithD split_sink(const Quiver& q, const SummandVector& d, int v,
                       const std::vector<int>& arrows_a);

// Fuse two sources with equal d into one (u keeps its id, v disappears,
// arrow sets unite). Inverse of split_source; also valid when either arrow
// set is empty.
QuiverWithD merge_sources(const Quiver& q, const SummandVector& d, int u, int v);
QuiverWithD merge_sinks(const Quiver& q, const SummandVector& d, int u, int v);

struct ReductionStep {
    std::string rule;   // "zero-vertex-removal", "source-split", ...
    std::string detail; // human-readable, e.g. the vertex or partition used
    std::string before_json;
    std::vector<std::string> after_json;
};

struct Leaf {
    Quiver quiver;
    SummandVector d;
    Classification cls;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::vector<Leaf> leaves;
};

// Reduce to classified leaves: remove zero vertices, separate arrow classes
// by source/sink splits (two arrows belong together exactly when they share
// an endpoint at an internal vertex), split components, then classify each
// component as point, rad-square-zero, a3-shape (converting and merging the
// end vertices first), or irreducible.
ReductionTrace normalize(const Quiver& q, const SummandVector& d);

// Count via normalize: product over leaves of the closed form where the
// classification has one, brute force for irreducible leaves.
CountResult dispatch_count(const Quiver& q, const SummandVector& d, int fq,
                           const CountOptions& opts = {});

} // namespace radcount
