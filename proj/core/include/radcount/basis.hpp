#pragma once

// Basis machinery for the endomorphism algebra A = End(⊕_v P(v)^{d_v}) of a
// projective module over the path algebra kQ. Slots list the projective
// summands (vertices repeated d_v times, file order, repeats adjacent); a
// basis element is a triple (slot i, slot j, path v_i ~> v_j). Multiplication
// is path concatenation when the inner slots agree and zero otherwise, so
// structure constants are monomial and stored sparsely.

#include "radcount/field.hpp"
#include "radcount/matrix.hpp"
#include "radcount/quiver.hpp"

#include <cstdint>
#include <vector>

namespace radcount {

struct SlotList {
    std::vector<int> vertex; // vertex index per slot
    int size() const { return static_cast<int>(vertex.size()); }
};

struct BasisElement {
    int slot_i = -1; // row slot: element maps P(v_{slot_j}) -> P(v_{slot_i})
    int slot_j = -1;
    Path path;       // path v_{slot_i} ~> v_{slot_j}; constant iff length 0
};

class AlgebraBasis {
public:
    AlgebraBasis() = default;

    int dim() const { return static_cast<int>(elems_.size()); }
    bool include_constants() const { return include_constants_; }
    const SlotList& slots() const { return slots_; }
    const BasisElement& element(int idx) const { return elems_[idx]; }
    int path_length(int idx) const { return elems_[idx].path.length(); }

    // Index of (slot_i, slot_j, path by arrow indices); -1 when absent.
    int index_of(int slot_i, int slot_j, const std::vector<int>& arrows) const;

    // Indices of the non-constant elements, ascending.
    std::vector<int> radical_indices() const;

private:
    friend AlgebraBasis build_basis(const Quiver&, const SummandVector&, bool);
    SlotList slots_;
    std::vector<BasisElement> elems_;
    bool include_constants_ = false;
    // Sorted (slot_i, slot_j, arrows) -> index, set up once at build time.
    std::vector<std::pair<std::vector<int>, int>> lookup_;
};

// Total number of non-constant paths weighted by d_src * d_dst; refuse to
// build a basis past this (2^20).
constexpr long long kWeightedPathCap = 1LL << 20;
long long weighted_radical_dim(const Quiver& q, const SummandVector& d);

// Deterministic basis: elements sorted by (slot_i, slot_j, arrow-id sequence).
// include_constants=false yields the radical basis rad A (non-constant paths
// only). Throws std::invalid_argument when the weighted path cap is exceeded.
AlgebraBasis build_basis(const Quiver& q, const SummandVector& d, bool include_constants);

// Indices of basis paths with length >= l. Requires a radical basis and
// l >= 1, or a constants-including basis and l == 0.
std::vector<int> radical_power_indices(const AlgebraBasis& basis, int l);

class StructureConstants {
public:
    explicit StructureConstants(const AlgebraBasis& basis);

    int dim() const { return dim_; }
    // Index of e_a * e_b, or -1 when the product vanishes.
    int product(int a, int b) const;
    // All (a, c) with e_a * e_b = e_c, ascending in a.
    const std::vector<std::pair<int, int>>& left_products(int b) const { return left_[b]; }
    // All (a, c) with e_b * e_a = e_c, ascending in a.
    const std::vector<std::pair<int, int>>& right_products(int b) const { return right_[b]; }
    // Whether any product of two elements from the given index set survives
    // projection onto the other given index set. Drives degree-bound logic.
    bool has_nonzero_product(const std::vector<int>& xs, const std::vector<int>& ys,
                             const std::vector<int>& codomain) const;

private:
    int dim_ = 0;
    std::vector<std::vector<std::pair<int, int>>> by_a_; // (b, c) sorted by b
    std::vector<std::vector<std::pair<int, int>>> left_, right_;
};

// Matrix of y |-> proj_codomain(x*y - y*x) with y running over the domain
// index list; rows follow codomain order, columns domain order. x is given by
// dense coordinates over the full basis the structure constants came from.
FqMatrix adjoint_matrix(const FieldTable& F, const StructureConstants& sc,
                        const std::vector<Fq>& x, const std::vector<int>& domain,
                        const std::vector<int>& codomain);

} // namespace radcount
