#include "radcount/basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace radcount {

namespace {

// Number of non-constant paths u ~> v, all pairs, by topological DP.
// Throws on absurd totals so the weighted cap check cannot overflow.
std::vector<std::vector<long long>> path_count_table(const Quiver& q) {
    int n = q.num_vertices();
    std::vector<std::vector<long long>> cnt(n, std::vector<long long>(n, 0));
    // Repeatedly relax: cnt(u,v) = sum over arrows u->w of [w==v] + cnt(w,v).
    // Acyclicity makes n rounds enough.
    for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                long long s = 0;
                for (int a : q.out_arrows(u)) {
                    int w = q.arrow(a).dst;
                    s += (w == v ? 1 : 0) + cnt[w][v];
                    if (s > (1LL << 40))
                        throw std::invalid_argument("quiver exceeds the path cap");
                }
                if (s != cnt[u][v]) cnt[u][v] = s, changed = true;
            }
        if (!changed) break;
    }
    return cnt;
}

std::vector<int> key_of(int slot_i, int slot_j, const std::vector<int>& arrows) {
    std::vector<int> k;
    k.reserve(arrows.size() + 2);
    k.push_back(slot_i);
    k.push_back(slot_j);
    k.insert(k.end(), arrows.begin(), arrows.end());
    return k;
}

} // namespace

long long weighted_radical_dim(const Quiver& q, const SummandVector& d) {
    auto cnt = path_count_table(q);
    long long total = 0;
    for (int u = 0; u < q.num_vertices(); ++u)
        for (int v = 0; v < q.num_vertices(); ++v) {
            total += d.at(u) * d.at(v) * cnt[u][v];
            if (total > (1LL << 40)) throw std::invalid_argument("quiver exceeds the path cap");
        }
    return total;
}

int AlgebraBasis::index_of(int slot_i, int slot_j, const std::vector<int>& arrows) const {
    std::vector<int> k = key_of(slot_i, slot_j, arrows);
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(), k,
                               [](const auto& e, const std::vector<int>& key) { return e.first < key; });
    if (it == lookup_.end() || it->first != k) return -1;
    return it->second;
}

std::vector<int> AlgebraBasis::radical_indices() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (!elems_[i].path.is_constant()) out.push_back(i);
    return out;
}

AlgebraBasis build_basis(const Quiver& q, const SummandVector& d, bool include_constants) {
    long long weighted = weighted_radical_dim(q, d);
    if (weighted > kWeightedPathCap)
        throw std::invalid_argument(
            "quiver exceeds the path cap (" + std::to_string(weighted) + " weighted paths > 2^20)");

    AlgebraBasis basis;
    basis.include_constants_ = include_constants;
    for (int v = 0; v < q.num_vertices(); ++v)
        for (long r = 0; r < d.at(v); ++r) basis.slots_.vertex.push_back(v);

    int t = basis.slots_.size();
    // Path lists per vertex pair, shared across slot pairs.
    std::vector<std::vector<std::vector<Path>>> paths(
        q.num_vertices(), std::vector<std::vector<Path>>(q.num_vertices()));
    std::vector<std::vector<bool>> have(q.num_vertices(),
                                        std::vector<bool>(q.num_vertices(), false));

    int min_len = include_constants ? 0 : 1;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            int u = basis.slots_.vertex[i], v = basis.slots_.vertex[j];
            if (!have[u][v]) {
                paths[u][v] = enumerate_paths(q, u, v, min_len);
                have[u][v] = true;
            }
            for (const Path& p : paths[u][v]) basis.elems_.push_back({i, j, p});
        }

    basis.lookup_.reserve(basis.elems_.size());
    for (int idx = 0; idx < basis.dim(); ++idx) {
        const BasisElement& e = basis.elems_[idx];
        basis.lookup_.emplace_back(key_of(e.slot_i, e.slot_j, e.path.arrows), idx);
    }
    std::sort(basis.lookup_.begin(), basis.lookup_.end());
    return basis;
}

std::vector<int> radical_power_indices(const AlgebraBasis& basis, int l) {
    if (l == 0) {
        if (!basis.include_constants())
            throw std::invalid_argument("radical_power_indices: l=0 needs the full basis");
        std::vector<int> all(basis.dim());
        for (int i = 0; i < basis.dim(); ++i) all[i] = i;
        return all;
    }
    if (l < 0) throw std::invalid_argument("radical_power_indices: negative power");
    if (basis.include_constants())
        throw std::invalid_argument(
            "radical_power_indices: l >= 1 requires the radical basis, not the full algebra");
    std::vector<int> out;
    for (int i = 0; i < basis.dim(); ++i)
        if (basis.path_length(i) >= l) out.push_back(i);
    return out;
}

StructureConstants::StructureConstants(const AlgebraBasis& basis) : dim_(basis.dim()) {
    by_a_.assign(dim_, {});
    left_.assign(dim_, {});
    right_.assign(dim_, {});

    // Bucket elements by their first slot; e_a * e_b needs a.slot_j == b.slot_i.
    int nslots = basis.slots().size();
    std::vector<std::vector<int>> by_start(nslots);
    for (int b = 0; b < dim_; ++b) by_start[basis.element(b).slot_i].push_back(b);

    for (int a = 0; a < dim_; ++a) {
        const BasisElement& ea = basis.element(a);
        for (int b : by_start[ea.slot_j]) {
            const BasisElement& eb = basis.element(b);
            Path prod = concat(ea.path, eb.path);
            int c = basis.index_of(ea.slot_i, eb.slot_j, prod.arrows);
            // Every concatenation of basis paths between matching slots is a
            // basis path again, so a miss would be a construction bug.
            if (c < 0) throw std::logic_error("structure constants: missing product path");
            by_a_[a].emplace_back(b, c);
            left_[b].emplace_back(a, c);
            right_[a].emplace_back(b, c);
        }
    }
    for (auto& v : left_) std::sort(v.begin(), v.end());
    for (auto& v : right_) std::sort(v.begin(), v.end());
}

int StructureConstants::product(int a, int b) const {
    const auto& row = by_a_[a];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(b, -1));
    if (it == row.end() || it->first != b) return -1;
    return it->second;
}

bool StructureConstants::has_nonzero_product(const std::vector<int>& xs,
                                             const std::vector<int>& ys,
                                             const std::vector<int>& codomain) const {
    std::vector<char> in_y(dim_, 0), in_c(dim_, 0);
    for (int y : ys) in_y[y] = 1;
    for (int c : codomain) in_c[c] = 1;
    for (int a : xs) {
        for (const auto& [b, c] : by_a_[a])
            if (in_y[b] && in_c[c]) return true;
        // x*y covered above; y*x needs products with a as the right factor.
        for (const auto& [b, c] : left_[a])
            if (in_y[b] && in_c[c]) return true;
    }
    return false;
}

FqMatrix adjoint_matrix(const FieldTable& F, const StructureConstants& sc,
                        const std::vector<Fq>& x, const std::vector<int>& domain,
                        const std::vector<int>& codomain) {
    if (static_cast<int>(x.size()) != sc.dim())
        throw std::invalid_argument("adjoint_matrix: x has wrong dimension");
    std::vector<int> row_of(sc.dim(), -1);
    for (int r = 0; r < static_cast<int>(codomain.size()); ++r) row_of[codomain[r]] = r;

    FqMatrix m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
    for (int col = 0; col < static_cast<int>(domain.size()); ++col) {
        int b = domain[col];
        for (const auto& [a, c] : sc.left_products(b)) {
            int r = row_of[c];
            if (r >= 0 && x[a] != 0) m.set(r, col, F.add(m.at(r, col), x[a]));
        }
        for (const auto& [a, c] : sc.right_products(b)) {
            int r = row_of[c];
            if (r >= 0 && x[a] != 0) m.set(r, col, F.sub(m.at(r, col), x[a]));
        }
    }
    return m;
}

} // namespace radcount
