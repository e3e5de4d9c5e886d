#include "radcount/unitriangular.hpp"

#include <stdexcept>
#include <vector>

namespace radcount {

namespace {

// Matrices are stored as the strictly-upper entries in row-major (i,j) order,
// i < j, packed into a base-q index.
struct Packing {
    int n, q, cells;
    std::vector<std::pair<int, int>> pos; // cell -> (i, j)

    explicit Packing(int n_, int q_) : n(n_), q(q_), cells(0) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pos.emplace_back(i, j), ++cells;
    }

    void unpack(long long idx, std::vector<int>& m) const {
        // m is an n*n row-major matrix; fill identity plus packed entries.
        for (int i = 0; i < n * n; ++i) m[i] = 0;
        for (int i = 0; i < n; ++i) m[i * n + i] = 1;
        for (int c = 0; c < cells; ++c) {
            m[pos[c].first * n + pos[c].second] = static_cast<int>(idx % q);
            idx /= q;
        }
    }

    long long pack(const std::vector<int>& m) const {
        long long idx = 0;
        for (int c = cells - 1; c >= 0; --c)
            idx = idx * q + m[pos[c].first * n + pos[c].second];
        return idx;
    }
};

void mat_mul(int n, int q, const std::vector<int>& a, const std::vector<int>& b,
             std::vector<int>& out) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) s += a[i * n + k] * b[k * n + j];
            out[i * n + j] = s % q;
        }
}

} // namespace

long long count_conjugacy_classes_un(int n, int q) {
    if (n < 1 || n > 5) throw std::invalid_argument("count_conjugacy_classes_un: n must be 1..5");
    if (q != 2 && q != 3) throw std::invalid_argument("count_conjugacy_classes_un: q must be 2 or 3");

    Packing pk(n, q);
    long long total = 1;
    for (int c = 0; c < pk.cells; ++c) total *= q;

    // Generators: g = I + t*E_{ij} for i < j, t != 0, with inverse I - t*E_{ij}
    // (E_{ij}^2 = 0). They generate U_n, so generator-closure of an element is
    // its full conjugacy class.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int t = 1; t < q; ++t) {
                std::vector<int> g(n * n, 0), ginv(n * n, 0);
                for (int k = 0; k < n; ++k) g[k * n + k] = ginv[k * n + k] = 1;
                g[i * n + j] = t;
                ginv[i * n + j] = (q - t) % q;
                gens.emplace_back(std::move(g), std::move(ginv));
            }

    std::vector<char> visited(total, 0);
    std::vector<int> x(n * n), tmp(n * n), conj(n * n);
    long long classes = 0;

    for (long long start = 0; start < total; ++start) {
        if (visited[start]) continue;
        ++classes;
        std::vector<long long> stack{start};
        visited[start] = 1;
        while (!stack.empty()) {
            long long cur = stack.back();
            stack.pop_back();
            pk.unpack(cur, x);
            for (const auto& [g, ginv] : gens) {
                mat_mul(n, q, g, x, tmp);
                mat_mul(n, q, tmp, ginv, conj);
                long long idx = pk.pack(conj);
                if (!visited[idx]) {
                    visited[idx] = 1;
                    stack.push_back(idx);
                }
            }
        }
    }
    return classes;
}

} // namespace radcount
