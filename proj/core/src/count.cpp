#include "radcount/count.hpp"

#include "radcount/basis.hpp"
#include "radcount/field.hpp"
#include "radcount/matrix.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <vector>

namespace radcount {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// q^e as mpz.
mpz_class mpz_pow(int q, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
    return r;
}

void check_budget(int q, int dim, long long budget, const char* what) {
    mpz_class need = mpz_pow(q, dim);
    if (need > mpz_class(static_cast<long>(budget)))
        throw BudgetError(need.get_str(),
                          std::string(what) + " needs q^D = " + std::to_string(q) + "^" +
                              std::to_string(dim) + " = " + need.get_str() +
                              " elements, which exceeds the budget of " +
                              std::to_string(budget) + " (raise --budget to allow it)");
}

// One fibered counting problem: enumerate x over span(xs), build the matrix
// of y -> proj_codomain(xy - yx) for y over span(domain), histogram nullities.
struct FiberProblem {
    int q = 0;
    const StructureConstants* sc = nullptr;
    std::vector<int> xs, domain, codomain;
};

// Matrix-assembly triples (row, col, sign) per enumerated coordinate, so the
// hot loop touches only the nonzero structure constants of x's support.
struct AssemblyPlan {
    struct Triple {
        int row, col;
        bool plus;
    };
    std::vector<std::vector<Triple>> per_coord; // indexed like xs
    int rows = 0, cols = 0;
};

AssemblyPlan make_plan(const FiberProblem& pr) {
    AssemblyPlan plan;
    plan.rows = static_cast<int>(pr.codomain.size());
    plan.cols = static_cast<int>(pr.domain.size());
    plan.per_coord.assign(pr.xs.size(), {});

    std::vector<int> row_of(pr.sc->dim(), -1), xpos(pr.sc->dim(), -1);
    for (int r = 0; r < plan.rows; ++r) row_of[pr.codomain[r]] = r;
    for (int k = 0; k < static_cast<int>(pr.xs.size()); ++k) xpos[pr.xs[k]] = k;

    for (int col = 0; col < plan.cols; ++col) {
        int b = pr.domain[col];
        for (const auto& [a, c] : pr.sc->left_products(b)) {
            if (xpos[a] >= 0 && row_of[c] >= 0)
                plan.per_coord[xpos[a]].push_back({row_of[c], col, true});
        }
        for (const auto& [a, c] : pr.sc->right_products(b)) {
            if (xpos[a] >= 0 && row_of[c] >= 0)
                plan.per_coord[xpos[a]].push_back({row_of[c], col, false});
        }
    }
    return plan;
}

// Nullity histogram over a contiguous range of vector indices. In projective
// mode an index encodes one representative per line: the block with leading
// coordinate k covers q^(D-1-k) vectors whose tail digits follow base-q,
// least significant digit right after position k. In full mode the index is
// just the base-q encoding of the whole vector, least significant last.
void run_range(const FieldTable& F, const AssemblyPlan& plan, int D, bool projective,
               unsigned long long begin, unsigned long long end,
               std::vector<unsigned long long>& hist) {
    int q = F.q();
    std::vector<Fq> x(D, 0);
    std::vector<Fq> mat(std::size_t(plan.rows) * plan.cols);
    std::vector<Fq> scratch;
    FqMatrix m(plan.rows, plan.cols);

    std::vector<unsigned long long> block(D);
    if (projective) {
        unsigned long long sz = 1;
        for (int k = D - 1; k >= 0; --k) {
            block[k] = sz;
            sz *= static_cast<unsigned long long>(q);
        }
    }

    for (unsigned long long r = begin; r < end; ++r) {
        std::fill(x.begin(), x.end(), 0);
        if (projective) {
            unsigned long long rem = r;
            int lead = 0;
            while (rem >= block[lead]) rem -= block[lead], ++lead;
            x[lead] = 1;
            for (int pos = lead + 1; pos < D; ++pos) {
                x[pos] = static_cast<Fq>(rem % q);
                rem /= static_cast<unsigned long long>(q);
            }
        } else {
            unsigned long long rem = r;
            for (int pos = D - 1; pos >= 0; --pos) {
                x[pos] = static_cast<Fq>(rem % q);
                rem /= static_cast<unsigned long long>(q);
            }
        }

        std::memset(mat.data(), 0, mat.size());
        for (int k = 0; k < D; ++k) {
            Fq v = x[k];
            if (v == 0) continue;
            for (const auto& t : plan.per_coord[k]) {
                Fq& cell = mat[std::size_t(t.row) * plan.cols + t.col];
                cell = t.plus ? F.add(cell, v) : F.sub(cell, v);
            }
        }
        for (int i = 0; i < plan.rows; ++i)
            std::memcpy(m.row(i), mat.data() + std::size_t(i) * plan.cols, plan.cols);
        int rk = rank_with_scratch(F, m, scratch);
        ++hist[plan.cols - rk];
    }
}

mpz_class fibered_sum(const FiberProblem& pr, const CountOptions& opts, const char* what) {
    const FieldTable& F = make_field(pr.q);
    int D = static_cast<int>(pr.xs.size());
    check_budget(pr.q, D, opts.budget, what);

    AssemblyPlan plan = make_plan(pr);
    bool projective = opts.projective_speedup;

    unsigned long long total;
    if (projective) {
        // (q^D - 1) / (q - 1) line representatives.
        unsigned long long p = 1;
        for (int i = 0; i < D; ++i) p *= static_cast<unsigned long long>(pr.q);
        total = (p - 1) / static_cast<unsigned long long>(pr.q - 1);
    } else {
        total = 1;
        for (int i = 0; i < D; ++i) total *= static_cast<unsigned long long>(pr.q);
    }

    int jobs = resolve_jobs(opts);
    std::vector<std::vector<unsigned long long>> hists;

    if (jobs <= 1 || total < 2048) {
        hists.emplace_back(plan.cols + 1, 0ULL);
        run_range(F, plan, D, projective, 0, total, hists[0]);
    } else {
        hists.assign(jobs, std::vector<unsigned long long>(plan.cols + 1, 0ULL));
        std::vector<std::thread> workers;
        unsigned long long chunk = total / jobs, rem = total % jobs, at = 0;
        for (int w = 0; w < jobs; ++w) {
            unsigned long long len = chunk + (static_cast<unsigned long long>(w) < rem ? 1 : 0);
            unsigned long long lo = at, hi = at + len;
            at = hi;
            workers.emplace_back([&, w, lo, hi] {
                run_range(F, plan, D, projective, lo, hi, hists[w]);
            });
        }
        for (auto& t : workers) t.join();
    }

    std::vector<unsigned long long> hist(plan.cols + 1, 0ULL);
    for (const auto& h : hists)
        for (int n = 0; n <= plan.cols; ++n) hist[n] += h[n];

    mpz_class value = 0;
    if (projective) {
        // x = 0 contributes q^|domain| on its own; each line adds (q-1) points
        // with the representative's nullity.
        value = mpz_pow(pr.q, plan.cols);
        mpz_class lines = 0;
        for (int n = 0; n <= plan.cols; ++n)
            if (hist[n]) lines += mpz_class(std::to_string(hist[n])) * mpz_pow(pr.q, n);
        value += mpz_class(pr.q - 1) * lines;
    } else {
        for (int n = 0; n <= plan.cols; ++n)
            if (hist[n]) value += mpz_class(std::to_string(hist[n])) * mpz_pow(pr.q, n);
    }
    return value;
}

} // namespace

int resolve_jobs(const CountOptions& opts) {
    if (opts.jobs > 0) return opts.jobs;
    if (const char* env = std::getenv("RADCOUNT_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

CountResult count_commuting(const Quiver& q, const SummandVector& d, int fq,
                            const CountOptions& opts) {
    auto t0 = Clock::now();
    AlgebraBasis basis = build_basis(q, d, /*include_constants=*/false);
    StructureConstants sc(basis);

    FiberProblem pr;
    pr.q = fq;
    pr.sc = &sc;
    pr.xs.resize(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) pr.xs[i] = i;
    pr.domain = pr.xs;
    pr.codomain = pr.xs;

    CountResult res;
    res.value = fibered_sum(pr, opts, "count_commuting");
    res.q = fq;
    res.mode = "radical";
    res.dim_enumerated = basis.dim();
    res.elapsed_seconds = seconds_since(t0);
    return res;
}

CountResult count_overline(const Quiver& q, const SummandVector& d, int fq,
                           const CountOptions& opts) {
    auto t0 = Clock::now();
    AlgebraBasis basis = build_basis(q, d, /*include_constants=*/true);
    StructureConstants sc(basis);

    FiberProblem pr;
    pr.q = fq;
    pr.sc = &sc;
    pr.xs = basis.radical_indices();
    pr.domain.resize(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) pr.domain[i] = i;
    pr.codomain = pr.domain;

    CountResult res;
    res.value = fibered_sum(pr, opts, "count_overline");
    res.q = fq;
    res.mode = "overline";
    res.dim_enumerated = static_cast<int>(pr.xs.size());
    res.elapsed_seconds = seconds_since(t0);
    return res;
}

CountResult count_weakened(const Quiver& q, const SummandVector& d, int fq, int l, int m,
                           const CountOptions& opts) {
    if (l < 1) throw std::invalid_argument("count_weakened: l must be >= 1");
    if (m < 0) throw std::invalid_argument("count_weakened: m must be >= 0");
    auto t0 = Clock::now();
    AlgebraBasis basis = build_basis(q, d, /*include_constants=*/false);
    StructureConstants sc(basis);

    FiberProblem pr;
    pr.q = fq;
    pr.sc = &sc;
    pr.xs = radical_power_indices(basis, l);
    pr.domain = pr.xs;
    for (int i = 0; i < basis.dim(); ++i)
        if (basis.path_length(i) < m) pr.codomain.push_back(i);

    CountResult res;
    res.value = fibered_sum(pr, opts, "count_weakened");
    res.q = fq;
    res.mode = "weakened(" + std::to_string(l) + "," + std::to_string(m) + ")";
    res.dim_enumerated = static_cast<int>(pr.xs.size());
    res.elapsed_seconds = seconds_since(t0);
    return res;
}

CountResult naive_pair_count(const Quiver& q, const SummandVector& d, int fq,
                             const CountOptions& opts) {
    auto t0 = Clock::now();
    const FieldTable& F = make_field(fq);
    AlgebraBasis basis = build_basis(q, d, /*include_constants=*/false);
    StructureConstants sc(basis);
    int D = basis.dim();
    check_budget(fq, 2 * D, opts.budget, "naive_pair_count");

    unsigned long long per = 1;
    for (int i = 0; i < D; ++i) per *= static_cast<unsigned long long>(fq);

    std::vector<Fq> x(D), y(D);
    std::vector<Fq> xy(D), yx(D);
    unsigned long long count = 0;

    for (unsigned long long rx = 0; rx < per; ++rx) {
        unsigned long long rem = rx;
        for (int pos = D - 1; pos >= 0; --pos) x[pos] = static_cast<Fq>(rem % fq), rem /= fq;
        for (unsigned long long ry = 0; ry < per; ++ry) {
            rem = ry;
            for (int pos = D - 1; pos >= 0; --pos) y[pos] = static_cast<Fq>(rem % fq), rem /= fq;

            std::fill(xy.begin(), xy.end(), 0);
            std::fill(yx.begin(), yx.end(), 0);
            for (int a = 0; a < D; ++a) {
                if (x[a] == 0) continue;
                for (const auto& [b, c] : sc.right_products(a)) {
                    // right_products(a) lists (b, c) with e_a e_b = e_c.
                    if (y[b] != 0) xy[c] = F.add(xy[c], F.mul(x[a], y[b]));
                }
            }
            for (int a = 0; a < D; ++a) {
                if (y[a] == 0) continue;
                for (const auto& [b, c] : sc.right_products(a)) {
                    if (x[b] != 0) yx[c] = F.add(yx[c], F.mul(y[a], x[b]));
                }
            }
            if (xy == yx) ++count;
        }
    }

    CountResult res;
    res.value = mpz_class(std::to_string(count));
    res.q = fq;
    res.mode = "naive";
    res.dim_enumerated = 2 * D;
    res.elapsed_seconds = seconds_since(t0);
    return res;
}

} // namespace radcount
