#pragma once

// Exact counting of commuting pairs in rad A over F_q and its variants. The
// primary driver fibers the pair count over the first coordinate:
//     #{(x,y) : xy = yx} = sum over x of q^(dim ker ad_x),
// enumerates one representative per projective line (first nonzero coordinate
// scaled to 1), and assembles the exact value from per-nullity histograms, so
// the result is bit-identical for any worker count.

#include "radcount/errors.hpp"
#include "radcount/quiver.hpp"

#include <gmpxx.h>

#include <string>

namespace radcount {

struct CountOptions {
    int jobs = 0;                  // 0: RADCOUNT_JOBS env var, else hardware
    long long budget = 1LL << 34;  // refuse enumerations beyond this many elements
    bool projective_speedup = true;
};

struct CountResult {
    mpz_class value;
    int q = 0;
    std::string mode;        // "radical", "overline", "weakened(l,m)", "naive"
    int dim_enumerated = 0;  // D, the F_q-dimension of the enumerated space
    double elapsed_seconds = 0.0;
};

// [Q,d] itself: commuting pairs in rad A x rad A.
CountResult count_commuting(const Quiver& q, const SummandVector& d, int fq,
                            const CountOptions& opts = {});

// Independent oracle: literally enumerates pairs (x,y) in rad A x rad A and
// tests xy = yx through the structure constants. Exponential in 2*dim rad;
// budget-checked. Kept free of the fibered machinery on purpose.
CountResult naive_pair_count(const Quiver& q, const SummandVector& d, int fq,
                             const CountOptions& opts = {});

// Overline variant: x runs over rad A, the kernel of ad_x is measured inside
// all of A (constants included).
CountResult count_overline(const Quiver& q, const SummandVector& d, int fq,
                           const CountOptions& opts = {});

// Weakened variant: x, y run over rad^l (paths of length >= l) and the
// commutator is projected onto the radical paths of length < m.
CountResult count_weakened(const Quiver& q, const SummandVector& d, int fq, int l, int m,
                           const CountOptions& opts = {});

// Effective worker count for the given options.
int resolve_jobs(const CountOptions& opts);

} // namespace radcount
