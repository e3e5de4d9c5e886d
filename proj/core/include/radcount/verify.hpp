#pragma once

// Randomized verification suites behind `radcount verify`. All randomness
// comes from a splitmix64 stream seeded explicitly, so every suite is
// reproducible byte-for-byte; failures carry a JSON reproducer.

#include "radcount/count.hpp"
#include "radcount/quiver.hpp"
#include "radcount/rewrite.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace radcount {

struct SuiteReport {
    std::string suite;
    int trials = 0, passed = 0, failed = 0;
    std::vector<std::string> lines;    // one entry per trial
    std::vector<std::string> failures; // reproducers with context
    bool ok() const { return failed == 0; }
};

// Deterministic RNG; identical output on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform-ish value in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

// Random (quiver, d) with at most max_vertices vertices, acyclic by
// construction, d entries in [0, 2], weighted radical dimension at most
// max_dim_rad.
QuiverWithD random_quiver(SplitMix64& rng, int max_vertices, long long max_dim_rad);

// Each trial applies one rewrite rule (cycling through all nine) to a random
// instance and checks that the commuting-pair count at every q in qs equals
// the product over the pieces, and that dim rad is preserved.
SuiteReport run_ops_suite(std::uint64_t seed, int trials, const std::vector<int>& qs,
                          const CountOptions& opts = {});

// Fibered count against the literal pair-enumeration oracle.
SuiteReport run_oracle_suite(std::uint64_t seed, int trials, const std::vector<int>& qs,
                             const CountOptions& opts = {});

// k(U_n(F_q)) * q^(n(n-1)/2) == count for the equioriented chain A_n with
// d = (1,...,1), for n = 1..max_n and q in qs (qs restricted to {2,3}).
SuiteReport run_burnside_suite(int max_n, const std::vector<int>& qs,
                               const CountOptions& opts = {});

// Random single-sink oriented quivers: the algebra embeds into End(V_sink),
// checked as nullity 0 of the action matrix over each q in qs.
SuiteReport run_injectivity_suite(std::uint64_t seed, int trials, const std::vector<int>& qs,
                                  const CountOptions& opts = {});

// Recompute a deterministic 10% sample of cache records and compare.
SuiteReport run_cache_audit(const std::string& cache_path, std::uint64_t seed,
                            const CountOptions& opts = {});

} // namespace radcount
