#include "radcount/verify.hpp"

#include "radcount/basis.hpp"
#include "radcount/cache.hpp"
#include "radcount/field.hpp"
#include "radcount/matrix.hpp"
#include "radcount/unitriangular.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

namespace radcount {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

QuiverWithD random_quiver(SplitMix64& rng, int max_vertices, long long max_dim_rad) {
    for (;;) {
        int n = 1 + static_cast<int>(rng.below(max_vertices));
        std::vector<std::string> ids;
        for (int v = 0; v < n; ++v) ids.push_back("v" + std::to_string(v + 1));

        // Arrows only go from lower to higher index, so the result is acyclic
        // by construction.
        std::vector<Arrow> arrows;
        if (n >= 2) {
            int na = static_cast<int>(rng.below(6));
            for (int a = 0; a < na; ++a) {
                int i = static_cast<int>(rng.below(n - 1));
                int j = i + 1 + static_cast<int>(rng.below(n - 1 - i));
                arrows.push_back({"a" + std::to_string(a), i, j});
            }
        }
        Quiver q(std::move(ids), std::move(arrows));

        std::vector<long> counts(n);
        for (int v = 0; v < n; ++v) counts[v] = static_cast<long>(rng.below(3));
        SummandVector d(q, std::move(counts));

        if (weighted_radical_dim(q, d) <= max_dim_rad) return {std::move(q), std::move(d)};
    }
}

namespace {

std::string fail_record(const std::string& what, const Quiver& q, const SummandVector& d) {
    return what + "\n  reproducer: " + to_json(q, d);
}

mpz_class product_of_counts(const std::vector<QuiverWithD>& parts, int fq,
                            const CountOptions& opts) {
    mpz_class prod = 1;
    for (const auto& [pq, pd] : parts) prod *= count_commuting(pq, pd, fq, opts).value;
    return prod;
}

// One applicable random application of the rule with the given index
// (0..8); returns the pieces, or false when the rule does not apply.
bool apply_rule(int rule, SplitMix64& rng, const Quiver& q, const SummandVector& d,
                std::string& name, std::vector<QuiverWithD>& after) {
    after.clear();
    switch (rule) {
        case 0: {
            name = "arrow-reversal";
            after.push_back(apply_opposite(q, d));
            return true;
        }
        case 1: {
            name = "zero-vertex-removal";
            std::vector<int> zeros;
            for (int v = 0; v < q.num_vertices(); ++v)
                if (d.at(v) == 0) zeros.push_back(v);
            if (zeros.empty()) return false;
            after.push_back(remove_zero_vertex(q, d, zeros[rng.below(zeros.size())]));
            return true;
        }
        case 2: {
            name = "component-split";
            after = split_components(q, d);
            return true;
        }
        case 3: {
            name = "source-conversion";
            std::vector<int> cand;
            for (int v = 0; v < q.num_vertices(); ++v)
                if (q.in_arrows(v).empty()) cand.push_back(v);
            if (cand.empty()) return false;
            after.push_back(convert_source(q, d, cand[rng.below(cand.size())]));
            return true;
        }
        case 4: {
            name = "sink-conversion";
            std::vector<int> cand;
            for (int v = 0; v < q.num_vertices(); ++v)
                if (q.out_arrows(v).empty()) cand.push_back(v);
            if (cand.empty()) return false;
            after.push_back(convert_sink(q, d, cand[rng.below(cand.size())]));
            return true;
        }
        case 5:
        case 6: {
            bool source = (rule == 5);
            name = source ? "source-split" : "sink-split";
            std::vector<int> cand;
            for (int v = 0; v < q.num_vertices(); ++v) {
                const auto& inc = source ? q.out_arrows(v) : q.in_arrows(v);
                const auto& other = source ? q.in_arrows(v) : q.out_arrows(v);
                if (other.empty() && inc.size() >= 2) cand.push_back(v);
            }
            if (cand.empty()) return false;
            int v = cand[rng.below(cand.size())];
            const auto& inc = source ? q.out_arrows(v) : q.in_arrows(v);
            // Random nonempty proper subset via a bitmask.
            std::uint64_t mask = 1 + rng.below((1ULL << inc.size()) - 2);
            std::vector<int> part;
            for (std::size_t i = 0; i < inc.size(); ++i)
                if (mask & (1ULL << i)) part.push_back(inc[i]);
            after.push_back(source ? split_source(q, d, v, part) : split_sink(q, d, v, part));
            return true;
        }
        case 7:
        case 8: {
            bool source = (rule == 7);
            name = source ? "source-merge" : "sink-merge";
            std::map<long, std::vector<int>> by_d;
            for (int v = 0; v < q.num_vertices(); ++v) {
                bool end = source ? q.in_arrows(v).empty() : q.out_arrows(v).empty();
                if (end) by_d[d.at(v)].push_back(v);
            }
            std::vector<std::pair<int, int>> pairs;
            for (const auto& [dv, vs] : by_d)
                for (std::size_t i = 0; i < vs.size(); ++i)
                    for (std::size_t j = i + 1; j < vs.size(); ++j)
                        pairs.emplace_back(vs[i], vs[j]);
            if (pairs.empty()) return false;
            auto [u, v] = pairs[rng.below(pairs.size())];
            after.push_back(source ? merge_sources(q, d, u, v) : merge_sinks(q, d, u, v));
            return true;
        }
    }
    return false;
}

} // namespace

SuiteReport run_ops_suite(std::uint64_t seed, int trials, const std::vector<int>& qs,
                          const CountOptions& opts) {
    SuiteReport rep;
    rep.suite = "ops";
    SplitMix64 rng(seed);

    for (int t = 0; t < trials; ++t) {
        auto [q, d] = random_quiver(rng, 5, 10);
        std::string name;
        std::vector<QuiverWithD> after;
        // Cycle the rule per trial; fall through to the next rule until one
        // applies (arrow-reversal always does).
        for (int probe = 0; probe < 9; ++probe)
            if (apply_rule((t + probe) % 9, rng, q, d, name, after)) break;

        bool ok = true;
        std::string why;
        long long dim_before = weighted_radical_dim(q, d), dim_after = 0;
        for (const auto& [aq, ad] : after) dim_after += weighted_radical_dim(aq, ad);
        if (dim_before != dim_after) {
            ok = false;
            why = "dim rad changed: " + std::to_string(dim_before) + " -> " +
                  std::to_string(dim_after);
        }
        for (int fq : qs) {
            if (!ok) break;
            mpz_class before = count_commuting(q, d, fq, opts).value;
            mpz_class prod = product_of_counts(after, fq, opts);
            if (before != prod) {
                ok = false;
                why = "count mismatch at q=" + std::to_string(fq) + ": " + before.get_str() +
                      " vs product " + prod.get_str();
            }
        }

        ++rep.trials;
        if (ok) {
            ++rep.passed;
            rep.lines.push_back("trial " + std::to_string(t) + ": " + name + " ok");
        } else {
            ++rep.failed;
            rep.lines.push_back("trial " + std::to_string(t) + ": " + name + " FAIL");
            rep.failures.push_back(fail_record("trial " + std::to_string(t) + " (" + name +
                                                   "): " + why,
                                               q, d));
        }
    }
    return rep;
}

SuiteReport run_oracle_suite(std::uint64_t seed, int trials, const std::vector<int>& qs,
                             const CountOptions& opts) {
    SuiteReport rep;
    rep.suite = "oracle";
    SplitMix64 rng(seed);

    for (int t = 0; t < trials; ++t) {
        auto [q, d] = random_quiver(rng, 3, 5);
        bool ok = true;
        std::string why;
        for (int fq : qs) {
            mpz_class fibered = count_commuting(q, d, fq, opts).value;
            mpz_class naive = naive_pair_count(q, d, fq, opts).value;
            if (fibered != naive) {
                ok = false;
                why = "q=" + std::to_string(fq) + ": fibered " + fibered.get_str() +
                      " vs naive " + naive.get_str();
                break;
            }
        }
        ++rep.trials;
        if (ok) {
            ++rep.passed;
            rep.lines.push_back("trial " + std::to_string(t) + ": fibered == naive");
        } else {
            ++rep.failed;
            rep.lines.push_back("trial " + std::to_string(t) + ": FAIL");
            rep.failures.push_back(fail_record("trial " + std::to_string(t) + ": " + why, q, d));
        }
    }
    return rep;
}

SuiteReport run_burnside_suite(int max_n, const std::vector<int>& qs, const CountOptions& opts) {
    SuiteReport rep;
    rep.suite = "burnside";
    if (max_n < 1 || max_n > 5)
        throw std::invalid_argument("burnside suite: max_n must be 1..5");

    for (int n = 1; n <= max_n; ++n) {
        // Equioriented chain A_n with d = (1,...,1).
        std::vector<std::string> ids;
        std::vector<Arrow> arrows;
        for (int v = 0; v < n; ++v) ids.push_back(std::to_string(v + 1));
        for (int v = 0; v + 1 < n; ++v) arrows.push_back({"a" + std::to_string(v), v, v + 1});
        Quiver q(std::move(ids), std::move(arrows));
        SummandVector d(q, std::vector<long>(n, 1));

        for (int fq : qs) {
            if (fq != 2 && fq != 3)
                throw std::invalid_argument("burnside suite: q must be 2 or 3");
            long long classes = count_conjugacy_classes_un(n, fq);
            mpz_class lhs(std::to_string(classes));
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), fq, static_cast<unsigned long>(n * (n - 1) / 2));
            lhs *= scale;
            mpz_class rhs = count_commuting(q, d, fq, opts).value;

            ++rep.trials;
            std::string head = "n=" + std::to_string(n) + " q=" + std::to_string(fq) + ": k(U_n)=" +
                               std::to_string(classes);
            if (lhs == rhs) {
                ++rep.passed;
                rep.lines.push_back(head + ", bridge holds");
            } else {
                ++rep.failed;
                rep.lines.push_back(head + ", FAIL");
                rep.failures.push_back(head + ": k(U_n) * q^(n(n-1)/2) = " + lhs.get_str() +
                                       " but chain count = " + rhs.get_str());
            }
        }
    }
    return rep;
}

SuiteReport run_injectivity_suite(std::uint64_t seed, int trials, const std::vector<int>& qs,
                                  const CountOptions& opts) {
    (void)opts;
    SuiteReport rep;
    rep.suite = "injectivity";
    SplitMix64 rng(seed);

    for (int t = 0; t < trials; ++t) {
        // Single-sink oriented quiver: every vertex except the last has at
        // least one outgoing arrow to a higher index, so the last vertex is
        // the unique sink and every vertex reaches it.
        int n = 2 + static_cast<int>(rng.below(4));
        std::vector<std::string> ids;
        for (int v = 0; v < n; ++v) ids.push_back("v" + std::to_string(v + 1));
        std::vector<Arrow> arrows;
        int na = 0;
        for (int v = 0; v + 1 < n; ++v) {
            int w = v + 1 + static_cast<int>(rng.below(n - 1 - v));
            arrows.push_back({"a" + std::to_string(na++), v, w});
        }
        int extra = static_cast<int>(rng.below(3));
        for (int e = 0; e < extra && n >= 2; ++e) {
            int i = static_cast<int>(rng.below(n - 1));
            int j = i + 1 + static_cast<int>(rng.below(n - 1 - i));
            arrows.push_back({"a" + std::to_string(na++), i, j});
        }
        Quiver q(std::move(ids), std::move(arrows));
        std::vector<long> counts(n);
        for (int v = 0; v < n; ++v) counts[v] = 1 + static_cast<long>(rng.below(2));
        SummandVector d(q, std::move(counts));

        int sink = n - 1;
        AlgebraBasis basis = build_basis(q, d, /*include_constants=*/true);

        // Basis of V = Hom(P(sink), sum of slot projectives): pairs
        // (slot s, path v_s ~> sink).
        struct VBasis {
            int slot;
            Path path;
        };
        std::vector<VBasis> vb;
        std::vector<std::vector<Path>> paths_to_sink(q.num_vertices());
        for (int v = 0; v < q.num_vertices(); ++v)
            paths_to_sink[v] = enumerate_paths(q, v, sink, 0);
        const SlotList& slots = basis.slots();
        for (int s = 0; s < slots.size(); ++s)
            for (const Path& p : paths_to_sink[slots.vertex[s]]) vb.push_back({s, p});

        // index lookup for (slot, path)
        auto v_index = [&](int slot, const Path& p) {
            for (int i = 0; i < static_cast<int>(vb.size()); ++i)
                if (vb[i].slot == slot && vb[i].path == p) return i;
            return -1;
        };

        int dv = static_cast<int>(vb.size());
        bool ok = true;
        std::string why;
        for (int fq : qs) {
            const FieldTable& F = make_field(fq);
            // Rows flatten the action matrix End(V); columns run over A.
            FqMatrix m(dv * dv, basis.dim());
            for (int col = 0; col < basis.dim(); ++col) {
                const BasisElement& e = basis.element(col);
                for (int u = 0; u < dv; ++u) {
                    if (vb[u].slot != e.slot_j) continue;
                    Path image = concat(e.path, vb[u].path);
                    int target = v_index(e.slot_i, image);
                    if (target < 0) throw std::logic_error("injectivity: missing image path");
                    m.set(target * dv + u, col, 1);
                }
            }
            int nul = nullity(F, m);
            if (nul != 0) {
                ok = false;
                why = "action map has nullity " + std::to_string(nul) + " at q=" +
                      std::to_string(fq);
                break;
            }
        }

        ++rep.trials;
        if (ok) {
            ++rep.passed;
            rep.lines.push_back("trial " + std::to_string(t) + ": action map injective");
        } else {
            ++rep.failed;
            rep.lines.push_back("trial " + std::to_string(t) + ": FAIL");
            rep.failures.push_back(fail_record("trial " + std::to_string(t) + ": " + why, q, d));
        }
    }
    return rep;
}

SuiteReport run_cache_audit(const std::string& cache_path, std::uint64_t seed,
                            const CountOptions& opts) {
    SuiteReport rep;
    rep.suite = "cache";
    ResultCache cache(cache_path);
    cache.load();

    int n = static_cast<int>(cache.records().size());
    if (n == 0) {
        rep.lines.push_back("cache empty, nothing to audit");
        return rep;
    }

    // Deterministic 10% sample (at least one record).
    int want = std::max(1, (n + 9) / 10);
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    SplitMix64 rng(seed);
    for (int i = n - 1; i > 0; --i) std::swap(idx[i], idx[rng.below(i + 1)]);
    idx.resize(want);
    std::sort(idx.begin(), idx.end());

    for (int i : idx) {
        const CacheRecord& rec = cache.records()[i];
        ++rep.trials;
        std::string head = "record " + std::to_string(i) + " (" + rec.key + ")";
        try {
            auto [q, d] = parse_quiver(rec.input_json);
            mpz_class got;
            if (rec.mode == "radical") {
                got = count_commuting(q, d, rec.q, opts).value;
            } else if (rec.mode == "overline") {
                got = count_overline(q, d, rec.q, opts).value;
            } else if (rec.mode.rfind("weakened(", 0) == 0) {
                int l = 0, m = 0;
                if (std::sscanf(rec.mode.c_str(), "weakened(%d,%d)", &l, &m) != 2)
                    throw std::invalid_argument("bad weakened mode string: " + rec.mode);
                got = count_weakened(q, d, rec.q, l, m, opts).value;
            } else {
                throw std::invalid_argument("unknown mode in cache record: " + rec.mode);
            }
            if (got.get_str() == rec.value) {
                ++rep.passed;
                rep.lines.push_back(head + ": recomputed value matches");
            } else {
                ++rep.failed;
                rep.lines.push_back(head + ": FAIL");
                rep.failures.push_back(head + ": cached " + rec.value + " but recomputed " +
                                       got.get_str());
            }
        } catch (const std::exception& e) {
            ++rep.failed;
            rep.lines.push_back(head + ": FAIL");
            rep.failures.push_back(head + ": cannot recompute: " + e.what());
        }
    }
    return rep;
}

} // namespace radcount
