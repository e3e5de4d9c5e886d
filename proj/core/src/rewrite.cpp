#include "radcount/rewrite.hpp"

#include "radcount/basis.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace radcount {

namespace {

std::string unique_name(const std::string& base, const std::set<std::string>& taken) {
    if (!taken.count(base)) return base;
    for (int k = 2;; ++k) {
        std::string cand = base + "_" + std::to_string(k);
        if (!taken.count(cand)) return cand;
    }
}

std::set<std::string> vertex_name_set(const Quiver& q) {
    return {q.vertex_ids().begin(), q.vertex_ids().end()};
}

std::set<std::string> arrow_name_set(const Quiver& q) {
    std::set<std::string> s;
    for (const Arrow& a : q.arrows()) s.insert(a.id);
    return s;
}

void require_source(const Quiver& q, int v, const char* rule) {
    if (v < 0 || v >= q.num_vertices())
        throw std::invalid_argument(std::string(rule) + ": vertex index out of range");
    if (!q.in_arrows(v).empty())
        throw std::invalid_argument(std::string(rule) + ": vertex \"" + q.vertex_id(v) +
                                    "\" has incoming arrows");
}

void require_sink(const Quiver& q, int v, const char* rule) {
    if (v < 0 || v >= q.num_vertices())
        throw std::invalid_argument(std::string(rule) + ": vertex index out of range");
    if (!q.out_arrows(v).empty())
        throw std::invalid_argument(std::string(rule) + ": vertex \"" + q.vertex_id(v) +
                                    "\" has outgoing arrows");
}

} // namespace

QuiverWithD apply_opposite(const Quiver& q, const SummandVector& d) {
    Quiver op = opposite(q);
    SummandVector nd(op, d.counts());
    return {std::move(op), std::move(nd)};
}

QuiverWithD remove_zero_vertex(const Quiver& q, const SummandVector& d, int v) {
    if (v < 0 || v >= q.num_vertices())
        throw std::invalid_argument("remove_zero_vertex: vertex index out of range");
    if (d.at(v) != 0)
        throw std::invalid_argument("remove_zero_vertex: vertex \"" + q.vertex_id(v) +
                                    "\" has d = " + std::to_string(d.at(v)) + ", not 0");

    std::vector<std::string> ids;
    std::vector<long> counts;
    std::vector<int> remap(q.num_vertices(), -1);
    for (int w = 0; w < q.num_vertices(); ++w) {
        if (w == v) continue;
        remap[w] = static_cast<int>(ids.size());
        ids.push_back(q.vertex_id(w));
        counts.push_back(d.at(w));
    }

    std::vector<Arrow> arrows;
    std::set<std::string> taken;
    for (const Arrow& a : q.arrows()) {
        if (a.src == v || a.dst == v) continue;
        arrows.push_back({a.id, remap[a.src], remap[a.dst]});
        taken.insert(a.id);
    }
    // Composite arrows for every (incoming, outgoing) pair through v,
    // appended in lexicographic (in-id, out-id) order.
    std::vector<std::pair<std::string, std::pair<int, int>>> comps;
    for (int ain : q.in_arrows(v))
        for (int aout : q.out_arrows(v))
            comps.push_back({q.arrow(ain).id + q.arrow(aout).id,
                             {remap[q.arrow(ain).src], remap[q.arrow(aout).dst]}});
    std::sort(comps.begin(), comps.end());
    for (auto& [base, ends] : comps) {
        std::string id = unique_name(base, taken);
        taken.insert(id);
        arrows.push_back({id, ends.first, ends.second});
    }

    Quiver nq(std::move(ids), std::move(arrows));
    SummandVector nd(nq, std::move(counts));
    return {std::move(nq), std::move(nd)};
}

std::vector<QuiverWithD> split_components(const Quiver& q, const SummandVector& d) {
    std::vector<QuiverWithD> out;
    for (const std::vector<int>& comp : connected_components(q))
        out.push_back(induced_subquiver(q, d, comp));
    return out;
}

namespace {

QuiverWithD convert_end(const Quiver& q, const SummandVector& d, int v, bool source) {
    if (source)
        require_source(q, v, "convert_source");
    else
        require_sink(q, v, "convert_sink");

    long dv = d.at(v);
    std::vector<Arrow> arrows;
    std::set<std::string> taken = arrow_name_set(q);
    for (const Arrow& a : q.arrows()) {
        bool at_v = source ? (a.src == v) : (a.dst == v);
        if (!at_v) {
            arrows.push_back(a);
            continue;
        }
        // Replace by dv parallel copies in place (dv = 0 drops the arrow,
        // dv = 1 keeps it unchanged).
        if (dv == 1) {
            arrows.push_back(a);
            continue;
        }
        for (long k = 1; k <= dv; ++k) {
            std::string id = unique_name(a.id + "_" + std::to_string(k), taken);
            taken.insert(id);
            arrows.push_back({id, a.src, a.dst});
        }
    }

    std::vector<long> counts = d.counts();
    counts[v] = 1;
    Quiver nq(q.vertex_ids(), std::move(arrows));
    SummandVector nd(nq, std::move(counts));
    return {std::move(nq), std::move(nd)};
}

QuiverWithD split_end(const Quiver& q, const SummandVector& d, int v,
                      const std::vector<int>& arrows_a, bool source) {
    const char* rule = source ? "split_source" : "split_sink";
    if (source)
        require_source(q, v, rule);
    else
        require_sink(q, v, rule);

    const std::vector<int>& incident = source ? q.out_arrows(v) : q.in_arrows(v);
    std::set<int> inc(incident.begin(), incident.end());
    std::set<int> part_a(arrows_a.begin(), arrows_a.end());
    if (part_a.size() != arrows_a.size())
        throw std::invalid_argument(std::string(rule) + ": partition lists an arrow twice");
    for (int a : part_a)
        if (!inc.count(a))
            throw std::invalid_argument(std::string(rule) +
                                        ": partition contains a non-incident arrow");
    if (part_a.empty() || part_a.size() == inc.size())
        throw std::invalid_argument(std::string(rule) +
                                    ": partition must be a nonempty proper subset");

    std::set<std::string> taken = vertex_name_set(q);
    taken.erase(q.vertex_id(v));
    std::string name_a = unique_name(q.vertex_id(v) + "^A", taken);
    taken.insert(name_a);
    std::string name_b = unique_name(q.vertex_id(v) + "^B", taken);

    std::vector<std::string> ids;
    std::vector<long> counts;
    std::vector<int> remap(q.num_vertices(), -1);
    int idx_a = -1, idx_b = -1;
    for (int w = 0; w < q.num_vertices(); ++w) {
        if (w == v) {
            idx_a = static_cast<int>(ids.size());
            ids.push_back(name_a);
            counts.push_back(d.at(v));
            idx_b = static_cast<int>(ids.size());
            ids.push_back(name_b);
            counts.push_back(d.at(v));
        } else {
            remap[w] = static_cast<int>(ids.size());
            ids.push_back(q.vertex_id(w));
            counts.push_back(d.at(w));
        }
    }

    std::vector<Arrow> arrows;
    for (int ai = 0; ai < q.num_arrows(); ++ai) {
        Arrow a = q.arrow(ai);
        int ns = a.src == v ? (part_a.count(ai) ? idx_a : idx_b) : remap[a.src];
        int nd_ = a.dst == v ? (part_a.count(ai) ? idx_a : idx_b) : remap[a.dst];
        arrows.push_back({a.id, ns, nd_});
    }

    Quiver nq(std::move(ids), std::move(arrows));
    SummandVector nd(nq, std::move(counts));
    return {std::move(nq), std::move(nd)};
}

QuiverWithD merge_ends(const Quiver& q, const SummandVector& d, int u, int v, bool source) {
    const char* rule = source ? "merge_sources" : "merge_sinks";
    if (u == v) throw std::invalid_argument(std::string(rule) + ": vertices must differ");
    if (source) {
        require_source(q, u, rule);
        require_source(q, v, rule);
    } else {
        require_sink(q, u, rule);
        require_sink(q, v, rule);
    }
    if (d.at(u) != d.at(v))
        throw std::invalid_argument(std::string(rule) + ": summand multiplicities differ (" +
                                    std::to_string(d.at(u)) + " vs " + std::to_string(d.at(v)) +
                                    ")");

    std::vector<std::string> ids;
    std::vector<long> counts;
    std::vector<int> remap(q.num_vertices(), -1);
    for (int w = 0; w < q.num_vertices(); ++w) {
        if (w == v) continue;
        remap[w] = static_cast<int>(ids.size());
        ids.push_back(q.vertex_id(w));
        counts.push_back(d.at(w));
    }
    remap[v] = remap[u];

    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows()) arrows.push_back({a.id, remap[a.src], remap[a.dst]});

    Quiver nq(std::move(ids), std::move(arrows));
    SummandVector nd(nq, std::move(counts));
    return {std::move(nq), std::move(nd)};
}

} // namespace

QuiverWithD convert_source(const Quiver& q, const SummandVector& d, int v) {
    return convert_end(q, d, v, true);
}
QuiverWithD convert_sink(const Quiver& q, const SummandVector& d, int v) {
    return convert_end(q, d, v, false);
}
QuiverWithD split_source(const Quiver& q, const SummandVector& d, int v,
                         const std::vector<int>& arrows_a) {
    return split_end(q, d, v, arrows_a, true);
}
QuiverWithD split_sink(const Quiver& q, const SummandVector& d, int v,
                       const std::vector<int>& arrows_a) {
    return split_end(q, d, v, arrows_a, false);
}
QuiverWithD merge_sources(const Quiver& q, const SummandVector& d, int u, int v) {
    return merge_ends(q, d, u, v, true);
}
QuiverWithD merge_sinks(const Quiver& q, const SummandVector& d, int u, int v) {
    return merge_ends(q, d, u, v, false);
}

// ---------------------------------------------------------------------------
// normalize

namespace {

void record(ReductionTrace& trace, const std::string& rule, const std::string& detail,
            const Quiver& before_q, const SummandVector& before_d,
            const std::vector<QuiverWithD>& after) {
    ReductionStep step;
    step.rule = rule;
    step.detail = detail;
    step.before_json = to_json(before_q, before_d);
    for (const auto& [aq, ad] : after) step.after_json.push_back(to_json(aq, ad));
    trace.steps.push_back(std::move(step));
}

// Arrow partition: arrows are glued when they share an endpoint at an
// internal vertex (both in- and out-arrows). Sources and sinks can always be
// split apart, internal vertices never.
std::vector<int> arrow_classes(const Quiver& q) {
    int n = q.num_arrows();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (!q.is_internal(v)) continue;
        std::vector<int> at;
        at.insert(at.end(), q.in_arrows(v).begin(), q.in_arrows(v).end());
        at.insert(at.end(), q.out_arrows(v).begin(), q.out_arrows(v).end());
        for (std::size_t i = 1; i < at.size(); ++i) parent[find(at[i])] = find(at[0]);
    }
    std::vector<int> cls(n);
    for (int a = 0; a < n; ++a) cls[a] = find(a);
    return cls;
}

// Classify one connected, zero-free, single-class component, converting and
// merging the end vertices of a prospective a3 shape; emits any steps taken.
Leaf classify_component(Quiver q, SummandVector d, ReductionTrace& trace) {
    if (q.num_vertices() == 1) return {std::move(q), std::move(d), {LeafKind::point}};

    bool has_internal = false;
    int internal = -1, internal_count = 0;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (q.is_internal(v)) {
            has_internal = true;
            internal = v;
            ++internal_count;
        }

    if (!has_internal) {
        // All paths have length one, so rad^2 = 0 and the count is
        // q^(2 dim rad) with dim rad = sum over arrows of d_src * d_dst.
        Classification c{LeafKind::rad_square_zero};
        for (const Arrow& a : q.arrows()) c.dim_rad += d.at(a.src) * d.at(a.dst);
        return {std::move(q), std::move(d), c};
    }

    if (internal_count > 1) return {std::move(q), std::move(d), {LeafKind::irreducible}};

    // One internal vertex w; every arrow touches it (anything else would be a
    // separate arrow class). Convert d != 1 ends, then merge sources and
    // sinks pairwise until one of each remains.
    auto convert_all = [&](bool source) {
        for (bool again = true; again;) {
            again = false;
            for (int v = 0; v < q.num_vertices(); ++v) {
                bool end_vertex = source ? q.is_source(v) : q.is_sink(v);
                if (!end_vertex || d.at(v) == 1) continue;
                auto [nq, ndv] = source ? convert_source(q, d, v) : convert_sink(q, d, v);
                record(trace, source ? "source-conversion" : "sink-conversion",
                       "vertex \"" + q.vertex_id(v) + "\" (d=" + std::to_string(d.at(v)) + ")",
                       q, d, {{nq, ndv}});
                q = std::move(nq);
                d = std::move(ndv);
                again = true;
                break;
            }
        }
    };
    auto merge_all = [&](bool source) {
        for (bool again = true; again;) {
            again = false;
            std::vector<int> ends;
            for (int v = 0; v < q.num_vertices(); ++v)
                if (source ? q.is_source(v) : q.is_sink(v)) ends.push_back(v);
            if (ends.size() < 2) return;
            auto [nq, ndv] = source ? merge_sources(q, d, ends[0], ends[1])
                                    : merge_sinks(q, d, ends[0], ends[1]);
            record(trace, source ? "source-merge" : "sink-merge",
                   "\"" + q.vertex_id(ends[0]) + "\" + \"" + q.vertex_id(ends[1]) + "\"", q, d,
                   {{nq, ndv}});
            q = std::move(nq);
            d = std::move(ndv);
            again = true;
        }
    };
    convert_all(true);
    convert_all(false);
    merge_all(true);
    merge_all(false);

    // Re-locate w (indices moved) and read off (l, d, m).
    internal = -1;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (q.is_internal(v)) internal = v;
    Classification c{LeafKind::a3_shape};
    c.d = d.at(internal);
    for (int a : q.in_arrows(internal)) c.l += d.at(q.arrow(a).src);
    for (int a : q.out_arrows(internal)) c.m += d.at(q.arrow(a).dst);
    return {std::move(q), std::move(d), c};
}

} // namespace

ReductionTrace normalize(const Quiver& q0, const SummandVector& d0) {
    ReductionTrace trace;
    Quiver q = q0;
    SummandVector d = d0;

    // Stage 1: delete zero vertices until none remain.
    for (bool again = true; again;) {
        again = false;
        for (int v = 0; v < q.num_vertices(); ++v) {
            if (d.at(v) != 0) continue;
            auto [nq, ndv] = remove_zero_vertex(q, d, v);
            record(trace, "zero-vertex-removal", "vertex \"" + q.vertex_id(v) + "\"", q, d,
                   {{nq, ndv}});
            q = std::move(nq);
            d = std::move(ndv);
            again = true;
            break;
        }
    }

    // Stage 2: split sources and sinks sitting on several arrow classes,
    // first class (by smallest arrow id) against the rest, until every
    // vertex touches at most one class.
    for (bool again = true; again;) {
        again = false;
        std::vector<int> cls = arrow_classes(q);
        for (int v = 0; v < q.num_vertices() && !again; ++v) {
            if (q.is_internal(v)) continue;
            const std::vector<int>& incident = q.in_arrows(v).empty() ? q.out_arrows(v)
                                                                      : q.in_arrows(v);
            if (incident.size() < 2) continue;
            // incident is sorted by arrow id, so the first arrow's class is
            // the class with the smallest id at v.
            std::vector<int> part_a;
            for (int a : incident)
                if (cls[a] == cls[incident[0]]) part_a.push_back(a);
            if (part_a.size() == incident.size()) continue;

            bool source = q.in_arrows(v).empty();
            auto [nq, ndv] = source ? split_source(q, d, v, part_a) : split_sink(q, d, v, part_a);
            std::string detail = "vertex \"" + q.vertex_id(v) + "\" by {";
            for (std::size_t i = 0; i < part_a.size(); ++i)
                detail += (i ? "," : "") + q.arrow(part_a[i]).id;
            detail += "} vs rest";
            record(trace, source ? "source-split" : "sink-split", detail, q, d, {{nq, ndv}});
            q = std::move(nq);
            d = std::move(ndv);
            again = true;
        }
    }

    // Stage 3: components, then per-component classification.
    std::vector<QuiverWithD> parts = split_components(q, d);
    if (parts.size() > 1) record(trace, "component-split", "", q, d, parts);
    for (auto& [cq, cd] : parts)
        trace.leaves.push_back(classify_component(std::move(cq), std::move(cd), trace));
    return trace;
}

CountResult dispatch_count(const Quiver& q, const SummandVector& d, int fq,
                           const CountOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    ReductionTrace trace = normalize(q, d);

    mpz_class total = 1;
    for (const Leaf& leaf : trace.leaves) {
        if (leaf.cls.kind == LeafKind::irreducible) {
            total *= count_commuting(leaf.quiver, leaf.d, fq, opts).value;
        } else {
            total *= base_count_poly(leaf.cls).eval_z(mpz_class(fq));
        }
    }

    CountResult res;
    res.value = std::move(total);
    res.q = fq;
    res.mode = "radical";
    res.dim_enumerated = static_cast<int>(weighted_radical_dim(q, d));
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace radcount
