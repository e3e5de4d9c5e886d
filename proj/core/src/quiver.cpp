#include "radcount/quiver.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace radcount {

namespace {

void sort_by_arrow_id(std::vector<int>& idx, const std::vector<Arrow>& arrows) {
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return arrows[a].id < arrows[b].id; });
}

} // namespace

Quiver::Quiver(std::vector<std::string> vertex_ids, std::vector<Arrow> arrows)
    : vertex_ids_(std::move(vertex_ids)), arrows_(std::move(arrows)) {
    std::set<std::string> seen;
    for (const auto& v : vertex_ids_)
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate vertex id \"" + v + "\"");

    seen.clear();
    int n = num_vertices();
    out_.assign(n, {});
    in_.assign(n, {});
    for (int a = 0; a < num_arrows(); ++a) {
        const Arrow& ar = arrows_[a];
        if (!seen.insert(ar.id).second)
            throw std::invalid_argument("duplicate arrow id \"" + ar.id + "\"");
        if (ar.src < 0 || ar.src >= n || ar.dst < 0 || ar.dst >= n)
            throw std::invalid_argument("arrow \"" + ar.id + "\" references a missing vertex");
        out_[ar.src].push_back(a);
        in_[ar.dst].push_back(a);
    }
    for (int v = 0; v < n; ++v) {
        sort_by_arrow_id(out_[v], arrows_);
        sort_by_arrow_id(in_[v], arrows_);
    }

    // Kahn's algorithm; leftovers mean a directed cycle.
    std::vector<int> indeg(n, 0);
    for (const Arrow& ar : arrows_) ++indeg[ar.dst];
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int visited = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++visited;
        for (int a : out_[v])
            if (--indeg[arrows_[a].dst] == 0) queue.push_back(arrows_[a].dst);
    }
    if (visited != n) throw std::invalid_argument("quiver has a directed cycle");
}

int Quiver::vertex_index(const std::string& id) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (vertex_ids_[v] == id) return v;
    return -1;
}

SummandVector::SummandVector(const Quiver& q, std::vector<long> counts)
    : counts_(std::move(counts)) {
    if (static_cast<int>(counts_.size()) != q.num_vertices())
        throw std::invalid_argument("summand vector length does not match vertex count");
    for (long c : counts_)
        if (c < 0) throw std::invalid_argument("negative summand multiplicity");
}

std::pair<Quiver, SummandVector> parse_quiver(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("top-level JSON value must be an object");
    for (const auto& [key, _] : j.items())
        if (key != "vertices" && key != "arrows" && key != "d")
            throw std::invalid_argument("unexpected key \"" + key + "\" in quiver object");
    if (!j.contains("vertices") || !j.contains("arrows") || !j.contains("d"))
        throw std::invalid_argument("quiver object needs keys \"vertices\", \"arrows\", \"d\"");
    if (!j["vertices"].is_array()) throw std::invalid_argument("\"vertices\" must be an array");
    if (!j["arrows"].is_array()) throw std::invalid_argument("\"arrows\" must be an array");
    if (!j["d"].is_object()) throw std::invalid_argument("\"d\" must be an object");

    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw std::invalid_argument("vertex ids must be strings");
        vertices.push_back(v.get<std::string>());
    }

    std::vector<Arrow> arrows;
    int next = 0;
    for (const auto& e : j["arrows"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw std::invalid_argument("each arrow must be a [source, target] pair of vertex ids");
        Arrow ar;
        ar.id = "a" + std::to_string(next++);
        ar.src = -1;
        ar.dst = -1;
        for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
            if (vertices[v] == e[0].get<std::string>()) ar.src = v;
            if (vertices[v] == e[1].get<std::string>()) ar.dst = v;
        }
        if (ar.src < 0 || ar.dst < 0)
            throw std::invalid_argument("arrow [" + e[0].get<std::string>() + ", " +
                                        e[1].get<std::string>() + "] references a missing vertex");
        arrows.push_back(std::move(ar));
    }

    Quiver q(std::move(vertices), std::move(arrows));

    std::vector<long> counts(q.num_vertices(), 0);
    std::vector<bool> have(q.num_vertices(), false);
    for (const auto& [key, val] : j["d"].items()) {
        int v = q.vertex_index(key);
        if (v < 0)
            throw std::invalid_argument("\"d\" has key \"" + key + "\" that is not a vertex");
        if (!val.is_number_integer() || val.get<long>() < 0)
            throw std::invalid_argument("d[\"" + key + "\"] must be a nonnegative integer");
        counts[v] = val.get<long>();
        have[v] = true;
    }
    for (int v = 0; v < q.num_vertices(); ++v)
        if (!have[v])
            throw std::invalid_argument("\"d\" is missing vertex \"" + q.vertex_id(v) + "\"");

    return {q, SummandVector(q, std::move(counts))};
}

std::string to_json(const Quiver& q, const SummandVector& d) {
    nlohmann::ordered_json j;
    j["vertices"] = q.vertex_ids();
    auto arrows = nlohmann::ordered_json::array();
    for (const Arrow& ar : q.arrows())
        arrows.push_back({q.vertex_id(ar.src), q.vertex_id(ar.dst)});
    j["arrows"] = std::move(arrows);
    nlohmann::ordered_json dj = nlohmann::ordered_json::object();
    for (int v = 0; v < q.num_vertices(); ++v) dj[q.vertex_id(v)] = d.at(v);
    j["d"] = std::move(dj);
    return j.dump();
}

namespace {

void extend_paths(const Quiver& q, int at, int to, int min_len, Path& cur,
                  std::vector<Path>& out) {
    if (at == to && cur.length() >= min_len) out.push_back(cur);
    for (int a : q.out_arrows(at)) {
        cur.arrows.push_back(a);
        extend_paths(q, q.arrow(a).dst, to, min_len, cur, out);
        cur.arrows.pop_back();
    }
}

} // namespace

std::vector<Path> enumerate_paths(const Quiver& q, int from, int to, int min_len) {
    if (from < 0 || from >= q.num_vertices() || to < 0 || to >= q.num_vertices())
        throw std::invalid_argument("enumerate_paths: vertex index out of range");
    std::vector<Path> out;
    Path cur;
    cur.from = from;
    cur.to = to;
    extend_paths(q, from, to, min_len, cur, out);
    return out;
}

Path concat(const Path& c, const Path& p) {
    if (c.to != p.from) throw std::invalid_argument("concat: paths are not composable");
    Path r;
    r.from = c.from;
    r.to = p.to;
    r.arrows = c.arrows;
    r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
    return r;
}

Quiver opposite(const Quiver& q) {
    std::vector<Arrow> rev = q.arrows();
    for (Arrow& ar : rev) std::swap(ar.src, ar.dst);
    return Quiver(q.vertex_ids(), std::move(rev));
}

std::vector<std::vector<int>> connected_components(const Quiver& q) {
    int n = q.num_vertices();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int a : q.out_arrows(v)) {
                int w = q.arrow(a).dst;
                if (comp[w] < 0) comp[w] = nc, stack.push_back(w);
            }
            for (int a : q.in_arrows(v)) {
                int w = q.arrow(a).src;
                if (comp[w] < 0) comp[w] = nc, stack.push_back(w);
            }
        }
        ++nc;
    }
    std::vector<std::vector<int>> out(nc);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

std::pair<Quiver, SummandVector> induced_subquiver(const Quiver& q, const SummandVector& d,
                                                   const std::vector<int>& vertices) {
    std::vector<int> remap(q.num_vertices(), -1);
    std::vector<std::string> ids;
    std::vector<long> counts;
    for (int v : vertices) {
        remap[v] = static_cast<int>(ids.size());
        ids.push_back(q.vertex_id(v));
        counts.push_back(d.at(v));
    }
    std::vector<Arrow> arrows;
    for (const Arrow& ar : q.arrows())
        if (remap[ar.src] >= 0 && remap[ar.dst] >= 0)
            arrows.push_back({ar.id, remap[ar.src], remap[ar.dst]});
    Quiver sub(std::move(ids), std::move(arrows));
    SummandVector sd(sub, std::move(counts));
    return {std::move(sub), std::move(sd)};
}

} // namespace radcount
