#include "radcount/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <stdexcept>

namespace radcount {

// ---------------------------------------------------------------------------
// SHA-256, straight from the FIPS 180-4 description. Self-contained so the
// core library needs no crypto dependency for one digest.

namespace {

constexpr std::uint32_t kSha256K[64] = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4,
    0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe,
    0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f,
    0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7,
    0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
    0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116,
    0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
    0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
    0xc67178f2};

inline std::uint32_t rotr(std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

void sha256_block(std::uint32_t h[8], const std::uint8_t* p) {
    std::uint32_t w[64];
    for (int i = 0; i < 16; ++i)
        w[i] = (std::uint32_t(p[4 * i]) << 24) | (std::uint32_t(p[4 * i + 1]) << 16) |
               (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
    for (int i = 16; i < 64; ++i) {
        std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
        std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
        w[i] = w[i - 16] + s0 + w[i - 7] + s1;
    }
    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6],
                  hh = h[7];
    for (int i = 0; i < 64; ++i) {
        std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
        std::uint32_t ch = (e & f) ^ (~e & g);
        std::uint32_t t1 = hh + s1 + ch + kSha256K[i] + w[i];
        std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
        std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
        std::uint32_t t2 = s0 + maj;
        hh = g;
        g = f;
        f = e;
        e = d + t1;
        d = c;
        c = b;
        b = a;
        a = t1 + t2;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
    h[5] += f;
    h[6] += g;
    h[7] += hh;
}

} // namespace

std::string sha256_hex(const std::uint8_t* data, std::size_t len) {
    std::uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                          0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    std::size_t full = len / 64;
    for (std::size_t i = 0; i < full; ++i) sha256_block(h, data + 64 * i);

    std::uint8_t tail[128] = {0};
    std::size_t rem = len - 64 * full;
    std::memcpy(tail, data + 64 * full, rem);
    tail[rem] = 0x80;
    std::size_t tail_len = (rem + 9 <= 64) ? 64 : 128;
    std::uint64_t bits = std::uint64_t(len) * 8;
    for (int i = 0; i < 8; ++i) tail[tail_len - 1 - i] = std::uint8_t(bits >> (8 * i));
    sha256_block(h, tail);
    if (tail_len == 128) sha256_block(h, tail + 64);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (int i = 0; i < 8; ++i)
        for (int j = 28; j >= 0; j -= 4) out.push_back(hex[(h[i] >> j) & 0xf]);
    return out;
}

// ---------------------------------------------------------------------------
// Canonical labeling. Colors start as d-values, get refined by in/out degree
// profiles, and the final encoding is minimized over all orderings that list
// color classes in color order and permute freely inside a class.

namespace {

void push_u32(std::vector<std::uint8_t>& v, std::uint32_t x) {
    v.push_back(std::uint8_t(x >> 24));
    v.push_back(std::uint8_t(x >> 16));
    v.push_back(std::uint8_t(x >> 8));
    v.push_back(std::uint8_t(x));
}

std::vector<std::uint8_t> encode(const Quiver& q, const SummandVector& d,
                                 const std::vector<int>& order,
                                 const std::vector<std::vector<std::uint16_t>>& adj) {
    int n = q.num_vertices();
    std::vector<std::uint8_t> enc;
    enc.reserve(4 + 4 * n + 2 * n * n);
    push_u32(enc, std::uint32_t(n));
    for (int i = 0; i < n; ++i) push_u32(enc, std::uint32_t(d.at(order[i])));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::uint16_t m = adj[order[i]][order[j]];
            enc.push_back(std::uint8_t(m >> 8));
            enc.push_back(std::uint8_t(m));
        }
    return enc;
}

} // namespace

std::vector<std::uint8_t> canonical_form(const Quiver& q, const SummandVector& d) {
    int n = q.num_vertices();
    if (n == 0) {
        std::vector<std::uint8_t> enc;
        push_u32(enc, 0);
        return enc;
    }

    std::vector<std::vector<std::uint16_t>> adj(n, std::vector<std::uint16_t>(n, 0));
    for (const Arrow& ar : q.arrows()) ++adj[ar.src][ar.dst];

    // Iterated refinement. A color is a rank; the refined key of a vertex is
    // its old rank plus the sorted multisets of (neighbor rank, multiplicity)
    // seen along outgoing and incoming arrows.
    std::vector<long> color(n);
    {
        std::vector<long> sorted(n);
        for (int v = 0; v < n; ++v) sorted[v] = d.at(v);
        std::vector<long> uniq = sorted;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            color[v] = std::lower_bound(uniq.begin(), uniq.end(), d.at(v)) - uniq.begin();
    }
    for (int round = 0; round < n; ++round) {
        using Key = std::tuple<long, std::vector<std::pair<long, int>>,
                               std::vector<std::pair<long, int>>>;
        std::vector<Key> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<long, int>> outp, inp;
            for (int w = 0; w < n; ++w) {
                if (adj[v][w]) outp.emplace_back(color[w], adj[v][w]);
                if (adj[w][v]) inp.emplace_back(color[w], adj[w][v]);
            }
            std::sort(outp.begin(), outp.end());
            std::sort(inp.begin(), inp.end());
            keys[v] = {color[v], std::move(outp), std::move(inp)};
        }
        std::map<Key, long> rank;
        for (const Key& k : keys) rank.emplace(k, 0);
        long r = 0;
        for (auto& [k, val] : rank) val = r++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            long nv = rank.at(keys[v]);
            if (nv != color[v]) changed = true;
            color[v] = nv;
        }
        if (!changed) break;
    }

    // Vertices grouped by final color; orderings enumerate the product of
    // per-class permutations.
    std::map<long, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);

    double work = 1;
    for (const auto& [c, members] : classes) {
        double f = 1;
        for (std::size_t i = 2; i <= members.size(); ++i) f *= double(i);
        work *= f;
        if (work > 5e6)
            throw std::invalid_argument("canonical_form: quiver symmetry class too large");
    }

    std::vector<std::vector<int>> groups;
    for (auto& [c, members] : classes) groups.push_back(members);

    std::vector<std::uint8_t> best;
    std::vector<int> order;
    order.reserve(n);

    // Odometer over per-group permutations.
    std::vector<std::vector<int>> perms = groups;
    bool done = false;
    while (!done) {
        order.clear();
        for (const auto& g : perms) order.insert(order.end(), g.begin(), g.end());
        std::vector<std::uint8_t> enc = encode(q, d, order, adj);
        if (best.empty() || enc < best) best = std::move(enc);

        int gi = static_cast<int>(perms.size()) - 1;
        while (gi >= 0 && !std::next_permutation(perms[gi].begin(), perms[gi].end())) {
            std::sort(perms[gi].begin(), perms[gi].end());
            --gi;
        }
        if (gi < 0) done = true;
    }
    return best;
}

std::string canonical_hash(const Quiver& q, const SummandVector& d) {
    std::vector<std::uint8_t> enc = canonical_form(q, d);
    return sha256_hex(enc.data(), enc.size());
}

} // namespace radcount
