#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radcount/basis.hpp"
#include "radcount/canonical.hpp"
#include "radcount/count.hpp"
#include "radcount/polynomial.hpp"
#include "radcount/quiver.hpp"
#include "radcount/rewrite.hpp"
#include "radcount/verify.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace radcount;

namespace {

QuiverWithD parse(const std::string& text) { return parse_quiver(text); }

mpz_class brute(const QuiverWithD& qd, int fq) {
    return count_commuting(qd.first, qd.second, fq).value;
}

mpz_class product_count(const std::vector<QuiverWithD>& parts, int fq) {
    mpz_class prod = 1;
    for (const auto& [q, d] : parts) prod *= count_commuting(q, d, fq).value;
    return prod;
}

const char* kStar = R"({"vertices":["1","2","3"],"arrows":[["1","2"],["1","3"]],)"
                    R"("d":{"1":1,"2":1,"3":1}})";
const char* kShortcut = R"({"vertices":["1","2","3"],)"
                        R"("arrows":[["1","2"],["2","3"],["1","3"]],)"
                        R"("d":{"1":1,"2":1,"3":1}})";

} // namespace

TEST_CASE("opposite preserves the count") {
    auto [q, d] = parse(kShortcut);
    auto [oq, od] = apply_opposite(q, d);
    for (int fq : {2, 3}) CHECK(brute({q, d}, fq) == brute({oq, od}, fq));
    CHECK(weighted_radical_dim(q, d) == weighted_radical_dim(oq, od));
}

TEST_CASE("zero vertex removal composes arrows through the vertex") {
    auto [q, d] = parse(R"({"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"]],)"
                        R"("d":{"1":1,"2":0,"3":1}})");
    auto [rq, rd] = remove_zero_vertex(q, d, 1);
    CHECK(rq.num_vertices() == 2);
    REQUIRE(rq.num_arrows() == 1);
    CHECK(rq.arrow(0).id == "a0a1");
    CHECK(rq.vertex_id(0) == "1");
    CHECK(rq.vertex_id(1) == "3");
    for (int fq : {2, 3, 5}) {
        CHECK(brute({rq, rd}, fq) == fq * fq);
        CHECK(brute({q, d}, fq) == fq * fq);
    }
    // Only valid on d = 0 vertices.
    CHECK_THROWS_AS(remove_zero_vertex(q, d, 0), std::invalid_argument);
}

TEST_CASE("zero vertex removal keeps parallel composites distinct") {
    // Two paths through the zero vertex give two composite arrows.
    auto [q, d] = parse(R"({"vertices":["1","2","3"],)"
                        R"("arrows":[["1","2"],["1","2"],["2","3"]],)"
                        R"("d":{"1":1,"2":0,"3":1}})");
    auto [rq, rd] = remove_zero_vertex(q, d, 1);
    REQUIRE(rq.num_arrows() == 2);
    CHECK(rq.arrow(0).id == "a0a2");
    CHECK(rq.arrow(1).id == "a1a2");
    for (int fq : {2, 3}) CHECK(brute({q, d}, fq) == brute({rq, rd}, fq));
}

TEST_CASE("component split multiplies counts") {
    auto [q, d] = parse(R"({"vertices":["1","2","3","4"],)"
                        R"("arrows":[["1","2"],["3","4"]],)"
                        R"("d":{"1":1,"2":1,"3":2,"4":1}})");
    auto parts = split_components(q, d);
    REQUIRE(parts.size() == 2);
    for (int fq : {2, 3}) CHECK(brute({q, d}, fq) == product_count(parts, fq));
}

TEST_CASE("source and sink conversion") {
    auto [q, d] = parse(R"({"vertices":["1","2"],"arrows":[["1","2"]],"d":{"1":3,"2":1}})");
    auto [cq, cd] = convert_source(q, d, 0);
    CHECK(cd.at(0) == 1);
    CHECK(cq.num_arrows() == 3); // d_v parallel copies
    for (int fq : {2, 3}) CHECK(brute({q, d}, fq) == brute({cq, cd}, fq));

    // d_v = 0 sources drop their arrows.
    auto [zq, zd] = parse(R"({"vertices":["1","2"],"arrows":[["1","2"]],"d":{"1":0,"2":2}})");
    auto [cz, cdz] = convert_source(zq, zd, 0);
    CHECK(cz.num_arrows() == 0);
    CHECK(cdz.at(0) == 1);
    for (int fq : {2, 3}) CHECK(brute({zq, zd}, fq) == brute({cz, cdz}, fq));

    // Sinks mirror sources.
    auto [sq, sd] = parse(R"({"vertices":["1","2"],"arrows":[["1","2"]],"d":{"1":1,"2":2}})");
    auto [cs, cds] = convert_sink(sq, sd, 1);
    CHECK(cds.at(1) == 1);
    CHECK(cs.num_arrows() == 2);
    for (int fq : {2, 3}) CHECK(brute({sq, sd}, fq) == brute({cs, cds}, fq));

    // Not applicable to internal vertices.
    auto [iq, idv] = parse(kShortcut);
    CHECK_THROWS_AS(convert_source(iq, idv, 1), std::invalid_argument);
    CHECK_THROWS_AS(convert_sink(iq, idv, 1), std::invalid_argument);
}

TEST_CASE("source split partitions out-arrows") {
    auto [q, d] = parse(kStar);
    auto [sq, sd] = split_source(q, d, 0, {0});
    CHECK(sq.num_vertices() == 4);
    CHECK(sq.vertex_id(0) == "1^A");
    CHECK(sq.vertex_id(1) == "1^B");
    for (int fq : {2, 3}) CHECK(brute({q, d}, fq) == brute({sq, sd}, fq));

    CHECK_THROWS_AS(split_source(q, d, 0, {}), std::invalid_argument);      // empty part
    CHECK_THROWS_AS(split_source(q, d, 0, {0, 1}), std::invalid_argument);  // full part
    CHECK_THROWS_AS(split_source(q, d, 0, {0, 0}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(split_source(q, d, 1, {0}), std::invalid_argument);     // not a source
}

TEST_CASE("split then merge is the identity up to isomorphism") {
    auto [q, d] = parse(kStar);
    auto [sq, sd] = split_source(q, d, 0, {0});
    int u = sq.vertex_index("1^A"), v = sq.vertex_index("1^B");
    auto [mq, md] = merge_sources(sq, sd, u, v);
    CHECK(canonical_hash(mq, md) == canonical_hash(q, d));

    CHECK_THROWS_AS(merge_sources(sq, sd, u, u), std::invalid_argument);
    // Merging sinks with different d is invalid.
    auto [q2, d2] = parse(R"({"vertices":["1","2","3"],"arrows":[["1","2"],["1","3"]],)"
                          R"("d":{"1":1,"2":1,"3":2}})");
    CHECK_THROWS_AS(merge_sinks(q2, d2, 1, 2), std::invalid_argument);
    // Merging two isolated vertices (empty arrow sets) is fine.
    auto [q3, d3] = parse(R"({"vertices":["1","2"],"arrows":[],"d":{"1":2,"2":2}})");
    auto [mq3, md3] = merge_sources(q3, d3, 0, 1);
    CHECK(mq3.num_vertices() == 1);
}

TEST_CASE("normalize the out-star into two-vertex leaves") {
    auto [q, d] = parse(R"({"vertices":["1","2","3","4","5"],)"
                        R"("arrows":[["1","2"],["1","3"],["1","4"],["1","5"]],)"
                        R"("d":{"1":1,"2":1,"3":1,"4":1,"5":1}})");
    ReductionTrace trace = normalize(q, d);
    REQUIRE(trace.leaves.size() == 4);
    for (const Leaf& leaf : trace.leaves) {
        CHECK(leaf.cls.kind == LeafKind::rad_square_zero);
        CHECK(leaf.cls.label() == "rad-square-zero(D=1)");
    }
    CountResult r = dispatch_count(q, d, 3);
    CHECK(r.value == 6561); // q^8 at q=3
    CHECK(r.value == brute({q, d}, 3));
}

TEST_CASE("normalize needs several splits on the shortcut quiver") {
    auto [q, d] = parse(kShortcut);
    ReductionTrace trace = normalize(q, d);

    // One source split at "1" and one sink split at "3", then components.
    std::vector<std::string> rules;
    for (const ReductionStep& s : trace.steps) rules.push_back(s.rule);
    REQUIRE(rules.size() == 3);
    CHECK(rules[0] == "source-split");
    CHECK(rules[1] == "sink-split");
    CHECK(rules[2] == "component-split");

    REQUIRE(trace.leaves.size() == 2);
    CHECK(trace.leaves[0].cls.label() == "a3-shape(1,1,1)");
    CHECK(trace.leaves[1].cls.label() == "rad-square-zero(D=1)");

    for (int fq : {2, 3}) {
        mpz_class expect = a3_count_poly(1, 1, 1).eval_z(fq) * fq * fq;
        CHECK(dispatch_count(q, d, fq).value == expect);
        CHECK(brute({q, d}, fq) == expect);
    }
    CHECK(dispatch_count(q, d, 2).value == 160);
}

TEST_CASE("normalize classifies weighted chains as a3 shapes") {
    auto [q, d] = parse(R"({"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"]],)"
                        R"("d":{"1":2,"2":3,"3":4}})");
    ReductionTrace trace = normalize(q, d);
    REQUIRE(trace.leaves.size() == 1);
    CHECK(trace.leaves[0].cls.label() == "a3-shape(2,3,4)");
    CHECK(dispatch_count(q, d, 2).value == a3_count_poly(2, 3, 4).eval_z(2));

    // Multiplicity moves into l and m through conversion and merging.
    auto [q2, d2] = parse(R"({"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"]],)"
                          R"("d":{"1":2,"2":1,"3":2}})");
    ReductionTrace t2 = normalize(q2, d2);
    REQUIRE(t2.leaves.size() == 1);
    CHECK(t2.leaves[0].cls.label() == "a3-shape(2,1,2)");
    for (int fq : {2, 3}) {
        mpz_class expect = a3_count_poly(2, 1, 2).eval_z(fq);
        CHECK(dispatch_count(q2, d2, fq).value == expect);
        CHECK(brute({q2, d2}, fq) == expect);
    }
}

TEST_CASE("a3 shape detection handles double arrows") {
    // 1 => 2 -> 3: the double arrow contributes 2 to l.
    auto [q, d] = parse(R"({"vertices":["1","2","3"],)"
                        R"("arrows":[["1","2"],["1","2"],["2","3"]],)"
                        R"("d":{"1":1,"2":1,"3":1}})");
    ReductionTrace trace = normalize(q, d);
    REQUIRE(trace.leaves.size() == 1);
    CHECK(trace.leaves[0].cls.label() == "a3-shape(2,1,1)");
    for (int fq : {2, 3})
        CHECK(brute({q, d}, fq) == a3_count_poly(2, 1, 1).eval_z(fq));
}

TEST_CASE("longer chains stay irreducible") {
    auto [q, d] = parse(R"({"vertices":["1","2","3","4"],)"
                        R"("arrows":[["1","2"],["2","3"],["3","4"]],)"
                        R"("d":{"1":1,"2":1,"3":1,"4":1}})");
    ReductionTrace trace = normalize(q, d);
    REQUIRE(trace.leaves.size() == 1);
    CHECK(trace.leaves[0].cls.kind == LeafKind::irreducible);
    CHECK(trace.leaves[0].cls.label() == "irreducible");
    // Dispatch falls back to brute force and still agrees.
    for (int fq : {2, 3}) CHECK(dispatch_count(q, d, fq).value == brute({q, d}, fq));
}

TEST_CASE("normalize removes zero vertices first") {
    auto [q, d] = parse(R"({"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"]],)"
                        R"("d":{"1":1,"2":0,"3":1}})");
    ReductionTrace trace = normalize(q, d);
    REQUIRE(!trace.steps.empty());
    CHECK(trace.steps[0].rule == "zero-vertex-removal");
    REQUIRE(trace.leaves.size() == 1);
    CHECK(trace.leaves[0].cls.label() == "rad-square-zero(D=1)");
    for (int fq : {2, 3, 5}) CHECK(dispatch_count(q, d, fq).value == fq * fq);
}

TEST_CASE("normalize of a single point and of nothing") {
    auto [q, d] = parse(R"({"vertices":["1"],"arrows":[],"d":{"1":2}})");
    ReductionTrace trace = normalize(q, d);
    REQUIRE(trace.leaves.size() == 1);
    CHECK(trace.leaves[0].cls.label() == "point");
    CHECK(dispatch_count(q, d, 7).value == 1);

    // A single d=0 vertex reduces to the empty product.
    auto [zq, zd] = parse(R"({"vertices":["1"],"arrows":[],"d":{"1":0}})");
    ReductionTrace zt = normalize(zq, zd);
    CHECK(zt.leaves.empty());
    CHECK(dispatch_count(zq, zd, 5).value == 1);
}

TEST_CASE("dispatch agrees with brute force on random instances") {
    SplitMix64 rng(99);
    for (int t = 0; t < 30; ++t) {
        auto [q, d] = random_quiver(rng, 4, 8);
        for (int fq : {2, 3}) {
            CountResult disp = dispatch_count(q, d, fq);
            CHECK(disp.value == brute({q, d}, fq));
            CHECK(disp.mode == "radical");
        }
    }
}

TEST_CASE("reduction steps carry valid quiver JSON") {
    auto [q, d] = parse(kShortcut);
    ReductionTrace trace = normalize(q, d);
    for (const ReductionStep& s : trace.steps) {
        auto [bq, bd] = parse_quiver(s.before_json);
        long long before = weighted_radical_dim(bq, bd);
        long long after = 0;
        for (const std::string& a : s.after_json) {
            auto [aq, ad] = parse_quiver(a);
            after += weighted_radical_dim(aq, ad);
        }
        CHECK(before == after);
    }
}
