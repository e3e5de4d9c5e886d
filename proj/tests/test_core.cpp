#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radcount/canonical.hpp"
#include "radcount/field.hpp"
#include "radcount/matrix.hpp"
#include "radcount/quiver.hpp"
#include "radcount/verify.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

using namespace radcount;

namespace {

Fq fq_pow(const FieldTable& F, Fq a, int e) {
    Fq r = 1;
    for (int i = 0; i < e; ++i) r = F.mul(r, a);
    return r;
}

} // namespace

TEST_CASE("supported prime powers") {
    const std::vector<int> expect = {2,  3,  4,  5,  7,  8,  9,  11, 13,
                                     16, 17, 19, 23, 25, 27, 29, 31, 32};
    CHECK(supported_prime_powers() == expect);
    for (int q : expect) CHECK(is_supported_prime_power(q));
    for (int q : {0, 1, 6, 10, 12, 15, 33, 64, 100}) {
        CHECK(!is_supported_prime_power(q));
        CHECK_THROWS_AS(make_field(q), std::invalid_argument);
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldTable& F = make_field(q);
        CHECK(F.q() == q);
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.mul(a, 0) == 0);
            CHECK(F.add(a, F.neg(a)) == 0);
            CHECK(F.sub(a, a) == 0);
            if (a != 0) {
                CHECK(F.mul(a, F.inv(a)) == 1);
                CHECK(F.div(a, a) == 1);
            }
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
        CHECK_THROWS_AS(F.inv(0), std::domain_error);
    }
}

TEST_CASE("field axioms spot-checked for the large fields") {
    for (int q : {11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}) {
        const FieldTable& F = make_field(q);
        SplitMix64 rng(42 + q);
        for (int t = 0; t < 200; ++t) {
            Fq a = static_cast<Fq>(rng.below(q));
            Fq b = static_cast<Fq>(rng.below(q));
            Fq c = static_cast<Fq>(rng.below(q));
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }
}

TEST_CASE("frobenius endomorphism is additive") {
    for (int q : {4, 8, 9, 16, 25, 27, 32}) {
        const FieldTable& F = make_field(q);
        int p = F.characteristic();
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                CHECK(fq_pow(F, F.add(a, b), p) == F.add(fq_pow(F, a, p), fq_pow(F, b, p)));
    }
}

TEST_CASE("extension fields use the pinned defining polynomials") {
    // Element encoding: sum of digits c_i p^i for the representative
    // c_0 + c_1 x + c_2 x^2 + ...; x itself encodes as p.
    CHECK(make_field(4).mul(2, 2) == 3);    // x^2 = x + 1
    CHECK(make_field(8).mul(4, 2) == 3);    // x^3 = x + 1
    CHECK(make_field(9).mul(3, 3) == 4);    // x^2 = x + 1 (mod 3)
    CHECK(make_field(16).mul(8, 2) == 3);   // x^4 = x + 1
    CHECK(make_field(25).mul(5, 5) == 8);   // x^2 = x + 3 (mod 5)
    CHECK(make_field(27).mul(9, 3) == 5);   // x^3 = x + 2 (mod 3)
    CHECK(make_field(32).mul(16, 2) == 5);  // x^5 = x^2 + 1
    // Characteristic p: adding an element to itself p times gives zero.
    for (int q : {4, 8, 9, 16, 25, 27, 32}) {
        const FieldTable& F = make_field(q);
        for (int a = 0; a < q; ++a) {
            Fq s = 0;
            for (int i = 0; i < F.characteristic(); ++i) s = F.add(s, a);
            CHECK(s == 0);
        }
    }
}

TEST_CASE("rank and nullity on known matrices") {
    const FieldTable& F2 = make_field(2);
    FqMatrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.set(i, i, 1);
    CHECK(rank(F2, id3) == 3);
    CHECK(nullity(F2, id3) == 0);

    FqMatrix zero(4, 5);
    CHECK(rank(F2, zero) == 0);
    CHECK(nullity(F2, zero) == 5);

    // Row 2 = row 0 + row 1 over F_2.
    FqMatrix m(3, 4);
    Fq rows[3][4] = {{1, 0, 1, 1}, {0, 1, 1, 0}, {1, 1, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.set(i, j, rows[i][j]);
    CHECK(rank(F2, m) == 2);
    CHECK(nullity(F2, m) == 2);

    const FieldTable& F5 = make_field(5);
    FqMatrix s(2, 2); // det = 1*4 - 2*3 = -2 = 3 (mod 5), invertible
    s.set(0, 0, 1);
    s.set(0, 1, 2);
    s.set(1, 0, 3);
    s.set(1, 1, 4);
    CHECK(rank(F5, s) == 2);
}

TEST_CASE("two elimination paths agree on random matrices") {
    for (int q : {2, 3, 4, 5, 9, 16, 25, 32}) {
        const FieldTable& F = make_field(q);
        SplitMix64 rng(1000 + q);
        for (int t = 0; t < 50; ++t) {
            int r = 1 + static_cast<int>(rng.below(6));
            int c = 1 + static_cast<int>(rng.below(6));
            FqMatrix m(r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) m.set(i, j, static_cast<Fq>(rng.below(q)));
            int rk = rank(F, m);
            CHECK(rk == rank_transposed(F, m));
            CHECK(rk <= std::min(r, c));
            CHECK(nullity(F, m) == c - rk);
        }
    }
}

TEST_CASE("quiver JSON parsing round trip") {
    std::string text = R"({"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"]],)"
                       R"("d":{"1":1,"2":2,"3":1}})";
    auto [q, d] = parse_quiver(text);
    CHECK(q.num_vertices() == 3);
    CHECK(q.num_arrows() == 2);
    CHECK(q.vertex_id(0) == "1");
    CHECK(q.arrow(0).id == "a0");
    CHECK(q.arrow(0).src == 0);
    CHECK(q.arrow(0).dst == 1);
    CHECK(d.at(1) == 2);
    CHECK(q.is_source(0));
    CHECK(q.is_internal(1));
    CHECK(q.is_sink(2));

    auto [q2, d2] = parse_quiver(to_json(q, d));
    CHECK(to_json(q2, d2) == to_json(q, d));
}

TEST_CASE("quiver parsing rejects malformed input") {
    auto bad = [](const std::string& text) {
        CHECK_THROWS_AS(parse_quiver(text), std::invalid_argument);
    };
    bad("");                                         // not JSON
    bad("[1,2,3]");                                  // not an object
    bad(R"({"vertices":["1"],"arrows":[]})");        // missing d
    bad(R"({"vertices":["1"],"arrows":[],"d":{"1":0},"extra":1})"); // unknown key
    bad(R"({"vertices":[1],"arrows":[],"d":{"1":0}})");             // vertex not string
    bad(R"({"vertices":["1","1"],"arrows":[],"d":{"1":0}})");       // duplicate vertex
    bad(R"({"vertices":["1"],"arrows":[["1","2"]],"d":{"1":0}})");  // dangling arrow
    bad(R"({"vertices":["1"],"arrows":[["1"]],"d":{"1":0}})");      // arrow arity
    bad(R"({"vertices":["1","2"],"arrows":[],"d":{"1":0}})");       // d key missing
    bad(R"({"vertices":["1"],"arrows":[],"d":{"1":0,"2":0}})");     // d key extra
    bad(R"({"vertices":["1"],"arrows":[],"d":{"1":-1}})");          // negative d
    bad(R"({"vertices":["1"],"arrows":[],"d":{"1":1.5}})");         // non-integer d
    bad(R"({"vertices":["1","2"],"arrows":[["1","2"],["2","1"]],"d":{"1":1,"2":1}})"); // cycle
    bad(R"({"vertices":["1"],"arrows":[["1","1"]],"d":{"1":1}})");  // loop
}

TEST_CASE("path enumeration is ordered and filtered") {
    // 1 ==> 2 -> 3 with a double arrow 1->2.
    std::string text = R"({"vertices":["1","2","3"],)"
                       R"("arrows":[["1","2"],["1","2"],["2","3"]],)"
                       R"("d":{"1":1,"2":1,"3":1}})";
    auto [q, d] = parse_quiver(text);

    auto paths13 = enumerate_paths(q, 0, 2);
    REQUIRE(paths13.size() == 2);
    CHECK(paths13[0].arrows == std::vector<int>{0, 2}); // a0a2 before a1a2
    CHECK(paths13[1].arrows == std::vector<int>{1, 2});

    auto paths11 = enumerate_paths(q, 0, 0);
    REQUIRE(paths11.size() == 1);
    CHECK(paths11[0].is_constant());
    CHECK(enumerate_paths(q, 0, 0, 1).empty());

    auto paths12 = enumerate_paths(q, 0, 1, 1);
    CHECK(paths12.size() == 2);

    Path p = concat(paths12[0], enumerate_paths(q, 1, 2, 1)[0]);
    CHECK(p.from == 0);
    CHECK(p.to == 2);
    CHECK(p.length() == 2);
}

TEST_CASE("opposite reverses arrows and is an involution") {
    std::string text = R"({"vertices":["1","2","3"],"arrows":[["1","2"],["1","3"]],)"
                       R"("d":{"1":2,"2":1,"3":0}})";
    auto [q, d] = parse_quiver(text);
    Quiver op = opposite(q);
    CHECK(op.arrow(0).src == 1);
    CHECK(op.arrow(0).dst == 0);
    CHECK(op.arrow(0).id == "a0");
    CHECK(to_json(opposite(op), d) == to_json(q, d));
}

TEST_CASE("connected components and induced subquivers") {
    std::string text = R"({"vertices":["1","2","3","4","5"],)"
                       R"("arrows":[["4","5"],["1","2"]],)"
                       R"("d":{"1":1,"2":1,"3":2,"4":1,"5":1}})";
    auto [q, d] = parse_quiver(text);
    auto comps = connected_components(q);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2});
    CHECK(comps[2] == std::vector<int>{3, 4});

    auto [sub, sd] = induced_subquiver(q, d, comps[2]);
    CHECK(sub.num_vertices() == 2);
    CHECK(sub.num_arrows() == 1);
    CHECK(sub.arrow(0).id == "a0");
    CHECK(sub.vertex_id(0) == "4");
    CHECK(sd.at(0) == 1);
}

TEST_CASE("sha256 matches published vectors") {
    const std::uint8_t abc[] = {'a', 'b', 'c'};
    CHECK(sha256_hex(abc, 3) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex(nullptr, 0) ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    const std::string two_block =
        "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq";
    CHECK(sha256_hex(reinterpret_cast<const std::uint8_t*>(two_block.data()),
                     two_block.size()) ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("canonical hash is invariant under relabeling and reordering") {
    std::string a = R"({"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"],["1","2"]],)"
                    R"("d":{"1":1,"2":2,"3":1}})";
    // Same quiver with renamed vertices, reordered vertex list and arrows.
    std::string b = R"({"vertices":["z","mid","s"],"arrows":[["mid","z"],["s","mid"],["s","mid"]],)"
                    R"("d":{"z":1,"mid":2,"s":1}})";
    auto [qa, da] = parse_quiver(a);
    auto [qb, db] = parse_quiver(b);
    CHECK(canonical_hash(qa, da) == canonical_hash(qb, db));
    CHECK(canonical_form(qa, da) == canonical_form(qb, db));

    // Different d: different digest.
    std::string c = R"({"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"],["1","2"]],)"
                    R"("d":{"1":2,"2":2,"3":1}})";
    auto [qc, dc] = parse_quiver(c);
    CHECK(canonical_hash(qa, da) != canonical_hash(qc, dc));

    // Different multiplicity: different digest.
    std::string e = R"({"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"]],)"
                    R"("d":{"1":1,"2":2,"3":1}})";
    auto [qe, de] = parse_quiver(e);
    CHECK(canonical_hash(qa, da) != canonical_hash(qe, de));

    // Orientation matters: the opposite quiver here is not isomorphic to the
    // original (2-vertex chain with distinct d).
    std::string f = R"({"vertices":["1","2"],"arrows":[["1","2"]],"d":{"1":1,"2":2}})";
    auto [qf, df] = parse_quiver(f);
    SummandVector dr(opposite(qf), {1, 2});
    CHECK(canonical_hash(qf, df) != canonical_hash(opposite(qf), dr));
}

TEST_CASE("canonical hash distinguishes small non-isomorphic quivers") {
    // A_3 chain vs out-star with the same degree sequence sums.
    std::string chain = R"({"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"]],)"
                        R"("d":{"1":1,"2":1,"3":1}})";
    std::string star = R"({"vertices":["1","2","3"],"arrows":[["1","2"],["1","3"]],)"
                       R"("d":{"1":1,"2":1,"3":1}})";
    auto [qc, dc] = parse_quiver(chain);
    auto [qs, ds] = parse_quiver(star);
    CHECK(canonical_hash(qc, dc) != canonical_hash(qs, ds));
}
