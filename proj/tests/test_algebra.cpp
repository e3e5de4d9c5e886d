#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radcount/basis.hpp"
#include "radcount/count.hpp"
#include "radcount/errors.hpp"
#include "radcount/field.hpp"
#include "radcount/quiver.hpp"
#include "radcount/unitriangular.hpp"
#include "radcount/verify.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

using namespace radcount;

namespace {

QuiverWithD make_chain(const std::vector<long>& d) {
    int n = static_cast<int>(d.size());
    std::vector<std::string> ids;
    std::vector<Arrow> arrows;
    for (int v = 0; v < n; ++v) ids.push_back(std::to_string(v + 1));
    for (int v = 0; v + 1 < n; ++v) arrows.push_back({"a" + std::to_string(v), v, v + 1});
    Quiver q(std::move(ids), std::move(arrows));
    SummandVector sd(q, d);
    return {std::move(q), std::move(sd)};
}

} // namespace

TEST_CASE("slots repeat vertices in file order") {
    auto [q, d] = make_chain({2, 1, 3});
    AlgebraBasis basis = build_basis(q, d, false);
    CHECK(basis.slots().vertex == std::vector<int>{0, 0, 1, 2, 2, 2});
}

TEST_CASE("basis dimensions for chains") {
    // dim rad of the (l,d,m) chain is ld + dm + lm.
    for (long l = 0; l <= 3; ++l)
        for (long dm = 0; dm <= 3; ++dm)
            for (long m = 0; m <= 3; ++m) {
                auto [q, d] = make_chain({l, dm, m});
                CHECK(weighted_radical_dim(q, d) == l * dm + dm * m + l * m);
                AlgebraBasis rad = build_basis(q, d, false);
                CHECK(rad.dim() == l * dm + dm * m + l * m);
                AlgebraBasis full = build_basis(q, d, true);
                CHECK(full.dim() == rad.dim() + l * l + dm * dm + m * m);
                CHECK(full.radical_indices().size() == static_cast<std::size_t>(rad.dim()));
            }
}

TEST_CASE("weighted radical dim refuses the path cap") {
    auto [q, d] = make_chain({1024, 1025});
    CHECK(weighted_radical_dim(q, d) == 1024 * 1025);
    CHECK_THROWS_AS(build_basis(q, d, false), std::invalid_argument);
}

TEST_CASE("radical power filtration on the unit chain") {
    auto [q, d] = make_chain({1, 1, 1});
    AlgebraBasis rad = build_basis(q, d, false);
    REQUIRE(rad.dim() == 3);
    CHECK(radical_power_indices(rad, 1).size() == 3);
    auto sq = radical_power_indices(rad, 2);
    REQUIRE(sq.size() == 1);
    CHECK(rad.path_length(sq[0]) == 2);
    CHECK(radical_power_indices(rad, 3).empty());
    CHECK_THROWS_AS(radical_power_indices(rad, 0), std::invalid_argument);

    AlgebraBasis full = build_basis(q, d, true);
    CHECK(radical_power_indices(full, 0).size() == 6);
    CHECK_THROWS_AS(radical_power_indices(full, 1), std::invalid_argument);
}

TEST_CASE("structure constants are associative and unital") {
    SplitMix64 rng(7);
    int checked = 0;
    while (checked < 5) {
        auto [q, d] = random_quiver(rng, 3, 4);
        AlgebraBasis basis = build_basis(q, d, true);
        int n = basis.dim();
        if (n == 0 || n > 12) continue;
        ++checked;
        StructureConstants sc(basis);
        REQUIRE(sc.dim() == n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    int ab = sc.product(a, b);
                    int bc = sc.product(b, c);
                    int lhs = (ab < 0) ? -1 : sc.product(ab, c);
                    int rhs = (bc < 0) ? -1 : sc.product(a, bc);
                    CHECK(lhs == rhs);
                }
        // The constants at the right slots act as left/right identities.
        for (int a = 0; a < n; ++a) {
            const BasisElement& e = basis.element(a);
            int left_unit = basis.index_of(e.slot_i, e.slot_i, {});
            int right_unit = basis.index_of(e.slot_j, e.slot_j, {});
            REQUIRE(left_unit >= 0);
            REQUIRE(right_unit >= 0);
            CHECK(sc.product(left_unit, a) == a);
            CHECK(sc.product(a, right_unit) == a);
        }
    }
}

TEST_CASE("product tables and adjoint matrices are consistent") {
    auto [q, d] = make_chain({1, 2, 1});
    AlgebraBasis basis = build_basis(q, d, true);
    StructureConstants sc(basis);
    const FieldTable& F = make_field(3);

    std::vector<int> all(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) all[i] = i;

    // Column b of ad_{e_a} equals the coordinates of e_a e_b - e_b e_a.
    for (int a = 0; a < basis.dim(); ++a) {
        std::vector<Fq> x(basis.dim(), 0);
        x[a] = 1;
        FqMatrix m = adjoint_matrix(F, sc, x, all, all);
        for (int b = 0; b < basis.dim(); ++b) {
            std::vector<int> expect(basis.dim(), 0);
            int ab = sc.product(a, b);
            int ba = sc.product(b, a);
            if (ab >= 0) expect[ab] += 1;
            if (ba >= 0) expect[ba] -= 1;
            for (int r = 0; r < basis.dim(); ++r) {
                Fq want = expect[r] == 0 ? 0 : (expect[r] > 0 ? Fq(1) : F.neg(1));
                CHECK(m.at(r, b) == want);
            }
        }
    }

    // Bilinearity: ad_{x + x'} = ad_x + ad_{x'}.
    SplitMix64 rng(11);
    for (int t = 0; t < 10; ++t) {
        std::vector<Fq> x(basis.dim()), y(basis.dim()), s(basis.dim());
        for (int i = 0; i < basis.dim(); ++i) {
            x[i] = static_cast<Fq>(rng.below(3));
            y[i] = static_cast<Fq>(rng.below(3));
            s[i] = F.add(x[i], y[i]);
        }
        FqMatrix mx = adjoint_matrix(F, sc, x, all, all);
        FqMatrix my = adjoint_matrix(F, sc, y, all, all);
        FqMatrix ms = adjoint_matrix(F, sc, s, all, all);
        for (int r = 0; r < ms.rows(); ++r)
            for (int c = 0; c < ms.cols(); ++c)
                CHECK(ms.at(r, c) == F.add(mx.at(r, c), my.at(r, c)));
    }
}

TEST_CASE("base counts on the two-vertex chain") {
    auto [q, d] = make_chain({1, 1});
    for (int fq : {2, 3, 4, 5, 7, 8, 9}) {
        CountResult r = count_commuting(q, d, fq);
        CHECK(r.value == fq * fq);
        CHECK(r.mode == "radical");
        CHECK(r.dim_enumerated == 1);
    }
}

TEST_CASE("frozen counts on the unit three-chain") {
    auto [q, d] = make_chain({1, 1, 1});
    CHECK(count_commuting(q, d, 2).value == 40);  // q^5 + q^4 - q^3 at q=2
    CHECK(count_commuting(q, d, 3).value == 297); // and at q=3
    CHECK(count_overline(q, d, 2).value == 176);
    CHECK(count_weakened(q, d, 2, 1, 2).value == 64); // trivial: q^(2 dim rad)
    CHECK(count_weakened(q, d, 2, 1, 3).value == 40); // codomain is all of rad
    CHECK(count_weakened(q, d, 2, 2, 0).value == 4);  // x,y in rad^2, dim 1
}

TEST_CASE("frozen overline count on the two-vertex chain") {
    auto [q, d] = make_chain({1, 1});
    CHECK(count_overline(q, d, 2).value == 12);
    CHECK(count_overline(q, d, 3).value == 45); // q^3 + (q-1) q^2
    CHECK(count_overline(q, d, 2).mode == "overline");
}

TEST_CASE("weakened parameters are validated") {
    auto [q, d] = make_chain({1, 1, 1});
    CHECK_THROWS_AS(count_weakened(q, d, 2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_weakened(q, d, 2, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_weakened(q, d, 2, 1, -1), std::invalid_argument);
}

TEST_CASE("fibered count agrees with the naive oracle") {
    auto [q2, d2] = make_chain({1, 1});
    auto [q3, d3] = make_chain({1, 1, 1});
    for (int fq : {2, 3}) {
        CHECK(count_commuting(q2, d2, fq).value == naive_pair_count(q2, d2, fq).value);
        CHECK(count_commuting(q3, d3, fq).value == naive_pair_count(q3, d3, fq).value);
    }
    CHECK(naive_pair_count(q3, d3, 2).mode == "naive");
    CHECK(naive_pair_count(q3, d3, 2).dim_enumerated == 6);
}

TEST_CASE("projective speedup does not change values") {
    auto [q, d] = make_chain({2, 1, 2});
    for (int fq : {2, 3}) {
        CountOptions fast, slow;
        slow.projective_speedup = false;
        CHECK(count_commuting(q, d, fq, fast).value == count_commuting(q, d, fq, slow).value);
        CHECK(count_overline(q, d, fq, fast).value == count_overline(q, d, fq, slow).value);
    }
}

TEST_CASE("budget errors carry the required element count") {
    auto [q, d] = make_chain({1, 1, 1});
    CountOptions opts;
    opts.budget = 100;
    // The naive oracle enumerates q^(2D) = 3^6 = 729 pairs.
    CHECK_THROWS_AS(naive_pair_count(q, d, 3, opts), BudgetError);
    try {
        naive_pair_count(q, d, 3, opts);
    } catch (const BudgetError& e) {
        CHECK(e.required_elements() == "729");
        CHECK(std::string(e.what()).find("729") != std::string::npos);
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
    // The fibered engine enumerates q^D = 3^3 = 27 first coordinates.
    opts.budget = 20;
    try {
        count_commuting(q, d, 3, opts);
        CHECK(false);
    } catch (const BudgetError& e) {
        CHECK(e.required_elements() == "27");
    }
}

TEST_CASE("counts are identical across worker counts") {
    auto [q, d] = make_chain({2, 1, 2}); // dim rad 8, enough work to split
    for (int fq : {2, 3}) {
        CountOptions j1, j8;
        j1.jobs = 1;
        j8.jobs = 8;
        CHECK(count_commuting(q, d, fq, j1).value == count_commuting(q, d, fq, j8).value);
        CHECK(count_overline(q, d, fq, j1).value == count_overline(q, d, fq, j8).value);
    }
}

TEST_CASE("job resolution honors options over the environment") {
    CountOptions opts;
    opts.jobs = 3;
    CHECK(resolve_jobs(opts) == 3);
    setenv("RADCOUNT_JOBS", "5", 1);
    CHECK(resolve_jobs(opts) == 3);
    opts.jobs = 0;
    CHECK(resolve_jobs(opts) == 5);
    unsetenv("RADCOUNT_JOBS");
    CHECK(resolve_jobs(opts) >= 1);
}

TEST_CASE("unitriangular conjugacy class counts") {
    CHECK(count_conjugacy_classes_un(1, 2) == 1);
    CHECK(count_conjugacy_classes_un(1, 3) == 1);
    CHECK(count_conjugacy_classes_un(2, 2) == 2);  // k(U_2) = q
    CHECK(count_conjugacy_classes_un(2, 3) == 3);
    CHECK(count_conjugacy_classes_un(3, 2) == 5);  // k(U_3) = q^2 + q - 1
    CHECK(count_conjugacy_classes_un(3, 3) == 11);
    CHECK_THROWS_AS(count_conjugacy_classes_un(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_conjugacy_classes_un(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_conjugacy_classes_un(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(count_conjugacy_classes_un(3, 5), std::invalid_argument);
}

TEST_CASE("burnside bridge for small chains") {
    for (int n = 1; n <= 4; ++n) {
        auto [q, d] = make_chain(std::vector<long>(n, 1));
        for (int fq : {2, 3}) {
            mpz_class lhs(static_cast<long>(count_conjugacy_classes_un(n, fq)));
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), fq, static_cast<unsigned long>(n * (n - 1) / 2));
            CHECK(lhs * scale == count_commuting(q, d, fq).value);
        }
    }
}

TEST_CASE("zero-dimensional algebras count one pair") {
    // All d zero: rad A = 0, the only pair is (0,0).
    auto [q, d] = make_chain({0, 0});
    for (int fq : {2, 5}) {
        CHECK(count_commuting(q, d, fq).value == 1);
        CHECK(count_overline(q, d, fq).value == 1);
        CHECK(naive_pair_count(q, d, fq).value == 1);
    }
    // A point with multiplicity: rad = 0 but A is nonzero.
    std::vector<std::string> ids{"1"};
    Quiver point(std::move(ids), {});
    SummandVector pd(point, {2});
    CHECK(count_commuting(point, pd, 3).value == 1);
    CHECK(count_overline(point, pd, 3).value == 81); // all of A x {0}
}
