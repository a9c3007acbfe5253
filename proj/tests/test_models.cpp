#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coh/identities.hpp"
#include "coh/space.hpp"

#include <random>

using namespace coh;

namespace {

constexpr int D = 32;

SpaceModel sphere(int n) { return from_spheres(D, {n}); }

SpaceModel random_wedge(std::mt19937& rng) {
    std::uniform_int_distribution<int> ncells(1, 6);
    std::uniform_int_distribution<int> degree(2, 8);
    std::vector<int> degrees;
    int n = ncells(rng);
    for (int i = 0; i < n; ++i) degrees.push_back(degree(rng));
    return from_spheres(D, degrees);
}

}  // namespace

TEST_CASE("from_spheres builds reduced dimension vectors") {
    CHECK(sphere(2).red == TruncSeries::monomial(D, 2));
    SpaceModel m = from_spheres(D, {2, 2, 4});
    CHECK(m.red == TruncSeries::monomial(D, 2, 2) + TruncSeries::monomial(D, 4));
    CHECK(from_spheres(D, {}).red.is_zero());
    CHECK_THROWS_AS(from_spheres(D, {1}), precondition_error);
}

TEST_CASE("suspend shifts degrees") {
    CHECK(suspend(sphere(2)).red == sphere(3).red);
    CHECK(suspend(from_spheres(D, {})).red.is_zero());
    CHECK(suspend(wedge(sphere(2), sphere(3))).red == wedge(sphere(3), sphere(4)).red);
}

TEST_CASE("wedge, smash, product") {
    CHECK(smash(sphere(2), sphere(2)).red == sphere(4).red);
    CHECK(wedge(sphere(2), sphere(3)).red ==
          TruncSeries::monomial(D, 2) + TruncSeries::monomial(D, 3));
    CHECK(product(sphere(2), sphere(2)).red ==
          TruncSeries::monomial(D, 2, 2) + TruncSeries::monomial(D, 4));
}

TEST_CASE("loops series") {
    TruncSeries l = loops(sphere(2));
    for (int n = 0; n <= D; ++n) CHECK(l[n] == 1);

    CHECK(loops(from_spheres(D, {})) == TruncSeries::one(D));

    // 1/(1-t-t^2), checked by back-multiplication
    TruncSeries l2 = loops(wedge(sphere(2), sphere(3)));
    TruncSeries denom = TruncSeries::one(D) - TruncSeries::monomial(D, 1) - TruncSeries::monomial(D, 2);
    CHECK(l2 * denom == TruncSeries::one(D));
    CHECK(l2[4] == 5);
}

TEST_CASE("half_smash") {
    TruncSeries hs = half_smash(sphere(2), sphere(2));
    for (int n = 0; n <= D; ++n) CHECK(hs[n] == (n >= 2 ? 1 : 0));

    SpaceModel pt = from_spheres(D, {});
    SpaceModel x = from_spheres(D, {2, 5});
    CHECK(half_smash(x, pt) == x.red);
    CHECK(half_smash(pt, x).is_zero());
}

TEST_CASE("join_loops") {
    TruncSeries j = join_loops(sphere(2), sphere(2));
    for (int n = 0; n <= D; ++n) CHECK(j[n] == (n >= 3 ? n - 2 : 0));

    CHECK(join_loops(sphere(2), from_spheres(D, {})).is_zero());

    // t^5/(1-t^2)^2
    TruncSeries j2 = join_loops(sphere(3), sphere(3));
    TruncSeries t2 = TruncSeries::monomial(D, 2);
    TruncSeries want = shift(geom_inverse(t2) * geom_inverse(t2), 5);
    CHECK(j2 == want);
}

TEST_CASE("circle product examples") {
    CHECK(circle(sphere(2), sphere(2)).red == sphere(3).red);
    CHECK(circle(wedge(sphere(2), sphere(3)), sphere(2)).red ==
          wedge(sphere(3), sphere(4)).red);
    // S^2 o S^3 drops to the smash S^1 ^ S^3 = S^4
    CHECK(circle(sphere(2), sphere(3)).red == TruncSeries::monomial(D, 4));
}

TEST_CASE("ad_power") {
    SpaceModel g = sphere(2), h = sphere(2);
    CHECK(ad_power(h, g, 0).model().red == g.red);
    CHECK(ad_power(h, g, 0).length() == 1);
    CHECK(ad_power(sphere(2), sphere(2), 2).model().red == sphere(4).red);
    CHECK(ad_power(sphere(3), sphere(2), 1).model().red == TruncSeries::monomial(D, 4));
    CHECK_THROWS_AS(ad_power(h, g, -1), precondition_error);
}

TEST_CASE("connectivity") {
    CHECK(connectivity(sphere(2)) == 1);
    CHECK(connectivity(ad_power(sphere(2), sphere(2), 3).model()) == 4);
    CHECK(connectivity(circle(sphere(3), sphere(3))) == 4);
    CHECK_THROWS_AS(connectivity(from_spheres(D, {})), precondition_error);
}

TEST_CASE("product expr labels and structure") {
    ProductExpr e = ad_power(sphere(2), sphere(3), 2);
    CHECK(e.length() == 3);
    CHECK(e.label() == "((S3∘S2)∘S2)");
    CHECK_FALSE(e.is_leaf());
    CHECK(e.left().length() == 2);
    CHECK(e.right().is_leaf());
}

TEST_CASE("circle is commutative and associative at series level") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        SpaceModel a = random_wedge(rng), b = random_wedge(rng), c = random_wedge(rng);
        CHECK(circle(a, b).red == circle(b, a).red);
        CHECK(circle(circle(a, b), c).red == circle(a, circle(b, c)).red);
        CHECK(circle(wedge(a, b), c).red == circle(a, c).red + circle(b, c).red);
        CHECK(suspend(circle(a, b)).red == smash(a, b).red);
    }
}

TEST_CASE("product expressions are at least as connected as they are long") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        // random binary circle tree over sphere-wedge leaves
        std::uniform_int_distribution<int> nleaves(1, 5);
        int n = nleaves(rng);
        std::vector<ProductExpr> pool;
        for (int i = 0; i < n; ++i) pool.push_back(ProductExpr::leaf(random_wedge(rng)));
        while (pool.size() > 1) {
            std::uniform_int_distribution<size_t> pick(0, pool.size() - 2);
            size_t i = pick(rng);
            ProductExpr merged = ProductExpr::circle(pool[i], pool[i + 1]);
            pool.erase(pool.begin() + static_cast<long>(i + 1));
            pool[i] = merged;
        }
        const ProductExpr& p = pool[0];
        auto conn = connectivity_within(p);
        REQUIRE(conn.has_value());
        CHECK(*conn >= p.length());
    }
}

TEST_CASE("half-smash wedge decomposition verifier") {
    IdentityReport r = verify_half_smash_wedge(sphere(2), sphere(2));
    CHECK(r.equal);
    CHECK(r.terms.size() == 31);  // lengths 1..31 fit under D = 32
    CHECK(r.terms[0].expr.label() == "S2");
    CHECK(r.terms[1].expr.label() == "(S2∘S2)");
}

TEST_CASE("loop suspension splitting verifier (James count)") {
    IdentityReport r = verify_loop_suspension(sphere(2));
    CHECK(r.equal);
    for (int n = 0; n <= D; ++n) CHECK(r.lhs[n] == (n >= 2 ? 1 : 0));
}

TEST_CASE("loop join decomposition verifier") {
    IdentityReport r = verify_loop_join(sphere(2), sphere(2));
    CHECK(r.equal);
    for (int n = 3; n <= D; ++n) CHECK(r.rhs[n] == n - 2);
}

TEST_CASE("product cell-structure verifier") {
    IdentityReport r = verify_product_cells(sphere(2), sphere(2));
    CHECK(r.equal);
    TruncSeries want = TruncSeries::one(D) + TruncSeries::monomial(D, 2, 2) + TruncSeries::monomial(D, 4);
    CHECK(r.lhs == want);
}

TEST_CASE("join complement series verifier") {
    IdentityReport r = verify_join_complement(sphere(2), sphere(2));
    CHECK(r.equal);
}

TEST_CASE("all five verifiers on randomized sphere-wedge pairs") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        SpaceModel g = random_wedge(rng), h = random_wedge(rng);
        CHECK(verify_half_smash_wedge(g, h).equal);
        CHECK(verify_loop_suspension(g).equal);
        CHECK(verify_loop_join(g, h).equal);
        CHECK(verify_product_cells(g, h).equal);
        CHECK(verify_join_complement(g, h).equal);
    }
}

TEST_CASE("verifiers handle contractible inputs") {
    SpaceModel pt = from_spheres(D, {});
    SpaceModel g = sphere(2);
    CHECK(verify_half_smash_wedge(g, pt).equal);
    CHECK(verify_half_smash_wedge(pt, g).equal);
    CHECK(verify_loop_suspension(pt).equal);
    CHECK(verify_loop_join(g, pt).equal);
    CHECK(verify_product_cells(g, pt).equal);
    CHECK(verify_join_complement(pt, pt).equal);
}
