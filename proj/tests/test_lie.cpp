#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coh/lie.hpp"

#include <random>

using namespace coh;

namespace {

constexpr int D = 32;

GeneratorSeries gen(TruncSeries s, Parity p = Parity::SignGraded) { return {std::move(s), p}; }

TruncSeries mono(int degree, long coeff = 1) { return TruncSeries::monomial(D, degree, coeff); }

GeneratorSeries random_gen(std::mt19937& rng) {
    std::uniform_int_distribution<int> ncells(1, 6);
    std::uniform_int_distribution<int> degree(1, 7);  // loop degrees of cells 2..8
    TruncSeries s(D);
    int n = ncells(rng);
    for (int i = 0; i < n; ++i) s = s + mono(degree(rng));
    return gen(std::move(s));
}

}  // namespace

TEST_CASE("kernel generators series") {
    auto [series, labels] = kernel_generators(gen(mono(1)), gen(mono(1)));
    // t/(1-t)
    for (int n = 0; n <= D; ++n) CHECK(series[n] == (n >= 1 ? 1 : 0));
    CHECK(labels.size() == 32);  // ad^0 .. ad^31 reach degree 32
    CHECK(labels[0] == "ad^0(H*)(G*)");
    CHECK(labels[2] == "ad^2(H*)(G*)");

    std::mt19937 rng(3);
    GeneratorSeries g = random_gen(rng);
    auto [series2, labels2] = kernel_generators(g, gen(TruncSeries::zero(D)));
    CHECK(series2 == g.dims);
    CHECK(labels2.size() == 1);

    auto [series3, labels3] = kernel_generators(gen(mono(1) + mono(2)), gen(mono(1)));
    CHECK(series3 == (mono(1) + mono(2)) * geom_inverse(mono(1)));
}

TEST_CASE("kernel factorization identity") {
    auto r = check_kernel_identity(gen(mono(1)), gen(mono(1)));
    CHECK(r.equal);
    CHECK(r.lhs == geom_inverse(mono(1, 2)));  // 1/(1-2t)

    auto r2 = check_kernel_identity(gen(TruncSeries::zero(D)), gen(mono(1)));
    CHECK(r2.equal);
    CHECK(r2.lhs == geom_inverse(mono(1)));

    CHECK(check_kernel_identity(gen(mono(2)), gen(mono(1))).equal);
}

TEST_CASE("kernel factorization on randomized pairs") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial)
        CHECK(check_kernel_identity(random_gen(rng), random_gen(rng)).equal);
}

TEST_CASE("free Lie dimensions: one odd generator") {
    TruncSeries d = free_lie_dims(gen(mono(1)));
    CHECK(d[1] == 1);
    CHECK(d[2] == 1);
    for (int n = 3; n <= D; ++n) CHECK(d[n] == 0);
}

TEST_CASE("free Lie dimensions: zero input") {
    CHECK(free_lie_dims(gen(TruncSeries::zero(D))).is_zero());
}

TEST_CASE("free Lie dimensions: two odd degree-1 generators") {
    TruncSeries d = free_lie_dims(gen(mono(1, 2)));
    CHECK(d[1] == 2);
    CHECK(d[2] == 3);
    CHECK(d[3] == 2);
}

TEST_CASE("extraction feeds back into the enveloping product") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        GeneratorSeries a = random_gen(rng);
        TruncSeries d = free_lie_dims(a);
        CHECK(d.nonnegative());
        CHECK(enveloping_series(d, Parity::SignGraded) == geom_inverse(a.dims));
    }
}

TEST_CASE("dimension-only mode feeds back too") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        GeneratorSeries a = random_gen(rng);
        a.parity = Parity::DimensionOnly;
        TruncSeries d = free_lie_dims(a);
        CHECK(enveloping_series(d, Parity::DimensionOnly) == geom_inverse(a.dims));
    }
}

TEST_CASE("kernel dims + retract dims factor the whole enveloping algebra") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        GeneratorSeries g = random_gen(rng);
        GeneratorSeries h = random_gen(rng);
        auto [kseries, labels] = kernel_generators(g, h);
        TruncSeries dk = free_lie_dims(gen(kseries));
        TruncSeries dh = free_lie_dims(h);
        TruncSeries product = enveloping_series(dk, Parity::SignGraded) *
                              enveloping_series(dh, Parity::SignGraded);
        CHECK(product == geom_inverse(g.dims + h.dims));
    }
}

TEST_CASE("nonzero constant term is rejected") {
    CHECK_THROWS_AS(free_lie_dims(gen(TruncSeries::one(D))), precondition_error);
    CHECK_THROWS_AS(kernel_generators(gen(TruncSeries::one(D)), gen(mono(1))), precondition_error);
}

TEST_CASE("inconsistent input convention surfaces as a negative dimension") {
    // a with 1/(1-a) = 1 + t + t^2: no sign-graded dimension vector produces
    // this enveloping series, so the extraction must go negative.
    TruncSeries inv = geom_inverse(-(mono(1) + mono(2)));  // 1/(1+t+t^2)
    TruncSeries a = TruncSeries::one(D) - inv;
    CHECK_THROWS_AS(free_lie_dims(gen(a)), precondition_error);
}
