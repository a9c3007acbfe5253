// Acceptance suite: runs every decomposition check at its stated size and
// tolerance (all comparisons are exact) and prints one line per criterion.

#include "coh/free_algebra.hpp"
#include "coh/identities.hpp"
#include "coh/lie.hpp"
#include "coh/matrix.hpp"
#include "coh/peel.hpp"
#include "coh/telescope.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

using namespace coh;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int D = 32;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SpaceModel random_wedge(std::mt19937& rng) {
    std::uniform_int_distribution<int> ncells(1, 6);
    std::uniform_int_distribution<int> degree(2, 8);
    std::vector<int> degrees;
    int n = ncells(rng);
    for (int i = 0; i < n; ++i) degrees.push_back(degree(rng));
    return from_spheres(D, degrees);
}

std::vector<std::pair<SpaceModel, SpaceModel>> acceptance_pairs() {
    std::mt19937 rng(20240901);
    std::vector<std::pair<SpaceModel, SpaceModel>> pairs;
    for (int i = 0; i < 20; ++i) pairs.emplace_back(random_wedge(rng), random_wedge(rng));
    return pairs;
}

// 1. The five series verifiers agree exactly through degree 32 on 20
//    randomized sphere-wedge pairs, under one second per pair.
bool criterion_identity_suite() {
    auto pairs = acceptance_pairs();
    for (const auto& [g, h] : pairs) {
        auto start = Clock::now();
        bool ok = verify_half_smash_wedge(g, h).equal && verify_loop_suspension(g).equal &&
                  verify_loop_join(g, h).equal && verify_product_cells(g, h).equal &&
                  verify_join_complement(g, h).equal;
        double elapsed = seconds_since(start);
        if (!ok || elapsed >= 1.0) {
            std::printf("    pair (%s, %s): %s in %.3fs\n", g.label().c_str(), h.label().c_str(),
                        ok ? "equal" : "UNEQUAL", elapsed);
            return false;
        }
    }
    return true;
}

// 2. Kernel factorization exact on the same pairs; closed case g = h = t.
bool criterion_kernel_identity() {
    for (const auto& [g, h] : acceptance_pairs())
        if (!check_kernel_identity(loop_generators(g), loop_generators(h)).equal) return false;
    GeneratorSeries t{TruncSeries::monomial(D, 1), Parity::SignGraded};
    auto closed = check_kernel_identity(t, t);
    return closed.equal && closed.lhs == geom_inverse(TruncSeries::monomial(D, 1, 2)) &&
           closed.rhs == geom_inverse(TruncSeries::monomial(D, 1, 2));
}

// 3. Brute-force tensor-algebra factorization over F_101.
bool criterion_oracle(double* elapsed_out) {
    auto start = Clock::now();
    Field f = Field::prime(101);
    PbwReport a = check_pbw_surjectivity(from_spheres(D, {2}), from_spheres(D, {2}), 8, f);
    PbwReport b = check_pbw_surjectivity(from_spheres(D, {2, 3}), from_spheres(D, {2}), 7, f);
    *elapsed_out = seconds_since(start);
    return a.pass && b.pass && *elapsed_out < 60.0;
}

// 4. Free Lie dimensions on two odd degree-1 generators, against the
//    bracket span over the rationals through degree 6.
bool criterion_lie_dims() {
    TruncSeries d = free_lie_dims({TruncSeries::monomial(6, 1, 2), Parity::SignGraded});
    if (d[1] != 2 || d[2] != 3 || d[3] != 2) return false;
    FreeAlgebra a({{"x", 1}, {"y", 1}}, Field::rationals(), 6);
    std::vector<size_t> span = lie_span_dims(a, 6);
    for (int n = 1; n <= 6; ++n)
        if (Int(span[static_cast<size_t>(n - 1)]) != d[n]) return false;
    return true;
}

// 5. Telescope suite: quasi-idempotent splitting, composition swap, and the
//    circle product realized as a telescope.
bool criterion_telescopes() {
    Field f5 = Field::prime(5);
    std::mt19937 rng(77);
    std::uniform_int_distribution<size_t> dim(0, 6);
    std::uniform_int_distribution<long> entry(0, 4);

    auto random_mat = [&](size_t n) {
        Mat m = mat_zero(f5, n, n);
        for (auto& row : m)
            for (auto& x : row) x = f5.of(entry(rng));
        return m;
    };
    auto random_invertible = [&](size_t n) {
        while (true) {
            Mat m = random_mat(n);
            if (mat_rank(m) == n) return m;
        }
    };

    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Mat> blocks;
        for (int deg = 0; deg < 4; ++deg) {
            size_t n = dim(rng);
            if (n == 0) {
                blocks.push_back(Mat{});
                continue;
            }
            std::uniform_int_distribution<size_t> rk(0, n);
            size_t r = rk(rng);
            Mat p = mat_zero(f5, n, n);
            for (size_t i = 0; i < r; ++i) p[i][i] = f5.one();
            Mat m = random_invertible(n);
            Mat conj = mat_neg(mat_mul(f5, mat_mul(f5, m, p), *mat_inverse(f5, m)));
            blocks.push_back(std::move(conj));
        }
        if (!verify_telescope_splitting(GradedEndo(f5, std::move(blocks))).pass) return false;
    }

    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Mat> b1, b2;
        for (int deg = 0; deg < 4; ++deg) {
            size_t n = dim(rng);
            b1.push_back(random_mat(n));
            b2.push_back(random_mat(n));
        }
        if (!verify_telescope_swap(GradedEndo(f5, std::move(b1)), GradedEndo(f5, std::move(b2)))
                 .equal)
            return false;
    }

    SpaceModel s2 = from_spheres(D, {2});
    CircleTelescopeReport r = circle_via_telescope(s2, s2, 6, Field::prime(101));
    return r.pass && r.image_dims == TruncSeries::monomial(6, 3) &&
           r.image_dims == circle(s2, s2).red.truncated(6);
}

// 6. Peeling to k = 4 with exact conservation at degree 16, and the finite
//    Whitehead basis below dimension 3.
bool criterion_peeling() {
    for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}}) {
        SpaceModel g = from_spheres(16, {a}), h = from_spheres(16, {b});
        PeelState s = init_peel(g, h);
        if (!s.conservation_ok) return false;
        while (s.k < 4) {
            s = peel_step(s);
            if (!s.conservation_ok) return false;
        }
        if (s.k != 4) return false;
    }
    return whitehead_basis_below(from_spheres(16, {2}), from_spheres(16, {2}), 3).size() == 3;
}

// 7. The James splitting count for S^2.
bool criterion_james() {
    SpaceModel s2 = from_spheres(D, {2});
    IdentityReport r = verify_loop_suspension(s2);
    if (!r.equal) return false;
    TruncSeries want = shift(loops(s2) - TruncSeries::one(D), 1);
    for (int n = 0; n <= D; ++n)
        if (want[n] != (n >= 2 ? 1 : 0)) return false;
    return r.lhs == want && r.rhs == want;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int index, const char* name, bool pass, double elapsed = -1.0) {
        if (elapsed >= 0)
            std::printf("[%d/7] %-58s %s (%.1fs)\n", index, name, pass ? "PASS" : "FAIL", elapsed);
        else
            std::printf("[%d/7] %-58s %s\n", index, name, pass ? "PASS" : "FAIL");
        if (!pass) ++failures;
    };

    report(1, "identity suite: 5 verifiers x 20 random pairs, degree 32", criterion_identity_suite());
    report(2, "kernel factorization: 20 pairs + closed case 1/(1-2t)", criterion_kernel_identity());
    double oracle_elapsed = 0;
    bool oracle_ok = criterion_oracle(&oracle_elapsed);
    report(3, "tensor-algebra oracle: S2,S2 cap 8; S2vS3,S2 cap 7 (F101)", oracle_ok, oracle_elapsed);
    report(4, "free Lie dims 2,3,2 vs bracket span through degree 6 (Q)", criterion_lie_dims());
    report(5, "telescopes: 100 splittings, 100 swaps, circle product S2oS2", criterion_telescopes());
    report(6, "peeling to k=4 with conservation at degree 16; basis size 3", criterion_peeling());
    report(7, "James splitting count for S2 through degree 32", criterion_james());

    if (failures == 0)
        std::printf("acceptance: all 7 criteria pass\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
