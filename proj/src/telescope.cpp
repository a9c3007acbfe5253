#include "coh/telescope.hpp"

#include "coh/free_algebra.hpp"

#include <algorithm>

namespace coh {

GradedEndo::GradedEndo(Field field, std::vector<Mat> blocks)
    : field_(field), blocks_(std::move(blocks)) {
    if (blocks_.empty()) blocks_.push_back(Mat{});
    for (const Mat& m : blocks_)
        if (!mat_is_square(m)) throw precondition_error("graded endomorphism blocks must be square");
}

const Mat& GradedEndo::block(int degree) const {
    static const Mat empty;
    if (degree < 0 || degree > max_degree()) return empty;
    return blocks_[static_cast<size_t>(degree)];
}

size_t GradedEndo::dim(int degree) const { return mat_rows(block(degree)); }

std::vector<size_t> GradedEndo::dims() const {
    std::vector<size_t> d;
    d.reserve(blocks_.size());
    for (const Mat& m : blocks_) d.push_back(mat_rows(m));
    return d;
}

bool GradedEndo::same_shape(const GradedEndo& other) const {
    if (!(field_ == other.field_)) return false;
    int top = std::max(max_degree(), other.max_degree());
    for (int d = 0; d <= top; ++d)
        if (dim(d) != other.dim(d)) return false;
    return true;
}

GradedEndo endo_zero(const Field& f, const std::vector<size_t>& dims) {
    std::vector<Mat> blocks;
    blocks.reserve(dims.size());
    for (size_t n : dims) blocks.push_back(mat_zero(f, n, n));
    return GradedEndo(f, std::move(blocks));
}

GradedEndo endo_identity(const Field& f, const std::vector<size_t>& dims) {
    std::vector<Mat> blocks;
    blocks.reserve(dims.size());
    for (size_t n : dims) blocks.push_back(mat_identity(f, n));
    return GradedEndo(f, std::move(blocks));
}

namespace {

GradedEndo zip(const GradedEndo& a, const GradedEndo& b, Mat (*op)(const Field&, const Mat&, const Mat&)) {
    if (!a.same_shape(b)) throw precondition_error("graded endomorphism dimension mismatch");
    std::vector<Mat> blocks;
    int top = std::max(a.max_degree(), b.max_degree());
    for (int d = 0; d <= top; ++d) blocks.push_back(op(a.field(), a.block(d), b.block(d)));
    return GradedEndo(a.field(), std::move(blocks));
}

}  // namespace

GradedEndo compose(const GradedEndo& a, const GradedEndo& b) {
    return zip(a, b, [](const Field& f, const Mat& x, const Mat& y) { return mat_mul(f, x, y); });
}

GradedEndo endo_add(const GradedEndo& a, const GradedEndo& b) {
    return zip(a, b, [](const Field&, const Mat& x, const Mat& y) { return mat_add(x, y); });
}

GradedEndo endo_neg(const GradedEndo& a) {
    std::vector<Mat> blocks;
    for (int d = 0; d <= a.max_degree(); ++d) blocks.push_back(mat_neg(a.block(d)));
    return GradedEndo(a.field(), std::move(blocks));
}

GradedEndo plus_identity(const GradedEndo& a) {
    return endo_add(a, endo_identity(a.field(), a.dims()));
}

bool endo_equal(const GradedEndo& a, const GradedEndo& b) {
    if (!a.same_shape(b)) return false;
    int top = std::max(a.max_degree(), b.max_degree());
    for (int d = 0; d <= top; ++d)
        if (!mat_equal(a.block(d), b.block(d))) return false;
    return true;
}

std::optional<Scalar> is_quasi_idempotent(const GradedEndo& e) {
    GradedEndo sq = compose(e, e);
    std::optional<Scalar> unit;
    for (int d = 0; d <= e.max_degree(); ++d) {
        const Mat& m = e.block(d);
        const Mat& m2 = sq.block(d);
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = 0; j < m[i].size(); ++j) {
                if (m[i][j].is_zero()) {
                    if (!m2[i][j].is_zero()) return std::nullopt;
                    continue;
                }
                Scalar u = m2[i][j] / m[i][j];
                if (!unit)
                    unit = u;
                else if (!(*unit == u))
                    return std::nullopt;
            }
    }
    if (!unit) return e.field().one();  // zero map: any unit works
    if (unit->is_zero()) return std::nullopt;
    return unit;
}

bool satisfies_quasi_relation(const GradedEndo& e, const Scalar& u) {
    GradedEndo sq = compose(e, e);
    for (int d = 0; d <= e.max_degree(); ++d) {
        const Mat& m = e.block(d);
        const Mat& m2 = sq.block(d);
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = 0; j < m[i].size(); ++j)
                if (!(m2[i][j] == u * m[i][j])) return false;
    }
    return true;
}

TruncSeries telescope_dims(const GradedEndo& e) {
    const int top = e.max_degree();
    std::vector<Int> c(static_cast<size_t>(top) + 1, Int(0));
    for (int d = 0; d <= top; ++d) {
        size_t n = e.dim(d);
        if (n == 0) continue;
        // Stable image: im(E^m) stabilizes once m reaches the dimension.
        c[static_cast<size_t>(d)] = Int(mat_rank(mat_pow(e.field(), e.block(d), n)));
    }
    return TruncSeries::from_coeffs(std::move(c));
}

TelescopeSplitReport verify_telescope_splitting(const GradedEndo& e) {
    Scalar minus_one = -e.field().one();
    if (!satisfies_quasi_relation(e, minus_one))
        throw precondition_error("not a quasi-idempotent with unit -1");

    TruncSeries tele = telescope_dims(e);
    TruncSeries tele_c = telescope_dims(plus_identity(e));

    TelescopeSplitReport report;
    report.pass = true;
    for (int d = 0; d <= e.max_degree(); ++d) {
        size_t n = e.dim(d);
        size_t rank = n == 0 ? 0 : mat_rank(e.block(d));
        size_t nullity = n - rank;
        bool ok = (rank + nullity == n) && tele[d] == Int(rank) && tele_c[d] == Int(nullity);
        report.rows.push_back({d, n, rank, nullity, tele[d], tele_c[d], ok});
        report.pass = report.pass && ok;
    }
    return report;
}

TelescopeSwapReport verify_telescope_swap(const GradedEndo& f1, const GradedEndo& f2) {
    if (!f1.same_shape(f2))
        throw precondition_error("graded endomorphism dimension mismatch");
    TruncSeries lhs = telescope_dims(compose(f1, f2));
    TruncSeries rhs = telescope_dims(compose(f2, f1));
    bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

CircleTelescopeReport circle_via_telescope(const SpaceModel& x, const SpaceModel& y, int cap,
                                           const Field& field) {
    if (!x.expr.is_suspension() || !y.expr.is_suspension())
        throw precondition_error("circle_via_telescope requires suspension models");
    if (cap < 0 || cap > x.red.trunc_degree())
        throw precondition_error("cap must lie in 0..trunc_degree");

    // Desuspended generator degrees, with multiplicity.
    auto gen_degrees = [cap](const SpaceModel& m) {
        std::vector<int> degs;
        for (int d = 2; d <= m.red.trunc_degree() && d - 1 <= cap; ++d) {
            const Int& mult = m.red[d];
            if (mult > 4096) throw precondition_error("unreasonable cell multiplicity");
            for (long i = 0; i < mult.convert_to<long>(); ++i) degs.push_back(d - 1);
        }
        return degs;
    };
    std::vector<int> a_degs = gen_degrees(x);
    std::vector<int> b_degs = gen_degrees(y);

    // Basis of S(Omega X ^ Omega Y) in degree n: suspension of (nonempty word
    // in A) tensor (nonempty word in B), |w1| + |w2| = n - 1.
    Scalar one = field.one();
    Scalar minus_one = -one;
    std::vector<Mat> e1_blocks, e2_blocks;
    std::vector<Int> total(static_cast<size_t>(cap) + 1, Int(0));
    for (int n = 0; n <= cap; ++n) {
        std::vector<std::pair<Word, Word>> basis;
        for (int p = 1; p <= n - 2; ++p) {
            int q = n - 1 - p;
            std::vector<Word> left = words_of_degree(a_degs, p);
            std::vector<Word> right = words_of_degree(b_degs, q);
            for (const Word& w1 : left)
                for (const Word& w2 : right) basis.emplace_back(w1, w2);
        }
        size_t m = basis.size();
        total[static_cast<size_t>(n)] = Int(m);
        Mat e1 = mat_zero(field, m, m);
        Mat e2 = mat_zero(field, m, m);
        for (size_t i = 0; i < m; ++i) {
            // Project the word to its length-one component and re-include.
            if (basis[i].first.size() == 1) e1[i][i] = one;
            // The second factor picks up the sign of moving the suspension
            // coordinate across the first: the composite satisfies
            // (E1 E2)^2 = -(E1 E2).
            if (basis[i].second.size() == 1) e2[i][i] = minus_one;
        }
        e1_blocks.push_back(std::move(e1));
        e2_blocks.push_back(std::move(e2));
    }

    GradedEndo e1(field, std::move(e1_blocks));
    GradedEndo e2(field, std::move(e2_blocks));
    GradedEndo e = compose(e1, e2);

    CircleTelescopeReport report;
    auto unit = is_quasi_idempotent(e);
    report.quasi_unit = unit ? unit->str() : "none";
    report.quasi_ok = satisfies_quasi_relation(e, minus_one);
    report.image_dims = telescope_dims(e);
    report.complement_dims = telescope_dims(plus_identity(e));
    report.total_dims = TruncSeries::from_coeffs(std::move(total));

    SpaceModel xy = circle(x, y);
    report.expected_image = xy.red.truncated(cap);
    report.expected_complement = (join_loops(x, y) - xy.red).truncated(cap);
    report.pass = report.quasi_ok && report.image_dims == report.expected_image &&
                  report.complement_dims == report.expected_complement;
    return report;
}

}  // namespace coh
