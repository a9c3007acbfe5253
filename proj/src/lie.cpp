#include "coh/lie.hpp"

namespace coh {

namespace {

void require_generator_series(const GeneratorSeries& a) {
    if (a.dims[0] != 0)
        throw precondition_error("generator series must have zero constant term");
}

}  // namespace

GeneratorSeries loop_generators(const SpaceModel& x) {
    return GeneratorSeries{generator_series(x), Parity::SignGraded};
}

KernelGenerators kernel_generators(const GeneratorSeries& g, const GeneratorSeries& h) {
    require_generator_series(g);
    require_generator_series(h);
    const int D = g.dims.trunc_degree();

    TruncSeries sum(D);
    std::vector<std::string> labels;
    TruncSeries term = g.dims;  // g * h^n
    for (int n = 0; !term.is_zero(); ++n) {
        sum = sum + term;
        labels.push_back("ad^" + std::to_string(n) + "(H*)(G*)");
        term = term * h.dims;
    }
    return {std::move(sum), std::move(labels)};
}

KernelIdentityReport check_kernel_identity(const GeneratorSeries& g, const GeneratorSeries& h) {
    require_generator_series(g);
    require_generator_series(h);
    TruncSeries lhs = geom_inverse(g.dims + h.dims);
    TruncSeries w = g.dims * geom_inverse(h.dims);  // g/(1-h)
    TruncSeries rhs = geom_inverse(w) * geom_inverse(h.dims);
    bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

TruncSeries free_lie_dims(const GeneratorSeries& a) {
    require_generator_series(a);
    const int D = a.dims.trunc_degree();

    // Peel the enveloping product 1/(1-a) one degree at a time. After the
    // factors for degrees < n are divided out, the coefficient of t^n is d_n.
    TruncSeries residue = geom_inverse(a.dims);
    std::vector<Int> dims(static_cast<size_t>(D) + 1, Int(0));
    for (int n = 1; n <= D; ++n) {
        Int d = residue[n];
        if (d < 0)
            throw precondition_error("free Lie extraction produced a negative dimension at degree " +
                                     std::to_string(n) + ": inconsistent parity convention");
        dims[static_cast<size_t>(n)] = d;
        if (d == 0) continue;
        bool exterior = (a.parity == Parity::SignGraded) && (n % 2 == 1);
        if (exterior) {
            // divide by (1+t^n)^d
            TruncSeries inv = geom_inverse(TruncSeries::monomial(D, n, -1));
            residue = residue * pow(inv, d);
        } else {
            // divide by (1-t^n)^-d
            TruncSeries factor = TruncSeries::one(D) - TruncSeries::monomial(D, n);
            residue = residue * pow(factor, d);
        }
    }
    return TruncSeries::from_coeffs(std::move(dims));
}

TruncSeries enveloping_series(const TruncSeries& dims, Parity parity) {
    const int D = dims.trunc_degree();
    if (dims[0] != 0) throw precondition_error("dimension vector must have zero constant term");
    TruncSeries out = TruncSeries::one(D);
    for (int n = 1; n <= D; ++n) {
        const Int& d = dims[n];
        if (d == 0) continue;
        if (d < 0) throw precondition_error("negative dimension at degree " + std::to_string(n));
        bool exterior = (parity == Parity::SignGraded) && (n % 2 == 1);
        if (exterior) {
            TruncSeries factor = TruncSeries::one(D) + TruncSeries::monomial(D, n);
            out = out * pow(factor, d);
        } else {
            TruncSeries inv = geom_inverse(TruncSeries::monomial(D, n));
            out = out * pow(inv, d);
        }
    }
    return out;
}

}  // namespace coh
