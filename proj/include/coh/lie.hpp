#pragma once

#include "coh/series.hpp"
#include "coh/space.hpp"

#include <string>
#include <vector>

namespace coh {

/// How generator degrees enter dimension counts for free Lie algebras.
/// SignGraded matches characteristic-0 loop-space homology: odd-degree
/// generators contribute exterior factors. DimensionOnly ignores parity.
enum class Parity { SignGraded, DimensionOnly };

/// Dimension vector of a graded set of algebra generators (loop degrees,
/// so the constant term is zero).
struct GeneratorSeries {
    TruncSeries dims;
    Parity parity = Parity::SignGraded;
};

/// Loop-space generators of a space model: shift(red, -1).
GeneratorSeries loop_generators(const SpaceModel& x);

struct KernelGenerators {
    TruncSeries series;               // g/(1-h), truncated
    std::vector<std::string> labels;  // one per contributing ad block
};

/// Dimension series of the kernel generators ad^n(H_*)(G_*), n >= 0,
/// of the free Lie algebra retraction onto L(H_*).
KernelGenerators kernel_generators(const GeneratorSeries& g, const GeneratorSeries& h);

struct KernelIdentityReport {
    TruncSeries lhs;  // 1/(1-(g+h))
    TruncSeries rhs;  // 1/(1 - g/(1-h)) * 1/(1-h)
    bool equal;
};

/// Tensor-algebra factorization T(V) = T(kernel generators) (x) T(H_*),
/// checked exactly at the Hilbert-series level.
KernelIdentityReport check_kernel_identity(const GeneratorSeries& g, const GeneratorSeries& h);

/// Dimensions of the free graded Lie algebra on generators `a`, extracted
/// degree by degree from the enveloping-algebra factorization
///   prod_{n odd} (1+t^n)^{d_n} * prod_{n even} (1-t^n)^{-d_n} = 1/(1-a).
/// Throws precondition_error when extraction produces a negative dimension
/// (an inconsistent parity convention).
TruncSeries free_lie_dims(const GeneratorSeries& a);

/// The enveloping-series product for a given dimension vector; the inverse
/// direction of free_lie_dims.
TruncSeries enveloping_series(const TruncSeries& dims, Parity parity);

}  // namespace coh
