#pragma once

#include "coh/series.hpp"
#include "coh/space.hpp"

#include <vector>

namespace coh {

struct PeeledTerm {
    ProductExpr expr;
    long multiplicity;
};

/// State of the loop-space peeling of G v H: products of length <= k have
/// been split off as loop factors, the rest remain as a wedge. The
/// conservation identity
///   1/(1-g-h) = prod_peeled 1/(1-p)^mult * 1/(1-residual_series)
/// holds exactly through degree D after every step.
struct PeelState {
    int k = 1;
    std::vector<PeeledTerm> peeled;    // ordered by (bottom degree, label)
    std::vector<PeeledTerm> residual;  // every entry has length > k
    TruncSeries target;                // generator series g + h of G v H
    TruncSeries residual_series;       // sum of residual generator series
    bool conservation_ok = false;
};

/// Recomputes the conservation identity for a state.
bool conservation_holds(const PeelState& state);

/// k = 1: G and H split off, the residual is the loop-join wedge of
/// products of length >= 2.
PeelState init_peel(const SpaceModel& g, const SpaceModel& h);

/// Moves every residual product of length k+1 into the peeled list, one
/// copy at a time; each extraction replaces every remaining residual term Q
/// by the half-smash family Q o P^{o m}, m >= 0. No-op when the residual is
/// empty.
PeelState peel_step(const PeelState& state);

/// The peeled products at threshold k = dim_bound whose connectivity is
/// below dim_bound: the complete Whitehead-product target list for maps
/// from a complex of that dimension. Entries repeat per multiplicity.
std::vector<ProductExpr> whitehead_basis_below(const SpaceModel& g, const SpaceModel& h,
                                               int dim_bound);

}  // namespace coh
