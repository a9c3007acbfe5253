#pragma once

#include "coh/space.hpp"

#include <string>
#include <vector>

namespace coh {

/// One summand of a wedge decomposition, with its multiplicity.
struct WedgeTerm {
    ProductExpr expr;
    long multiplicity;
};

/// Outcome of comparing two series routes for one decomposition identity.
/// An "unequal" verdict is a report outcome, not an error.
struct IdentityReport {
    std::string identity;
    std::string lhs_desc;
    std::string rhs_desc;
    TruncSeries lhs;
    TruncSeries rhs;
    bool equal;
    std::vector<WedgeTerm> terms;  // contributing wedge summands, when applicable
};

/// red(G x| Omega H) against the wedge sum of ad^n(H)(G) over n >= 0.
IdentityReport verify_half_smash_wedge(const SpaceModel& g, const SpaceModel& h);

/// red(S Omega G) against the wedge sum of ad^n(G)(G) over n >= 0
/// (the James-type splitting of the suspended loop space).
IdentityReport verify_loop_suspension(const SpaceModel& g);

/// red(Omega G * Omega H) against the wedge sum of ad^j(H)(ad^i(G)(G))
/// over i >= 0, j >= 1.
IdentityReport verify_loop_join(const SpaceModel& g, const SpaceModel& h);

/// Cell count of G x H against cells of G v H plus the suspended circle
/// product (the mapping-cone identity).
IdentityReport verify_product_cells(const SpaceModel& g, const SpaceModel& h);

/// Complement of the circle product inside the loop join against its
/// closed-form series g h t (g + h - g h) / ((1-g)(1-h)).
IdentityReport verify_join_complement(const SpaceModel& g, const SpaceModel& h);

}  // namespace coh
