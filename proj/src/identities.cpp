#include "coh/identities.hpp"

namespace coh {

namespace {

// Sum the reduced series of the terms; each locally finite wedge is cut off
// at the first summand that is contractible within the truncation.
TruncSeries sum_terms(int trunc_degree, const std::vector<WedgeTerm>& terms) {
    TruncSeries s(trunc_degree);
    for (const WedgeTerm& t : terms) {
        TruncSeries r = t.expr.model().red;
        for (long i = 0; i < t.multiplicity; ++i) s = s + r;
    }
    return s;
}

}  // namespace

IdentityReport verify_half_smash_wedge(const SpaceModel& g, const SpaceModel& h) {
    const int D = g.red.trunc_degree();
    TruncSeries lhs = half_smash(g, h);

    std::vector<WedgeTerm> terms;
    ProductExpr e = ProductExpr::leaf(g);
    ProductExpr hleaf = ProductExpr::leaf(h);
    while (!e.model().red.is_zero()) {
        terms.push_back({e, 1});
        e = ProductExpr::circle(e, hleaf);
    }
    TruncSeries rhs = sum_terms(D, terms);

    return {"half_smash_wedge",
            "red(G x| Omega H)",
            "sum of red(ad^n(H)(G)), n >= 0",
            lhs,
            rhs,
            lhs == rhs,
            std::move(terms)};
}

IdentityReport verify_loop_suspension(const SpaceModel& g) {
    const int D = g.red.trunc_degree();
    TruncSeries lhs = shift(loops(g) - TruncSeries::one(D), 1);

    std::vector<WedgeTerm> terms;
    ProductExpr e = ProductExpr::leaf(g);
    ProductExpr gleaf = e;
    while (!e.model().red.is_zero()) {
        terms.push_back({e, 1});
        e = ProductExpr::circle(e, gleaf);
    }
    TruncSeries rhs = sum_terms(D, terms);

    return {"loop_suspension",
            "red(S Omega G)",
            "sum of red(ad^n(G)(G)), n >= 0",
            lhs,
            rhs,
            lhs == rhs,
            std::move(terms)};
}

IdentityReport verify_loop_join(const SpaceModel& g, const SpaceModel& h) {
    const int D = g.red.trunc_degree();
    TruncSeries lhs = join_loops(g, h);

    std::vector<WedgeTerm> terms;
    ProductExpr gleaf = ProductExpr::leaf(g);
    ProductExpr hleaf = ProductExpr::leaf(h);
    ProductExpr base = gleaf;  // ad^i(G)(G)
    while (true) {
        ProductExpr e = ProductExpr::circle(base, hleaf);  // j = 1
        if (e.model().red.is_zero()) break;
        while (!e.model().red.is_zero()) {
            terms.push_back({e, 1});
            e = ProductExpr::circle(e, hleaf);
        }
        base = ProductExpr::circle(base, gleaf);
    }
    TruncSeries rhs = sum_terms(D, terms);

    return {"loop_join",
            "red(Omega G * Omega H)",
            "sum of red(ad^j(H)(ad^i(G)(G))), i >= 0, j >= 1",
            lhs,
            rhs,
            lhs == rhs,
            std::move(terms)};
}

IdentityReport verify_product_cells(const SpaceModel& g, const SpaceModel& h) {
    const int D = g.red.trunc_degree();
    TruncSeries one = TruncSeries::one(D);
    TruncSeries lhs = (one + g.red) * (one + h.red);

    ProductExpr gh = ProductExpr::circle(ProductExpr::leaf(g), ProductExpr::leaf(h));
    TruncSeries rhs = one + g.red + h.red + shift(gh.model().red, 1);

    std::vector<WedgeTerm> terms;
    terms.push_back({gh, 1});

    return {"product_cells",
            "Poincare series of G x H",
            "Poincare series of G v H plus suspended red(GoH)",
            lhs,
            rhs,
            lhs == rhs,
            std::move(terms)};
}

IdentityReport verify_join_complement(const SpaceModel& g, const SpaceModel& h) {
    ProductExpr gh = ProductExpr::circle(ProductExpr::leaf(g), ProductExpr::leaf(h));
    TruncSeries lhs = join_loops(g, h) - gh.model().red;

    TruncSeries gs = generator_series(g);
    TruncSeries hs = generator_series(h);
    TruncSeries rhs = shift(gs * hs * (gs + hs - gs * hs) * geom_inverse(gs) * geom_inverse(hs), 1);

    return {"join_complement",
            "red(Omega G * Omega H) - red(GoH)",
            "g h t (g + h - g h) / ((1-g)(1-h))",
            lhs,
            rhs,
            lhs == rhs,
            {}};
}

}  // namespace coh
