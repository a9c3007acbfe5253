#include "coh/peel.hpp"

#include <map>
#include <utility>

namespace coh {

namespace {

// Deterministic extraction order: bottom degree, then label.
using TermKey = std::pair<int, std::string>;

TermKey key_of(const ProductExpr& e) {
    auto v = e.generator_series().valuation();
    int bottom = v ? *v + 1 : e.generator_series().trunc_degree() + 2;
    return {bottom, e.label()};
}

using TermMap = std::map<TermKey, PeeledTerm>;

void add_term(TermMap& m, const ProductExpr& e, long mult) {
    TermKey k = key_of(e);
    auto it = m.find(k);
    if (it == m.end())
        m.emplace(k, PeeledTerm{e, mult});
    else
        it->second.multiplicity += mult;
}

std::vector<PeeledTerm> to_sorted(const TermMap& m) {
    std::vector<PeeledTerm> out;
    out.reserve(m.size());
    for (const auto& [k, t] : m) out.push_back(t);
    return out;
}

TermMap to_map(const std::vector<PeeledTerm>& v) {
    TermMap m;
    for (const PeeledTerm& t : v) add_term(m, t.expr, t.multiplicity);
    return m;
}

TruncSeries residual_sum(int trunc_degree, const TermMap& residual) {
    TruncSeries q(trunc_degree);
    for (const auto& [k, t] : residual) {
        TruncSeries g = t.expr.generator_series();
        for (long i = 0; i < t.multiplicity; ++i) q = q + g;
    }
    return q;
}

PeelState assemble(int k, const TermMap& peeled, const TermMap& residual, TruncSeries target) {
    const int D = target.trunc_degree();
    PeelState s;
    s.k = k;
    s.peeled = to_sorted(peeled);
    s.residual = to_sorted(residual);
    s.target = std::move(target);
    s.residual_series = residual_sum(D, residual);
    s.conservation_ok = conservation_holds(s);
    return s;
}

}  // namespace

bool conservation_holds(const PeelState& state) {
    TruncSeries lhs = geom_inverse(state.target);
    TruncSeries rhs = geom_inverse(state.residual_series);
    for (const PeeledTerm& t : state.peeled)
        rhs = rhs * pow(geom_inverse(t.expr.generator_series()), t.multiplicity);
    return lhs == rhs;
}

PeelState init_peel(const SpaceModel& g, const SpaceModel& h) {
    if (g.red.trunc_degree() != h.red.trunc_degree())
        throw precondition_error("mismatched truncation degrees");

    TermMap peeled;
    ProductExpr gleaf = ProductExpr::leaf(g);
    ProductExpr hleaf = ProductExpr::leaf(h);
    if (!gleaf.generator_series().is_zero()) add_term(peeled, gleaf, 1);
    if (!hleaf.generator_series().is_zero()) add_term(peeled, hleaf, 1);

    // Residual: the loop-join wedge ad^j(H)(ad^i(G)(G)), i >= 0, j >= 1,
    // cut off where the generator series vanishes within the truncation.
    TermMap residual;
    ProductExpr base = gleaf;
    while (true) {
        ProductExpr e = ProductExpr::circle(base, hleaf);
        if (e.generator_series().is_zero()) break;
        while (!e.generator_series().is_zero()) {
            add_term(residual, e, 1);
            e = ProductExpr::circle(e, hleaf);
        }
        base = ProductExpr::circle(base, gleaf);
    }

    return assemble(1, peeled, residual, generator_series(g) + generator_series(h));
}

PeelState peel_step(const PeelState& state) {
    if (state.residual.empty()) return state;

    const int next_k = state.k + 1;
    TermMap peeled = to_map(state.peeled);
    TermMap residual = to_map(state.residual);

    while (true) {
        // First residual copy of length k+1 in (bottom, label) order.
        auto it = residual.begin();
        for (; it != residual.end(); ++it)
            if (it->second.expr.length() == next_k) break;
        if (it == residual.end()) break;

        ProductExpr p = it->second.expr;
        if (--it->second.multiplicity == 0) residual.erase(it);
        add_term(peeled, p, 1);

        // Remaining wedge leaves get replaced by their half-smash expansion
        // against the extracted factor: Q, Q o P, Q o P o P, ...
        TermMap expanded;
        for (const auto& [k2, t] : residual) {
            ProductExpr q = t.expr;
            while (!q.generator_series().is_zero()) {
                add_term(expanded, q, t.multiplicity);
                q = ProductExpr::circle(q, p);
            }
        }
        residual = std::move(expanded);
    }

    return assemble(next_k, peeled, residual, state.target);
}

std::vector<ProductExpr> whitehead_basis_below(const SpaceModel& g, const SpaceModel& h,
                                               int dim_bound) {
    if (dim_bound < 1 || dim_bound > g.red.trunc_degree())
        throw precondition_error("dim_bound must lie in 1..trunc_degree");

    PeelState s = init_peel(g, h);
    while (s.k < dim_bound) {
        PeelState next = peel_step(s);
        if (next.k == s.k) break;  // residual exhausted
        s = std::move(next);
    }

    std::vector<ProductExpr> out;
    for (const PeeledTerm& t : s.peeled) {
        auto conn = connectivity_within(t.expr);
        if (conn && *conn < dim_bound)
            for (long i = 0; i < t.multiplicity; ++i) out.push_back(t.expr);
    }
    return out;
}

}  // namespace coh
