#include "coh/space.hpp"

#include <algorithm>

namespace coh {

namespace {
constexpr const char* kCircle = "∘";  // the circle-product glyph
}

SpaceExpr SpaceExpr::spheres(std::vector<int> degrees) {
    std::sort(degrees.begin(), degrees.end());
    auto n = std::make_shared<Node>();
    n->kind = Kind::Spheres;
    n->degrees = std::move(degrees);
    return SpaceExpr(std::move(n));
}

SpaceExpr SpaceExpr::named(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Named;
    n->name = std::move(name);
    return SpaceExpr(std::move(n));
}

SpaceExpr SpaceExpr::suspend(SpaceExpr child) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Suspend;
    n->left = std::move(child.n_);
    return SpaceExpr(std::move(n));
}

SpaceExpr SpaceExpr::binary(Kind k, SpaceExpr left, SpaceExpr right) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->left = std::move(left.n_);
    n->right = std::move(right.n_);
    return SpaceExpr(std::move(n));
}

std::string SpaceExpr::label() const {
    const Node& n = *n_;
    switch (n.kind) {
        case Kind::Spheres: {
            if (n.degrees.empty()) return "pt";
            std::string s;
            for (size_t i = 0; i < n.degrees.size(); ++i) {
                if (i) s += "v";
                s += "S" + std::to_string(n.degrees[i]);
            }
            return s;
        }
        case Kind::Named:
            return n.name;
        case Kind::Suspend:
            return "S(" + SpaceExpr(n.left).label() + ")";
        case Kind::Wedge:
            return "(" + SpaceExpr(n.left).label() + " v " + SpaceExpr(n.right).label() + ")";
        case Kind::Smash:
            return "(" + SpaceExpr(n.left).label() + " ^ " + SpaceExpr(n.right).label() + ")";
        case Kind::Product:
            return "(" + SpaceExpr(n.left).label() + " x " + SpaceExpr(n.right).label() + ")";
        case Kind::Circle:
            return "(" + SpaceExpr(n.left).label() + kCircle + SpaceExpr(n.right).label() + ")";
    }
    return "?";
}

bool SpaceExpr::is_suspension() const {
    const Node& n = *n_;
    switch (n.kind) {
        case Kind::Spheres:
        case Kind::Suspend:
            return true;
        case Kind::Wedge:
            return SpaceExpr(n.left).is_suspension() && SpaceExpr(n.right).is_suspension();
        case Kind::Smash:
            return SpaceExpr(n.left).is_suspension() || SpaceExpr(n.right).is_suspension();
        case Kind::Named:
        case Kind::Product:
        case Kind::Circle:
            return false;
    }
    return false;
}

SpaceModel make_space_model(SpaceExpr expr, TruncSeries red, std::string name) {
    if (red.trunc_degree() < 1 || red[0] != 0 || red[1] != 0)
        throw precondition_error("not simply connected: reduced dimensions must vanish in degrees 0 and 1");
    if (!red.nonnegative())
        throw precondition_error("reduced dimensions must be nonnegative");
    return SpaceModel{std::move(expr), std::move(red), std::move(name)};
}

SpaceModel from_spheres(int trunc_degree, const std::vector<int>& degrees) {
    std::vector<Int> c(static_cast<size_t>(trunc_degree) + 1, Int(0));
    for (int d : degrees) {
        if (d < 2) throw precondition_error("not simply connected: sphere degree " +
                                            std::to_string(d) + " < 2");
        if (d <= trunc_degree) c[static_cast<size_t>(d)] += 1;
    }
    return make_space_model(SpaceExpr::spheres(degrees), TruncSeries::from_coeffs(std::move(c)));
}

SpaceModel from_reduced_dims(int trunc_degree, const std::map<int, long>& dims,
                             std::string name) {
    std::vector<Int> c(static_cast<size_t>(trunc_degree) + 1, Int(0));
    for (const auto& [deg, rank] : dims) {
        if (deg < 2) throw precondition_error("not simply connected: dimension in degree " +
                                              std::to_string(deg));
        if (rank < 0) throw precondition_error("negative rank in degree " + std::to_string(deg));
        if (deg <= trunc_degree) c[static_cast<size_t>(deg)] = rank;
    }
    SpaceExpr e = name.empty() ? SpaceExpr::named("X") : SpaceExpr::named(name);
    return make_space_model(std::move(e), TruncSeries::from_coeffs(std::move(c)), std::move(name));
}

SpaceModel suspend(const SpaceModel& x) {
    return make_space_model(SpaceExpr::suspend(x.label_expr()), shift(x.red, 1));
}

SpaceModel wedge(const SpaceModel& x, const SpaceModel& y) {
    return make_space_model(SpaceExpr::binary(SpaceExpr::Kind::Wedge, x.label_expr(), y.label_expr()),
                            x.red + y.red);
}

SpaceModel smash(const SpaceModel& x, const SpaceModel& y) {
    return make_space_model(SpaceExpr::binary(SpaceExpr::Kind::Smash, x.label_expr(), y.label_expr()),
                            x.red * y.red);
}

SpaceModel product(const SpaceModel& x, const SpaceModel& y) {
    // Kunneth: (1+red_x)(1+red_y) - 1
    return make_space_model(SpaceExpr::binary(SpaceExpr::Kind::Product, x.label_expr(), y.label_expr()),
                            x.red + y.red + x.red * y.red);
}

SpaceModel circle(const SpaceModel& x, const SpaceModel& y) {
    // Computed in generator-series space so the result is exact through D:
    // red = shift(shift(red_x,-1) * shift(red_y,-1), 1).
    TruncSeries gen = generator_series(x) * generator_series(y);
    return make_space_model(SpaceExpr::binary(SpaceExpr::Kind::Circle, x.label_expr(), y.label_expr()),
                            shift(gen, 1));
}

TruncSeries generator_series(const SpaceModel& x) { return shift(x.red, -1); }

TruncSeries loops(const SpaceModel& x) { return geom_inverse(generator_series(x)); }

TruncSeries half_smash(const SpaceModel& x, const SpaceModel& loops_of) {
    return x.red * loops(loops_of);
}

TruncSeries join_loops(const SpaceModel& x, const SpaceModel& y) {
    const int D = x.red.trunc_degree();
    TruncSeries lx = loops(x) - TruncSeries::one(D);
    TruncSeries ly = loops(y) - TruncSeries::one(D);
    return shift(lx * ly, 1);
}

std::optional<int> connectivity_within(const SpaceModel& x) {
    auto v = x.red.valuation();
    if (!v) return std::nullopt;
    return *v - 1;
}

int connectivity(const SpaceModel& x) {
    auto c = connectivity_within(x);
    if (!c) throw precondition_error("connectivity of a contractible-within-truncation model");
    return *c;
}

ProductExpr ProductExpr::leaf(SpaceModel m) {
    TruncSeries gen = coh::generator_series(m);
    auto n = std::make_shared<Node>(Node{true, 1, m.label(), std::move(m), std::move(gen), nullptr, nullptr});
    return ProductExpr(std::move(n));
}

ProductExpr ProductExpr::circle(ProductExpr left, ProductExpr right) {
    // Generator series multiply under the circle product; keeping the cached
    // product exact through D (the reduced series alone would lose degree D+1).
    TruncSeries gen = left.generator_series() * right.generator_series();
    SpaceModel m = make_space_model(
        SpaceExpr::binary(SpaceExpr::Kind::Circle, left.model().label_expr(), right.model().label_expr()),
        shift(gen, 1));
    auto n = std::make_shared<Node>(Node{false,
                                         left.length() + right.length(),
                                         "(" + left.label() + kCircle + right.label() + ")",
                                         std::move(m),
                                         std::move(gen),
                                         left.n_,
                                         right.n_});
    return ProductExpr(std::move(n));
}

ProductExpr ProductExpr::left() const {
    if (is_leaf()) throw precondition_error("leaf expression has no factors");
    return ProductExpr(n_->l);
}

ProductExpr ProductExpr::right() const {
    if (is_leaf()) throw precondition_error("leaf expression has no factors");
    return ProductExpr(n_->r);
}

ProductExpr ad_power(const SpaceModel& h, const SpaceModel& g, int n) {
    if (n < 0) throw precondition_error("ad power requires n >= 0");
    ProductExpr e = ProductExpr::leaf(g);
    if (n == 0) return e;
    ProductExpr hleaf = ProductExpr::leaf(h);
    for (int i = 0; i < n; ++i) e = ProductExpr::circle(e, hleaf);
    return e;
}

std::optional<int> connectivity_within(const ProductExpr& p) {
    auto v = p.generator_series().valuation();
    if (!v) return std::nullopt;
    return *v;  // red valuation is gen valuation + 1
}

}  // namespace coh
