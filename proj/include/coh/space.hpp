#pragma once

#include "coh/series.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace coh {

/// Expression tree recording how a space model was formed. Shared,
/// immutable nodes; used for labels and for suspension detection.
class SpaceExpr {
  public:
    enum class Kind { Spheres, Named, Suspend, Wedge, Smash, Product, Circle };

    static SpaceExpr spheres(std::vector<int> degrees);
    static SpaceExpr named(std::string name);
    static SpaceExpr suspend(SpaceExpr child);
    static SpaceExpr binary(Kind k, SpaceExpr left, SpaceExpr right);

    Kind kind() const { return n_->kind; }
    std::string label() const;

    /// True when the expression is visibly a suspension: a sphere wedge,
    /// an explicit suspension, a wedge of suspensions, or a smash with a
    /// suspension factor. Named inputs and circle/product results are not
    /// assumed to be suspensions.
    bool is_suspension() const;

  private:
    struct Node {
        Kind kind;
        std::string name;          // Named
        std::vector<int> degrees;  // Spheres
        std::shared_ptr<const Node> left, right;
    };
    explicit SpaceExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

/// A simply connected co-H space modeled by its reduced graded dimension
/// vector (field coefficients). red is zero in degrees 0 and 1 and has
/// nonnegative coefficients.
struct SpaceModel {
    SpaceExpr expr;
    TruncSeries red;
    std::string name;  // optional display name from input documents

    std::string label() const { return name.empty() ? expr.label() : name; }
    /// Expression used when this model appears inside a larger one.
    SpaceExpr label_expr() const { return name.empty() ? expr : SpaceExpr::named(name); }
};

/// Validates the simple-connectivity and nonnegativity invariants.
SpaceModel make_space_model(SpaceExpr expr, TruncSeries red, std::string name = "");

/// Wedge of spheres, every degree >= 2. Empty list gives the contractible model.
SpaceModel from_spheres(int trunc_degree, const std::vector<int>& degrees);
/// Model from an explicit degree -> rank table (degrees >= 2).
SpaceModel from_reduced_dims(int trunc_degree, const std::map<int, long>& dims,
                             std::string name = "");

SpaceModel suspend(const SpaceModel& x);
SpaceModel wedge(const SpaceModel& x, const SpaceModel& y);
SpaceModel smash(const SpaceModel& x, const SpaceModel& y);
SpaceModel product(const SpaceModel& x, const SpaceModel& y);

/// The circle product: red = desuspension of red_x * red_y.
SpaceModel circle(const SpaceModel& x, const SpaceModel& y);

/// Generator series of the loop space: shift(red, -1).
TruncSeries generator_series(const SpaceModel& x);

/// Full Poincare series of the loop space, 1/(1 - generator_series).
TruncSeries loops(const SpaceModel& x);

/// Reduced series of X x| Omega(loops_of): red_X * loops(loops_of).
TruncSeries half_smash(const SpaceModel& x, const SpaceModel& loops_of);

/// Reduced series of Omega X * Omega Y (the join): shift((loops-1)(loops-1), 1).
TruncSeries join_loops(const SpaceModel& x, const SpaceModel& y);

/// Largest n with reduced homology zero in degrees <= n; nullopt when the
/// model is contractible within the truncation.
std::optional<int> connectivity_within(const SpaceModel& x);
/// Same, but throws precondition_error on contractible-within-truncation input.
int connectivity(const SpaceModel& x);

/// Iterated circle-product expression over model leaves. Length is the leaf
/// count; the label is the bracket word, e.g. ((G,H),H) rendered with the
/// circle glyph. The generator series is cached multiplicatively so it is
/// exact through degree D even when the reduced series bottoms out above D.
class ProductExpr {
  public:
    static ProductExpr leaf(SpaceModel m);
    static ProductExpr circle(ProductExpr left, ProductExpr right);

    int length() const { return n_->length; }
    const std::string& label() const { return n_->label; }
    const SpaceModel& model() const { return n_->model; }
    /// Loop-generator series of the model, exact through D.
    const TruncSeries& generator_series() const { return n_->gen; }

    bool is_leaf() const { return n_->leaf; }
    ProductExpr left() const;
    ProductExpr right() const;

  private:
    struct Node {
        bool leaf;
        int length;
        std::string label;
        SpaceModel model;
        TruncSeries gen;
        std::shared_ptr<const Node> l, r;
    };
    explicit ProductExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

/// ad^n(H)(G): the left-nested circle product G o H o ... o H (n copies of H).
ProductExpr ad_power(const SpaceModel& h, const SpaceModel& g, int n);

std::optional<int> connectivity_within(const ProductExpr& p);

}  // namespace coh
