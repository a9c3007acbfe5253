#pragma once

#include "coh/field.hpp"
#include "coh/matrix.hpp"
#include "coh/series.hpp"
#include "coh/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coh {

/// A graded self-map: one square matrix per degree 0..max_degree over a
/// fixed field. Degrees without a block are zero-dimensional.
class GradedEndo {
  public:
    GradedEndo(Field field, std::vector<Mat> blocks);

    const Field& field() const { return field_; }
    int max_degree() const { return static_cast<int>(blocks_.size()) - 1; }
    const Mat& block(int degree) const;
    size_t dim(int degree) const;
    std::vector<size_t> dims() const;
    bool same_shape(const GradedEndo& other) const;

  private:
    Field field_;
    std::vector<Mat> blocks_;
};

GradedEndo endo_zero(const Field& f, const std::vector<size_t>& dims);
GradedEndo endo_identity(const Field& f, const std::vector<size_t>& dims);
GradedEndo compose(const GradedEndo& a, const GradedEndo& b);
GradedEndo endo_add(const GradedEndo& a, const GradedEndo& b);
GradedEndo endo_neg(const GradedEndo& a);
/// 1 + e
GradedEndo plus_identity(const GradedEndo& a);
bool endo_equal(const GradedEndo& a, const GradedEndo& b);

/// The unit u with E^2 = u E degreewise, when one exists. For the zero map
/// every unit works and 1 is returned by convention.
std::optional<Scalar> is_quasi_idempotent(const GradedEndo& e);

/// Whether E^2 = u E for the given unit (covers the zero map for any u).
bool satisfies_quasi_relation(const GradedEndo& e, const Scalar& u);

/// Homology dimensions of the mapping telescope of e: the degreewise stable
/// rank, computed as rank(E^m) with m the degree dimension.
TruncSeries telescope_dims(const GradedEndo& e);

struct TelescopeSplitRow {
    int degree;
    size_t dim;
    size_t rank;
    size_t nullity;
    Int tele_e;
    Int tele_one_plus_e;
    bool pass;
};

struct TelescopeSplitReport {
    std::vector<TelescopeSplitRow> rows;
    bool pass;
};

/// For a quasi-idempotent with unit -1: checks im + ker = total degreewise,
/// telescope_dims(E) = rank series, telescope_dims(1+E) = nullity series.
/// Throws precondition_error unless E^2 = -E.
TelescopeSplitReport verify_telescope_splitting(const GradedEndo& e);

struct TelescopeSwapReport {
    TruncSeries lhs;  // telescope dims of f1 f2
    TruncSeries rhs;  // telescope dims of f2 f1
    bool equal;
};

/// Telescopes of f1 f2 and f2 f1 have equal homology dimensions.
TelescopeSwapReport verify_telescope_swap(const GradedEndo& f1, const GradedEndo& f2);

struct CircleTelescopeReport {
    std::string quasi_unit;        // extracted unit of E1 E2, "-1" in the nonzero case
    bool quasi_ok;                 // (E1 E2)^2 = -(E1 E2)
    TruncSeries image_dims;        // telescope dims of E1 E2
    TruncSeries expected_image;    // red(X o Y), truncated to the cap
    TruncSeries complement_dims;   // telescope dims of 1 + E1 E2
    TruncSeries expected_complement;
    TruncSeries total_dims;        // red series of S(Omega X ^ Omega Y)
    bool pass;
};

/// Realizes the circle product of two suspensions as a telescope: builds the
/// word basis of S(Omega X ^ Omega Y) through the cap, the homology matrices
/// of the two projection self-maps (project tensor words to length-1
/// generators, re-include; the second carries the suspension-coordinate
/// sign), and compares telescope dimensions with the series model.
CircleTelescopeReport circle_via_telescope(const SpaceModel& x, const SpaceModel& y, int cap,
                                           const Field& field);

}  // namespace coh
