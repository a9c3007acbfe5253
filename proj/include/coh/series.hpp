#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coh {

using Int = boost::multiprecision::cpp_int;

/// Raised when an operation is called outside its contract (mismatched
/// truncation degrees, non-simply-connected input, bad documents, ...).
/// The CLI maps this to exit code 2.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integer power series truncated at a fixed degree D.
///
/// Coefficients are exact big integers; every operation is carried out
/// through degree D only and two series compare coefficientwise through D.
/// Values are immutable once built and safe to share.
class TruncSeries {
  public:
    /// Degree-0 zero series; placeholder for default-constructed reports.
    TruncSeries() : TruncSeries(0) {}
    /// The zero series truncated at `trunc_degree` (must be >= 0).
    explicit TruncSeries(int trunc_degree);

    static TruncSeries zero(int trunc_degree) { return TruncSeries(trunc_degree); }
    static TruncSeries one(int trunc_degree);
    /// coeff * t^degree
    static TruncSeries monomial(int trunc_degree, int degree, Int coeff = 1);
    /// Takes ownership of the full coefficient vector (size = D+1).
    static TruncSeries from_coeffs(std::vector<Int> coeffs);

    int trunc_degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& operator[](int n) const;
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const;
    /// Least degree with a nonzero coefficient, within the truncation.
    std::optional<int> valuation() const;
    bool nonnegative() const;

    /// Copy truncated to a smaller degree.
    TruncSeries truncated(int new_trunc_degree) const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    /// Human-readable form, e.g. "1 + 2t^2 + t^4".
    std::string str() const;

  private:
    std::vector<Int> c_;  // c_[n] = coefficient of t^n, n = 0..D
};

/// Multiply by t^k. For k < 0 the series must have valuation >= -k; the top
/// |k| coefficients of a down-shift are outside the truncation and become 0.
TruncSeries shift(const TruncSeries& a, int k);

/// 1/(1-a) through degree D; requires a(0) = 0.
TruncSeries geom_inverse(const TruncSeries& a);

/// Coefficientwise a_n <= b_n for all n <= D.
bool leq(const TruncSeries& a, const TruncSeries& b);

TruncSeries pow(const TruncSeries& a, long n);
TruncSeries pow(const TruncSeries& a, const Int& n);

}  // namespace coh
