#pragma once

#include "coh/series.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace coh {

using Rational = boost::multiprecision::cpp_rational;

class Field;

/// Exact scalar in a prime field F_p (p machine-word sized) or in Q.
/// Construct values through a Field; mixing scalars from different fields
/// is a logic error.
class Scalar {
  public:
    Scalar() : p_(0), v_(0), q_(0) {}  // rational zero

    bool is_zero() const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

  private:
    friend class Field;
    Scalar(uint32_t p, int64_t v) : p_(p), v_(v), q_(0) {}
    explicit Scalar(Rational q) : p_(0), v_(0), q_(std::move(q)) {}

    uint32_t p_;   // 0 = rational
    int64_t v_;    // value in [0, p) when p_ != 0
    Rational q_;   // value when p_ == 0
};

/// A coefficient field: F_p for a prime p, or the rationals.
class Field {
  public:
    static Field prime(uint32_t p);  // validates primality
    static Field rationals() { return Field(0); }
    /// Parses "q"/"Q" or a prime modulus.
    static Field parse(const std::string& spec);

    bool is_rationals() const { return p_ == 0; }
    uint32_t modulus() const { return p_; }
    std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

    Scalar zero() const { return of(0); }
    Scalar one() const { return of(1); }
    Scalar of(long long v) const;
    Scalar of_int(const Int& v) const;

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

  private:
    explicit Field(uint32_t p) : p_(p) {}
    uint32_t p_;
};

}  // namespace coh
