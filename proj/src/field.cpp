#include "coh/field.hpp"

#include <stdexcept>

namespace coh {

namespace {

void require_same_field(const Scalar&, const Scalar&, uint32_t pa, uint32_t pb) {
    if (pa != pb) throw std::logic_error("scalar field mismatch");
}

int64_t mod_pos(int64_t v, int64_t p) {
    int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// extended Euclid inverse of v mod p, v != 0
int64_t mod_inverse(int64_t v, int64_t p) {
    int64_t t = 0, new_t = 1, r = p, new_r = v;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return mod_pos(t, p);
}

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : v_ == 0; }

Scalar Scalar::operator-() const {
    if (p_ == 0) return Scalar(Rational(-q_));
    return Scalar(p_, v_ == 0 ? 0 : static_cast<int64_t>(p_) - v_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw precondition_error("inverse of zero");
    if (p_ == 0) return Scalar(Rational(1 / q_));
    return Scalar(p_, mod_inverse(v_, p_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b, a.p_, b.p_);
    if (a.p_ == 0) return Scalar(Rational(a.q_ + b.q_));
    return Scalar(a.p_, (a.v_ + b.v_) % a.p_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a, b, a.p_, b.p_);
    if (a.p_ == 0) return Scalar(Rational(a.q_ - b.q_));
    return Scalar(a.p_, mod_pos(a.v_ - b.v_, a.p_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b, a.p_, b.p_);
    if (a.p_ == 0) return Scalar(Rational(a.q_ * b.q_));
    return Scalar(a.p_, (a.v_ * b.v_) % a.p_);
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_field(a, b, a.p_, b.p_);
    return a.p_ == 0 ? a.q_ == b.q_ : a.v_ == b.v_;
}

std::string Scalar::str() const {
    if (p_ == 0) return q_.str();
    return std::to_string(v_);
}

Field Field::prime(uint32_t p) {
    if (!is_prime_u32(p)) throw precondition_error("field modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(const std::string& spec) {
    if (spec == "q" || spec == "Q") return rationals();
    try {
        size_t pos = 0;
        unsigned long v = std::stoul(spec, &pos);
        if (pos != spec.size() || v == 0 || v > 0x7fffffffUL)
            throw precondition_error("bad field spec: " + spec);
        return prime(static_cast<uint32_t>(v));
    } catch (const std::logic_error&) {
        throw precondition_error("bad field spec: " + spec);
    }
}

Scalar Field::of(long long v) const {
    if (p_ == 0) return Scalar(Rational(v));
    return Scalar(p_, mod_pos(v, p_));
}

Scalar Field::of_int(const Int& v) const {
    if (p_ == 0) return Scalar(Rational(v));
    Int r = v % p_;
    if (r < 0) r += p_;
    return Scalar(p_, r.convert_to<int64_t>());
}

}  // namespace coh
