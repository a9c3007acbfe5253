#include "coh/series.hpp"

#include <sstream>

namespace coh {

namespace {

void require_same_degree(const TruncSeries& a, const TruncSeries& b) {
    if (a.trunc_degree() != b.trunc_degree())
        throw precondition_error("mismatched truncation degrees: " +
                                 std::to_string(a.trunc_degree()) + " vs " +
                                 std::to_string(b.trunc_degree()));
}

}  // namespace

TruncSeries::TruncSeries(int trunc_degree) {
    if (trunc_degree < 0) throw precondition_error("truncation degree must be >= 0");
    c_.assign(static_cast<size_t>(trunc_degree) + 1, Int(0));
}

TruncSeries TruncSeries::one(int trunc_degree) {
    TruncSeries s(trunc_degree);
    s.c_[0] = 1;
    return s;
}

TruncSeries TruncSeries::monomial(int trunc_degree, int degree, Int coeff) {
    TruncSeries s(trunc_degree);
    if (degree < 0) throw precondition_error("monomial degree must be >= 0");
    if (degree <= trunc_degree) s.c_[static_cast<size_t>(degree)] = std::move(coeff);
    return s;
}

TruncSeries TruncSeries::from_coeffs(std::vector<Int> coeffs) {
    if (coeffs.empty()) throw precondition_error("coefficient vector must have size >= 1");
    TruncSeries s(static_cast<int>(coeffs.size()) - 1);
    s.c_ = std::move(coeffs);
    return s;
}

const Int& TruncSeries::operator[](int n) const {
    if (n < 0 || n > trunc_degree())
        throw std::out_of_range("series coefficient index " + std::to_string(n));
    return c_[static_cast<size_t>(n)];
}

bool TruncSeries::is_zero() const {
    for (const Int& c : c_)
        if (c != 0) return false;
    return true;
}

std::optional<int> TruncSeries::valuation() const {
    for (int n = 0; n <= trunc_degree(); ++n)
        if (c_[static_cast<size_t>(n)] != 0) return n;
    return std::nullopt;
}

bool TruncSeries::nonnegative() const {
    for (const Int& c : c_)
        if (c < 0) return false;
    return true;
}

TruncSeries TruncSeries::truncated(int new_trunc_degree) const {
    if (new_trunc_degree > trunc_degree())
        throw precondition_error("cannot extend truncation degree");
    std::vector<Int> out(c_.begin(), c_.begin() + new_trunc_degree + 1);
    return from_coeffs(std::move(out));
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(trunc_degree());
    for (size_t n = 0; n < c_.size(); ++n) r.c_[n] = -c_[n];
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    require_same_degree(a, b);
    TruncSeries r(a.trunc_degree());
    for (size_t n = 0; n < r.c_.size(); ++n) r.c_[n] = a.c_[n] + b.c_[n];
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    require_same_degree(a, b);
    TruncSeries r(a.trunc_degree());
    for (size_t n = 0; n < r.c_.size(); ++n) r.c_[n] = a.c_[n] - b.c_[n];
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    require_same_degree(a, b);
    TruncSeries r(a.trunc_degree());
    const size_t size = r.c_.size();
    for (size_t i = 0; i < size; ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; i + j < size; ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    require_same_degree(a, b);
    return a.c_ == b.c_;
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= trunc_degree(); ++n) {
        const Int& c = c_[static_cast<size_t>(n)];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (n == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag;
            os << "t";
            if (n > 1) os << "^" << n;
        }
    }
    if (first) os << "0";
    return os.str();
}

TruncSeries shift(const TruncSeries& a, int k) {
    const int D = a.trunc_degree();
    if (k < 0) {
        auto val = a.valuation();
        if (val.has_value() && *val < -k)
            throw precondition_error("shift would create negative-degree terms");
    }
    TruncSeries r(D);
    std::vector<Int> out(static_cast<size_t>(D) + 1, Int(0));
    for (int n = 0; n <= D; ++n) {
        int m = n + k;
        if (m >= 0 && m <= D) out[static_cast<size_t>(m)] = a[n];
    }
    return TruncSeries::from_coeffs(std::move(out));
}

TruncSeries geom_inverse(const TruncSeries& a) {
    if (a[0] != 0) throw precondition_error("geom_inverse requires zero constant term");
    const int D = a.trunc_degree();
    std::vector<Int> s(static_cast<size_t>(D) + 1, Int(0));
    s[0] = 1;
    // s = 1 + a*s, solved degree by degree
    for (int n = 1; n <= D; ++n) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k) {
            if (a[k] == 0) continue;
            acc += a[k] * s[static_cast<size_t>(n - k)];
        }
        s[static_cast<size_t>(n)] = std::move(acc);
    }
    return TruncSeries::from_coeffs(std::move(s));
}

bool leq(const TruncSeries& a, const TruncSeries& b) {
    if (a.trunc_degree() != b.trunc_degree())
        throw precondition_error("mismatched truncation degrees in leq");
    for (int n = 0; n <= a.trunc_degree(); ++n)
        if (a[n] > b[n]) return false;
    return true;
}

TruncSeries pow(const TruncSeries& a, const Int& n) {
    if (n < 0) throw precondition_error("series pow requires n >= 0");
    TruncSeries result = TruncSeries::one(a.trunc_degree());
    TruncSeries base = a;
    Int e = n;
    while (e > 0) {
        if ((e & 1) != 0) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

TruncSeries pow(const TruncSeries& a, long n) { return pow(a, Int(n)); }

}  // namespace coh
