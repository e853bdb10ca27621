#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kshadow {

/// Exact rational scalar. All geometric decisions in this library are made
/// with these; no floating point is ever consulted for a predicate.
/// Values are kept canonical (reduced fraction, positive denominator).
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(int n) : v_(n) {}
    Scalar(long n) : v_(n) {}
    Scalar(long long n) : v_(static_cast<long>(n)) {}
    Scalar(long num, long den) : v_(num, den) { v_.canonicalize(); }
    explicit Scalar(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Accepts "7", "-3/4", "2.25", "-.5". Decimal strings convert exactly
    /// (no binary round trip). Returns nullopt on malformed input or zero
    /// denominator.
    static std::optional<Scalar> parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Scalar operator-() const { return Scalar::unchecked(-v_); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) { v_ /= o.v_; return *this; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar::unchecked(a.v_ + b.v_); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar::unchecked(a.v_ - b.v_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar::unchecked(a.v_ * b.v_); }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return Scalar::unchecked(a.v_ / b.v_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

    friend int compare(const Scalar& a, const Scalar& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return (c > 0) - (c < 0);  // mpq_cmp's magnitude is unspecified
    }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    /// Canonical exact form: "p" or "p/q".
    std::string str() const;

    /// Exact decimal rendering with `digits` fractional digits, round half
    /// away from zero. Display only; never fed back into predicates.
    std::string decimal(int digits) const;

    /// Lossy; only for ordering-insensitive uses (never predicates).
    double approx() const { return v_.get_d(); }

private:
    static Scalar unchecked(mpq_class q) {
        Scalar s;
        s.v_ = std::move(q);
        return s;
    }
    mpq_class v_;
};

inline Scalar abs(const Scalar& a) { return a.abs(); }
inline Scalar min(const Scalar& a, const Scalar& b) { return a < b ? a : b; }
inline Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace kshadow
