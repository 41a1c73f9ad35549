#pragma once

// Exact rational numbers backed by GMP. Values are always canonical
// (lowest terms, positive denominator).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fockindex {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator) {
        if (denominator == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
        value_.canonicalize();
    }
    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }
    Rational(const mpz_class& numerator, const mpz_class& denominator) {
        if (denominator == 0) throw std::domain_error("Rational: zero denominator");
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }

    /// Parses "p/q" or "p" (optional leading sign).
    static Rational parse(std::string_view text) {
        std::string s(text);
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        return Rational(q);
    }

    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    [[nodiscard]] std::string str() const {
        if (value_.get_den() == 1) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

/// r^k for integer k; negative k inverts.
inline Rational pow(const Rational& base, int k) {
    Rational result(1);
    Rational b = k < 0 ? Rational(1) / base : base;
    unsigned e = k < 0 ? static_cast<unsigned>(-k) : static_cast<unsigned>(k);
    while (e != 0) {
        if (e & 1U) result *= b;
        b *= b;
        e >>= 1U;
    }
    return result;
}

inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace fockindex
