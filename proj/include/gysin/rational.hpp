#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gysin {

using Int = mpz_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact rational scalar, always canonical: reduced, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { canon(); }
    Rational(const Int& num, const Int& den) : v_(num, den) { canon(); }

    // Accepts "a" or "a/b" in base 10.
    explicit Rational(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                v_ = mpq_class(Int(s), 1);
            else
                v_ = mpq_class(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw Error("bad rational literal: '" + s + "'");
        }
        canon();
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    // "a" or "a/b"
    std::string str() const { return v_.get_str(); }

    Rational inverse() const {
        if (is_zero()) throw Error("rational inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

private:
    explicit Rational(const mpq_class& v) : v_(v) {}
    void canon() {
        if (v_.get_den() == 0) throw Error("rational with zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

}  // namespace gysin
