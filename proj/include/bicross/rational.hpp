// Exact rational scalars backed by GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bicross {

/// Canonical rational number. Always stored in lowest terms with a positive
/// denominator, so structural equality is numeric equality.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "p/q", optionally signed. Throws std::invalid_argument.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto bad = [&] { return std::invalid_argument("not a rational: '" + s + "'"); };
        if (s.empty()) throw bad();
        auto slash = s.find('/');
        auto digits_ok = [](std::string_view d, bool allow_sign) {
            if (d.empty()) return false;
            std::size_t i = 0;
            if (allow_sign && (d[0] == '-' || d[0] == '+')) i = 1;
            if (i == d.size()) return false;
            for (; i < d.size(); ++i)
                if (d[i] < '0' || d[i] > '9') return false;
            return true;
        };
        std::string num = slash == std::string::npos ? s : s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
        if (num[0] == '+') num.erase(0, 1);
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) throw bad();
        Rational r;
        r.q_ = mpq_class(n, d);
        r.q_.canonicalize();
        return r;
    }

    [[nodiscard]] std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        q_ /= o.q_;
        return *this;
    }
    /// this += a * b without a temporary Rational.
    void add_product(const Rational& a, const Rational& b) {
        mpq_class t = a.q_ * b.q_;
        q_ += t;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.q_ = -a.q_;
        return r;
    }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

}  // namespace bicross
