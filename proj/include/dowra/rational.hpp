#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dowra {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. The scalar ground field for every exact computation.
class rational {
  public:
    rational() : q_(0) {}
    rational(long n) : q_(n) {}
    rational(long num, long den) {
        if (den == 0) {
            throw std::domain_error("rational: division by zero");
        }
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit rational(const mpz_class& n) : q_(n) {}
    rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) {
            throw std::domain_error("rational: division by zero");
        }
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static rational from_int(long n) { return rational(n); }
    static rational from_mpz(const mpz_class& n) { return rational(n); }

    /// Parses the canonical text form `p/q` (q omitted when 1), e.g. "-3/2", "7".
    static rational from_string(std::string_view s) {
        const auto slash = s.find('/');
        mpz_class num, den = 1;
        if (num.set_str(std::string(s.substr(0, slash)), 10) != 0) {
            throw std::invalid_argument("rational: cannot parse '" + std::string(s) + "'");
        }
        if (slash != std::string_view::npos) {
            if (den.set_str(std::string(s.substr(slash + 1)), 10) != 0 || den <= 0) {
                throw std::invalid_argument("rational: cannot parse '" + std::string(s) + "'");
            }
        }
        return rational(num, den);
    }

    const mpz_class numerator() const { return q_.get_num(); }
    const mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    /// Units of the field are exactly the nonzero elements.
    bool is_unit() const { return q_ != 0; }

    rational unit_inv() const {
        if (is_zero()) {
            throw std::domain_error("rational: inverse of zero");
        }
        return rational(mpq_class(1 / q_));
    }

    /// Exact division by a nonzero machine integer (the Q-algebra structure).
    rational div_int(long n) const {
        if (n == 0) {
            throw std::domain_error("rational: division by zero");
        }
        return rational(mpq_class(q_ / mpq_class(n)));
    }

    rational operator-() const { return rational(mpq_class(-q_)); }
    rational& operator+=(const rational& o) { q_ += o.q_; return *this; }
    rational& operator-=(const rational& o) { q_ -= o.q_; return *this; }
    rational& operator*=(const rational& o) { q_ *= o.q_; return *this; }
    rational& operator/=(const rational& o) {
        if (o.is_zero()) {
            throw std::domain_error("rational: division by zero");
        }
        q_ /= o.q_;
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }
    friend bool operator==(const rational& a, const rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const rational& a, const rational& b) { return a.q_ < b.q_; }

    std::string to_string() const { return q_.get_str(); }

  private:
    mpq_class q_;
};

/// Exact division in the field; errors on zero divisor.
inline rational exact_div(const rational& a, const rational& b) { return a / b; }

inline mpz_class factorial_z(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial_z(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

/// n!/k! for k <= n, as an exact integer.
inline mpz_class falling_factorial_ratio(unsigned long n, unsigned long k) {
    mpz_class r = 1;
    for (unsigned long i = k + 1; i <= n; ++i) {
        r *= i;
    }
    return r;
}

} // namespace dowra
