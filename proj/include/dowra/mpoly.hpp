#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "rational.hpp"

namespace dowra {

/// Thrown when exact_div is asked for a quotient that does not exist in the ring.
class inexact_division_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Sparse polynomial over the rationals in the two formal parameters x and m.
/// Terms are kept in graded-lex order (total degree, then x-degree); stored
/// coefficients are never zero, so equality is term-map equality.
class mpoly {
  public:
    /// Exponent pair of one monomial x^dx * m^dm.
    struct monomial {
        std::uint32_t dx = 0;
        std::uint32_t dm = 0;

        std::uint64_t total() const { return std::uint64_t(dx) + dm; }
        friend bool operator==(const monomial&, const monomial&) = default;
        /// Graded lex with x before m, ascending (map order).
        friend bool operator<(const monomial& a, const monomial& b) {
            if (a.total() != b.total()) return a.total() < b.total();
            return a.dx < b.dx;
        }
    };
    using term_map = std::map<monomial, rational>;

    mpoly() = default;
    mpoly(long n) { insert({0, 0}, rational(n)); }
    explicit mpoly(const rational& c) { insert({0, 0}, c); }

    static mpoly from_int(long n) { return mpoly(n); }
    static mpoly from_mpz(const mpz_class& n) { return mpoly(rational(n)); }
    static mpoly constant(const rational& c) { return mpoly(c); }
    static mpoly var_x() {
        mpoly p;
        p.insert({1, 0}, rational(1));
        return p;
    }
    static mpoly var_m() {
        mpoly p;
        p.insert({0, 1}, rational(1));
        return p;
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == monomial{0, 0});
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == monomial{0, 0} &&
               terms_.begin()->second.is_one();
    }
    /// Units are the nonzero constants.
    bool is_unit() const { return is_constant() && !is_zero(); }

    rational constant_part() const {
        const auto it = terms_.find({0, 0});
        return it == terms_.end() ? rational(0) : it->second;
    }

    mpoly unit_inv() const {
        if (!is_unit()) {
            throw std::domain_error("mpoly: not a unit: " + to_string());
        }
        return mpoly(constant_part().unit_inv());
    }

    std::uint64_t total_degree() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first.total();
    }

    mpoly operator-() const {
        mpoly r;
        for (const auto& [mono, c] : terms_) {
            r.terms_.emplace(mono, -c);
        }
        return r;
    }

    mpoly& operator+=(const mpoly& o) {
        for (const auto& [mono, c] : o.terms_) {
            insert(mono, c);
        }
        return *this;
    }
    mpoly& operator-=(const mpoly& o) {
        for (const auto& [mono, c] : o.terms_) {
            insert(mono, -c);
        }
        return *this;
    }
    mpoly& operator*=(const mpoly& o) { return *this = *this * o; }

    friend mpoly operator+(mpoly a, const mpoly& b) { return a += b; }
    friend mpoly operator-(mpoly a, const mpoly& b) { return a -= b; }
    friend mpoly operator*(const mpoly& a, const mpoly& b) {
        mpoly r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                r.insert({ma.dx + mb.dx, ma.dm + mb.dm}, ca * cb);
            }
        }
        return r;
    }
    friend bool operator==(const mpoly& a, const mpoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const mpoly& a, const mpoly& b) { return !(a == b); }

    mpoly scaled(const rational& c) const {
        mpoly r;
        if (c.is_zero()) return r;
        for (const auto& [mono, coef] : terms_) {
            r.terms_.emplace(mono, coef * c);
        }
        return r;
    }

    /// Exact division by a nonzero integer; always possible over Q coefficients.
    mpoly div_int(long n) const {
        if (n == 0) {
            throw std::domain_error("mpoly: division by zero integer");
        }
        return scaled(rational(1, n));
    }

    mpoly pow(unsigned e) const {
        mpoly r(1);
        for (unsigned i = 0; i < e; ++i) {
            r *= *this;
        }
        return r;
    }

    /// Evaluation homomorphism at (x, m).
    rational specialize(const rational& x_val, const rational& m_val) const {
        rational acc(0);
        for (const auto& [mono, c] : terms_) {
            rational t = c;
            for (std::uint32_t i = 0; i < mono.dx; ++i) t *= x_val;
            for (std::uint32_t i = 0; i < mono.dm; ++i) t *= m_val;
            acc += t;
        }
        return acc;
    }

    /// Canonical text form: graded-lex descending, e.g. "x^2 + x*m - 1/2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [mono, c] = *it;
            const bool neg = c < rational(0);
            rational mag = neg ? -c : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string vars;
            if (mono.dx > 0) {
                vars += "x";
                if (mono.dx > 1) vars += "^" + std::to_string(mono.dx);
            }
            if (mono.dm > 0) {
                if (!vars.empty()) vars += "*";
                vars += "m";
                if (mono.dm > 1) vars += "^" + std::to_string(mono.dm);
            }
            if (vars.empty()) {
                out += mag.to_string();
            } else if (mag.is_one()) {
                out += vars;
            } else {
                out += mag.to_string() + "*" + vars;
            }
        }
        return out;
    }

    /// Leading term in graded-lex order. Precondition: nonzero.
    std::pair<monomial, rational> leading_term() const {
        return *terms_.rbegin();
    }

  private:
    void insert(const monomial& mono, const rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(mono, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    term_map terms_;

    friend mpoly exact_div(const mpoly& p, const mpoly& q);
};

/// Exact polynomial division: returns r with r*q == p, or throws
/// inexact_division_error when q does not divide p.
inline mpoly exact_div(const mpoly& p, const mpoly& q) {
    if (q.is_zero()) {
        throw std::domain_error("mpoly: division by zero polynomial");
    }
    mpoly rem = p;
    mpoly quot;
    const auto [qm, qc] = q.leading_term();
    while (!rem.is_zero()) {
        const auto [rm, rc] = rem.leading_term();
        if (rm.dx < qm.dx || rm.dm < qm.dm) {
            throw inexact_division_error("mpoly: inexact division of " + p.to_string() +
                                         " by " + q.to_string());
        }
        mpoly t;
        t.insert({rm.dx - qm.dx, rm.dm - qm.dm}, rc / qc);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

} // namespace dowra
