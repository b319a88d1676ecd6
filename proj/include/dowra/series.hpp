#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ring.hpp"

namespace dowra {

/// Truncated formal power series over a coefficient ring. A series of order N
/// stores the coefficients of z^0..z^N; every binary operation truncates at
/// the smaller input order, which is the only decidable notion of equality.
template <coeff_ring R>
class series {
  public:
    explicit series(int order) : c_(checked_size(order)) {}
    series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) {
            throw std::invalid_argument("series: empty coefficient list");
        }
    }

    static series zero(int order) { return series(order); }
    static series constant(const R& value, int order) {
        series s(order);
        s.c_[0] = value;
        return s;
    }
    static series one(int order) { return constant(R::from_int(1), order); }
    /// The identity series z.
    static series z(int order) {
        series s(order);
        if (order >= 1) s.c_[1] = R::from_int(1);
        return s;
    }
    static series exp_z(int order) { return exp_linear(R::from_int(1), order); }

    /// (e^{tz} - 1)/t built coefficient-wise as sum_{n>=1} t^{n-1} z^n / n!,
    /// so t = 0 is a regular point (the series is then just z).
    static series expm1_over(const R& t, int order) {
        series s(order);
        R tp = R::from_int(1);
        for (int n = 1; n <= order; ++n) {
            s.c_[n] = tp * inv_factorial(n);
            tp = tp * t;
        }
        return s;
    }

    /// (1/t) log(1+tz) = sum_{n>=1} (-1)^{n-1} t^{n-1} z^n / n; regular at t = 0.
    static series log1p_over(const R& t, int order) {
        series s(order);
        R tp = R::from_int(1);
        for (int n = 1; n <= order; ++n) {
            s.c_[n] = (n % 2 == 1 ? tp : -tp).div_int(n);
            tp = tp * t;
        }
        return s;
    }

    /// (1+tz)^{-1/t} = exp(-(1/t) log(1+tz)); regular at t = 0, where it
    /// degenerates to e^{-z}.
    static series pow1p_neg_recip(const R& t, int order) {
        return (-log1p_over(t, order)).exp();
    }

    /// e^{tz}.
    static series exp_linear(const R& t, int order) {
        series s(order);
        R tp = R::from_int(1);
        for (int n = 0; n <= order; ++n) {
            s.c_[n] = tp * inv_factorial(n);
            tp = tp * t;
        }
        return s;
    }

    /// 1 + tz as a series.
    static series one_plus_linear(const R& t, int order) {
        series s = one(order);
        if (order >= 1) s.c_[1] = t;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
    R& coeff(int n) { return c_.at(static_cast<std::size_t>(n)); }
    const std::vector<R>& coeffs() const { return c_; }

    series truncated(int order) const {
        if (order >= this->order()) return *this;
        return series(std::vector<R>(c_.begin(), c_.begin() + order + 1));
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const R& x) { return x.is_zero(); });
    }

    /// Coefficient-wise equality up to the smaller truncation order.
    friend bool operator==(const series& a, const series& b) {
        const int n = std::min(a.order(), b.order());
        for (int i = 0; i <= n; ++i) {
            if (!(a.c_[i] == b.c_[i])) return false;
        }
        return true;
    }
    friend bool operator!=(const series& a, const series& b) { return !(a == b); }

    series operator-() const {
        series r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend series operator+(const series& a, const series& b) {
        series r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend series operator-(const series& a, const series& b) {
        series r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    /// Cauchy product truncated at the smaller order.
    friend series operator*(const series& a, const series& b) {
        series r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= r.order(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    series scaled(const R& k) const {
        series r = *this;
        for (auto& x : r.c_) x = x * k;
        return r;
    }

    /// Quotient to truncation order. The divisor's lowest nonzero coefficient
    /// must be a unit; a common z^v factor cancels when the numerator vanishes
    /// to the same order (so z / (e^z - 1) works), otherwise the division is
    /// rejected as leaving the power series ring.
    friend series operator/(const series& s, const series& t) {
        int v = 0;
        while (v <= t.order() && t.c_[static_cast<std::size_t>(v)].is_zero()) ++v;
        if (v > t.order()) {
            throw std::domain_error("series: division by the zero series");
        }
        if (!t.c_[static_cast<std::size_t>(v)].is_unit()) {
            throw std::domain_error("series: division by non-unit coefficient " +
                                    t.c_[static_cast<std::size_t>(v)].to_string() + " at z^" +
                                    std::to_string(v));
        }
        for (int i = 0; i < v; ++i) {
            if (i <= s.order() && !s.c_[static_cast<std::size_t>(i)].is_zero()) {
                throw std::domain_error(
                    "series: division by non-unit constant term (divisor vanishes to order " +
                    std::to_string(v) + ", numerator does not)");
            }
        }
        const R inv0 = t.c_[static_cast<std::size_t>(v)].unit_inv();
        series r(std::min(s.order(), t.order()) - v);
        for (int n = 0; n <= r.order(); ++n) {
            R acc = s.c_[static_cast<std::size_t>(n + v)];
            for (int k = 0; k < n; ++k) {
                if (r.c_[static_cast<std::size_t>(k)].is_zero() ||
                    t.c_[static_cast<std::size_t>(n - k + v)].is_zero())
                    continue;
                acc = acc - r.c_[static_cast<std::size_t>(k)] *
                                t.c_[static_cast<std::size_t>(n - k + v)];
            }
            r.c_[static_cast<std::size_t>(n)] = acc * inv0;
        }
        return r;
    }

    /// s(t(z)) by Horner evaluation; the inner series must vanish at 0.
    series compose(const series& inner) const {
        if (!inner.c_[0].is_zero()) {
            throw std::domain_error("series: composition with nonzero constant term " +
                                    inner.c_[0].to_string());
        }
        const int n = std::min(order(), inner.order());
        series r = constant(c_[static_cast<std::size_t>(order())], n);
        for (int k = order() - 1; k >= 0; --k) {
            r = r * inner.truncated(n);
            r.c_[0] = r.c_[0] + c_[static_cast<std::size_t>(k)];
        }
        return r;
    }

    /// Compositional inverse by Lagrange inversion:
    /// fbar_n = (1/n) [w^{n-1}] (w/f(w))^n. Requires f_0 = 0 and f_1 a unit.
    series revert() const {
        if (!c_[0].is_zero() || order() < 1 || !c_[1].is_unit()) {
            throw std::domain_error("series: reversion needs f(0) = 0 and unit f'(0)");
        }
        const int n = order();
        // h = w / f(w), a series of order n-1 in w.
        series fw(std::vector<R>(c_.begin() + 1, c_.end()));
        series h = one(n - 1) / fw;
        series r(n);
        series hp = h; // h^k at step k
        r.c_[1] = hp.c_[0];
        for (int k = 2; k <= n; ++k) {
            hp = hp * h;
            r.c_[k] = hp.c_[k - 1].div_int(k);
        }
        return r;
    }

    /// Series exponential; requires zero constant term.
    series exp() const {
        if (!c_[0].is_zero()) {
            throw std::domain_error("series: exp needs zero constant term");
        }
        series r = one(order());
        for (int n = 1; n <= order(); ++n) {
            R acc = R();
            for (int k = 1; k <= n; ++k) {
                if (c_[k].is_zero() || r.c_[n - k].is_zero()) continue;
                acc = acc + (c_[k] * r.c_[n - k]) * R::from_int(k);
            }
            r.c_[n] = acc.div_int(n);
        }
        return r;
    }

    /// Series logarithm; requires constant term exactly one.
    series log() const {
        if (!c_[0].is_one()) {
            throw std::domain_error("series: log needs constant term 1");
        }
        series r(order());
        for (int n = 1; n <= order(); ++n) {
            R acc = c_[n] * R::from_int(n);
            for (int k = 1; k < n; ++k) {
                if (r.c_[k].is_zero() || c_[n - k].is_zero()) continue;
                acc = acc - (r.c_[k] * c_[n - k]) * R::from_int(k);
            }
            r.c_[n] = acc.div_int(n);
        }
        return r;
    }

    series derivative() const {
        if (order() == 0) return zero(0);
        series r(order() - 1);
        for (int n = 1; n <= order(); ++n) {
            r.c_[n - 1] = c_[n] * R::from_int(n);
        }
        return r;
    }

    /// n! * [z^n], the EGF coefficient.
    R egf_coeff(int n) const {
        if (n < 0 || n > order()) {
            throw std::out_of_range("series: EGF coefficient " + std::to_string(n) +
                                    " beyond truncation order " + std::to_string(order()));
        }
        return c_[static_cast<std::size_t>(n)] * R::from_mpz(factorial_z(static_cast<unsigned long>(n)));
    }

  private:
    static std::size_t checked_size(int order) {
        if (order < 0) {
            throw std::invalid_argument("series: negative order");
        }
        return static_cast<std::size_t>(order) + 1;
    }

    static R inv_factorial(int n) {
        R r = R::from_int(1);
        for (int i = 2; i <= n; ++i) {
            r = r.div_int(i);
        }
        return r;
    }

    std::vector<R> c_;
};

/// Coefficient-wise evaluation of a symbolic series at a rational (x, m) point.
inline series<rational> specialize_series(const series<mpoly>& s, const rational& x,
                                          const rational& m) {
    std::vector<rational> c;
    c.reserve(static_cast<std::size_t>(s.order()) + 1);
    for (int i = 0; i <= s.order(); ++i) {
        c.push_back(s[i].specialize(x, m));
    }
    return series<rational>(std::move(c));
}

} // namespace dowra
