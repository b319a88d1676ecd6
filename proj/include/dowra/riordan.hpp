#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "matrix.hpp"
#include "orthopoly.hpp"
#include "series.hpp"

namespace dowra {

/// Exponential Riordan array [g, f]: the lower-triangular matrix with entries
/// (n!/k!) [z^n] g(z) f(z)^k. Requires a unit g(0), f(0) = 0 and a unit f'(0);
/// the moment arrays built elsewhere are always normalized to g(0) = f'(0) = 1.
template <coeff_ring R>
struct exp_riordan {
    series<R> g;
    series<R> f;

    exp_riordan(series<R> g_, series<R> f_) : g(std::move(g_)), f(std::move(f_)) {
        if (!g[0].is_unit()) {
            throw std::invalid_argument("exp_riordan: g(0) must be a unit, got " +
                                        g[0].to_string());
        }
        if (!f[0].is_zero() || f.order() < 1 || !f[1].is_unit()) {
            throw std::invalid_argument("exp_riordan: f needs f(0) = 0 and unit f'(0)");
        }
    }

    int order() const { return std::min(g.order(), f.order()); }

    static exp_riordan identity(int order) {
        return exp_riordan(series<R>::one(order), series<R>::z(order));
    }
};

/// Dense (N+1)x(N+1) realization with entries (n!/k!) [z^n] g f^k.
template <coeff_ring R>
dense_matrix<R> build_matrix(const exp_riordan<R>& a) {
    const int n = a.order();
    dense_matrix<R> m(n + 1, n + 1);
    series<R> col = a.g; // g * f^k as k advances
    for (int k = 0; k <= n; ++k) {
        for (int row = k; row <= n; ++row) {
            m(row, k) = col[row] * R::from_mpz(falling_factorial_ratio(
                                       static_cast<unsigned long>(row),
                                       static_cast<unsigned long>(k)));
        }
        if (k < n) col = col * a.f;
    }
    return m;
}

/// Group law: [g, f] . [h, l] = [g * (h o f), l o f].
template <coeff_ring R>
exp_riordan<R> product(const exp_riordan<R>& a, const exp_riordan<R>& b) {
    return exp_riordan<R>(a.g * b.g.compose(a.f), b.f.compose(a.f));
}

/// Group inverse [1/(g o fbar), fbar].
template <coeff_ring R>
exp_riordan<R> inverse(const exp_riordan<R>& a) {
    const series<R> fbar = a.f.revert();
    return exp_riordan<R>(series<R>::one(a.order()) / a.g.compose(fbar), fbar);
}

/// Fundamental theorem action on an EGF: [g, f] . a = g * (a o f).
template <coeff_ring R>
series<R> apply_egf(const exp_riordan<R>& arr, const series<R>& a) {
    return arr.g * a.compose(arr.f);
}

/// The pair (Z, A) with Z = g'(fbar)/g(fbar) and A = f'(fbar), both of order
/// one less than the array's truncation order.
template <coeff_ring R>
std::pair<series<R>, series<R>> az_series(const exp_riordan<R>& a) {
    const series<R> fbar = a.f.revert();
    series<R> z = (a.g.derivative() / a.g).compose(fbar);
    series<R> aa = a.f.derivative().compose(fbar);
    return {std::move(z), std::move(aa)};
}

enum class production_method { inverse_shift, az };

/// The production matrix P = M^{-1} Mbar (Mbar = M with its top row removed),
/// computed either literally from the truncated matrix realization or from the
/// bivariate generating function e^{zy} (Z(z) + y A(z)). Both routes fill the
/// same exact N x N block for an array of truncation order N.
template <coeff_ring R>
dense_matrix<R> production_matrix(const exp_riordan<R>& a, production_method method) {
    const int n = a.order();
    dense_matrix<R> p(n, n);
    if (method == production_method::inverse_shift) {
        const dense_matrix<R> m = build_matrix(a);
        const dense_matrix<R> minv = m.inverse_lower_triangular();
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                R acc = R();
                for (int j = k > 0 ? k - 1 : 0; j <= i; ++j) {
                    if (minv(i, j).is_zero() || m(j + 1, k).is_zero()) continue;
                    acc = acc + minv(i, j) * m(j + 1, k);
                }
                p(i, k) = acc;
            }
        }
    } else {
        const auto [zs, as] = az_series(a);
        // P_{n,k} = (n!/k!) [z^{n-k}] Z + (n!/(k-1)!) [z^{n-k+1}] A
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                R acc = R();
                if (k <= i) {
                    acc = acc + zs[i - k] * R::from_mpz(falling_factorial_ratio(
                                                static_cast<unsigned long>(i),
                                                static_cast<unsigned long>(k)));
                }
                if (k >= 1 && k <= i + 1) {
                    acc = acc + as[i - k + 1] * R::from_mpz(falling_factorial_ratio(
                                                    static_cast<unsigned long>(i),
                                                    static_cast<unsigned long>(k - 1)));
                }
                p(i, k) = acc;
            }
        }
    }
    return p;
}

/// Reads alpha_n = P_{n,n}, beta_n = P_{n,n-1} off a tridiagonal production
/// matrix with unit superdiagonal. A non-tridiagonal input signals that the
/// array is not the moment matrix of an orthogonal family, and is reported
/// with the first offending entry.
template <coeff_ring R>
tt_recurrence<R> extract_tridiagonal(const dense_matrix<R>& p) {
    if (p.rows() != p.cols()) {
        throw std::invalid_argument("extract_tridiagonal: matrix must be square");
    }
    const int n = p.rows();
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < i - 1; ++k) {
            if (!p(i, k).is_zero()) {
                throw std::domain_error("extract_tridiagonal: entry (" + std::to_string(i) +
                                        "," + std::to_string(k) + ") = " + p(i, k).to_string() +
                                        " below the subdiagonal is nonzero");
            }
        }
        if (i + 1 < n && !p(i, i + 1).is_one()) {
            throw std::domain_error("extract_tridiagonal: superdiagonal entry (" +
                                    std::to_string(i) + "," + std::to_string(i + 1) + ") = " +
                                    p(i, i + 1).to_string() + " is not 1");
        }
    }
    std::vector<R> alpha, beta;
    for (int i = 0; i < n; ++i) {
        alpha.push_back(p(i, i));
        if (i >= 1) beta.push_back(p(i, i - 1));
    }
    return tt_recurrence<R>(std::move(alpha), std::move(beta));
}

} // namespace dowra
