#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "ring.hpp"

namespace dowra {

/// A three-term recurrence P_n = (z - alpha_{n-1}) P_{n-1} - beta_{n-1} P_{n-2},
/// stored as the per-n diagonals of a tridiagonal production matrix:
/// alpha[n] = P_{n,n} and beta(n) = P_{n,n-1}. The same data read as a
/// J-fraction generates the moment sequence of the family.
template <coeff_ring R>
struct tt_recurrence {
    std::vector<R> alpha; // alpha_0 .. alpha_{d-1}
    std::vector<R> beta;  // beta_1 .. beta_{d-1}

    tt_recurrence() = default;
    tt_recurrence(std::vector<R> a, std::vector<R> b) : alpha(std::move(a)), beta(std::move(b)) {
        if (!alpha.empty() && beta.size() + 1 != alpha.size()) {
            throw std::invalid_argument("tt_recurrence: need one fewer beta than alpha");
        }
    }

    int depth() const { return static_cast<int>(alpha.size()); }

    const R& alpha_at(int n) const { return alpha.at(static_cast<std::size_t>(n)); }
    /// beta_n for n >= 1.
    const R& beta_at(int n) const {
        if (n < 1) {
            throw std::out_of_range("tt_recurrence: beta index starts at 1");
        }
        return beta.at(static_cast<std::size_t>(n - 1));
    }
};

/// Univariate polynomial in the spectral variable, as an ascending
/// coefficient list.
template <coeff_ring R>
using spectral_poly = std::vector<R>;

template <coeff_ring R>
spectral_poly<R> spectral_mul(const spectral_poly<R>& p, const spectral_poly<R>& q) {
    if (p.empty() || q.empty()) return {};
    spectral_poly<R> r(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            r[i + j] = r[i + j] + p[i] * q[j];
        }
    }
    return r;
}

/// The monic orthogonal polynomials P_0..P_n of the recurrence.
template <coeff_ring R>
std::vector<spectral_poly<R>> ortho_polys(const tt_recurrence<R>& rec, int n) {
    if (n < 0 || n > rec.depth()) {
        throw std::invalid_argument("ortho_polys: degree beyond recurrence depth");
    }
    std::vector<spectral_poly<R>> out;
    out.push_back({R::from_int(1)});
    if (n == 0) return out;
    out.push_back({-rec.alpha_at(0), R::from_int(1)});
    for (int k = 2; k <= n; ++k) {
        const auto& p1 = out[static_cast<std::size_t>(k - 1)];
        const auto& p2 = out[static_cast<std::size_t>(k - 2)];
        spectral_poly<R> p(static_cast<std::size_t>(k) + 1);
        for (std::size_t i = 0; i < p1.size(); ++i) {
            p[i + 1] = p[i + 1] + p1[i];                      // z * P_{k-1}
            p[i] = p[i] - rec.alpha_at(k - 1) * p1[i];        // -alpha_{k-1} P_{k-1}
        }
        for (std::size_t i = 0; i < p2.size(); ++i) {
            p[i] = p[i] - rec.beta_at(k - 1) * p2[i];         // -beta_{k-1} P_{k-2}
        }
        out.push_back(std::move(p));
    }
    return out;
}

/// Moments by weighted Motzkin paths: mu_n sums paths of length n from height
/// 0 back to 0, with level steps at height h weighted alpha_h and down steps
/// from height h weighted beta_h. Dynamic programming over heights, O(n^2)
/// ring operations; entirely independent of the Riordan machinery.
template <coeff_ring R>
std::vector<R> moments_from_recurrence(const tt_recurrence<R>& rec, int count) {
    if (count < 0 || count > 2 * rec.depth()) {
        throw std::invalid_argument("moments_from_recurrence: count exceeds 2 * depth");
    }
    std::vector<R> out;
    if (count == 0) return out;
    const int hmax = (count - 1) / 2; // a returning path of length < count stays below this
    std::vector<R> cur(static_cast<std::size_t>(hmax) + 1), next(cur.size());
    cur[0] = R::from_int(1);
    out.push_back(cur[0]);
    for (int t = 1; t < count; ++t) {
        for (int h = 0; h <= hmax; ++h) {
            R acc = cur[static_cast<std::size_t>(h)] * rec.alpha_at(h);
            if (h > 0) {
                acc = acc + cur[static_cast<std::size_t>(h - 1)];
            }
            if (h < hmax) {
                acc = acc + cur[static_cast<std::size_t>(h + 1)] * rec.beta_at(h + 1);
            }
            next[static_cast<std::size_t>(h)] = acc;
        }
        std::swap(cur, next);
        out.push_back(cur[0]);
    }
    return out;
}

/// The (N+1)x(N+1) coefficient array of the orthogonal polynomials: row n
/// holds the coefficients of P_n. Whenever the recurrence came from a moment
/// array's production matrix, this equals the inverse of that moment matrix.
template <coeff_ring R>
dense_matrix<R> coefficient_array(const tt_recurrence<R>& rec, int N) {
    const auto polys = ortho_polys(rec, N);
    dense_matrix<R> m(N + 1, N + 1);
    for (int n = 0; n <= N; ++n) {
        const auto& p = polys[static_cast<std::size_t>(n)];
        for (std::size_t k = 0; k < p.size(); ++k) {
            m(n, static_cast<int>(k)) = p[k];
        }
    }
    return m;
}

/// The moment functional L(p*q) = sum_i [z^i](p*q) * mu_i.
template <coeff_ring R>
R moment_functional(const tt_recurrence<R>& rec, const spectral_poly<R>& p,
                    const spectral_poly<R>& q) {
    const auto prod = spectral_mul(p, q);
    const int needed = static_cast<int>(prod.size());
    if (needed > 2 * rec.depth()) {
        throw std::invalid_argument("moment_functional: insufficient moments for degree " +
                                    std::to_string(needed - 1));
    }
    const auto mu = moments_from_recurrence(rec, needed);
    R acc = R();
    for (std::size_t i = 0; i < prod.size(); ++i) {
        acc = acc + prod[i] * mu[i];
    }
    return acc;
}

} // namespace dowra
