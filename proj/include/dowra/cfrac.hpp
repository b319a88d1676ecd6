#pragma once

#include <stdexcept>
#include <vector>

#include "orthopoly.hpp"
#include "series.hpp"

namespace dowra {

/// A Jacobi continued fraction 1/(1 - alpha_0 z - beta_1 z^2/(1 - alpha_1 z - ...))
/// carries exactly the data of a three-term recurrence.
template <coeff_ring R>
using j_fraction = tt_recurrence<R>;

/// A Stieltjes continued fraction 1/(1 - a_1 z/(1 - a_2 z/(1 - ...))).
template <coeff_ring R>
struct s_fraction {
    std::vector<R> a; // a_1 .. a_d

    int depth() const { return static_cast<int>(a.size()); }
    const R& a_at(int k) const {
        if (k < 1) {
            throw std::out_of_range("s_fraction: coefficient index starts at 1");
        }
        return a.at(static_cast<std::size_t>(k - 1));
    }
};

/// OGF coefficients of a J-fraction via the convergent recurrence
/// X_k = (1 - alpha_{k-1} z) X_{k-1} - beta_{k-1} z^2 X_{k-2} on truncated
/// numerator/denominator series, finished by one series division. This is an
/// algorithm independent of the Motzkin-path moment computation.
template <coeff_ring R>
std::vector<R> jfraction_series(const j_fraction<R>& j, int count) {
    if (count < 0 || count > 2 * j.depth()) {
        throw std::invalid_argument("jfraction_series: count exceeds 2 * depth");
    }
    if (count == 0) return {};
    const int ord = count - 1;
    const int levels = (count + 1) / 2; // convergent k is exact through z^{2k-1}
    series<R> num_prev = series<R>::zero(ord), den_prev = series<R>::one(ord);
    series<R> num = series<R>::one(ord);
    series<R> den = series<R>::one_plus_linear(-j.alpha_at(0), ord);
    for (int k = 2; k <= levels; ++k) {
        series<R> lin = series<R>::one_plus_linear(-j.alpha_at(k - 1), ord);
        series<R> quad(ord);
        if (ord >= 2) quad.coeff(2) = -j.beta_at(k - 1);
        series<R> num_next = lin * num + quad * num_prev;
        series<R> den_next = lin * den + quad * den_prev;
        num_prev = std::move(num);
        den_prev = std::move(den);
        num = std::move(num_next);
        den = std::move(den_next);
    }
    const series<R> ogf = num / den;
    return std::vector<R>(ogf.coeffs().begin(), ogf.coeffs().begin() + count);
}

/// OGF coefficients of an S-fraction via convergents X_k = X_{k-1} - a_k z X_{k-2}.
template <coeff_ring R>
std::vector<R> sfraction_series(const s_fraction<R>& s, int count) {
    if (count < 0 || count > s.depth() + 1) {
        throw std::invalid_argument("sfraction_series: count exceeds depth");
    }
    if (count == 0) return {};
    const int ord = count - 1;
    const int levels = std::min(s.depth(), count);
    if (levels == 0) {
        std::vector<R> out(static_cast<std::size_t>(count));
        out[0] = R::from_int(1);
        return out;
    }
    series<R> num_prev = series<R>::one(ord), den_prev = series<R>::one(ord);
    series<R> num = series<R>::one(ord);
    series<R> den = series<R>::one_plus_linear(-s.a_at(1), ord);
    for (int k = 2; k <= levels; ++k) {
        series<R> az(ord);
        if (ord >= 1) az.coeff(1) = -s.a_at(k);
        series<R> num_next = num + az * num_prev;
        series<R> den_next = den + az * den_prev;
        num_prev = std::move(num);
        den_prev = std::move(den);
        num = std::move(num_next);
        den = std::move(den_next);
    }
    const series<R> ogf = num / den;
    return std::vector<R>(ogf.coeffs().begin(), ogf.coeffs().begin() + count);
}

/// Contraction of an S-fraction to the J-fraction with the same expansion:
/// alpha_0 = a_1, alpha_n = a_{2n} + a_{2n+1}, beta_n = a_{2n-1} a_{2n}.
template <coeff_ring R>
j_fraction<R> contract(const s_fraction<R>& s) {
    const int d = s.depth();
    if (d < 2) {
        throw std::invalid_argument("contract: need S-fraction depth >= 2");
    }
    const int out_depth = (d + 1) / 2;
    std::vector<R> alpha, beta;
    alpha.push_back(s.a_at(1));
    for (int n = 1; n < out_depth; ++n) {
        alpha.push_back(s.a_at(2 * n) + s.a_at(2 * n + 1));
        beta.push_back(s.a_at(2 * n - 1) * s.a_at(2 * n));
    }
    return j_fraction<R>(std::move(alpha), std::move(beta));
}

} // namespace dowra
