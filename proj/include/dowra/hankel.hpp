#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dowling.hpp"
#include "matrix.hpp"
#include "orthopoly.hpp"

namespace dowra {

/// The (n+1)x(n+1) Hankel matrix (seq_{i+j}) of a sequence prefix.
template <coeff_ring R>
dense_matrix<R> hankel_matrix(const std::vector<R>& seq, int n) {
    if (n < 0 || seq.size() < static_cast<std::size_t>(2 * n + 1)) {
        throw std::invalid_argument("hankel_matrix: need at least " + std::to_string(2 * n + 1) +
                                    " sequence values, have " + std::to_string(seq.size()));
    }
    dense_matrix<R> m(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            m(i, j) = seq[static_cast<std::size_t>(i + j)];
        }
    }
    return m;
}

/// Exact determinant by fraction-free Bareiss elimination; every division is
/// an exact_div in the coefficient ring, so symbolic matrices stay polynomial
/// throughout. The empty 0x0 determinant is 1.
template <coeff_ring R>
R bareiss_det(dense_matrix<R> m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("bareiss_det: matrix must be square");
    }
    const int n = m.rows();
    if (n == 0) return R::from_int(1);
    bool negate = false;
    R prev = R::from_int(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!m(r, k).is_zero()) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return R(); // singular
            for (int c = 0; c < n; ++c) {
                std::swap(m(k, c), m(pivot, c));
            }
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            }
            m(i, k) = R();
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// The Hankel transform h_0..h_N of a sequence: h_n = det (seq_{i+j})_{0<=i,j<=n}.
template <coeff_ring R>
std::vector<R> hankel_transform(const std::vector<R>& seq, int N) {
    std::vector<R> out;
    for (int n = 0; n <= N; ++n) {
        out.push_back(bareiss_det(hankel_matrix(seq, n)));
    }
    return out;
}

/// Hankel transform of a J-fraction's moment sequence by the product formula
/// h_n = prod_{k=1}^{n} beta_k^{n+1-k}.
template <coeff_ring R>
R jfraction_hankel(const j_fraction<R>& j, int n) {
    if (n < 0 || n >= j.depth()) {
        throw std::invalid_argument("jfraction_hankel: index needs beta_1..beta_n, depth " +
                                    std::to_string(j.depth()) + " too small for n = " +
                                    std::to_string(n));
    }
    R acc = R::from_int(1);
    for (int k = 1; k <= n; ++k) {
        acc = acc * ring_pow(j.beta_at(k), static_cast<unsigned>(n + 1 - k));
    }
    return acc;
}

/// The closed-form Hankel transform of each family, symbolic in (x, m):
///   dowling        (m x)^{C(n+1,2)}            prod_{k=0}^n k!
///   tanny          (x(x+m))^{C(n+1,2)}         prod_{k=0}^n k!^2
///   eulerian       (m(x-1)+1)^{C(n+1,2)}       prod_{k=0}^n k!^2
///   geometric      (x(x+m))^{C(n+1,2)}         prod_{k=0}^n k!^2
///   geometric_mod  (x(x+m))^{C(n+1,2)} (n+1)!  prod_{k=0}^n k!^2
inline mpoly closed_form_hankel(family f, int n) {
    if (n < 0) {
        throw std::invalid_argument("closed_form_hankel: negative index");
    }
    const mpoly x = mpoly::var_x();
    const mpoly m = mpoly::var_m();
    mpoly base;
    bool squared_factorials = true;
    switch (f) {
        case family::dowling:
            base = m * x;
            squared_factorials = false;
            break;
        case family::tanny:
        case family::geometric:
        case family::geometric_mod:
            base = x * (x + m);
            break;
        case family::eulerian:
            base = m * (x - mpoly(1)) + mpoly(1);
            break;
    }
    const unsigned exponent = static_cast<unsigned>(n) * (static_cast<unsigned>(n) + 1) / 2;
    mpz_class fact_prod = 1;
    for (int k = 0; k <= n; ++k) {
        mpz_class kf = factorial_z(static_cast<unsigned long>(k));
        fact_prod *= squared_factorials ? kf * kf : kf;
    }
    if (f == family::geometric_mod) {
        fact_prod *= factorial_z(static_cast<unsigned long>(n) + 1);
    }
    return base.pow(exponent).scaled(rational(fact_prod));
}

} // namespace dowra
