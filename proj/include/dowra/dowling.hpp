#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cfrac.hpp"
#include "matrix.hpp"
#include "orthopoly.hpp"
#include "riordan.hpp"
#include "series.hpp"

namespace dowra {

/// Raised when a closed-form generating function is requested at a parameter
/// point where its denominator is not invertible; the definition sums remain
/// available at every point.
class degenerate_parameter_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// The five polynomial families:
///   dowling        D_m(n,x)      = sum_k W_m(n,k) x^k
///   tanny          F_m(n,x)      = sum_k k! W_m(n,k) x^k
///   eulerian       A_m(n,x)      = sum_k k! W_m(n,k) (x-1)^{n-k}
///   geometric      w_n(x,m)      = sum_k k! S(n,k) x^k m^{n-k}
///   geometric_mod  wt_n(x,m)     = sum_k (k+1)! S(n,k) x^k m^{n-k}
/// where W_m are Whitney numbers of the second kind and S Stirling numbers
/// of the second kind.
enum class family { dowling, tanny, eulerian, geometric, geometric_mod };

inline const char* family_name(family f) {
    switch (f) {
        case family::dowling: return "dowling";
        case family::tanny: return "tanny";
        case family::eulerian: return "eulerian";
        case family::geometric: return "geometric";
        case family::geometric_mod: return "geometric-mod";
    }
    throw std::logic_error("family_name: bad enum value");
}

inline family family_from_string(const std::string& s) {
    if (s == "dowling") return family::dowling;
    if (s == "tanny") return family::tanny;
    if (s == "eulerian") return family::eulerian;
    if (s == "geometric") return family::geometric;
    if (s == "geometric-mod" || s == "geometric_mod") return family::geometric_mod;
    throw std::invalid_argument("unknown family '" + s + "'");
}

// ---------------------------------------------------------------------------
// Stirling and Whitney numbers
// ---------------------------------------------------------------------------

inline void check_triangle_indices(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        throw std::invalid_argument("triangle indices need 0 <= k <= n, got n = " +
                                    std::to_string(n) + ", k = " + std::to_string(k));
    }
}

/// Stirling numbers of the second kind by the alternating binomial sum
/// S(n,k) = (1/k!) sum_j (-1)^{k-j} C(k,j) j^n.
inline mpz_class stirling_second(long n, long k) {
    check_triangle_indices(n, k);
    mpz_class acc = 0;
    for (long j = 0; j <= k; ++j) {
        const mpz_class term = binomial_z(static_cast<unsigned long>(k),
                                          static_cast<unsigned long>(j)) *
                               pow_z(mpz_class(j), static_cast<unsigned long>(n));
        if ((k - j) % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), acc.get_mpz_t(),
                 factorial_z(static_cast<unsigned long>(k)).get_mpz_t());
    return r;
}

/// Signed Stirling numbers of the first kind via the triangle recurrence
/// s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
inline mpz_class stirling_first_signed(long n, long k) {
    check_triangle_indices(n, k);
    std::vector<mpz_class> row{1}; // row 0
    for (long i = 1; i <= n; ++i) {
        std::vector<mpz_class> next(static_cast<std::size_t>(i) + 1);
        for (long j = 0; j <= i; ++j) {
            mpz_class v = 0;
            if (j >= 1) v += row[static_cast<std::size_t>(j - 1)];
            if (j < i) v -= (i - 1) * row[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(j)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

/// Whitney numbers of the second kind over any coefficient ring:
/// W_m(n,k) = sum_{i=k}^{n} C(n,i) m^{i-k} S(i,k).
template <coeff_ring R>
R whitney_second(const R& m, long n, long k) {
    check_triangle_indices(n, k);
    R acc = R();
    R mp = R::from_int(1); // m^{i-k}
    for (long i = k; i <= n; ++i) {
        acc = acc + mp * R::from_mpz(binomial_z(static_cast<unsigned long>(n),
                                                static_cast<unsigned long>(i)) *
                                     stirling_second(i, k));
        mp = mp * m;
    }
    return acc;
}

/// Whitney numbers of the first kind over any coefficient ring:
/// w_m(n,k) = sum_{i=0}^{n} (-1)^{i-k} C(i,k) m^{n-i} s(n,i).
template <coeff_ring R>
R whitney_first(const R& m, long n, long k) {
    check_triangle_indices(n, k);
    std::vector<R> mpow(static_cast<std::size_t>(n) + 1);
    mpow[0] = R::from_int(1);
    for (long i = 1; i <= n; ++i) {
        mpow[static_cast<std::size_t>(i)] = mpow[static_cast<std::size_t>(i - 1)] * m;
    }
    R acc = R();
    for (long i = k; i <= n; ++i) {
        R term = mpow[static_cast<std::size_t>(n - i)] *
                 R::from_mpz(binomial_z(static_cast<unsigned long>(i),
                                        static_cast<unsigned long>(k)) *
                             stirling_first_signed(n, i));
        acc = ((i - k) % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Numeric Whitney numbers of the second kind, computed by two distinct
/// formulas which must agree: the binomial-Stirling sum, and (for m != 0)
/// the alternating power sum (1/(m^k k!)) sum_i C(k,i) (-1)^{k-i} (mi+1)^n.
inline rational whitney_second_checked(const rational& m, long n, long k) {
    const rational by_sum = whitney_second<rational>(m, n, k);
    if (!m.is_zero()) {
        rational acc(0);
        for (long i = 0; i <= k; ++i) {
            rational base = m * rational(i) + rational(1);
            rational p(1);
            for (long e = 0; e < n; ++e) p *= base;
            rational term = rational(binomial_z(static_cast<unsigned long>(k),
                                                static_cast<unsigned long>(i))) *
                            p;
            acc = ((k - i) % 2 == 0) ? acc + term : acc - term;
        }
        rational mk(1);
        for (long e = 0; e < k; ++e) mk *= m;
        const rational by_powers =
            acc / (mk * rational(factorial_z(static_cast<unsigned long>(k))));
        if (!(by_powers == by_sum)) {
            throw std::logic_error("whitney_second: the two defining formulas disagree at n = " +
                                   std::to_string(n) + ", k = " + std::to_string(k));
        }
    }
    return by_sum;
}

// ---------------------------------------------------------------------------
// Families by definition sums (the primary oracle: no series, no matrices)
// ---------------------------------------------------------------------------

/// The definition sum of a family over any coefficient ring.
template <coeff_ring R>
R family_sum(family f, const R& x, const R& m, long n) {
    if (n < 0) {
        throw std::invalid_argument("family_sum: negative index");
    }
    std::vector<R> xpow(static_cast<std::size_t>(n) + 1), spow(xpow.size());
    xpow[0] = R::from_int(1);
    for (long i = 1; i <= n; ++i) {
        xpow[static_cast<std::size_t>(i)] = xpow[static_cast<std::size_t>(i - 1)] * x;
    }
    const R second = (f == family::eulerian) ? x - R::from_int(1) : m;
    spow[0] = R::from_int(1);
    for (long i = 1; i <= n; ++i) {
        spow[static_cast<std::size_t>(i)] = spow[static_cast<std::size_t>(i - 1)] * second;
    }
    R acc = R();
    for (long k = 0; k <= n; ++k) {
        R term;
        switch (f) {
            case family::dowling:
                term = whitney_second<R>(m, n, k) * xpow[static_cast<std::size_t>(k)];
                break;
            case family::tanny:
                term = whitney_second<R>(m, n, k) *
                       R::from_mpz(factorial_z(static_cast<unsigned long>(k))) *
                       xpow[static_cast<std::size_t>(k)];
                break;
            case family::eulerian:
                // sum_k k! W_m(n,k) (x-1)^{n-k}: the x-dependence sits entirely
                // in the (x-1) powers
                term = whitney_second<R>(m, n, k) *
                       R::from_mpz(factorial_z(static_cast<unsigned long>(k))) *
                       spow[static_cast<std::size_t>(n - k)];
                break;
            case family::geometric:
                term = R::from_mpz(stirling_second(n, k) *
                                   factorial_z(static_cast<unsigned long>(k))) *
                       spow[static_cast<std::size_t>(n - k)] *
                       xpow[static_cast<std::size_t>(k)];
                break;
            case family::geometric_mod:
                term = R::from_mpz(stirling_second(n, k) *
                                   factorial_z(static_cast<unsigned long>(k + 1))) *
                       spow[static_cast<std::size_t>(n - k)] *
                       xpow[static_cast<std::size_t>(k)];
                break;
        }
        acc = acc + term;
    }
    return acc;
}

/// Exact value of the n-th family polynomial at a rational point.
inline rational family_value(family f, const rational& m, const rational& x, long n) {
    return family_sum<rational>(f, x, m, n);
}

/// The n-th family polynomial, fully symbolic in (x, m).
inline mpoly family_poly(family f, long n) {
    return family_sum<mpoly>(f, mpoly::var_x(), mpoly::var_m(), n);
}

// ---------------------------------------------------------------------------
// Closed-form EGFs and moment arrays
// ---------------------------------------------------------------------------

template <coeff_ring R>
void check_family_regular(family f, const R& x, const R& m) {
    if (m.is_zero()) {
        throw degenerate_parameter_error(
            std::string("family ") + family_name(f) +
            ": closed form is degenerate at m = 0 (denominator m + x - x*e^{m z} loses its "
            "unit constant term); use the definition sum");
    }
    if (f == family::eulerian && (x - R::from_int(1)).is_zero()) {
        throw degenerate_parameter_error(
            "family eulerian: closed form is degenerate at x = 1 (denominator "
            "e^{m(x-1) z} - (m x - m + 1) vanishes identically); use the definition sum");
    }
}

/// The family EGF to truncation order N. Constructed from series whose
/// denominators have unit constant term at every admissible parameter point;
/// the parametrized building blocks (e^{mz}-1)/m and (1/m) log(1+mz) are
/// expanded coefficient-wise so m never appears in a denominator.
template <coeff_ring R>
series<R> family_egf(family f, const R& x, const R& m, int order) {
    check_family_regular(f, x, m);
    const series<R> one = series<R>::one(order);
    switch (f) {
        case family::dowling: {
            // e^{z + x (e^{mz}-1)/m}
            series<R> inner = series<R>::z(order) + series<R>::expm1_over(m, order).scaled(x);
            return inner.exp();
        }
        case family::tanny: {
            series<R> e = series<R>::expm1_over(m, order);
            return series<R>::exp_z(order) / (one - e.scaled(x));
        }
        case family::eulerian: {
            const R u = m * (x - R::from_int(1));
            series<R> e = series<R>::expm1_over(u, order);
            return series<R>::exp_linear(x - R::from_int(1), order) / (one - e);
        }
        case family::geometric: {
            series<R> e = series<R>::expm1_over(m, order);
            return one / (one - e.scaled(x));
        }
        case family::geometric_mod: {
            series<R> e = series<R>::expm1_over(m, order);
            series<R> base = one / (one - e.scaled(x));
            return base * base;
        }
    }
    throw std::logic_error("family_egf: bad enum value");
}

/// The moment array of the family: an exponential Riordan array whose column 0
/// is the family EGF and whose production matrix is tridiagonal.
template <coeff_ring R>
exp_riordan<R> family_moment_array(family f, const R& x, const R& m, int order) {
    check_family_regular(f, x, m);
    const series<R> one = series<R>::one(order);
    const series<R> g = family_egf<R>(f, x, m, order);
    switch (f) {
        case family::dowling:
            return exp_riordan<R>(g, series<R>::expm1_over(m, order));
        case family::eulerian: {
            const R u = m * (x - R::from_int(1));
            series<R> e = series<R>::expm1_over(u, order);
            return exp_riordan<R>(g, e / (one - e));
        }
        case family::tanny:
        case family::geometric:
        case family::geometric_mod: {
            series<R> e = series<R>::expm1_over(m, order);
            return exp_riordan<R>(g, e / (one - e.scaled(x)));
        }
    }
    throw std::logic_error("family_moment_array: bad enum value");
}

/// The coefficient array of the family's orthogonal polynomials, i.e. the
/// closed-form inverse of the moment array.
template <coeff_ring R>
exp_riordan<R> family_coefficient_array(family f, const R& x, const R& m, int order) {
    check_family_regular(f, x, m);
    const series<R> one = series<R>::one(order);
    const series<R> z = series<R>::z(order);
    switch (f) {
        case family::dowling: {
            // [ e^{-xz} (1+mz)^{-1/m}, (1/m) log(1+mz) ]
            series<R> g = series<R>::exp_linear(-x, order) * series<R>::pow1p_neg_recip(m, order);
            return exp_riordan<R>(std::move(g), series<R>::log1p_over(m, order));
        }
        case family::tanny: {
            // [ (1+xz)^{(1-m)/m} / (1+(m+x)z)^{1/m}, (1/m) log((1+(m+x)z)/(1+xz)) ]
            series<R> w = z / series<R>::one_plus_linear(x, order);
            series<R> fstar = series<R>::log1p_over(m, order).compose(w);
            return exp_riordan<R>((-fstar).exp() / series<R>::one_plus_linear(x, order), fstar);
        }
        case family::eulerian: {
            // [ (1+z)^{(1-m)/m} / (1+(1-m)z+mxz)^{1/m},
            //   (log(1+(1-m)z+mxz) - log(1+z)) / (m(x-1)) ]
            const R u = m * (x - R::from_int(1));
            series<R> w = z / series<R>::one_plus_linear(R::from_int(1), order);
            series<R> fstar = series<R>::log1p_over(u, order).compose(w);
            series<R> g = (-fstar.scaled(x - R::from_int(1))).exp() /
                          series<R>::one_plus_linear(R::from_int(1), order);
            return exp_riordan<R>(g, fstar);
        }
        case family::geometric: {
            // [ 1/(1+xz), (1/m) log((1+(m+x)z)/(1+xz)) ]
            series<R> w = z / series<R>::one_plus_linear(x, order);
            series<R> fstar = series<R>::log1p_over(m, order).compose(w);
            return exp_riordan<R>(one / series<R>::one_plus_linear(x, order), fstar);
        }
        case family::geometric_mod: {
            // [ 1/(1+xz)^2, (1/m) log((1+(m+x)z)/(1+xz)) ]
            series<R> lin = series<R>::one_plus_linear(x, order);
            series<R> w = z / lin;
            series<R> fstar = series<R>::log1p_over(m, order).compose(w);
            return exp_riordan<R>(one / (lin * lin), fstar);
        }
    }
    throw std::logic_error("family_coefficient_array: bad enum value");
}

/// Whitney array of the second kind [e^z, (e^{mz}-1)/m]; regular at m = 0,
/// where it degenerates to the binomial array [e^z, z].
template <coeff_ring R>
exp_riordan<R> whitney_second_array(const R& m, int order) {
    return exp_riordan<R>(series<R>::exp_z(order), series<R>::expm1_over(m, order));
}

/// Whitney array of the first kind [(1+mz)^{-1/m}, (1/m) log(1+mz)],
/// the inverse of the second-kind array.
template <coeff_ring R>
exp_riordan<R> whitney_first_array(const R& m, int order) {
    return exp_riordan<R>(series<R>::pow1p_neg_recip(m, order),
                          series<R>::log1p_over(m, order));
}

// ---------------------------------------------------------------------------
// Recurrences and continued fractions
// ---------------------------------------------------------------------------

/// The family's three-term recurrence / J-fraction coefficients:
///   dowling        alpha_n = 1 + x + n m            beta_n = n m x
///   tanny          alpha_n = (2n+1) x + n m + 1     beta_n = n^2 x (x+m)
///   eulerian       alpha_n = x + n (m(x-1) + 2)     beta_n = n^2 (m(x-1) + 1)
///   geometric      alpha_n = (2n+1) x + n m         beta_n = n^2 x (x+m)
///   geometric_mod  alpha_n = (2n+2) x + n m         beta_n = n(n+1) x (x+m)
/// These generators are asserted against the computed production matrices in
/// the test suite rather than trusted.
template <coeff_ring R>
tt_recurrence<R> family_recurrence(family f, const R& x, const R& m, int depth) {
    if (depth < 1) {
        throw std::invalid_argument("family_recurrence: depth must be positive");
    }
    std::vector<R> alpha, beta;
    const R one = R::from_int(1);
    for (int n = 0; n < depth; ++n) {
        const R rn = R::from_int(n);
        R a, b;
        switch (f) {
            case family::dowling:
                a = one + x + rn * m;
                b = rn * m * x;
                break;
            case family::tanny:
                a = R::from_int(2 * n + 1) * x + rn * m + one;
                b = rn * rn * x * (x + m);
                break;
            case family::eulerian: {
                const R blin = m * (x - one) + one;
                a = x + rn * (blin + one);
                b = rn * rn * blin;
                break;
            }
            case family::geometric:
                a = R::from_int(2 * n + 1) * x + rn * m;
                b = rn * rn * x * (x + m);
                break;
            case family::geometric_mod:
                a = R::from_int(2 * n + 2) * x + rn * m;
                b = rn * R::from_int(n + 1) * x * (x + m);
                break;
        }
        alpha.push_back(a);
        if (n >= 1) beta.push_back(b);
    }
    return tt_recurrence<R>(std::move(alpha), std::move(beta));
}

/// The S-fraction coefficient list; only the two geometric families have one:
///   geometric      a = x, (x+m), 2x, 2(x+m), 3x, ...
///   geometric_mod  a = 2x, (x+m), 3x, 2(x+m), 4x, ...
template <coeff_ring R>
s_fraction<R> family_sfraction(family f, const R& x, const R& m, int depth) {
    if (f != family::geometric && f != family::geometric_mod) {
        throw std::invalid_argument(std::string("family ") + family_name(f) +
                                    " has no S-fraction form");
    }
    const int shift = (f == family::geometric_mod) ? 1 : 0;
    s_fraction<R> s;
    for (int k = 1; k <= depth; ++k) {
        const int j = (k + 1) / 2;
        if (k % 2 == 1) {
            s.a.push_back(R::from_int(j + shift) * x);
        } else {
            s.a.push_back(R::from_int(j) * (x + m));
        }
    }
    return s;
}

/// b_n = sum_k C(n,k) a_k.
template <coeff_ring R>
std::vector<R> binomial_transform(const std::vector<R>& seq) {
    std::vector<R> out(seq.size());
    for (std::size_t n = 0; n < seq.size(); ++n) {
        R acc = R();
        for (std::size_t k = 0; k <= n; ++k) {
            acc = acc + R::from_mpz(binomial_z(n, k)) * seq[k];
        }
        out[n] = acc;
    }
    return out;
}

} // namespace dowra
