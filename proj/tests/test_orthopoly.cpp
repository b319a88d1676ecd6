#include <catch2/catch.hpp>

#include <dowra/cfrac.hpp>
#include <dowra/dowling.hpp>
#include <dowra/orthopoly.hpp>
#include <dowra/riordan.hpp>

#include "test_util.hpp"

using namespace dowra;

namespace {

const mpoly X = mpoly::var_x();
const mpoly M = mpoly::var_m();

template <coeff_ring R>
tt_recurrence<R> constant_recurrence(const R& a, const R& b, int depth) {
    std::vector<R> alpha(static_cast<std::size_t>(depth), a);
    std::vector<R> beta(static_cast<std::size_t>(depth) - 1, b);
    return tt_recurrence<R>(std::move(alpha), std::move(beta));
}

} // namespace

TEST_CASE("orthogonal polynomials from a recurrence") {
    const auto zero_rec = constant_recurrence<rational>(rational(0), rational(0), 6);
    const auto pure = ortho_polys(zero_rec, 5);
    for (int n = 0; n <= 5; ++n) {
        const auto& p = pure[static_cast<std::size_t>(n)];
        REQUIRE(static_cast<int>(p.size()) == n + 1);
        CHECK(p.back() == rational(1));
        for (int k = 0; k < n; ++k) {
            CHECK(p[static_cast<std::size_t>(k)] == rational(0));
        }
    }

    // Dowling: P_1 = z - (1+x); Eulerian: P_1 = z - x
    const auto dow = family_recurrence<mpoly>(family::dowling, X, M, 4);
    const auto pd = ortho_polys(dow, 2);
    CHECK(pd[1] == spectral_poly<mpoly>{-(mpoly(1) + X), mpoly(1)});

    const auto eul = family_recurrence<mpoly>(family::eulerian, X, M, 4);
    CHECK(ortho_polys(eul, 1)[1] == spectral_poly<mpoly>{-X, mpoly(1)});

    // P_2 = (z - (1+x))(z - (1+x+m)) - m x, expanded by hand
    const spectral_poly<mpoly> lin1{-(mpoly(1) + X), mpoly(1)};
    const spectral_poly<mpoly> lin2{-(mpoly(1) + X + M), mpoly(1)};
    auto expect = spectral_mul(lin1, lin2);
    expect[0] = expect[0] - M * X;
    CHECK(pd[2] == expect);
}

TEST_CASE("moments by Motzkin-path counting") {
    const auto ones = constant_recurrence<rational>(rational(1), rational(0), 6);
    for (const auto& mu : moments_from_recurrence(ones, 10)) {
        CHECK(mu == rational(1));
    }

    // Dowling at x = m = 1: shifted Bell numbers
    const auto dow = family_recurrence<rational>(family::dowling, rational(1), rational(1), 6);
    const auto mu = moments_from_recurrence(dow, 6);
    CHECK(mu == std::vector<rational>{rational(1), rational(2), rational(5), rational(15),
                                      rational(52), rational(203)});

    // Eulerian at x = 2, m = -2
    const auto eul = family_recurrence<rational>(family::eulerian, rational(2), rational(-2), 6);
    const auto mue = moments_from_recurrence(eul, 6);
    CHECK(mue == std::vector<rational>{rational(1), rational(2), rational(3), rational(2),
                                       rational(-3), rational(2)});

    CHECK_THROWS_AS(moments_from_recurrence(dow, 13), std::invalid_argument);
}

TEST_CASE("coefficient array of the recurrence") {
    const auto zero_rec = constant_recurrence<rational>(rational(0), rational(0), 5);
    CHECK(coefficient_array(zero_rec, 4) == dense_matrix<rational>::identity(5));

    // For each family the coefficient array of the production-matrix recurrence
    // equals the matrix of the inverse moment array.
    for (family f : {family::dowling, family::tanny, family::eulerian, family::geometric,
                     family::geometric_mod}) {
        const auto arr = family_moment_array<mpoly>(f, X, M, 8);
        const auto rec = extract_tridiagonal(production_matrix(arr, production_method::inverse_shift));
        const auto from_rec = coefficient_array(rec, 8);
        const auto from_inverse = build_matrix(inverse(arr));
        CHECK(from_rec == from_inverse);
        // and the closed-form coefficient array agrees
        CHECK(from_inverse == build_matrix(family_coefficient_array<mpoly>(f, X, M, 8)));
    }
}

TEST_CASE("three-way moment equality, symbolically") {
    for (family f : {family::dowling, family::tanny, family::eulerian, family::geometric,
                     family::geometric_mod}) {
        const auto arr = family_moment_array<mpoly>(f, X, M, 12);
        const auto m0 = build_matrix(arr);
        const auto rec = family_recurrence<mpoly>(f, X, M, 7);
        const auto mu = moments_from_recurrence(rec, 13);
        const auto ogf = jfraction_series(rec, 13);
        for (int n = 0; n <= 12; ++n) {
            CHECK(m0(n, 0) == mu[static_cast<std::size_t>(n)]);
            CHECK(mu[static_cast<std::size_t>(n)] == ogf[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("moment functional and orthogonality") {
    const auto dow_sym = family_recurrence<mpoly>(family::dowling, X, M, 4);
    const auto polys_sym = ortho_polys(dow_sym, 2);
    CHECK(moment_functional(dow_sym, polys_sym[1], polys_sym[0]).is_zero());
    CHECK(moment_functional(dow_sym, polys_sym[0], polys_sym[0]) == mpoly(1));

    const auto dow = family_recurrence<rational>(family::dowling, rational(1), rational(1), 4);
    const auto polys = ortho_polys(dow, 2);
    // L(P_2^2) = beta_1 beta_2 = 1 * 2
    CHECK(moment_functional(dow, polys[2], polys[2]) == rational(2));

    CHECK_THROWS_AS(moment_functional(dow, ortho_polys(dow, 4)[4], ortho_polys(dow, 4)[4]),
                    std::invalid_argument);
}

TEST_CASE("orthogonality at random rational points") {
    test::random_rationals rnd(555);
    for (family f : {family::dowling, family::tanny, family::eulerian, family::geometric,
                     family::geometric_mod}) {
        for (int trial = 0; trial < 2; ++trial) {
            const rational xv = rnd.next(), mv = rnd.next();
            const auto rec = family_recurrence<rational>(f, xv, mv, 7);
            const auto polys = ortho_polys(rec, 6);
            for (int i = 0; i <= 6; ++i) {
                for (int j = 0; j < i; ++j) {
                    CHECK(moment_functional(rec, polys[static_cast<std::size_t>(i)],
                                            polys[static_cast<std::size_t>(j)])
                              .is_zero());
                }
                rational norm(1);
                for (int k = 1; k <= i; ++k) norm *= rec.beta_at(k);
                CHECK(moment_functional(rec, polys[static_cast<std::size_t>(i)],
                                        polys[static_cast<std::size_t>(i)]) == norm);
            }
        }
    }
}
