#include <catch2/catch.hpp>

#include <dowra/hankel.hpp>

#include "test_util.hpp"

using namespace dowra;

namespace {

const mpoly X = mpoly::var_x();
const mpoly M = mpoly::var_m();

std::vector<rational> ints(std::initializer_list<long> xs) {
    std::vector<rational> out;
    for (long v : xs) out.emplace_back(v);
    return out;
}

// Cofactor expansion along the first row: the test oracle for determinants.
template <coeff_ring R>
R cofactor_det(const dense_matrix<R>& m) {
    const int n = m.rows();
    if (n == 0) return R::from_int(1);
    if (n == 1) return m(0, 0);
    R acc = R();
    for (int j = 0; j < n; ++j) {
        dense_matrix<R> minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        const R term = m(0, j) * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<rational> family_values(family f, const rational& m, const rational& x, int count) {
    std::vector<rational> out;
    for (int n = 0; n < count; ++n) out.push_back(family_value(f, m, x, n));
    return out;
}

} // namespace

TEST_CASE("hankel matrix construction") {
    const auto h1 = hankel_matrix(ints({1, 2, 6}), 1);
    CHECK(h1(0, 0) == rational(1));
    CHECK(h1(0, 1) == rational(2));
    CHECK(h1(1, 0) == rational(2));
    CHECK(h1(1, 1) == rational(6));

    const auto h2 = hankel_matrix(ints({1, 2, 6, 26, 150}), 2);
    CHECK(h2(2, 2) == rational(150));
    CHECK(h2(1, 2) == rational(26));

    const auto h0 = hankel_matrix(ints({1}), 0);
    CHECK(h0(0, 0) == rational(1));

    CHECK_THROWS_AS(hankel_matrix(ints({1, 2}), 1), std::invalid_argument);
}

TEST_CASE("bareiss determinants") {
    CHECK(bareiss_det(hankel_matrix(ints({1, 2, 6}), 1)) == rational(2));
    CHECK(bareiss_det(hankel_matrix(ints({1, 2, 6, 26, 150}), 2)) == rational(32));
    CHECK(bareiss_det(dense_matrix<rational>::identity(4)) == rational(1));

    // zero pivot forces a row swap
    dense_matrix<rational> swapped(2, 2);
    swapped(0, 1) = rational(1);
    swapped(1, 0) = rational(1);
    CHECK(bareiss_det(swapped) == rational(-1));

    dense_matrix<rational> singular(2, 2);
    singular(0, 1) = rational(3);
    singular(1, 1) = rational(5);
    CHECK(bareiss_det(singular) == rational(0));
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
    test::random_rationals rnd(31415);
    for (int i = 0; i < 120; ++i) {
        const int n = static_cast<int>(rnd.next_int(1, 4));
        dense_matrix<rational> m(n, n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                m(r, c) = rnd.next();
            }
        }
        CHECK(bareiss_det(m) == cofactor_det(m));
    }
}

TEST_CASE("bareiss stays polynomial on symbolic Hankel matrices") {
    // symbolic Dowling values, 3x3; the closed form is (mx)^3 * 0!1!2!
    std::vector<mpoly> seq;
    for (int n = 0; n < 5; ++n) seq.push_back(family_poly(family::dowling, n));
    const auto det = bareiss_det(hankel_matrix(seq, 2));
    CHECK(det == closed_form_hankel(family::dowling, 2));
    CHECK(det == cofactor_det(hankel_matrix(seq, 2)));
}

TEST_CASE("hankel transform examples") {
    // Dowling at x = m = 1: superfactorials
    CHECK(hankel_transform(family_values(family::dowling, rational(1), rational(1), 9), 4) ==
          ints({1, 1, 2, 12, 288}));
    // Tanny at x = m = 1
    CHECK(hankel_transform(family_values(family::tanny, rational(1), rational(1), 5), 2) ==
          ints({1, 2, 32}));
    // Eulerian at m = 1, x = 3
    CHECK(hankel_transform(family_values(family::eulerian, rational(1), rational(3), 5), 2) ==
          ints({1, 3, 108}));
}

TEST_CASE("J-fraction product formula for Hankel determinants") {
    // Dowling symbolic at n = 3: (mx)^6 * 12
    const auto dow = family_recurrence<mpoly>(family::dowling, X, M, 5);
    CHECK(jfraction_hankel(dow, 3) == (M * X).pow(6).scaled(rational(12)));
    CHECK(jfraction_hankel(dow, 3) == closed_form_hankel(family::dowling, 3));

    // Eulerian symbolic at n = 2: (m(x-1)+1)^3 * 4
    const auto eul = family_recurrence<mpoly>(family::eulerian, X, M, 5);
    const mpoly blin = M * (X - mpoly(1)) + mpoly(1);
    CHECK(jfraction_hankel(eul, 2) == blin.pow(3).scaled(rational(4)));

    // a vanishing beta zeroes every later determinant
    const j_fraction<rational> degenerate(ints({1, 1, 1, 1}), ints({2, 0, 5}));
    CHECK(jfraction_hankel(degenerate, 1) == rational(2));
    CHECK(jfraction_hankel(degenerate, 2) == rational(0));
    CHECK(jfraction_hankel(degenerate, 3) == rational(0));

    CHECK_THROWS_AS(jfraction_hankel(degenerate, 4), std::invalid_argument);
}

TEST_CASE("closed forms") {
    CHECK(closed_form_hankel(family::dowling, 2) == (M * X).pow(3).scaled(rational(2)));
    CHECK(closed_form_hankel(family::tanny, 2).specialize(rational(1), rational(1)) ==
          rational(32));
    CHECK(closed_form_hankel(family::geometric_mod, 1) ==
          (X * (X + M)).scaled(rational(2)));
    CHECK(closed_form_hankel(family::eulerian, 0) == mpoly(1));
}

TEST_CASE("degenerate parameter points agree as 0 = 0") {
    // geometric at x = 1, m = -1: beta_n = 0 for every n
    const auto seq = family_values(family::geometric, rational(-1), rational(1), 9);
    const auto h = hankel_transform(seq, 4);
    for (int n = 1; n <= 4; ++n) {
        CHECK(h[static_cast<std::size_t>(n)] == rational(0));
        CHECK(closed_form_hankel(family::geometric, n).specialize(rational(1), rational(-1)) ==
              rational(0));
    }
    // Dowling at m = 0: values are (1+x)^n, Hankel transform vanishes from n = 1
    const auto dseq = family_values(family::dowling, rational(0), rational(3), 9);
    const auto hd = hankel_transform(dseq, 3);
    for (int n = 1; n <= 3; ++n) {
        CHECK(hd[static_cast<std::size_t>(n)] == rational(0));
        CHECK(closed_form_hankel(family::dowling, n).specialize(rational(3), rational(0)) ==
              rational(0));
    }
}

TEST_CASE("three Hankel routes agree for every family at random points") {
    test::random_rationals rnd(2718);
    for (family f : {family::dowling, family::tanny, family::eulerian, family::geometric,
                     family::geometric_mod}) {
        int done = 0;
        while (done < 3) {
            const rational xv = rnd.next_nonzero(), mv = rnd.next_nonzero();
            const rational blin = mv * (xv - rational(1)) + rational(1);
            if ((xv + mv).is_zero() || blin.is_zero()) continue;
            const auto seq = family_values(f, mv, xv, 13);
            const auto h = hankel_transform(seq, 6);
            const auto rec = family_recurrence<rational>(f, xv, mv, 7);
            for (int n = 0; n <= 6; ++n) {
                CHECK(h[static_cast<std::size_t>(n)] == jfraction_hankel(rec, n));
                CHECK(h[static_cast<std::size_t>(n)] ==
                      closed_form_hankel(f, n).specialize(xv, mv));
            }
            ++done;
        }
    }
}
