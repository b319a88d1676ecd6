#pragma once

#include <random>

#include <dowra/mpoly.hpp>
#include <dowra/rational.hpp>
#include <dowra/series.hpp>

namespace dowra::test {

/// Small random fractions with a fixed seed keep the property suites
/// reproducible.
class random_rationals {
  public:
    explicit random_rationals(unsigned seed) : rng_(seed) {}

    rational next() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 9);
        return rational(num(rng_), den(rng_));
    }

    rational next_nonzero() {
        for (;;) {
            rational r = next();
            if (!r.is_zero()) return r;
        }
    }

    long next_int(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

    series<rational> next_series(int order) {
        std::vector<rational> c;
        for (int i = 0; i <= order; ++i) c.push_back(next());
        return series<rational>(std::move(c));
    }

    mpoly next_poly(int max_deg = 3, int terms = 4) {
        mpoly p;
        for (int t = 0; t < terms; ++t) {
            mpoly mono = mpoly::constant(next());
            const long dx = next_int(0, max_deg), dm = next_int(0, max_deg);
            for (long i = 0; i < dx; ++i) mono = mono * mpoly::var_x();
            for (long i = 0; i < dm; ++i) mono = mono * mpoly::var_m();
            p = p + mono;
        }
        return p;
    }

  private:
    std::mt19937 rng_;
};

} // namespace dowra::test
