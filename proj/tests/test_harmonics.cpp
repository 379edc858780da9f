#include <doctest.h>

#include <cmath>
#include <numbers>

#include "superosc/constructors.hpp"
#include "superosc/harmonics.hpp"

using namespace superosc;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("single sine expands to one term") {
    const auto s = make_product({{FactorKind::sine, 2.0, 0.0, +1}});
    const auto h = expand_to_harmonics(s);
    CHECK(h.omega0 == doctest::Approx(2.0));
    REQUIRE(h.terms.size() == 1);
    CHECK(h.terms[0].k == 1);
    CHECK(h.terms[0].sin_coef == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h.terms[0].cos_coef == doctest::Approx(0.0));
}

TEST_CASE("two-factor product-to-sum identity") {
    // sin(u) sin(u - alpha) = 1/2 cos(alpha) - 1/2 cos(2u - alpha)
    const double w = 1.0, alpha = 0.3;
    const auto s = make_product({{FactorKind::sine, w, 0.0, +1},
                                 {FactorKind::sine, w, alpha / w, +1}});
    const auto h = expand_to_harmonics(s);
    REQUIRE(h.terms.size() == 2);
    CHECK(h.terms[0].k == 0);
    CHECK(h.terms[0].cos_coef == doctest::Approx(0.5 * std::cos(alpha)).epsilon(1e-14));
    CHECK(h.terms[1].k == 2);
    // -1/2 cos(2u - alpha) = -1/2 cos(alpha) cos(2u) - 1/2 sin(alpha) sin(2u)
    CHECK(h.terms[1].cos_coef == doctest::Approx(-0.5 * std::cos(alpha)).epsilon(1e-14));
    CHECK(h.terms[1].sin_coef == doctest::Approx(-0.5 * std::sin(alpha)).epsilon(1e-14));
}

TEST_CASE("coincident-shift cube reduces to the sin^3 identity") {
    // sin^3(v) = (3 sin v - sin 3v)/4 with v = (Omega/3)(t - a)
    const double a = 0.35;
    const auto s = build_periodic_translates(kPi, 3, {a, a, a});
    const auto h = expand_to_harmonics(s);
    REQUIRE(h.terms.size() == 2);
    const double w = kPi / 3;
    for (double t : {0.0, 0.2, 1.1, 4.4}) {
        const double expect =
            0.25 * (3.0 * std::sin(w * (t - a)) - std::sin(3.0 * w * (t - a)));
        CHECK(eval(h, t) == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("equal-spacing N=3 expansion: derived linear form, zeros preserved") {
    // centered shifts {-a, 0, a}: S = 1/4 [(1 + 2 cos(2 w a)) sin(w t) - sin(3 w t)].
    // The same data exercises the published three-term variant of this
    // expansion, which does not vanish at the prescribed zeros and is
    // documented as a misprint; the derived form below is verified against
    // the product pointwise.
    const double a = 0.1, w = kPi / 3;
    const auto s = build_periodic_translates(kPi, 3, {-a, 0.0, a});
    const auto h = expand_to_harmonics(s);
    REQUIRE(h.terms.size() == 2);
    CHECK(h.terms[0].k == 1);
    CHECK(h.terms[0].sin_coef ==
          doctest::Approx(0.25 * (1.0 + 2.0 * std::cos(2.0 * w * a))).epsilon(1e-13));
    CHECK(h.terms[0].cos_coef == doctest::Approx(0.0));
    CHECK(h.terms[1].k == 3);
    CHECK(h.terms[1].sin_coef == doctest::Approx(-0.25).epsilon(1e-13));
    // the product (and hence the expansion) vanishes at the prescribed zeros
    CHECK(std::abs(eval(h, 0.0)) < 1e-15);
    CHECK(std::abs(eval(h, a)) < 1e-14);
    CHECK(std::abs(eval(h, -a)) < 1e-14);
}

TEST_CASE("expansion agrees with the product on a dense grid") {
    const auto s = build_periodic_translates(kPi, 3, {0.0, 0.1, 0.2});
    const auto h = expand_to_harmonics(s);
    const double T = period(h);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double t = T * i / 10000.0;
        worst = std::max(worst, std::abs(eval(h, t) - eval_product(s, t)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("highest harmonic realizes the declared bandlimit") {
    for (int n : {2, 3, 5}) {
        const auto s = build_periodic_translates(kPi, n, centered_shifts(n, 0.1));
        const auto h = expand_to_harmonics(s);
        CHECK(max_harmonic_index(h) * h.omega0 <= s.omega_total * (1 + 1e-12));
        CHECK(max_harmonic_index(h) == n);  // translate family: k_i = 1 each
    }
}

TEST_CASE("mixed commensurate frequencies find the right fundamental") {
    const auto s = make_product({{FactorKind::sine, 1.5, 0.0, +1},
                                 {FactorKind::sine, 2.5, 0.2, +1}});
    const auto h = expand_to_harmonics(s);
    CHECK(h.omega0 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(max_harmonic_index(h) == 8);  // 3 + 5
    for (double t : {0.0, 0.3, 2.7})
        CHECK(eval(h, t) == doctest::Approx(eval_product(s, t)).epsilon(1e-13));
}

TEST_CASE("incommensurate and non-sine inputs are rejected") {
    CHECK_THROWS_AS(expand_to_harmonics(make_product(
                        {{FactorKind::sine, 1.0, 0.0, +1},
                         {FactorKind::sine, std::numbers::sqrt2, 0.0, +1}})),
                    IncommensurateError);
    CHECK_THROWS_AS(expand_to_harmonics(make_product({{FactorKind::sinc, 1.0, 0.0, +1}})),
                    IncommensurateError);
}

TEST_CASE("termwise derivative") {
    const auto s = make_product({{FactorKind::sine, 1.0, 0.0, +1}});
    const auto h = expand_to_harmonics(s);
    const auto d2 = derivative(h, 2);
    CHECK(eval(d2, kPi / 2) == doctest::Approx(-1.0).epsilon(1e-14));
    const auto d1 = derivative(h, 1);
    CHECK(eval(d1, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
}
