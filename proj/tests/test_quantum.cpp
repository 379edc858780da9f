#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#ifdef SUPEROSC_HAVE_EIGEN
#include <Eigen/Dense>
#endif

#include "superosc/constructors.hpp"
#include "superosc/quantum.hpp"

using namespace superosc;

namespace {

constexpr double kPi = std::numbers::pi;

HarmonicSum plain_sine() {
    return expand_to_harmonics(make_product({{FactorKind::sine, 1.0, 0.0, +1}}));
}

HarmonicSum eq6_build(int n = 3, double eps = 0.1) {
    return expand_to_harmonics(build_periodic_translates(kPi, n, centered_shifts(n, eps)));
}

#ifdef SUPEROSC_HAVE_EIGEN
// dense symmetric eigensolve oracle
struct DenseEigen {
    double e0;
    Eigen::VectorXd v0;
};
DenseEigen dense_oracle(const PotentialSpec& p) {
    const auto n = static_cast<Eigen::Index>(p.size());
    const double h = p.period / static_cast<double>(n);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
    const double inv_h2 = 1.0 / (h * h);
    for (Eigen::Index i = 0; i < n; ++i) {
        H(i, i) = 2.0 * inv_h2 + p.V[static_cast<std::size_t>(i)];
        H(i, (i + 1) % n) -= inv_h2;
        H(i, (i + n - 1) % n) -= inv_h2;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
    return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}
#endif

}  // namespace

TEST_CASE("critical lift of the plain and shifted sine") {
    const auto psi = plain_sine();
    const auto lifts = critical_lift(psi);
    CHECK(lifts.positive == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lifts.negative == doctest::Approx(-1.0).epsilon(1e-12));

    HarmonicSum shifted = psi;
    shifted.terms.insert(shifted.terms.begin(), HarmonicTerm{0, 0.5, 0.0});
    const auto lifted = critical_lift(shifted);
    CHECK(lifted.positive == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lifted.negative == doctest::Approx(-1.5).epsilon(1e-12));
}

TEST_CASE("critical lift of the superoscillating build is reproducible") {
    const auto psi = eq6_build();
    const auto a = critical_lift(psi, 1u << 17);
    const auto b = critical_lift(psi, 1u << 18);
    CHECK(a.positive == doctest::Approx(b.positive).epsilon(1e-10));
    // dense-scan + parabolic refinement oracle at a million points
    const double T = period(psi);
    double lo = 1e300;
    double lo_t = 0.0;
    for (std::size_t i = 0; i < 1'000'000; ++i) {
        const double t = T * static_cast<double>(i) / 1e6;
        const double v = eval(psi, t);
        if (v < lo) { lo = v; lo_t = t; }
    }
    double h = T / 1e6;
    for (int it = 0; it < 60; ++it) {
        const double f0 = eval(psi, lo_t - h), f1 = eval(psi, lo_t), f2 = eval(psi, lo_t + h);
        const double den = f0 - 2.0 * f1 + f2;
        if (den > 0.0) lo_t += 0.5 * h * (f0 - f2) / den;
        h *= 0.5;
    }
    CHECK(a.positive == doctest::Approx(-eval(psi, lo_t)).epsilon(1e-10));
}

TEST_CASE("second derivative: analytic checks and finite differences") {
    const auto psi = plain_sine();
    const auto d2 = second_derivative(psi);
    CHECK(eval(d2, kPi / 2) == doctest::Approx(-1.0).epsilon(1e-13));

    HarmonicSum constant{1.0, {HarmonicTerm{0, 3.0, 0.0}}};
    const auto dc = second_derivative(constant);
    CHECK(eval(dc, 0.7) == 0.0);

    const auto sup = eq6_build();
    const auto d2s = second_derivative(sup);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(0.0, period(sup));
    const double fd_h = 1e-4;
    for (int i = 0; i < 100; ++i) {
        const double x = dist(rng);
        const double fd =
            (eval(sup, x + fd_h) - 2.0 * eval(sup, x) + eval(sup, x - fd_h)) / (fd_h * fd_h);
        CHECK(eval(d2s, x) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("potential values for the lifted sine") {
    const auto psi = plain_sine();
    const auto p = build_potential(psi, 2.0, 1024);
    CHECK(p.clean());
    REQUIRE(p.size() == 1024);
    // V(0) = 0, V(pi/2) = -1/3 to roundoff
    CHECK(p.V[0] == 0.0);
    CHECK(p.V[256] == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(p.x[256] == doctest::Approx(kPi / 2).epsilon(1e-15));
    for (auto flag : p.singular) CHECK(flag == 0);
}

TEST_CASE("critical lift flags exactly the touching point") {
    const auto psi = plain_sine();
    const auto p = build_potential(psi, 1.0, 1024);
    CHECK(p.status == PotentialStatus::touching_critical);
    std::size_t flagged = 0, where = 0;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p.singular[k]) { ++flagged; where = k; }
    CHECK(flagged == 1);
    CHECK(p.x[where] == doctest::Approx(3.0 * kPi / 2).epsilon(1e-12));
    REQUIRE(p.singular_locations.size() == 1);
    CHECK(p.singular_locations[0] == doctest::Approx(3.0 * kPi / 2).epsilon(1e-9));
    // one-sided limits share a sign: V > 0 and large on both neighbours
    CHECK(p.V[where - 1] > 1e3);
    CHECK(p.V[where + 1] > 1e3);
}

TEST_CASE("no lift gives sign-changing crossings at the sine zeros") {
    const auto psi = plain_sine();
    const auto p = build_potential(psi, 0.0, 1024);
    CHECK(p.status == PotentialStatus::crossing_unphysical);
    REQUIRE(p.singular_locations.size() == 2);
    CHECK(p.singular_locations[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(p.singular_locations[1] == doctest::Approx(kPi).epsilon(1e-9));
    // denominator changes sign across each crossing
    CHECK(p.psi_lifted[1] * p.psi_lifted[p.size() - 1] < 0.0);
    // grid points sitting on the zeros are flagged
    CHECK(p.singular[0] == 1);
    CHECK(p.singular[512] == 1);
}

TEST_CASE("sufficient-lift margins are honored on both sides") {
    const auto psi = eq6_build();
    const auto lifts = critical_lift(psi);
    CHECK(build_potential(psi, lifts.positive + 1e-9, 512).clean());
    CHECK_FALSE(build_potential(psi, lifts.positive - 1e-9, 512).clean());
    CHECK(build_potential(psi, lifts.negative - 1e-9, 512).clean());
    CHECK_FALSE(build_potential(psi, lifts.negative + 1e-9, 512).clean());
}

TEST_CASE("lift sign symmetry: (-psi, -C) gives the identical potential") {
    const auto psi = eq6_build();
    HarmonicSum neg = psi;
    for (auto& term : neg.terms) {
        term.cos_coef = -term.cos_coef;
        term.sin_coef = -term.sin_coef;
    }
    const double lift = critical_lift(psi).positive * 1.05;
    const auto a = build_potential(psi, lift, 512);
    const auto b = build_potential(neg, -lift, 512);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a.V[k] == b.V[k]);
}

TEST_CASE("free particle ground state") {
    HarmonicSum constant{2.0 * kPi / 6.0, {HarmonicTerm{0, 1.0, 0.0}}};
    const auto p = build_potential(constant, 1.0, 256);
    const auto rep = solve_ground_state(p);
    CHECK(std::abs(rep.E0) < 1e-10);
    CHECK(rep.node_count == 0);
    // ground vector is constant
    for (double v : rep.ground) CHECK(v == doctest::Approx(rep.ground[0]).epsilon(1e-8));
}

TEST_CASE("lifted sine: O(h^2) convergence and overlap") {
    const auto psi = plain_sine();
    double prev_e = 0.0;
    for (std::size_t n : {256u, 512u, 1024u}) {
        const auto p = build_potential(psi, 2.0, n);
        const auto rep = solve_ground_state(p);
        CHECK(rep.node_count == 0);
        CHECK(rep.overlap >= 0.9999);
        if (prev_e != 0.0) {
            const double ratio = prev_e / rep.E0;
            CHECK(ratio == doctest::Approx(4.0).epsilon(0.15));  // h^2 halving
        }
        prev_e = rep.E0;
#ifdef SUPEROSC_HAVE_EIGEN
        const auto ref = dense_oracle(p);
        CHECK(rep.E0 == doctest::Approx(ref.e0).epsilon(1e-8));
        double dot = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k)
            dot += rep.ground[k] * ref.v0(static_cast<Eigen::Index>(k));
        CHECK(std::abs(dot) == doctest::Approx(1.0).epsilon(1e-8));
#endif
    }
}

TEST_CASE("superoscillating build: nodeless ground state matching the lifted function") {
    const auto psi = eq6_build();
    const double lift = critical_lift(psi).positive * 1.05;
    const auto p = build_potential(psi, lift, 2048);
    const auto rep = solve_ground_state(p);
    CHECK(rep.node_count == 0);
    CHECK(rep.overlap >= 0.999);
#ifdef SUPEROSC_HAVE_EIGEN
    const auto small = build_potential(psi, lift, 1024);
    const auto fast = solve_ground_state(small);
    const auto ref = dense_oracle(small);
    CHECK(fast.E0 == doctest::Approx(ref.e0).epsilon(1e-9));
#endif
}

TEST_CASE("eigen-identity: H applied to the sampled lifted function is O(h^2)") {
    const auto psi = eq6_build();
    const double lift = critical_lift(psi).positive * 1.05;
    double prev = 0.0;
    for (std::size_t n : {256u, 512u, 1024u}) {
        const auto p = build_potential(psi, lift, n);
        const double h = p.period / static_cast<double>(n);
        const double inv_h2 = 1.0 / (h * h);
        double r2 = 0.0, norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double left = p.psi_lifted[(i + n - 1) % n];
            const double right = p.psi_lifted[(i + 1) % n];
            const double hv =
                (2.0 * p.psi_lifted[i] - left - right) * inv_h2 + p.V[i] * p.psi_lifted[i];
            r2 += hv * hv;
            norm2 += p.psi_lifted[i] * p.psi_lifted[i];
        }
        const double scaled = std::sqrt(r2) / (h * h * std::sqrt(norm2));
        if (prev != 0.0) CHECK(scaled == doctest::Approx(prev).epsilon(0.1));
        prev = scaled;
    }
}

TEST_CASE("nodeless ground state for negative lift too") {
    const auto psi = eq6_build();
    const auto lifts = critical_lift(psi);
    const double lift = lifts.negative - 0.05 * (lifts.positive - lifts.negative);
    const auto p = build_potential(psi, lift, 512);
    REQUIRE(p.clean());
    const auto rep = solve_ground_state(p);
    CHECK(rep.node_count == 0);
    CHECK(rep.overlap >= 0.999);
}

TEST_CASE("eigensolve rejects singular potentials and tiny grids") {
    const auto psi = plain_sine();
    CHECK_THROWS_AS(solve_ground_state(build_potential(psi, 0.5, 512)),
                    SingularPotentialError);
    const auto ok = build_potential(psi, 2.0, 64);
    CHECK_THROWS_AS(solve_ground_state(ok), ValidationError);
}

TEST_CASE("uniform extrema density for the lifted plain sine") {
    const auto psi = plain_sine();
    const auto p = build_potential(psi, 2.0, 512);
    const auto rep = potential_oscillation_report(p, Region{0.0, kPi});
    CHECK(rep.extrema_inside == 1);   // pi/2
    CHECK(rep.extrema_outside == 1);  // 3 pi/2
    CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("superoscillating region concentrates potential extrema") {
    // spacing 0.1 with seven factors; the region holds its own extrema
    // cluster while the rest of the period stays smooth
    const auto spec = build_periodic_translates(kPi, 7, centered_shifts(7, 0.1));
    const auto psi = expand_to_harmonics(spec);
    const double lift = critical_lift(psi).positive * 1.05;
    const auto p = build_potential(psi, lift, 2048);
    const Region reg{-0.35, 0.35};
    const auto rep = potential_oscillation_report(p, reg);
    CHECK(rep.extrema_inside == 4);
    CHECK(rep.extrema_outside == 10);
    CHECK(rep.ratio > 1.0);
    // counts stable under scan doubling
    const auto rep2 = potential_oscillation_report(p, reg, 1u << 15);
    CHECK(rep2.extrema_inside == rep.extrema_inside);
    CHECK(rep2.extrema_outside == rep.extrema_outside);
}

TEST_CASE("N=3 build keeps the potential monotone through the region") {
    // with three factors the derivative numerator stays one-signed inside
    // the superoscillating stretch: no interior extrema at any lift
    const auto psi = eq6_build(3, 0.1);
    for (double scale : {1.001, 1.05, 1.5}) {
        const double lift = critical_lift(psi).positive * scale;
        const auto p = build_potential(psi, lift, 1024);
        const auto rep = potential_oscillation_report(p, Region{-0.15, 0.15});
        CHECK(rep.extrema_inside == 0);
    }
}

TEST_CASE("potential JSON and CSV round trips") {
    const auto psi = eq6_build();
    const double lift = critical_lift(psi).positive * 1.05;
    const auto p = build_potential(psi, lift, 256);
    const auto back = potential_from_json_string(to_json_string(p));
    REQUIRE(back.size() == p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        CHECK(back.V[k] == p.V[k]);
        CHECK(back.psi_lifted[k] == p.psi_lifted[k]);
    }
    CHECK(back.lift == p.lift);
    CHECK(back.status == p.status);

    std::ostringstream csv;
    write_csv(csv, p);
    CHECK(csv.str().rfind("x,V\n", 0) == 0);

    const auto rep = solve_ground_state(back);
    std::ostringstream csv2;
    write_csv(csv2, back, rep);
    CHECK(csv2.str().rfind("x,psi_lifted,ground_vec\n", 0) == 0);

    const auto summary = eigen_summary_json(back, rep);
    for (const char* field : {"\"E0\"", "\"node_count\"", "\"overlap\"", "\"n\"", "\"C\""})
        CHECK(summary.find(field) != std::string::npos);
}
