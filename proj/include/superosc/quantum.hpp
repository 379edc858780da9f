// Reverse-engineered Schroedinger potentials for lifted periodic wave
// functions: V = psi'' / (psi + C) on one period with periodic boundary,
// energy scale fixed so the lifted wave function is an eigenfunction with
// eigenvalue 0. With sufficient lift (C beyond -min psi, or below -max psi)
// the denominator keeps one sign, the potential is non-singular, and the
// nodeless lifted function is the ground state.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "superosc/dynamic_range.hpp"
#include "superosc/harmonics.hpp"

namespace superosc {

struct LiftBracket {
    double positive;  // smallest sufficient positive lift, -min psi
    double negative;  // largest sufficient negative lift, -max psi
};

// Extrema of psi over one period, located as the refined zeros of psi'
// (dense scan + bisection at the given resolution).
LiftBracket critical_lift(const HarmonicSum& psi, std::size_t resolution = 1u << 17);

// Termwise second derivative (each harmonic scaled by -(k omega0)^2).
HarmonicSum second_derivative(const HarmonicSum& psi);

enum class PotentialStatus { ok, touching_critical, crossing_unphysical };

struct PotentialSpec {
    HarmonicSum psi;   // unlifted wave function
    double lift = 0.0;
    double period = 0.0;
    std::vector<double> x;           // uniform grid over [0, period)
    std::vector<double> V;           // 0 at singular-flagged points
    std::vector<double> psi_lifted;  // psi(x) + lift
    std::vector<std::uint8_t> singular;
    PotentialStatus status = PotentialStatus::ok;
    std::vector<double> singular_locations;  // refined, not necessarily grid points

    bool clean() const { return status == PotentialStatus::ok; }
    std::size_t size() const { return x.size(); }
};

// V_k = psi''(x_k) / (psi(x_k) + C); gridpoints with |psi + C| below
// 1e-10 (max|psi| + |C|) are flagged. The status is classified from the
// refined extrema of the denominator, so sub-grid dips are not missed:
// crossings of zero give crossing_unphysical, bare touchings give
// touching_critical.
PotentialSpec build_potential(const HarmonicSum& psi, double lift, std::size_t grid_n);

struct EigenReport {
    double E0 = 0.0;
    std::vector<double> ground;  // normalized lowest eigenvector
    int node_count = 0;          // sign changes, periodic wrap included
    double overlap = 0.0;        // |<v0, psi+C>| / (|v0| |psi+C|)
    std::size_t n = 0;
    double residual = 0.0;       // |H v - E0 v| at convergence
    int iterations = 0;
};

// Lowest eigenpair of H = -D2 + diag(V) with the 3-point periodic
// Laplacian, by shifted inverse iteration with Rayleigh refinement on the
// periodic tridiagonal structure. An LDL^T inertia check certifies that no
// eigenvalue lies below the returned one. Throws SingularPotentialError on
// flagged potentials and NonConvergedError (with the residual) if the
// iteration stalls.
EigenReport solve_ground_state(const PotentialSpec& p);

struct OscillationReport {
    int extrema_inside = 0;
    int extrema_outside = 0;
    double density_inside = 0.0;   // extrema per unit length
    double density_outside = 0.0;
    double ratio = 0.0;            // inside / outside
};

// Counts strict local extrema of V inside vs outside the region. The count
// is taken as sign changes of the exact derivative numerator
// g = psi''' (psi + C) - psi'' psi' over one period (grid-sampled V is
// unusable for this: roundoff splits extrema near flat stretches).
OscillationReport potential_oscillation_report(const PotentialSpec& p, const Region& region,
                                               std::size_t scan_n = 1u << 14);

void write_csv(std::ostream& out, const PotentialSpec& p);  // x,V
void write_csv(std::ostream& out, const PotentialSpec& p, const EigenReport& r);  // x,psi_lifted,ground_vec
std::string to_json_string(const PotentialSpec& p, int indent = -1);
PotentialSpec potential_from_json_string(const std::string& text);
std::string eigen_summary_json(const PotentialSpec& p, const EigenReport& r);  // {"E0",...}

}  // namespace superosc
