#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qr/spin.hpp"

namespace qr {

// Two spatially separated branches of one particle, reduced to the 2x2
// sector that the environment couples to. Weights live on the diagonal;
// the off-diagonal carries whatever interference capability is left.
struct BranchDensity {
    double w1 = 0.5, w2 = 0.5;
    std::complex<double> off_diagonal{0.5, 0.0};
    double r1 = 0.0, r2 = 0.0; // branch centers, m
    double width = 0.0;        // common branch width, m

    double separation() const { return std::abs(r1 - r2); }
    double purity() const;
    void validate() const;
};

BranchDensity branch_density_from_spin(const SpinHalfState& s, double r1, double r2,
                                       double width);

struct EnvironmentSpec {
    double rate = 0.0;       // 1/s, scattering rate when branches are resolved
    double wavelength = 0.0; // m, environment de Broglie wavelength
    std::string label;

    void validate() const;
    static EnvironmentSpec air_300k_1atm();
};

// h / sqrt(2 pi m k T)
double thermal_wavelength(double mass, double temperature);

// Off-diagonal decay at rate  rate * min(1, (separation/wavelength)^2):
// an environment with wavelength longer than the branch separation cannot
// resolve the branches and the damping switches off quadratically.
// Weights, centers, and width are untouched. Semigroup in t.
BranchDensity decohere(const BranchDensity& rho, const EnvironmentSpec& env, double t);

// |off_diagonal| / sqrt(w1 w2): 1 for a pure superposition, 0 for a
// proper mixture. Equals the fringe visibility of two_path_intensity.
double fringe_gamma(const BranchDensity& rho);

// I(phi) = 1 + gamma cos(phi + arg off), normalized to mean 1
double two_path_intensity(const BranchDensity& rho, double phase);

// The two detector-band weights a beam-splitting magnet produces from this
// state. Independent of off_diagonal: band weights cannot tell a pure
// superposition from a decohered mixture.
std::pair<double, double> mixed_band_prediction(const BranchDensity& rho);

struct TimescaleSet {
    double tau_dec = 0.0;   // environmental decoherence time, s
    double tau_trans = 0.0; // transit through the apparatus, s
    double tau_diff = 0.0;  // wave-packet spreading (doubling) time, s
    double tau_diss = 0.0;  // dissipation / thermalization time, s

    void validate() const;
};

struct RegimeCheck {
    std::string name;
    double lhs = 0.0;   // small side
    double rhs = 0.0;   // large side
    double margin = 0.0; // rhs / (strictness * lhs)
    bool pass = false;
    std::string note; // filled on failures that change the physical picture
};

struct RegimeReport {
    double strictness = 10.0;
    std::vector<RegimeCheck> checks;
    bool all_pass = false;
};

// Ordering requirements for the mixed-state description to make sense,
// each enforced as lhs * strictness <= rhs:
//   decoherence completes before the transit,
//   the transit ends before packet spreading matters,
//   the transit ends before dissipation randomizes the motion,
//   the branch width stays below the environment wavelength,
//   the environment wavelength stays below the branch separation.
RegimeReport validate_regime(const TimescaleSet& ts, double branch_width,
                             double env_wavelength, double separation,
                             double strictness = 10.0);

} // namespace qr
