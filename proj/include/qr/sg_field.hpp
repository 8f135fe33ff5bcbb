#pragma once

#include <vector>

#include "qr/gaussian.hpp"

namespace qr {

// Magnet region with field (0, -gradient*y, bias + gradient*z) near the
// beam axis. The bias must dominate the transverse components across the
// beam so rapid Larmor precession keeps the two spin branches decoupled:
// |bias| >= uniformity_factor * |gradient| * transverse_extent.
struct SGFieldSpec {
    double bias = 0.0;              // T
    double gradient = 0.0;          // T/m
    double length = 0.0;            // m, extent along the flight direction
    double transverse_extent = 0.0; // m, |y|,|z| reach of the beam
    double uniformity_factor = 10.0;

    void validate() const; // throws regime_error when the bias is too weak
};

// sign = +1: potential -mu(bias + gradient z), force +mu*gradient (up branch)
// sign = -1: mirrored (down branch)
double branch_force(double mu, int sign, const SGFieldSpec& field);

// closed-form branch state after time t inside the magnet
GaussianPacket sg_closed_form(const GaussianPacket& start, double mu, int sign,
                              const SGFieldSpec& field, double t);

struct BranchTrajectory {
    std::vector<double> time;
    std::vector<GaussianPacket> state;
};

// fixed-step RK4 on the variational equations
//   dz/dt     = p/m
//   dp/dt     = sign * mu * gradient
//   dG/dt     = (4 hbar / m) sigma G
//   dsigma/dt = -(2 hbar / m) sigma^2 + hbar / (8 m G^2)
// Records every `stride`-th step (plus the final one). Throws
// integration_error if the state stops being finite.
BranchTrajectory sg_integrate(const GaussianPacket& start, double mu, int sign,
                              const SGFieldSpec& field, double t_final,
                              int n_steps, int stride = 1);

} // namespace qr
