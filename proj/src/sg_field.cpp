#include "qr/sg_field.hpp"

#include <cmath>
#include <string>

#include "qr/constants.hpp"
#include "qr/errors.hpp"

namespace qr {

void SGFieldSpec::validate() const {
    if (!(length > 0.0))
        throw domain_error("field region needs length > 0");
    if (!(transverse_extent > 0.0))
        throw domain_error("field region needs transverse_extent > 0");
    if (!(uniformity_factor >= 1.0))
        throw domain_error("uniformity_factor must be >= 1");
    double needed = uniformity_factor * std::abs(gradient) * transverse_extent;
    if (!(std::abs(bias) >= needed))
        throw regime_error(
            "bias field too weak for branch decoupling: |bias| = " +
            std::to_string(std::abs(bias)) + " T < " + std::to_string(needed) +
            " T = uniformity_factor * |gradient| * transverse_extent");
}

double branch_force(double mu, int sign, const SGFieldSpec& field) {
    if (sign != 1 && sign != -1)
        throw domain_error("branch sign must be +1 or -1");
    return sign * mu * field.gradient;
}

GaussianPacket sg_closed_form(const GaussianPacket& start, double mu, int sign,
                              const SGFieldSpec& field, double t) {
    field.validate();
    return evolve_linear_force(start, branch_force(mu, sign, field), t);
}

BranchTrajectory sg_integrate(const GaussianPacket& start, double mu, int sign,
                              const SGFieldSpec& field, double t_final,
                              int n_steps, int stride) {
    field.validate();
    start.validate();
    if (!(t_final > 0.0))
        throw domain_error("integration needs t_final > 0");
    if (n_steps < 1 || n_steps > 50'000'000)
        throw domain_error("n_steps out of range");
    if (stride < 1)
        throw domain_error("stride must be >= 1");

    const double m = start.mass;
    const double force = branch_force(mu, sign, field);
    const double dt = t_final / n_steps;

    struct State {
        double z, p;
        std::complex<double> g, s;
    };
    auto deriv = [&](const State& y) {
        State d;
        d.z = y.p / m;
        d.p = force;
        d.g = (4.0 * hbar / m) * y.s * y.g;
        d.s = -(2.0 * hbar / m) * y.s * y.s + hbar / (8.0 * m * y.g * y.g);
        return d;
    };
    auto axpy = [](const State& y, double a, const State& d) {
        return State{y.z + a * d.z, y.p + a * d.p, y.g + a * d.g, y.s + a * d.s};
    };
    auto finite = [](const State& y) {
        return std::isfinite(y.z) && std::isfinite(y.p) && std::isfinite(y.g.real()) &&
               std::isfinite(y.g.imag()) && std::isfinite(y.s.real()) &&
               std::isfinite(y.s.imag());
    };
    auto to_packet = [&](const State& y) {
        GaussianPacket p = start;
        p.center = y.z;
        p.momentum = y.p;
        p.width_g = y.g;
        p.sigma = y.s;
        return p;
    };

    State y{start.center, start.momentum, start.width_g, start.sigma};
    BranchTrajectory out;
    out.time.push_back(0.0);
    out.state.push_back(start);

    for (int i = 0; i < n_steps; ++i) {
        State k1 = deriv(y);
        State k2 = deriv(axpy(y, 0.5 * dt, k1));
        State k3 = deriv(axpy(y, 0.5 * dt, k2));
        State k4 = deriv(axpy(y, dt, k3));
        y.z += dt / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
        y.p += dt / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
        y.g += dt / 6.0 * (k1.g + 2.0 * k2.g + 2.0 * k3.g + k4.g);
        y.s += dt / 6.0 * (k1.s + 2.0 * k2.s + 2.0 * k3.s + k4.s);
        if (!finite(y))
            throw integration_error("state became non-finite at t = " +
                                    std::to_string((i + 1) * dt));
        if ((i + 1) % stride == 0 || i + 1 == n_steps) {
            out.time.push_back((i + 1) * dt);
            out.state.push_back(to_packet(y));
        }
    }
    return out;
}

} // namespace qr
