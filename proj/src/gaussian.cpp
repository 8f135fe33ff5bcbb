#include "qr/gaussian.hpp"

#include <cmath>

#include "qr/constants.hpp"
#include "qr/errors.hpp"

namespace qr {

namespace {
const std::complex<double> I{0.0, 1.0};
}

std::complex<double> GaussianPacket::width_parameter() const {
    return 0.25 / width_g - I * sigma;
}

double GaussianPacket::position_variance() const {
    return 0.25 / width_parameter().real();
}

double GaussianPacket::position_std() const {
    return std::sqrt(position_variance());
}

double GaussianPacket::size() const {
    return 2.0 * position_std();
}

void GaussianPacket::validate() const {
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw domain_error("packet needs mass > 0");
    if (!std::isfinite(center) || !std::isfinite(momentum))
        throw domain_error("packet center/momentum must be finite");
    if (!(width_g.real() > 0.0) || !std::isfinite(width_g.real()) ||
        !std::isfinite(width_g.imag()))
        throw domain_error("packet needs Re G > 0");
    if (!(width_parameter().real() > 0.0))
        throw domain_error("packet is not normalizable (Re w <= 0)");
}

GaussianPacket make_packet(double center, double momentum, double sigma0, double mass) {
    if (!(sigma0 > 0.0))
        throw domain_error("packet needs initial std > 0");
    GaussianPacket p;
    p.center = center;
    p.momentum = momentum;
    p.mass = mass;
    p.width_g = 2.0 * sigma0 * sigma0;
    p.sigma = I / (4.0 * p.width_g);
    p.validate();
    return p;
}

GaussianPacket evolve_linear_force(const GaussianPacket& p, double force, double t) {
    p.validate();
    if (!(t >= 0.0))
        throw domain_error("evolution time must be >= 0");
    GaussianPacket out = p;
    const double m = p.mass;
    out.center = p.center + p.momentum * t / m + 0.5 * force * t * t / m;
    out.momentum = p.momentum + force * t;
    const std::complex<double> w0 = p.width_parameter();
    const std::complex<double> u0 = 1.0 / w0;
    const std::complex<double> u = u0 + 2.0 * I * (hbar * t / m);
    const std::complex<double> g = 0.5 * u + (p.width_g - 0.5 * u0) * (u / u0) * (u / u0);
    out.width_g = g;
    out.sigma = -I * (0.25 / g - 1.0 / u);
    out.validate();
    return out;
}

GaussianPacket free_evolve(const GaussianPacket& p, double t) {
    return evolve_linear_force(p, 0.0, t);
}

double doubling_time(double mass, double sigma0) {
    if (!(mass > 0.0) || !(sigma0 > 0.0))
        throw domain_error("doubling time needs mass > 0 and width > 0");
    return 2.0 * std::sqrt(3.0) * mass * sigma0 * sigma0 / hbar;
}

double spread_std(double mass, double sigma0, double t) {
    if (!(mass > 0.0) || !(sigma0 > 0.0) || !(t >= 0.0))
        throw domain_error("spread needs mass > 0, width > 0, t >= 0");
    double r = hbar * t / (2.0 * mass * sigma0 * sigma0);
    return sigma0 * std::sqrt(1.0 + r * r);
}

double CoherentState::ground_variance() const {
    return hbar / (2.0 * mass * omega);
}

void CoherentState::validate() const {
    if (!(mass > 0.0) || !(omega > 0.0))
        throw domain_error("coherent state needs mass > 0 and omega > 0");
    if (!(amplitude >= 0.0) || !std::isfinite(amplitude) || !std::isfinite(phase))
        throw domain_error("coherent state needs finite amplitude >= 0 and phase");
}

OscillatorPoint coherent_evolve(const CoherentState& s, double t) {
    s.validate();
    double a = s.phase + s.omega * t;
    return {s.amplitude * std::cos(a), s.mass * s.omega * s.amplitude * std::sin(a),
            s.ground_variance()};
}

GaussianPacket quench(const CoherentState& s, double t0) {
    OscillatorPoint pt = coherent_evolve(s, t0);
    GaussianPacket p;
    p.center = pt.center;
    p.momentum = pt.momentum;
    p.mass = s.mass;
    p.width_g = pt.variance; // real lift: variance = G
    p.sigma = 0.0;
    p.validate();
    return p;
}

} // namespace qr
