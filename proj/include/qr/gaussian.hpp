#pragma once

#include <complex>

namespace qr {

// Gaussian trial packet
//
//   psi(z) = (2 pi G)^(-1/4) exp{ -(1/(4G) - i sigma)(z - center)^2
//                                 + i momentum (z - center) / hbar }
//
// (G, sigma) is an overcomplete parametrization: the physics sits in the
// combined width parameter w = 1/(4G) - i sigma, with position variance
// 1/(4 Re w). Two canonical lifts appear here:
//   - complex lift: G real, sigma = i/(4G)  =>  w = 1/(2G), variance G/2
//   - real lift:    G real, sigma = 0       =>  w = 1/(4G), variance G
struct GaussianPacket {
    double center = 0.0;   // m
    double momentum = 0.0; // kg m/s
    std::complex<double> width_g{0.0, 0.0}; // G, m^2
    std::complex<double> sigma{0.0, 0.0};   // 1/m^2
    double mass = 0.0;     // kg

    std::complex<double> width_parameter() const; // w = 1/(4G) - i sigma
    double position_variance() const;             // 1/(4 Re w)
    double position_std() const;
    double size() const; // size convention: 2 * std
    void validate() const; // Re G > 0, Re w > 0, mass > 0, all finite
};

// complex lift with position std sigma0: G = 2 sigma0^2, sigma = i/(4G)
GaussianPacket make_packet(double center, double momentum, double sigma0, double mass);

// Closed-form evolution under a constant force F (free motion for F = 0):
//   center(t)  = center + momentum t / m + F t^2 / (2m)
//   momentum(t)= momentum + F t
//   u(t)       = 1/w0 + 2 i hbar t / m
//   G(t)       = u/2 + (G0 - 1/(2 w0)) (u/u0)^2
//   sigma(t)   = -i (1/(4G) - 1/u)
// The width part is force-independent because the potential is linear.
GaussianPacket evolve_linear_force(const GaussianPacket& p, double force, double t);

GaussianPacket free_evolve(const GaussianPacket& p, double t);

// std(t) = sigma0 sqrt(1 + (hbar t / (2 m sigma0^2))^2) doubles at
// t = 2 sqrt(3) m sigma0^2 / hbar
double doubling_time(double mass, double sigma0);

// width std after free flight, from the closed form above
double spread_std(double mass, double sigma0, double t);

// harmonic-oscillator coherent state: center follows the classical orbit,
// width pinned at the ground-state variance D = hbar / (2 m omega)
struct CoherentState {
    double amplitude = 0.0; // m
    double phase = 0.0;     // rad
    double omega = 0.0;     // rad/s
    double mass = 0.0;      // kg

    double ground_variance() const; // D
    void validate() const;
};

struct OscillatorPoint {
    double center;
    double momentum;
    double variance;
};

OscillatorPoint coherent_evolve(const CoherentState& s, double t);

// release the oscillator at t0: a packet in the real lift with G0 = D,
// sigma0 = 0, which reproduces the coherent-state wavefunction exactly
GaussianPacket quench(const CoherentState& s, double t0);

} // namespace qr
