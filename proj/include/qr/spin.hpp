#pragma once

#include <complex>
#include <utility>

namespace qr {

// |psi> = cos(theta/2)|up> + e^{i phi} sin(theta/2)|down>
struct SpinHalfState {
    double theta = 0.0; // [0, pi]
    double phi = 0.0;

    std::complex<double> up_amplitude() const;
    std::complex<double> down_amplitude() const;
    double up_weight() const;   // cos^2(theta/2)
    double down_weight() const; // sin^2(theta/2)
    void validate() const;
};

// 2x2 spin density matrix in the {up, down} basis
struct DensityMatrix2 {
    double uu = 1.0, dd = 0.0;          // real populations
    std::complex<double> ud{0.0, 0.0};  // coherence; du = conj(ud)

    static DensityMatrix2 pure(const SpinHalfState& s);

    double trace() const { return uu + dd; }
    double purity() const; // Tr rho^2
    void validate() const; // trace 1, populations >= 0, |ud|^2 <= uu*dd + tol
};

// populations of the two spatially separated branches on the screen;
// unaffected by the coherence, which is why pure and decohered states with
// equal weights give identical bands
std::pair<double, double> band_intensities(const DensityMatrix2& rho);

} // namespace qr
