#include "qr/spin.hpp"

#include <cmath>
#include <numbers>

#include "qr/errors.hpp"

namespace qr {

void SpinHalfState::validate() const {
    if (!(theta >= 0.0) || !(theta <= std::numbers::pi))
        throw domain_error("spin polar angle must lie in [0, pi]");
    if (!std::isfinite(phi))
        throw domain_error("spin azimuth must be finite");
}

std::complex<double> SpinHalfState::up_amplitude() const {
    return {std::cos(0.5 * theta), 0.0};
}

std::complex<double> SpinHalfState::down_amplitude() const {
    return std::polar(std::sin(0.5 * theta), phi);
}

double SpinHalfState::up_weight() const {
    double c = std::cos(0.5 * theta);
    return c * c;
}

double SpinHalfState::down_weight() const {
    double s = std::sin(0.5 * theta);
    return s * s;
}

DensityMatrix2 DensityMatrix2::pure(const SpinHalfState& s) {
    s.validate();
    DensityMatrix2 rho;
    rho.uu = s.up_weight();
    rho.dd = s.down_weight();
    rho.ud = s.up_amplitude() * std::conj(s.down_amplitude());
    return rho;
}

double DensityMatrix2::purity() const {
    return uu * uu + dd * dd + 2.0 * std::norm(ud);
}

void DensityMatrix2::validate() const {
    constexpr double tol = 1e-12;
    if (!(uu >= -tol) || !(dd >= -tol))
        throw domain_error("density matrix needs nonnegative populations");
    if (std::abs(trace() - 1.0) > tol)
        throw domain_error("density matrix must have unit trace");
    if (std::norm(ud) > uu * dd + tol)
        throw domain_error("density matrix violates positivity (|ud|^2 > uu dd)");
}

std::pair<double, double> band_intensities(const DensityMatrix2& rho) {
    rho.validate();
    return {rho.uu, rho.dd};
}

} // namespace qr
