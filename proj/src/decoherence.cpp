#include "qr/decoherence.hpp"

#include <cmath>

#include "qr/constants.hpp"
#include "qr/errors.hpp"

namespace qr {

double BranchDensity::purity() const {
    return w1 * w1 + w2 * w2 + 2.0 * std::norm(off_diagonal);
}

void BranchDensity::validate() const {
    const double tol = 1e-12;
    if (!(w1 >= -tol) || !(w2 >= -tol))
        throw domain_error("branch weights must be nonnegative");
    if (std::abs(w1 + w2 - 1.0) > tol)
        throw domain_error("branch weights must sum to 1");
    if (std::norm(off_diagonal) > w1 * w2 + tol)
        throw domain_error("off-diagonal exceeds sqrt(w1 w2)");
    if (!(width >= 0.0) || !std::isfinite(r1) || !std::isfinite(r2))
        throw domain_error("branch geometry must be finite, width >= 0");
}

BranchDensity branch_density_from_spin(const SpinHalfState& s, double r1, double r2,
                                       double width) {
    s.validate();
    BranchDensity rho;
    rho.w1 = s.up_weight();
    rho.w2 = s.down_weight();
    rho.off_diagonal = s.up_amplitude() * std::conj(s.down_amplitude());
    rho.r1 = r1;
    rho.r2 = r2;
    rho.width = width;
    rho.validate();
    return rho;
}

void EnvironmentSpec::validate() const {
    if (!(rate > 0.0) || !(wavelength > 0.0))
        throw domain_error("environment needs rate > 0 and wavelength > 0");
}

double thermal_wavelength(double mass, double temperature) {
    if (!(mass > 0.0) || !(temperature > 0.0))
        throw domain_error("thermal wavelength needs mass > 0 and temperature > 0");
    return planck_h /
           std::sqrt(2.0 * std::numbers::pi * mass * boltzmann_k * temperature);
}

EnvironmentSpec EnvironmentSpec::air_300k_1atm() {
    EnvironmentSpec env;
    env.rate = 1e13; // one resolved-branch scattering time of 1e-13 s
    env.wavelength = thermal_wavelength(28.0 * atomic_mass_unit, 300.0);
    env.label = "air-300K-1atm";
    return env;
}

BranchDensity decohere(const BranchDensity& rho, const EnvironmentSpec& env, double t) {
    rho.validate();
    env.validate();
    if (!(t >= 0.0))
        throw domain_error("decohere needs t >= 0");
    double resolve = rho.separation() / env.wavelength;
    double rate_eff = env.rate * std::min(1.0, resolve * resolve);
    BranchDensity out = rho;
    out.off_diagonal *= std::exp(-rate_eff * t);
    return out;
}

double fringe_gamma(const BranchDensity& rho) {
    rho.validate();
    double denom = std::sqrt(rho.w1 * rho.w2);
    if (denom == 0.0)
        return 0.0;
    return std::abs(rho.off_diagonal) / denom;
}

double two_path_intensity(const BranchDensity& rho, double phase) {
    double gamma = fringe_gamma(rho);
    double arg = std::arg(rho.off_diagonal);
    return 1.0 + gamma * std::cos(phase + arg);
}

std::pair<double, double> mixed_band_prediction(const BranchDensity& rho) {
    DensityMatrix2 dm;
    dm.uu = rho.w1;
    dm.dd = rho.w2;
    dm.ud = rho.off_diagonal;
    auto bands = band_intensities(dm);
    return {bands.first, bands.second};
}

void TimescaleSet::validate() const {
    if (!(tau_dec > 0.0) || !(tau_trans > 0.0) || !(tau_diff > 0.0) ||
        !(tau_diss > 0.0))
        throw domain_error("all four timescales must be positive");
}

RegimeReport validate_regime(const TimescaleSet& ts, double branch_width,
                             double env_wavelength, double separation,
                             double strictness) {
    ts.validate();
    if (!(strictness > 1.0))
        throw domain_error("strictness factor must exceed 1");
    if (!(branch_width > 0.0) || !(env_wavelength > 0.0) || !(separation > 0.0))
        throw domain_error("regime lengths must be positive");

    RegimeReport rep;
    rep.strictness = strictness;

    auto add = [&](std::string name, double lhs, double rhs, std::string fail_note) {
        RegimeCheck c;
        c.name = std::move(name);
        c.lhs = lhs;
        c.rhs = rhs;
        c.margin = rhs / (strictness * lhs);
        c.pass = lhs * strictness <= rhs;
        if (!c.pass)
            c.note = std::move(fail_note);
        rep.checks.push_back(std::move(c));
    };

    add("decoherence-before-transit", ts.tau_dec, ts.tau_trans,
        "branches keep interfering inside the apparatus");
    add("transit-before-spreading", ts.tau_trans, ts.tau_diff,
        "packets double in size before reaching the detector");
    add("transit-before-dissipation", ts.tau_trans, ts.tau_diss,
        "friction randomizes the motion mid-flight; trajectories are noise");
    add("width-below-env-wavelength", branch_width, env_wavelength,
        "environment probes the internal structure of each branch");
    add("env-wavelength-below-separation", env_wavelength, separation,
        "environment cannot resolve which branch was taken");

    rep.all_pass = true;
    for (const auto& c : rep.checks)
        rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

} // namespace qr
