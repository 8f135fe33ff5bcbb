#include "qr/quantum_ratio.hpp"

#include <charconv>
#include <cmath>

#include "qr/constants.hpp"
#include "qr/errors.hpp"

namespace qr {

QuantumRatio::QuantumRatio(double r_q, double l_0) : r_q_(r_q), l_0_(l_0) {
    if (!(r_q > 0.0) || !std::isfinite(r_q))
        throw domain_error("quantum ratio needs R_q > 0");
    if (!(l_0 >= 0.0) || !std::isfinite(l_0))
        throw domain_error("quantum ratio needs L_0 >= 0");
}

double QuantumRatio::value() const {
    if (infinite())
        throw domain_error("Q is infinite for a structureless body (L_0 = 0)");
    return r_q_ / l_0_;
}

double QuantumRatio::log10_value() const {
    return std::log10(value());
}

std::string QuantumRatio::str() const {
    if (infinite())
        return "inf";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, value());
    return std::string(buf, res.ptr);
}

const char* to_string(Regime r) {
    switch (r) {
    case Regime::quantum:
        return "quantum";
    case Regime::borderline:
        return "borderline";
    default:
        return "classical";
    }
}

Regime classify(const QuantumRatio& q, const Thresholds& t) {
    if (!(t.classical_max > 0.0) || !(t.quantum_min > t.classical_max))
        throw domain_error("thresholds must satisfy 0 < classical_max < quantum_min");
    if (q.infinite())
        return Regime::quantum;
    double v = q.value();
    if (v >= t.quantum_min)
        return Regime::quantum;
    if (v <= t.classical_max)
        return Regime::classical;
    return Regime::borderline;
}

double nucleus_size(int mass_number) {
    if (mass_number < 1)
        throw domain_error("mass number must be a positive integer");
    return std::cbrt(static_cast<double>(mass_number)) * 1e-15;
}

double de_broglie_wavelength(double mass, double speed) {
    if (!(mass > 0.0))
        throw domain_error("de Broglie wavelength needs mass > 0");
    if (!(speed > 0.0))
        throw domain_error("de Broglie wavelength needs speed > 0");
    return planck_h / (mass * speed);
}

} // namespace qr
