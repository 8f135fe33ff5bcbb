#pragma once

#include <string>

namespace qr {

// Q = R_q / L0. A structureless body (L0 = 0) has Q infinite; the infinity
// is an explicit tag, never a float inf produced by division.
class QuantumRatio {
public:
    QuantumRatio(double r_q, double l_0); // throws domain_error on bad inputs

    double r_q() const { return r_q_; }
    double l_0() const { return l_0_; }
    bool infinite() const { return l_0_ == 0.0; }
    double value() const;       // throws domain_error when infinite
    double log10_value() const; // throws domain_error when infinite
    std::string str() const;    // "inf" or shortest round-trip decimal

private:
    double r_q_;
    double l_0_;
};

enum class Regime { quantum, borderline, classical };

const char* to_string(Regime r);

struct Thresholds {
    double classical_max = 1.0; // Q <= this: classical
    double quantum_min = 10.0;  // Q >= this: quantum
};

// total on Q: every finite Q maps to exactly one regime, infinity is quantum
Regime classify(const QuantumRatio& q, const Thresholds& t = {});

// nuclear size scaling law: A^(1/3) * 1 fm, A a positive integer
double nucleus_size(int mass_number);

// h / (m v)
double de_broglie_wavelength(double mass, double speed);

} // namespace qr
