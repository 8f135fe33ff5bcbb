#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qr {

// 1D barrier, zero potential outside. Either piecewise-constant segments or
// a smooth profile sampled on [z_min, z_max].
struct BarrierSegment {
    double width = 0.0;  // m
    double height = 0.0; // J (may be negative: a well)
};

struct BarrierSpec {
    std::vector<BarrierSegment> segments;           // piecewise-constant form
    std::function<double(double)> profile;          // smooth form
    double z_min = 0.0, z_max = 0.0;                // support of the profile

    static BarrierSpec rectangular(double height, double width);
    static BarrierSpec piecewise(std::vector<BarrierSegment> segs);
    static BarrierSpec smooth(std::function<double(double)> v, double z_min, double z_max);

    bool is_piecewise() const { return !segments.empty(); }
    double max_height() const; // samples the smooth form on 4097 points
    double support() const;
    void validate() const;
};

struct TransmissionResult {
    double transmission = 0.0;     // |t|^2; 0 if it underflowed (see log)
    double reflection = 0.0;       // |r|^2
    double log_transmission = 0.0; // ln T, finite even when T underflows
    std::string method;
};

// Exponent of the semiclassical barrier factor: T = exp(-2 integral of
// sqrt(2m(V - E))/hbar over the classically forbidden region). For
// piecewise barriers the integral is a finite sum; for smooth ones the
// turning points are found by bisection (to support/1e6) and the integral
// evaluated by adaptive Simpson with a sqrt-regularizing substitution at
// both ends. Requires 0 < e < max V.
TransmissionResult wkb_transmission(const BarrierSpec& b, double energy, double mass);

// Exact stationary-scattering T and R for a piecewise-constant barrier via
// 2x2 transfer matrices. Exponential growth in forbidden segments is
// factored into a running log scale, so kappa*width far beyond 700 stays
// finite; T + R = 1 to rounding.
TransmissionResult transfer_matrix_transmission(const BarrierSpec& b, double energy,
                                                double mass);

// closed form for one rectangular barrier, used as an oracle
double rectangular_transmission(double v0, double width, double energy, double mass);

struct TunnelScenario {
    BarrierSpec barrier;
    double energy = 0.0; // J
    double mass = 0.0;   // kg
    // transverse two-branch state carried through the barrier
    double weight_1 = 0.5, weight_2 = 0.5;
    double coherence = 0.5; // |off-diagonal| before the barrier
    std::optional<double> momentum_spread; // kg m/s, for the spread-validity flag
};

struct TunnelReport {
    TransmissionResult wkb;
    std::optional<TransmissionResult> exact; // transfer matrix (piecewise only)
    double transmitted_fraction = 0.0;       // exact T when available, else WKB
    double coherence_after = 0.0;   // unchanged: the barrier acts on the
                                    // longitudinal motion only
    bool spread_negligible = true;  // transit time << 2 m hbar / b^2
    double transit_time = 0.0;
    double spread_bound = 0.0;
};

TunnelReport tunnel_scenario(const TunnelScenario& sc);

} // namespace qr
