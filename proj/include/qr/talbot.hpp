#pragma once

#include <optional>
#include <vector>

#include "qr/particle.hpp"
#include "qr/quantum_ratio.hpp"
#include "qr/wavefield.hpp"

namespace qr {

// self-imaging length d^2 / lambda
double talbot_length(double period, double wavelength);

// Distance l2 at which l2 = k * m2(l1, l2) * lt, i.e. the diverging-source
// revival condition l_eff = k * lt. Requires l1 > k * lt.
double solve_l2(double l1, double lt, double k);

struct TalbotConfig {
    GratingSpec grating;     // the diffraction grating
    double wavelength = 0.0;
    GeometrySpec geometry;
    int samples_per_period = 128;
    int window_periods = 80; // central analysis window, even, < n_slits
    ExecPolicy policy = ExecPolicy::parallel;

    void validate() const;
};

struct SelfImageResult {
    double correlation;   // peak of the circular correlation
    double best_shift;    // m at the screen, in [0, m2 * period)
    double corr_at_zero;
    double talbot_len;
    double m1, m2, l_eff;
    Grid screen;                       // target grid (pitch m2 * source pitch)
    std::vector<double> image;         // |amp|^2 on the screen grid
    std::vector<double> reference;     // magnified grating transmission
};

// Propagate a point-source-illuminated grating to the screen and compare the
// rescaled intensity with the grating transmission by normalized circular
// cross-correlation over the central window (shift scan over one period).
SelfImageResult self_image_check(const TalbotConfig& cfg);

struct TalbotLauConfig {
    TalbotConfig base;
    std::optional<GratingSpec> mask;  // scanning mask; default: matched m2*d, duty 0.5
    bool mask_open = false;           // fully open mask instead (visibility 0)
    int n_shifts = 33;                // over one mask period
    int n_sources = 1;                // incoherent source array
    double source_pitch = 0.0;        // 0 = matched m1 * d
};

struct TalbotLauResult {
    std::vector<double> shift;        // m
    std::vector<double> transmitted;  // raw transmitted intensity per shift
    double visibility;                // (max - min) / (max + min)
    double mask_period;
    bool pitch_matched;               // mask period within 10% of m2 * d
};

TalbotLauResult talbot_lau_scan(const TalbotLauConfig& cfg);

// transverse coherent extent of a grating interferometer is the illuminated
// grating height; Q = height / particle size
QuantumRatio coherence_quantum_ratio(const GratingSpec& g, const Particle& p);

struct CarpetResult {
    std::vector<double> distance;        // propagation distances
    Grid screen;
    std::vector<std::vector<double>> intensity; // [distance][sample]
    double talbot_len;
};

// plane-wave near-field intensity map behind the grating
CarpetResult talbot_carpet(const GratingSpec& g, double wavelength,
                           const std::vector<double>& distances,
                           int samples_per_period = 64, int window_periods = 40,
                           ExecPolicy policy = ExecPolicy::parallel);

} // namespace qr
