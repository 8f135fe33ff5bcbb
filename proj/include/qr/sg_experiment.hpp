#pragma once

#include <cstdint>
#include <vector>

#include "qr/gaussian.hpp"
#include "qr/parallel.hpp"
#include "qr/particle.hpp"
#include "qr/quantum_ratio.hpp"
#include "qr/sg_field.hpp"
#include "qr/spin.hpp"

namespace qr {

struct SGScenario {
    Particle particle;
    double speed = 0.0;   // m/s along the flight direction
    double sigma0 = 0.0;  // m, initial transverse position std
    double moment = 0.0;  // J/T, effective projection of the magnetic moment
    SGFieldSpec field;

    double transit_time() const; // field.length / speed
    void validate() const;
};

struct SGBranch {
    double center;   // m, transverse arrival
    double momentum; // kg m/s
    double sigma;    // m, transverse std at exit
    double weight;
};

struct SGReport {
    double transit_time;
    SGBranch up, down;
    double separation;     // |center_up - center_down|
    double r_q_separation; // separation alone
    double r_q_support;    // separation + 2 * (2 sigma): full coherent support
    double q_value;        // r_q_support / particle size (inf tagged separately)
    bool q_infinite;
    Regime regime;
    double band_up, band_down;
    double doubling_time;  // free-diffusion doubling time of the packet
};

SGReport run_sg_pure(const SGScenario& sc, const SpinHalfState& spin);

// arrival histogram on the screen; weights are normalized counts
struct ScreenImage {
    std::vector<double> edges;  // n_bins + 1, uniform
    std::vector<double> weight; // n_bins, sums to 1
    double data_min = 0.0;      // extreme possible arrivals used for binning
    double data_max = 0.0;

    int bins() const { return static_cast<int>(weight.size()); }
    double center(int i) const { return 0.5 * (edges[i] + edges[i + 1]); }
};

struct OrientationSampler {
    enum class Kind { isotropic, fixed };
    Kind kind = Kind::isotropic;
    double theta = 0.0; // used by fixed
};

// classical moment vector: each sample deflects by (mu cos(theta)) G t^2/(2m).
// Counter-based RNG per sample index, integer histogram: byte-identical
// results for any thread count.
ScreenImage classical_sg_ensemble(const SGScenario& sc, const OrientationSampler& s,
                                  std::size_t n_samples, std::uint64_t seed,
                                  int n_bins = 512, ExecPolicy policy = ExecPolicy::parallel);

// two-Gaussian quantum arrival image, integrated analytically per bin
ScreenImage quantum_screen_image(const SGScenario& sc, const SpinHalfState& spin,
                                 int n_bins = 512);

// classical deflection for a fixed orientation
double classical_deflection(const SGScenario& sc, double theta);

// smallest interior-bin weight divided by the mean interior-bin weight;
// interior = bins fully inside the central `fraction` of [data_min, data_max]
double interior_min_over_mean(const ScreenImage& img, double fraction = 0.98);

// total weight within |x - center| <= halfwidth, one window per branch
double window_weight(const ScreenImage& img, double center, double halfwidth);

} // namespace qr
