#pragma once

#include <complex>
#include <vector>

#include "qr/parallel.hpp"

namespace qr {

// uniform 1D sample grid, x_i = x0 + i * pitch
struct Grid {
    double x0 = 0.0;
    double pitch = 0.0;
    int n = 0;

    double x(int i) const { return x0 + i * pitch; }
    double span() const { return n * pitch; }
    static Grid centered(double span, int n); // symmetric about 0
    void validate() const;
};

struct WaveField {
    Grid grid;
    double wavelength = 0.0;
    std::vector<std::complex<double>> amp;

    double total_intensity() const; // sum |a|^2 * pitch, compensated
    void validate() const;
};

// transmission grating: n_slits periods, each with a centered opening of
// width open_fraction * period; opaque outside height() = n_slits * period
struct GratingSpec {
    double period = 0.0;
    double open_fraction = 0.5;
    int n_slits = 0;

    double height() const { return n_slits * period; }
    void validate() const;
};

bool grating_open_at(const GratingSpec& g, double x, double shift = 0.0);

// source -> grating distance l1, grating -> screen distance l2
struct GeometrySpec {
    double l1 = 0.0;
    double l2 = 0.0;

    double m1() const { return (l1 + l2) / l2; }
    double m2() const { return (l1 + l2) / l1; }
    double l_eff() const { return l1 * l2 / (l1 + l2); }
    void validate() const;
};

WaveField plane_wave(const Grid& g, double wavelength);

// diverging illumination from a point source a distance l1 upstream:
// unit amplitude with quadratic phase exp(i pi (x - source_x)^2 / (lambda l1))
WaveField point_source_field(const Grid& g, double wavelength, double l1,
                             double source_x = 0.0);

// zero the blocked samples; grid must cover the grating and resolve the
// period with at least 16 samples
void apply_grating(WaveField& f, const GratingSpec& g, double shift = 0.0);

struct PropagateOptions {
    ExecPolicy policy = ExecPolicy::parallel;
    bool check_boundary = true;
    double boundary_tol = 1e-6; // fraction of peak intensity allowed at the edges
    int edge_bins = 8;
};

// Fresnel propagation by direct quadrature over the source samples:
//   out(x) = e^{-i pi/4} / sqrt(lambda z) * sum_j amp_j
//            exp(i pi (x - x_j)^2 / (lambda z)) * pitch
// Zero-amplitude samples are skipped (their contribution is exactly zero).
// Unitary up to quadrature error when the kernel is resolved by the grid.
WaveField propagate(const WaveField& f, double z, const Grid& target,
                    const PropagateOptions& opt = {});
WaveField propagate(const WaveField& f, double z, const PropagateOptions& opt = {});

// replica-free reach of the sampled chirp: contributions from source points
// farther than lambda z / pitch of a target alias into ghost images
double ghost_free_distance(const WaveField& f, double z);

} // namespace qr
