#include "qr/wavefield.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qr/errors.hpp"
#include "qr/parallel.hpp"

namespace qr {

void Grid::validate() const {
    if (n < 2)
        throw domain_error("grid needs at least 2 samples");
    if (!(pitch > 0.0) || !std::isfinite(pitch) || !std::isfinite(x0))
        throw domain_error("grid needs finite pitch > 0");
}

Grid Grid::centered(double span, int n) {
    if (n < 2 || !(span > 0.0))
        throw domain_error("centered grid needs span > 0 and n >= 2");
    Grid g;
    g.n = n;
    g.pitch = span / n;
    g.x0 = -0.5 * (n - 1) * g.pitch;
    return g;
}

double WaveField::total_intensity() const {
    double sum = 0.0, comp = 0.0;
    for (const auto& a : amp) {
        double v = std::norm(a) - comp;
        double t = sum + v;
        comp = (t - sum) - v;
        sum = t;
    }
    return sum * grid.pitch;
}

void WaveField::validate() const {
    grid.validate();
    if (!(wavelength > 0.0))
        throw domain_error("field needs wavelength > 0");
    if (static_cast<int>(amp.size()) != grid.n)
        throw domain_error("field sample count does not match its grid");
}

void GratingSpec::validate() const {
    if (!(period > 0.0))
        throw domain_error("grating needs period > 0");
    if (!(open_fraction > 0.0) || !(open_fraction < 1.0))
        throw domain_error("grating open_fraction must lie in (0, 1)");
    if (n_slits < 2)
        throw domain_error("grating needs at least 2 slits");
}

bool grating_open_at(const GratingSpec& g, double x, double shift) {
    double h = g.height();
    double u = x - shift;
    if (!(std::abs(u) < 0.5 * h))
        return false;
    double v = u + 0.5 * h;
    double frac = v - std::floor(v / g.period) * g.period;
    return std::abs(frac - 0.5 * g.period) < 0.5 * g.open_fraction * g.period;
}

void GeometrySpec::validate() const {
    if (!(l1 > 0.0) || !(l2 > 0.0))
        throw domain_error("geometry needs l1 > 0 and l2 > 0");
}

WaveField plane_wave(const Grid& g, double wavelength) {
    g.validate();
    if (!(wavelength > 0.0))
        throw domain_error("plane wave needs wavelength > 0");
    WaveField f;
    f.grid = g;
    f.wavelength = wavelength;
    f.amp.assign(g.n, {1.0, 0.0});
    return f;
}

WaveField point_source_field(const Grid& g, double wavelength, double l1,
                             double source_x) {
    g.validate();
    if (!(wavelength > 0.0) || !(l1 > 0.0))
        throw domain_error("point source needs wavelength > 0 and l1 > 0");
    WaveField f;
    f.grid = g;
    f.wavelength = wavelength;
    f.amp.resize(g.n);
    const double k = std::numbers::pi / (wavelength * l1);
    for (int i = 0; i < g.n; ++i) {
        double u = g.x(i) - source_x;
        f.amp[i] = std::polar(1.0, k * u * u);
    }
    return f;
}

void apply_grating(WaveField& f, const GratingSpec& g, double shift) {
    f.validate();
    g.validate();
    if (f.grid.pitch > g.period / 16.0)
        throw domain_error("grid pitch must resolve the grating period by >= 16 samples");
    double lo = shift - 0.5 * g.height();
    double hi = shift + 0.5 * g.height();
    if (f.grid.x(0) > lo || f.grid.x(f.grid.n - 1) < hi)
        throw domain_error("grid does not cover the grating aperture");
    for (int i = 0; i < f.grid.n; ++i)
        if (!grating_open_at(g, f.grid.x(i), shift))
            f.amp[i] = 0.0;
}

double ghost_free_distance(const WaveField& f, double z) {
    return f.wavelength * z / f.grid.pitch;
}

WaveField propagate(const WaveField& f, double z, const Grid& target,
                    const PropagateOptions& opt) {
    f.validate();
    target.validate();
    if (!(z > 0.0))
        throw domain_error("propagation distance must be > 0");

    if (opt.check_boundary && f.grid.n > 2 * opt.edge_bins) {
        double peak = 0.0;
        for (const auto& a : f.amp)
            peak = std::max(peak, std::norm(a));
        double edge = 0.0;
        for (int i = 0; i < opt.edge_bins; ++i) {
            edge = std::max(edge, std::norm(f.amp[i]));
            edge = std::max(edge, std::norm(f.amp[f.grid.n - 1 - i]));
        }
        if (peak > 0.0 && edge > opt.boundary_tol * peak)
            throw domain_error(
                "field reaches the grid boundary (edge intensity " +
                std::to_string(edge / peak) +
                " of peak); widen the grid or apodize the input");
    }

    // gather nonzero sources once; skipping exact zeros changes nothing
    std::vector<double> sx;
    std::vector<std::complex<double>> sa;
    sx.reserve(f.amp.size());
    sa.reserve(f.amp.size());
    for (int i = 0; i < f.grid.n; ++i) {
        if (f.amp[i] != std::complex<double>(0.0, 0.0)) {
            sx.push_back(f.grid.x(i));
            sa.push_back(f.amp[i]);
        }
    }

    WaveField out;
    out.grid = target;
    out.wavelength = f.wavelength;
    out.amp.assign(target.n, {0.0, 0.0});

    const double inv_lz = std::numbers::pi / (f.wavelength * z);
    const std::complex<double> pref =
        std::polar(1.0 / std::sqrt(f.wavelength * z), -0.25 * std::numbers::pi) *
        f.grid.pitch;
    const std::size_t m = sx.size();

    auto one_target = [&](int j) {
        const double xt = target.x(j);
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < m; ++i) {
            double u = xt - sx[i];
            double phase = inv_lz * u * u;
            acc += sa[i] * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        out.amp[j] = pref * acc;
    };

    if (opt.policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < target.n; ++j)
            one_target(j);
    } else {
        for (int j = 0; j < target.n; ++j)
            one_target(j);
    }
    return out;
}

WaveField propagate(const WaveField& f, double z, const PropagateOptions& opt) {
    return propagate(f, z, f.grid, opt);
}

} // namespace qr
