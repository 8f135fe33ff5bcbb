#include "qr/talbot.hpp"

#include <algorithm>
#include <cmath>

#include "qr/errors.hpp"

namespace qr {

double talbot_length(double period, double wavelength) {
    if (!(period > 0.0) || !(wavelength > 0.0))
        throw domain_error("talbot length needs period > 0 and wavelength > 0");
    return period * period / wavelength;
}

double solve_l2(double l1, double lt, double k) {
    if (!(l1 > 0.0) || !(lt > 0.0) || !(k > 0.0))
        throw domain_error("solve_l2 needs positive l1, lt, k");
    double denom = l1 - k * lt;
    if (!(denom > 0.0))
        throw domain_error("source too close: need l1 > k * talbot length");
    return k * lt * l1 / denom;
}

void TalbotConfig::validate() const {
    grating.validate();
    geometry.validate();
    if (!(wavelength > 0.0))
        throw domain_error("config needs wavelength > 0");
    if (samples_per_period < 16)
        throw domain_error("need at least 16 samples per period");
    if (window_periods < 2 || window_periods % 2 != 0)
        throw domain_error("window_periods must be even and >= 2");
    if (window_periods + 4 > grating.n_slits)
        throw domain_error("analysis window must leave at least 2 edge periods");
}

namespace {

struct Planes {
    Grid source;     // covers 1.28x the grating height
    Grid screen;     // m2-magnified central window (+2 periods margin)
    int offset;      // source index aligned with screen index 0
    int window_samples;
    int margin_samples;
};

Planes make_planes(const TalbotConfig& cfg) {
    const int spp = cfg.samples_per_period;
    const double d = cfg.grating.period;
    const double pitch = d / spp;
    const int n_src = static_cast<int>(std::lround(1.28 * cfg.grating.n_slits * spp));
    Planes pl;
    pl.source = Grid::centered(n_src * pitch, n_src);
    const int wp = cfg.window_periods;
    pl.window_samples = wp * spp;
    pl.margin_samples = 2 * spp;
    const int n_tgt = pl.window_samples + 2 * pl.margin_samples;
    const double m2 = cfg.geometry.m2();
    Grid screen;
    screen.n = n_tgt;
    screen.pitch = m2 * pitch;
    screen.x0 = -0.5 * (n_tgt - 1) * screen.pitch;
    pl.screen = screen;
    pl.offset = (n_src - n_tgt) / 2;
    return pl;
}

// Direct quadrature of a sampled chirp produces replica images displaced by
// lambda z / pitch. They must fall outside the screen window: the reach from
// any source sample to any screen sample has to stay below that distance.
void check_sampling(const TalbotConfig& cfg, const Planes& pl,
                    double max_source_offset) {
    const double pitch = pl.source.pitch;
    const double ghost = cfg.wavelength * cfg.geometry.l2 / pitch;
    const double reach = 0.5 * cfg.grating.height() + max_source_offset +
                         0.5 * pl.screen.n * pl.screen.pitch;
    if (ghost < 1.05 * reach)
        throw domain_error(
            "sampling too coarse: chirp replicas would land inside the screen "
            "window; raise samples_per_period or shrink the window");
}

// Pearson correlation of a against b circularly rolled by s samples
double rolled_correlation(const std::vector<double>& a, const std::vector<double>& b,
                          int s) {
    const int n = static_cast<int>(a.size());
    double ma = 0.0, mb = 0.0;
    for (int i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double num = 0.0, va = 0.0, vb = 0.0;
    for (int i = 0; i < n; ++i) {
        double da = a[i] - ma;
        int j = i + s;
        if (j >= n)
            j -= n;
        double db = b[j] - mb;
        num += da * db;
        va += da * da;
        vb += db * db;
    }
    return num / std::sqrt(va * vb);
}

std::vector<double> screen_intensity(const TalbotConfig& cfg, const Planes& pl,
                                     double source_x) {
    WaveField f = point_source_field(pl.source, cfg.wavelength, cfg.geometry.l1,
                                     source_x);
    apply_grating(f, cfg.grating);
    PropagateOptions opt;
    opt.policy = cfg.policy;
    opt.check_boundary = false; // grating mask already zeroes the edges
    WaveField out = propagate(f, cfg.geometry.l2, pl.screen, opt);
    std::vector<double> intensity(out.amp.size());
    for (std::size_t i = 0; i < out.amp.size(); ++i)
        intensity[i] = std::norm(out.amp[i]);
    return intensity;
}

} // namespace

SelfImageResult self_image_check(const TalbotConfig& cfg) {
    cfg.validate();
    Planes pl = make_planes(cfg);
    check_sampling(cfg, pl, 0.0);

    SelfImageResult res;
    res.talbot_len = talbot_length(cfg.grating.period, cfg.wavelength);
    res.m1 = cfg.geometry.m1();
    res.m2 = cfg.geometry.m2();
    res.l_eff = cfg.geometry.l_eff();
    res.screen = pl.screen;
    res.image = screen_intensity(cfg, pl, 0.0);

    res.reference.resize(res.image.size());
    for (std::size_t j = 0; j < res.reference.size(); ++j) {
        double xsrc = pl.source.x(pl.offset + static_cast<int>(j));
        res.reference[j] = grating_open_at(cfg.grating, xsrc) ? 1.0 : 0.0;
    }

    // central window, whole periods only
    std::vector<double> ref(pl.window_samples), img(pl.window_samples);
    for (int i = 0; i < pl.window_samples; ++i) {
        ref[i] = res.reference[pl.margin_samples + i];
        img[i] = res.image[pl.margin_samples + i];
    }

    const int spp = cfg.samples_per_period;
    double best = -2.0;
    int best_s = 0;
    for (int s = 0; s < spp; ++s) {
        double c = rolled_correlation(ref, img, s);
        if (s == 0)
            res.corr_at_zero = c;
        if (c > best) {
            best = c;
            best_s = s;
        }
    }
    res.correlation = best;
    res.best_shift = best_s * pl.screen.pitch;
    return res;
}

TalbotLauResult talbot_lau_scan(const TalbotLauConfig& cfg) {
    cfg.base.validate();
    if (cfg.n_shifts < 3)
        throw domain_error("shift scan needs at least 3 points");
    if (cfg.n_sources < 1)
        throw domain_error("need at least one source");

    Planes pl = make_planes(cfg.base);
    const double m1 = cfg.base.geometry.m1();
    const double m2 = cfg.base.geometry.m2();
    const double matched = m2 * cfg.base.grating.period;

    const double src_pitch_for_check =
        cfg.source_pitch > 0.0 ? cfg.source_pitch : m1 * cfg.base.grating.period;
    check_sampling(cfg.base, pl, 0.5 * (cfg.n_sources - 1) * src_pitch_for_check);

    GratingSpec mask;
    if (cfg.mask) {
        mask = *cfg.mask;
        mask.validate();
    } else {
        mask.period = matched;
        mask.open_fraction = 0.5;
        mask.n_slits = cfg.base.window_periods;
    }

    TalbotLauResult res;
    res.mask_period = mask.period;
    res.pitch_matched = std::abs(mask.period - matched) <= 0.1 * matched;

    const double src_pitch = src_pitch_for_check;

    std::vector<double> intensity(pl.screen.n, 0.0);
    for (int k = 0; k < cfg.n_sources; ++k) {
        double a = (k - 0.5 * (cfg.n_sources - 1)) * src_pitch;
        std::vector<double> one = screen_intensity(cfg.base, pl, a);
        for (int i = 0; i < pl.screen.n; ++i)
            intensity[i] += one[i];
    }

    res.shift.resize(cfg.n_shifts);
    res.transmitted.resize(cfg.n_shifts);
    for (int si = 0; si < cfg.n_shifts; ++si) {
        double s = mask.period * si / (cfg.n_shifts - 1);
        res.shift[si] = s;
        double sum = 0.0;
        for (int i = 0; i < pl.screen.n; ++i) {
            if (cfg.mask_open || grating_open_at(mask, pl.screen.x(i), s))
                sum += intensity[i];
        }
        res.transmitted[si] = sum * pl.screen.pitch;
    }
    double tmax = *std::max_element(res.transmitted.begin(), res.transmitted.end());
    double tmin = *std::min_element(res.transmitted.begin(), res.transmitted.end());
    res.visibility = (tmax + tmin) > 0.0 ? (tmax - tmin) / (tmax + tmin) : 0.0;
    return res;
}

QuantumRatio coherence_quantum_ratio(const GratingSpec& g, const Particle& p) {
    g.validate();
    p.validate();
    return QuantumRatio(g.height(), p.size);
}

CarpetResult talbot_carpet(const GratingSpec& g, double wavelength,
                           const std::vector<double>& distances,
                           int samples_per_period, int window_periods,
                           ExecPolicy policy) {
    g.validate();
    if (!(wavelength > 0.0))
        throw domain_error("carpet needs wavelength > 0");
    if (distances.empty())
        throw domain_error("carpet needs at least one distance");
    if (samples_per_period < 16)
        throw domain_error("need at least 16 samples per period");
    if (window_periods + 4 > g.n_slits)
        throw domain_error("analysis window must leave at least 2 edge periods");

    const double pitch = g.period / samples_per_period;
    const int n_src = static_cast<int>(std::lround(1.28 * g.n_slits * samples_per_period));
    Grid source = Grid::centered(n_src * pitch, n_src);

    const int n_tgt = window_periods * samples_per_period;
    Grid screen;
    screen.n = n_tgt;
    screen.pitch = pitch;
    screen.x0 = -0.5 * (n_tgt - 1) * pitch;

    WaveField f = plane_wave(source, wavelength);
    apply_grating(f, g);

    CarpetResult res;
    res.distance = distances;
    res.screen = screen;
    res.talbot_len = talbot_length(g.period, wavelength);
    res.intensity.reserve(distances.size());
    PropagateOptions opt;
    opt.policy = policy;
    opt.check_boundary = false;
    for (double z : distances) {
        if (!(z > 0.0))
            throw domain_error("carpet distances must be > 0");
        double reach = 0.5 * g.height() + 0.5 * screen.n * screen.pitch;
        if (ghost_free_distance(f, z) < 1.05 * reach)
            throw domain_error(
                "sampling too coarse for carpet distance; raise samples_per_period "
                "or start the distance ladder higher");
        WaveField out = propagate(f, z, screen, opt);
        std::vector<double> row(out.amp.size());
        for (std::size_t i = 0; i < out.amp.size(); ++i)
            row[i] = std::norm(out.amp[i]);
        res.intensity.push_back(std::move(row));
    }
    return res;
}

} // namespace qr
