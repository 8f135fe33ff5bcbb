#include "qr/sg_experiment.hpp"

#include <algorithm>
#include <cmath>

#include "qr/constants.hpp"
#include "qr/errors.hpp"
#include "qr/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qr {

double SGScenario::transit_time() const {
    return field.length / speed;
}

void SGScenario::validate() const {
    particle.validate();
    if (!(speed > 0.0))
        throw domain_error("scenario needs speed > 0");
    if (!(sigma0 > 0.0))
        throw domain_error("scenario needs sigma0 > 0");
    if (!(moment != 0.0) || !std::isfinite(moment))
        throw domain_error("scenario needs a nonzero magnetic moment");
}

SGReport run_sg_pure(const SGScenario& sc, const SpinHalfState& spin) {
    sc.validate();
    spin.validate();
    sc.field.validate();

    const double t = sc.transit_time();
    GaussianPacket start = make_packet(0.0, 0.0, sc.sigma0, sc.particle.mass);
    GaussianPacket up = sg_closed_form(start, sc.moment, +1, sc.field, t);
    GaussianPacket down = sg_closed_form(start, sc.moment, -1, sc.field, t);

    SGReport r;
    r.transit_time = t;
    r.up = {up.center, up.momentum, up.position_std(), spin.up_weight()};
    r.down = {down.center, down.momentum, down.position_std(), spin.down_weight()};
    r.separation = std::abs(up.center - down.center);
    r.r_q_separation = r.separation;
    r.r_q_support = r.separation + 2.0 * up.size();
    QuantumRatio q(r.r_q_support, sc.particle.size);
    r.q_infinite = q.infinite();
    r.q_value = q.infinite() ? 0.0 : q.value();
    r.regime = classify(q);
    auto bands = band_intensities(DensityMatrix2::pure(spin));
    r.band_up = bands.first;
    r.band_down = bands.second;
    r.doubling_time = doubling_time(sc.particle.mass, sc.sigma0);
    return r;
}

double classical_deflection(const SGScenario& sc, double theta) {
    const double t = sc.transit_time();
    return 0.5 * sc.moment * std::cos(theta) * sc.field.gradient * t * t /
           sc.particle.mass;
}

namespace {

ScreenImage image_from_counts(const std::vector<std::uint64_t>& counts, double lo,
                              double hi, double data_min, double data_max,
                              std::size_t total) {
    ScreenImage img;
    int n = static_cast<int>(counts.size());
    img.edges.resize(n + 1);
    double w = (hi - lo) / n;
    for (int i = 0; i <= n; ++i)
        img.edges[i] = lo + i * w;
    img.weight.resize(n);
    for (int i = 0; i < n; ++i)
        img.weight[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    img.data_min = data_min;
    img.data_max = data_max;
    return img;
}

} // namespace

ScreenImage classical_sg_ensemble(const SGScenario& sc, const OrientationSampler& s,
                                  std::size_t n_samples, std::uint64_t seed,
                                  int n_bins, ExecPolicy policy) {
    sc.validate();
    sc.field.validate();
    if (n_samples < 1)
        throw domain_error("ensemble needs at least one sample");
    if (n_bins < 8)
        throw domain_error("ensemble needs at least 8 bins");

    const double t = sc.transit_time();
    const double d_max =
        0.5 * std::abs(sc.moment * sc.field.gradient) * t * t / sc.particle.mass;
    const double bound = 1.2 * d_max;
    const double lo = -bound, hi = bound;
    const double inv_width = n_bins / (hi - lo);

    auto deflection = [&](std::size_t i) {
        double cos_theta;
        if (s.kind == OrientationSampler::Kind::fixed) {
            cos_theta = std::cos(s.theta);
        } else {
            SplitMix64 g = stream_for(seed, i);
            cos_theta = g.uniform(-1.0, 1.0);
        }
        return 0.5 * sc.moment * cos_theta * sc.field.gradient * t * t /
               sc.particle.mass;
    };
    auto bin_of = [&](double x) {
        int b = static_cast<int>((x - lo) * inv_width);
        return std::clamp(b, 0, n_bins - 1);
    };

    std::vector<std::uint64_t> counts(n_bins, 0);
    const long long n = static_cast<long long>(n_samples);
    if (policy == ExecPolicy::parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<std::uint64_t> local(n_bins, 0);
#pragma omp for schedule(static)
            for (long long i = 0; i < n; ++i)
                ++local[bin_of(deflection(static_cast<std::size_t>(i)))];
#pragma omp critical
            for (int b = 0; b < n_bins; ++b)
                counts[b] += local[b];
        }
#else
        for (long long i = 0; i < n; ++i)
            ++counts[bin_of(deflection(static_cast<std::size_t>(i)))];
#endif
    } else {
        for (long long i = 0; i < n; ++i)
            ++counts[bin_of(deflection(static_cast<std::size_t>(i)))];
    }
    return image_from_counts(counts, lo, hi, -d_max, d_max, n_samples);
}

ScreenImage quantum_screen_image(const SGScenario& sc, const SpinHalfState& spin,
                                 int n_bins) {
    SGReport rep = run_sg_pure(sc, spin);
    const double sig = rep.up.sigma;
    const double reach = std::max(std::abs(rep.up.center), std::abs(rep.down.center));
    const double bound = 1.2 * (reach + 4.0 * sig);

    ScreenImage img;
    img.edges.resize(n_bins + 1);
    double w = 2.0 * bound / n_bins;
    for (int i = 0; i <= n_bins; ++i)
        img.edges[i] = -bound + i * w;
    img.weight.assign(n_bins, 0.0);
    img.data_min = -(reach + 4.0 * sig);
    img.data_max = reach + 4.0 * sig;

    auto cdf = [&](double x, double c) {
        return 0.5 * std::erfc(-(x - c) / (sig * std::numbers::sqrt2));
    };
    double total = 0.0;
    for (int i = 0; i < n_bins; ++i) {
        double a = img.edges[i], b = img.edges[i + 1];
        double v = rep.band_up * (cdf(b, rep.up.center) - cdf(a, rep.up.center)) +
                   rep.band_down * (cdf(b, rep.down.center) - cdf(a, rep.down.center));
        img.weight[i] = v;
        total += v;
    }
    for (double& v : img.weight)
        v /= total;
    return img;
}

double interior_min_over_mean(const ScreenImage& img, double fraction) {
    if (!(fraction > 0.0) || !(fraction <= 1.0))
        throw domain_error("interior fraction must lie in (0, 1]");
    double mid = 0.5 * (img.data_min + img.data_max);
    double half = 0.5 * fraction * (img.data_max - img.data_min);
    double lo = mid - half, hi = mid + half;
    double min_w = 0.0, sum = 0.0;
    int count = 0;
    for (int i = 0; i < img.bins(); ++i) {
        if (img.edges[i] >= lo && img.edges[i + 1] <= hi) {
            double v = img.weight[i];
            min_w = (count == 0) ? v : std::min(min_w, v);
            sum += v;
            ++count;
        }
    }
    if (count == 0)
        throw domain_error("no histogram bin lies fully inside the interior window");
    return min_w * count / sum;
}

double window_weight(const ScreenImage& img, double center, double halfwidth) {
    double sum = 0.0;
    for (int i = 0; i < img.bins(); ++i)
        if (std::abs(img.center(i) - center) <= halfwidth)
            sum += img.weight[i];
    return sum;
}

} // namespace qr
