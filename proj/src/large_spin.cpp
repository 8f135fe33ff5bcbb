#include "qr/large_spin.hpp"

#include <cmath>
#include <numbers>

#include "qr/errors.hpp"

namespace qr {

namespace {

struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double v) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

} // namespace

LargeSpinDistribution large_spin_distribution(std::uint64_t n, double theta,
                                              ExecPolicy policy) {
    if (n < 1 || n > 10'000'000)
        throw domain_error("constituent count must lie in [1, 1e7]");
    if (!(theta >= 0.0) || !(theta <= std::numbers::pi))
        throw domain_error("tilt angle must lie in [0, pi]");

    LargeSpinDistribution d;
    d.n = n;
    d.theta = theta;

    const double c = std::cos(0.5 * theta); // amplitude of an up constituent
    const double s = std::sin(0.5 * theta);
    const std::int64_t nn = static_cast<std::int64_t>(n);

    // exact delta at the poles, where one of the logs diverges
    if (c == 0.0 || s == 0.0) {
        d.weight.assign(n + 1, 0.0);
        d.weight[c == 0.0 ? 0 : n] = 1.0;
        return d;
    }

    const double lc = 2.0 * std::log(c);
    const double ls = 2.0 * std::log(s);
    const double lg_n = std::lgamma(static_cast<double>(n) + 1.0);

    std::vector<double> lw(n + 1);
    auto fill = [&](std::int64_t k) {
        lw[k] = lg_n - std::lgamma(static_cast<double>(k) + 1.0) -
                std::lgamma(static_cast<double>(nn - k) + 1.0) +
                static_cast<double>(k) * lc + static_cast<double>(nn - k) * ls;
    };
    if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k <= nn; ++k)
            fill(k);
    } else {
        for (std::int64_t k = 0; k <= nn; ++k)
            fill(k);
    }

    double peak = lw[0];
    for (std::int64_t k = 1; k <= nn; ++k)
        peak = std::max(peak, lw[k]);

    d.weight.resize(n + 1);
    Kahan total;
    for (std::int64_t k = 0; k <= nn; ++k) {
        d.weight[k] = std::exp(lw[k] - peak);
        total.add(d.weight[k]);
    }
    const double inv = 1.0 / total.sum;
    for (std::int64_t k = 0; k <= nn; ++k)
        d.weight[k] *= inv;
    return d;
}

SpikeAnalysis spike_analysis(const LargeSpinDistribution& d) {
    if (d.weight.size() != d.n + 1)
        throw domain_error("distribution is empty");
    if (!(d.theta > 0.0) || !(d.theta < std::numbers::pi))
        throw domain_error("spike analysis needs theta strictly inside (0, pi)");

    const std::int64_t nn = static_cast<std::int64_t>(d.n);
    const double fn = static_cast<double>(d.n);
    const double c = std::cos(0.5 * d.theta);
    const double x0 = c * c;

    Kahan mean;
    for (std::int64_t k = 0; k <= nn; ++k)
        mean.add(d.weight[k] * (static_cast<double>(k) / fn));
    const double mean_x = mean.sum;

    Kahan var;
    for (std::int64_t k = 0; k <= nn; ++k) {
        double dx = static_cast<double>(k) / fn - mean_x;
        var.add(d.weight[k] * dx * dx);
    }

    // discretized spike Gaussian on the same lattice
    const double inv_two_var = fn / (2.0 * x0 * (1.0 - x0));
    Kahan gnorm;
    std::vector<double> g(d.n + 1);
    for (std::int64_t k = 0; k <= nn; ++k) {
        double dx = static_cast<double>(k) / fn - x0;
        g[k] = std::exp(-dx * dx * inv_two_var);
        gnorm.add(g[k]);
    }
    const double ginv = 1.0 / gnorm.sum;
    Kahan tv;
    for (std::int64_t k = 0; k <= nn; ++k)
        tv.add(std::abs(d.weight[k] - g[k] * ginv));

    SpikeAnalysis a;
    a.mean_x = mean_x;
    a.std_x = std::sqrt(var.sum);
    a.x0 = x0;
    a.sz_mean = fn * (mean_x - 0.5);
    a.tv_gaussian = 0.5 * tv.sum;
    return a;
}

} // namespace qr
