#include "qr/tunneling.hpp"

#include <cmath>

#include "qr/constants.hpp"
#include "qr/errors.hpp"

namespace qr {

namespace {
const std::complex<double> I{0.0, 1.0};
}

BarrierSpec BarrierSpec::rectangular(double height, double width) {
    return piecewise({{width, height}});
}

BarrierSpec BarrierSpec::piecewise(std::vector<BarrierSegment> segs) {
    BarrierSpec b;
    b.segments = std::move(segs);
    b.validate();
    return b;
}

BarrierSpec BarrierSpec::smooth(std::function<double(double)> v, double z_min,
                                double z_max) {
    BarrierSpec b;
    b.profile = std::move(v);
    b.z_min = z_min;
    b.z_max = z_max;
    b.validate();
    return b;
}

void BarrierSpec::validate() const {
    if (is_piecewise() == static_cast<bool>(profile))
        throw domain_error("barrier must be either piecewise or smooth");
    if (is_piecewise()) {
        for (const auto& s : segments) {
            if (!(s.width >= 0.0) || !std::isfinite(s.width) || !std::isfinite(s.height))
                throw domain_error("barrier segments need width >= 0 and finite height");
        }
        if (!(support() > 0.0))
            throw domain_error("barrier needs positive total width");
    } else {
        if (!(z_max > z_min))
            throw domain_error("smooth barrier needs z_max > z_min");
    }
}

double BarrierSpec::support() const {
    if (is_piecewise()) {
        double w = 0.0;
        for (const auto& s : segments)
            w += s.width;
        return w;
    }
    return z_max - z_min;
}

double BarrierSpec::max_height() const {
    if (is_piecewise()) {
        double h = segments[0].height;
        for (const auto& s : segments)
            h = std::max(h, s.height);
        return h;
    }
    double h = profile(z_min);
    const int n = 4096;
    for (int i = 1; i <= n; ++i)
        h = std::max(h, profile(z_min + (z_max - z_min) * i / n));
    return h;
}

namespace {

// adaptive Simpson with absolute-scaled tolerance
double simpson_rec(const std::function<double(double)>& f, double a, double fa,
                   double b, double fb, double m, double fm, double whole,
                   double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0)
        throw integration_error("barrier integral did not converge");
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol) {
    if (!(b > a))
        return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fb = f(b), fm = f(m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double scale = std::max(std::abs(whole), 1e-300);
    return simpson_rec(f, a, fa, b, fb, m, fm, whole, rel_tol * scale, 48);
}

// ln sinh(x) for x > 0 without overflow
double log_sinh(double x) {
    if (x > 350.0)
        return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
    return std::log(std::sinh(x));
}

} // namespace

TransmissionResult wkb_transmission(const BarrierSpec& b, double energy, double mass) {
    b.validate();
    if (!(mass > 0.0))
        throw domain_error("transmission needs mass > 0");
    if (!(energy > 0.0))
        throw domain_error("transmission needs energy > 0");
    if (!(energy < b.max_height()))
        throw domain_error("semiclassical exponent needs energy below the barrier top");

    double integral = 0.0; // of sqrt(2m(V-E))/hbar over forbidden region

    if (b.is_piecewise()) {
        double comp = 0.0;
        for (const auto& s : b.segments) {
            if (s.height > energy && s.width > 0.0) {
                double v = s.width * std::sqrt(2.0 * mass * (s.height - energy)) / hbar -
                           comp;
                double t = integral + v;
                comp = (t - integral) - v;
                integral = t;
            }
        }
    } else {
        // locate turning points: sign changes of V - E on a scan grid,
        // refined by bisection to support/1e6
        const int scan = 8192;
        const double dz = (b.z_max - b.z_min) / scan;
        const double tol = b.support() / 1e6;
        auto f = [&](double z) { return b.profile(z) - energy; };

        auto bisect = [&](double lo, double hi) {
            double flo = f(lo);
            for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
                double mid = 0.5 * (lo + hi);
                if ((f(mid) > 0.0) == (flo > 0.0)) {
                    lo = mid;
                    flo = f(mid);
                } else {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        };

        std::vector<std::pair<double, double>> forbidden;
        double prev = f(b.z_min);
        bool inside = prev > 0.0;
        double start = b.z_min;
        for (int i = 1; i <= scan; ++i) {
            double z = b.z_min + i * dz;
            double cur = f(z);
            if (!inside && cur > 0.0 && prev <= 0.0) {
                start = bisect(z - dz, z);
                inside = true;
            } else if (inside && cur <= 0.0 && prev > 0.0) {
                forbidden.emplace_back(start, bisect(z - dz, z));
                inside = false;
            }
            prev = cur;
        }
        if (inside)
            forbidden.emplace_back(start, b.z_max);
        if (forbidden.empty())
            throw integration_error("no classically forbidden region found");

        for (auto [a, c] : forbidden) {
            double mid = 0.5 * (a + c);
            // substitute z = a + s^2 (and mirrored) to remove the sqrt edges
            auto left = [&](double s) {
                double v = b.profile(a + s * s) - energy;
                return 2.0 * s * std::sqrt(std::max(v, 0.0));
            };
            auto right = [&](double s) {
                double v = b.profile(c - s * s) - energy;
                return 2.0 * s * std::sqrt(std::max(v, 0.0));
            };
            double part = adaptive_simpson(left, 0.0, std::sqrt(mid - a), 1e-10) +
                          adaptive_simpson(right, 0.0, std::sqrt(c - mid), 1e-10);
            integral += std::sqrt(2.0 * mass) / hbar * part;
        }
    }

    TransmissionResult r;
    r.log_transmission = -2.0 * integral;
    r.transmission = std::exp(r.log_transmission);
    r.reflection = 1.0 - r.transmission;
    r.method = "wkb";
    return r;
}

TransmissionResult transfer_matrix_transmission(const BarrierSpec& b, double energy,
                                                double mass) {
    b.validate();
    if (!b.is_piecewise())
        throw domain_error("transfer matrix needs a piecewise-constant barrier");
    if (!(mass > 0.0) || !(energy > 0.0))
        throw domain_error("transmission needs mass > 0 and energy > 0");

    const double k_out = std::sqrt(2.0 * mass * energy) / hbar;

    // wavevectors: leads + segments, skipping zero-width segments entirely
    std::vector<std::complex<double>> k;
    std::vector<double> width;
    k.push_back({k_out, 0.0});
    width.push_back(0.0);
    for (const auto& s : b.segments) {
        if (s.width == 0.0)
            continue;
        std::complex<double> kj =
            std::sqrt(std::complex<double>(2.0 * mass * (energy - s.height), 0.0)) / hbar;
        if (std::abs(kj) * b.support() < 1e-12)
            throw domain_error("energy degenerate with a segment height");
        k.push_back(kj);
        width.push_back(s.width);
    }
    k.push_back({k_out, 0.0});
    width.push_back(0.0);

    // coefficients transform as (A,B)_right = M (A,B)_left with
    // interface I(a->b) = 1/2 [[1+ka/kb, 1-ka/kb],[1-ka/kb, 1+ka/kb]]
    // and in-segment propagation diag(e^{ikw}, e^{-ikw}). Growth of the
    // decaying basis state is factored into log_scale.
    std::complex<double> m11{1.0, 0.0}, m12{0.0, 0.0}, m21{0.0, 0.0}, m22{1.0, 0.0};
    double log_scale = 0.0;

    auto left_multiply = [&](std::complex<double> a11, std::complex<double> a12,
                             std::complex<double> a21, std::complex<double> a22) {
        std::complex<double> n11 = a11 * m11 + a12 * m21;
        std::complex<double> n12 = a11 * m12 + a12 * m22;
        std::complex<double> n21 = a21 * m11 + a22 * m21;
        std::complex<double> n22 = a21 * m12 + a22 * m22;
        m11 = n11;
        m12 = n12;
        m21 = n21;
        m22 = n22;
    };

    const std::size_t regions = k.size();
    for (std::size_t j = 1; j < regions; ++j) {
        std::complex<double> ratio = k[j - 1] / k[j];
        left_multiply(0.5 * (1.0 + ratio), 0.5 * (1.0 - ratio),
                      0.5 * (1.0 - ratio), 0.5 * (1.0 + ratio));
        if (j + 1 < regions && width[j] > 0.0) {
            double g = k[j].imag() * width[j]; // growth exponent, >= 0
            std::complex<double> up = std::exp(I * k[j] * width[j] - g);
            std::complex<double> dn = std::exp(-I * k[j] * width[j] - g);
            left_multiply(up, 0.0, 0.0, dn);
            log_scale += g;
        }
    }

    TransmissionResult r;
    r.method = "transfer-matrix";
    const double am22 = std::abs(m22);
    r.log_transmission = -2.0 * (log_scale + std::log(am22));
    r.transmission = std::exp(r.log_transmission);
    r.reflection = std::norm(m21 / m22);
    return r;
}

double rectangular_transmission(double v0, double width, double energy, double mass) {
    if (!(v0 > 0.0) || !(width > 0.0) || !(energy > 0.0) || !(mass > 0.0))
        throw domain_error("rectangular barrier needs positive v0, width, energy, mass");
    if (energy < v0) {
        double kappa = std::sqrt(2.0 * mass * (v0 - energy)) / hbar;
        double x = kappa * width;
        double ratio = v0 * v0 / (4.0 * energy * (v0 - energy));
        if (x > 20.0) {
            // 1 + ratio sinh^2 ~= ratio sinh^2; work in logs
            double ln = std::log(ratio) + 2.0 * log_sinh(x);
            return std::exp(-ln);
        }
        double s = std::sinh(x);
        return 1.0 / (1.0 + ratio * s * s);
    }
    if (energy > v0) {
        double kp = std::sqrt(2.0 * mass * (energy - v0)) / hbar;
        double s = std::sin(kp * width);
        return 1.0 / (1.0 + v0 * v0 * s * s / (4.0 * energy * (energy - v0)));
    }
    double q = mass * v0 * width * width / (2.0 * hbar * hbar);
    return 1.0 / (1.0 + q);
}

TunnelReport tunnel_scenario(const TunnelScenario& sc) {
    sc.barrier.validate();
    if (!(sc.mass > 0.0) || !(sc.energy > 0.0))
        throw domain_error("scenario needs mass > 0 and energy > 0");
    if (!(sc.weight_1 >= 0.0) || !(sc.weight_2 >= 0.0) ||
        std::abs(sc.weight_1 + sc.weight_2 - 1.0) > 1e-12)
        throw domain_error("branch weights must be nonnegative and sum to 1");
    if (!(sc.coherence >= 0.0) ||
        sc.coherence > std::sqrt(sc.weight_1 * sc.weight_2) + 1e-12)
        throw domain_error("coherence must satisfy 0 <= c <= sqrt(w1 w2)");

    TunnelReport rep;
    const double vmax = sc.barrier.max_height();
    if (sc.energy < vmax) {
        rep.wkb = wkb_transmission(sc.barrier, sc.energy, sc.mass);
    } else {
        rep.wkb.transmission = 1.0;
        rep.wkb.reflection = 0.0;
        rep.wkb.log_transmission = 0.0;
        rep.wkb.method = "wkb-above-barrier";
    }
    if (sc.barrier.is_piecewise()) {
        rep.exact = transfer_matrix_transmission(sc.barrier, sc.energy, sc.mass);
        rep.transmitted_fraction = rep.exact->transmission;
    } else {
        rep.transmitted_fraction = rep.wkb.transmission;
    }

    rep.coherence_after = sc.coherence;

    const double speed = std::sqrt(2.0 * sc.energy / sc.mass);
    rep.transit_time = sc.barrier.support() / speed;
    if (sc.momentum_spread && *sc.momentum_spread > 0.0) {
        double b = *sc.momentum_spread;
        rep.spread_bound = 2.0 * sc.mass * hbar / (b * b);
        rep.spread_negligible = rep.transit_time <= 0.1 * rep.spread_bound;
    }
    return rep;
}

} // namespace qr
