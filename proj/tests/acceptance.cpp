// Acceptance gate: eight end-to-end checks, one pass/fail line each.
// Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "qr/constants.hpp"
#include "qr/decoherence.hpp"
#include "qr/gaussian.hpp"
#include "qr/large_spin.hpp"
#include "qr/particle.hpp"
#include "qr/quantum_ratio.hpp"
#include "qr/sg_experiment.hpp"
#include "qr/talbot.hpp"
#include "qr/tunneling.hpp"
#include "qr/wavefield.hpp"

using namespace qr;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

void check(bool ok, const std::string& what) {
    if (!ok)
        note("failed: " + what);
}

template <typename F>
void criterion(int id, const char* title, double budget_s, F body) {
    g_notes.clear();
    auto t0 = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        note(std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > budget_s)
        note("over budget: " + std::to_string(dt) + " s > " + std::to_string(budget_s) + " s");
    bool ok = g_notes.empty();
    std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, title, dt);
    if (!ok) {
        for (const auto& n : g_notes)
            std::printf("  - %s\n", n.c_str());
        ++g_failures;
    }
}

SGScenario silver_beam() {
    SGScenario sc;
    sc.particle.name = "Ag";
    sc.particle.mass = 107.8682 * atomic_mass_unit;
    sc.particle.size = 1.44e-10;
    sc.speed = 600.0;
    sc.sigma0 = 1e-5;
    sc.moment = bohr_magneton;
    sc.field.bias = 1.0;
    sc.field.gradient = 1136.5;
    sc.field.length = 0.035;
    sc.field.transverse_extent = 4e-5;
    return sc;
}

} // namespace

int main() {
    // 1. free-packet doubling times across 22 orders of magnitude in mass
    criterion(1, "free-diffusion doubling times land in the right decades", 1.0, [] {
        struct Row { const char* name; double mass; double reference; };
        const Row rows[] = {
            {"electron", electron_mass, 1e-8},
            {"hydrogen", 1.008 * atomic_mass_unit, 1.6e-5},
            {"C70", 840.94 * atomic_mass_unit, 8e-3},
            {"stone1g", 1e-3, 1e19},
        };
        const double sigma0 = 0.5e-6; // body prepared at 1 um size
        for (const auto& r : rows) {
            double td = doubling_time(r.mass, sigma0);
            double ratio = td / r.reference;
            check(ratio > 1.0 / 3.0 && ratio < 3.0,
                  std::string(r.name) + " ratio " + std::to_string(ratio));
        }
        double base = doubling_time(electron_mass, sigma0);
        for (double f : {2.0, 1e3, 1e12, 1e27}) {
            double r = doubling_time(f * electron_mass, sigma0) / (f * base);
            check(std::abs(r - 1.0) <= 1e-10, "mass linearity at factor " + std::to_string(f));
        }
    });

    // 2. the benchmark interference experiments sit in their expected decades of Q
    criterion(2, "benchmark coherence ratios hit their expected decades", 1.0, [] {
        auto exps = builtin_experiments();
        check(exps.size() == 4, "expected 4 presets, got " + std::to_string(exps.size()));
        for (const auto& e : exps) {
            QuantumRatio q(e.r_q, e.l0);
            double dev = std::abs(q.log10_value() - e.expected_log10_q);
            check(dev <= 0.5, e.name + " log10 deviation " + std::to_string(dev));
            check(classify(q) == Regime::quantum, e.name + " not in the quantum regime");
        }
    });

    // 3. beam-splitting dynamics: integrator vs closed form, ballistic separation
    criterion(3, "splitter dynamics match the closed form", 1.0, [] {
        SGScenario sc = silver_beam();
        GaussianPacket start = make_packet(0.0, 0.0, sc.sigma0, sc.particle.mass);
        double t = sc.transit_time();
        BranchTrajectory traj = sg_integrate(start, sc.moment, +1, sc.field, t, 2000, 50);

        double sz = 0, sp = 0, sg = 0, ss = 0;
        std::vector<GaussianPacket> ref(traj.time.size());
        for (std::size_t i = 0; i < traj.time.size(); ++i) {
            ref[i] = sg_closed_form(start, sc.moment, +1, sc.field, traj.time[i]);
            sz = std::max(sz, std::abs(ref[i].center));
            sp = std::max(sp, std::abs(ref[i].momentum));
            sg = std::max(sg, std::abs(ref[i].width_g));
            ss = std::max(ss, std::abs(ref[i].sigma));
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < traj.time.size(); ++i) {
            const GaussianPacket& num = traj.state[i];
            worst = std::max(worst, std::abs(num.center - ref[i].center) / sz);
            worst = std::max(worst, std::abs(num.momentum - ref[i].momentum) / sp);
            worst = std::max(worst, std::abs(num.width_g - ref[i].width_g) / sg);
            worst = std::max(worst, std::abs(num.sigma - ref[i].sigma) / ss);
        }
        check(worst <= 1e-8, "integrator sup-norm deviation " + std::to_string(worst));

        SGReport rep = run_sg_pure(sc, {std::numbers::pi / 2.0, 0.0});
        double expected = sc.moment * sc.field.gradient * t * t / sc.particle.mass;
        check(std::abs(rep.separation / expected - 1.0) <= 1e-10,
              "separation deviates from the ballistic formula");
    });

    // 4. a large collective spin sharpens into a classical spike
    criterion(4, "collective spin distribution collapses to a 1/sqrt(N) spike", 10.0, [] {
        const double theta = std::numbers::pi / 4.0;
        const double x0 = std::cos(theta / 2.0) * std::cos(theta / 2.0);
        const double width_const = std::sqrt(x0 * (1.0 - x0));

        double prev_scaled = -1.0;
        for (std::uint64_t n : {100ull, 1000ull, 10000ull, 100000ull}) {
            auto d = large_spin_distribution(n, theta);
            auto a = spike_analysis(d);
            check(std::abs(a.mean_x - x0) <= 1e-12,
                  "mean at n=" + std::to_string(n) + " off by "
                      + std::to_string(a.mean_x - x0));
            double scaled = a.std_x * std::sqrt(static_cast<double>(n));
            check(std::abs(scaled - width_const) <= 1e-10,
                  "scaled width at n=" + std::to_string(n));
            if (prev_scaled >= 0.0)
                check(std::abs(scaled - prev_scaled) <= 1e-10, "width scaling drifts");
            prev_scaled = scaled;
            if (n == 1000)
                check(a.tv_gaussian <= 0.05, "tv at n=1e3: " + std::to_string(a.tv_gaussian));
            if (n == 100000)
                check(a.tv_gaussian <= 0.01, "tv at n=1e5: " + std::to_string(a.tv_gaussian));
        }

        auto big = large_spin_distribution(1000000, theta);
        double sum = parallel::kahan_sum(big.weight.data(), big.weight.size());
        check(std::abs(sum - 1.0) <= 1e-10, "n=1e6 normalization " + std::to_string(sum - 1.0));
    });

    // 5. near-field self-imaging revives, shifts by half a period at half
    //    distance, and survives an incoherent source array behind a mask scan
    criterion(5, "near-field revivals and masked fringe scan", 60.0, [] {
        TalbotConfig cfg;
        cfg.grating.period = 2e-7;
        cfg.grating.open_fraction = 0.5;
        cfg.grating.n_slits = 100;
        cfg.wavelength = de_broglie_wavelength(22.989769 * atomic_mass_unit, 1000.0);
        cfg.samples_per_period = 128;
        cfg.window_periods = 80;
        double lt = talbot_length(cfg.grating.period, cfg.wavelength);

        cfg.geometry.l1 = 4.0 * lt; // resonance 2: revival in registry
        cfg.geometry.l2 = 4.0 * lt;
        SelfImageResult even = self_image_check(cfg);
        double period = even.m2 * cfg.grating.period;
        check(even.correlation >= 0.8,
              "revival correlation " + std::to_string(even.correlation));
        double circ = std::min(even.best_shift, period - even.best_shift);
        check(circ <= 0.05 * period, "revival shift " + std::to_string(even.best_shift));

        cfg.geometry.l1 = 2.0 * lt; // resonance 1: revival shifted half a period
        cfg.geometry.l2 = 2.0 * lt;
        SelfImageResult odd = self_image_check(cfg);
        double half = 0.5 * odd.m2 * cfg.grating.period;
        check(odd.correlation >= 0.8,
              "half-revival correlation " + std::to_string(odd.correlation));
        check(std::abs(odd.best_shift - half) <= 0.05 * half,
              "half-revival shift " + std::to_string(odd.best_shift) + " vs " + std::to_string(half));

        TalbotLauConfig tl;
        tl.base = cfg;
        tl.base.geometry.l1 = 4.0 * lt;
        tl.base.geometry.l2 = 4.0 * lt;
        tl.n_shifts = 33;
        tl.n_sources = 5; // incoherent array at the matched pitch
        TalbotLauResult fringes = talbot_lau_scan(tl);
        check(fringes.pitch_matched, "mask pitch not matched");
        check(fringes.visibility >= 0.3,
              "masked visibility " + std::to_string(fringes.visibility));

        tl.mask_open = true;
        TalbotLauResult open = talbot_lau_scan(tl);
        check(open.visibility == 0.0,
              "open-mask visibility " + std::to_string(open.visibility));
    });

    // 6. barrier transmission: exact unitarity, closed-form oracle, and the
    //    semiclassical exponent converging from above
    criterion(6, "barrier scan is unitary and semiclassically consistent", 1.0, [] {
        const double m = electron_mass;
        const double v0 = electron_volt, w = 1e-9;
        BarrierSpec b = BarrierSpec::rectangular(v0, w);
        double max_unitarity = 0.0, max_oracle_dev = 0.0;
        for (int i = 0; i < 100; ++i) {
            double e = v0 * (0.05 + 1.45 * i / 99.0);
            if (std::abs(e - v0) < 1e-6 * v0)
                continue;
            TransmissionResult tm = transfer_matrix_transmission(b, e, m);
            max_unitarity = std::max(max_unitarity,
                                     std::abs(tm.transmission + tm.reflection - 1.0));
            double oracle = rectangular_transmission(v0, w, e, m);
            max_oracle_dev = std::max(max_oracle_dev, std::abs(tm.transmission - oracle));
        }
        check(max_unitarity <= 1e-10, "unitarity " + std::to_string(max_unitarity));
        check(max_oracle_dev <= 1e-10, "oracle deviation " + std::to_string(max_oracle_dev));

        double prev = 1e300;
        for (double kw : {3.0, 5.0, 10.0, 20.0}) {
            double kap = kw / w;
            double e = kap * kap * hbar * hbar / (2.0 * m);
            BarrierSpec bb = BarrierSpec::rectangular(2.0 * e, w);
            TransmissionResult exact = transfer_matrix_transmission(bb, e, m);
            TransmissionResult wkb = wkb_transmission(bb, e, m);
            double ln_ratio = std::abs(wkb.log_transmission - exact.log_transmission)
                              / std::abs(exact.log_transmission);
            check(ln_ratio < prev, "semiclassical error not shrinking at kw=" + std::to_string(kw));
            if (kw >= 10.0)
                check(ln_ratio <= 0.1, "semiclassical error at kw=" + std::to_string(kw));
            prev = ln_ratio;
        }
    });

    // 7. losing the off-diagonal is not the same as being classical: bands
    //    never notice, fringes die, and only the classical ensemble fills the gap
    criterion(7, "decoherence kills fringes but not band structure", 5.0, [] {
        SpinHalfState spin{std::numbers::pi / 3.0, 0.0};
        BranchDensity rho = branch_density_from_spin(spin, 1e-4, -1e-4, 1e-8);
        EnvironmentSpec env;
        env.rate = 1e10;
        env.wavelength = 1e-6;
        env.label = "acceptance";

        auto before = mixed_band_prediction(rho);
        BranchDensity dead = decohere(rho, env, 1e3);
        auto after = mixed_band_prediction(dead);
        check(before.first == after.first && before.second == after.second,
              "band weights changed under decoherence");
        check(std::abs(dead.off_diagonal) == 0.0, "off-diagonal survived 1e13 decay times");

        double gamma = fringe_gamma(rho);
        double imax = two_path_intensity(rho, 0.0);
        double imin = two_path_intensity(rho, std::numbers::pi);
        double vis = (imax - imin) / (imax + imin);
        check(std::abs(vis - gamma) <= 1e-12, "visibility differs from gamma");

        BranchDensity one = decohere(rho, env, 7e-11);
        BranchDensity two = decohere(decohere(rho, env, 3e-11), env, 4e-11);
        check(std::abs(one.purity() - two.purity()) <= 1e-12 * one.purity(),
              "purity decay is not a semigroup");

        SGScenario sc = silver_beam();
        ScreenImage classical =
            classical_sg_ensemble(sc, OrientationSampler{}, 100000, 12345, 201);
        check(interior_min_over_mean(classical) >= 0.2,
              "classical ensemble leaves interior gaps");

        SGReport rep = run_sg_pure(sc, {std::numbers::pi / 2.0, 0.0});
        ScreenImage quantum = quantum_screen_image(sc, {std::numbers::pi / 2.0, 0.0}, 201);
        double two_band = window_weight(quantum, rep.up.center, 4.0 * rep.up.sigma)
                        + window_weight(quantum, rep.down.center, 4.0 * rep.down.sigma);
        check(two_band >= 0.99, "two-band weight " + std::to_string(two_band));
    });

    // 8. a pinned oscillator width does not spread; released packets do,
    //    at the free-diffusion rate set by their mass
    criterion(8, "pinned widths hold, released widths spread by mass", 5.0, [] {
        CoherentState s;
        s.amplitude = 1e-6;
        s.phase = 0.2;
        s.omega = 2.0 * std::numbers::pi * 1e5;
        s.mass = electron_mass;
        double D = s.ground_variance();
        double T = 2.0 * std::numbers::pi / s.omega;
        for (int k = 0; k <= 40; ++k) {
            OscillatorPoint pt = coherent_evolve(s, k * T / 4.0);
            check(std::abs(pt.variance / D - 1.0) <= 1e-12,
                  "pinned width drifted at t=" + std::to_string(k * T / 4.0));
        }

        // released electron-mass packet prepared at 1 um size
        CoherentState e;
        e.amplitude = 0.0;
        e.phase = 0.0;
        e.mass = electron_mass;
        e.omega = hbar / (2.0 * e.mass * 0.25e-12); // ground std 0.5 um
        GaussianPacket ge = quench(e, 0.0);
        double sig0 = ge.position_std();
        double td = doubling_time(e.mass, sig0);
        GaussianPacket spread = free_evolve(ge, td);
        check(std::abs(spread.position_std() / (2.0 * sig0) - 1.0) <= 1e-10,
              "released packet missed its doubling width");
        double ratio = td / 1e-8;
        check(ratio > 1.0 / 3.0 && ratio < 3.0,
              "electron-scale doubling time " + std::to_string(td));

        // a released 1 g body keeps its width for 1e6 s
        CoherentState g;
        g.amplitude = 1e-3;
        g.phase = 0.0;
        g.mass = 1e-3;
        g.omega = hbar / (2.0 * g.mass * 0.25e-12);
        GaussianPacket gg = quench(g, 0.0);
        GaussianPacket later = free_evolve(gg, 1e6);
        double drift = std::abs(later.position_std() / gg.position_std() - 1.0);
        check(drift < 1e-6, "1 g packet width drifted by " + std::to_string(drift));
    });

    if (g_failures == 0)
        std::printf("all 8 criteria passed\n");
    else
        std::printf("%d criteria failed\n", g_failures);
    return g_failures;
}
