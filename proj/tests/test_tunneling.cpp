#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qr/constants.hpp"
#include "qr/errors.hpp"
#include "qr/tunneling.hpp"

using namespace qr;

namespace {

constexpr double eV = electron_volt;

// kappa = sqrt(2m(V0 - E))/hbar for the rectangular barrier
double kappa(double v0, double e, double m) {
    return std::sqrt(2.0 * m * (v0 - e)) / hbar;
}

} // namespace

TEST_SUITE("tunneling") {

TEST_CASE("barrier construction and validation") {
    BarrierSpec rect = BarrierSpec::rectangular(1.0 * eV, 1e-9);
    CHECK(rect.is_piecewise());
    CHECK(rect.support() == doctest::Approx(1e-9).epsilon(1e-14));
    CHECK(rect.max_height() == doctest::Approx(1.0 * eV).epsilon(1e-14));

    BarrierSpec steps = BarrierSpec::piecewise({{5e-10, 1.0 * eV}, {3e-10, -0.2 * eV}, {5e-10, 0.8 * eV}});
    CHECK(steps.support() == doctest::Approx(1.3e-9).epsilon(1e-14));
    CHECK(steps.max_height() == doctest::Approx(1.0 * eV).epsilon(1e-14));

    auto bump = [](double z) { return 1.0 * eV * std::exp(-z * z / 2e-20); };
    BarrierSpec smooth = BarrierSpec::smooth(bump, -1e-9, 1e-9);
    CHECK_FALSE(smooth.is_piecewise());
    CHECK(smooth.max_height() == doctest::Approx(1.0 * eV).epsilon(1e-6));

    CHECK_THROWS_AS(BarrierSpec::rectangular(1.0 * eV, -1e-9).validate(), domain_error);
    CHECK_THROWS_AS(BarrierSpec::piecewise({}).validate(), domain_error);
    CHECK_THROWS_AS(BarrierSpec::smooth(bump, 1e-9, -1e-9).validate(), domain_error);
}

TEST_CASE("transfer matrix reproduces the rectangular closed form") {
    const double v0 = 1.0 * eV, w = 1e-9, m = electron_mass;
    BarrierSpec b = BarrierSpec::rectangular(v0, w);
    for (int i = 1; i <= 100; ++i) {
        double e = v0 * (0.05 + 1.45 * (i - 1) / 99.0); // crosses the barrier top
        if (e == v0)
            continue;
        TransmissionResult tm = transfer_matrix_transmission(b, e, m);
        double oracle = rectangular_transmission(v0, w, e, m);
        CHECK(std::abs(tm.transmission - oracle) <= 1e-10 * std::max(oracle, 1e-30));
        CHECK(std::abs(tm.transmission + tm.reflection - 1.0) <= 1e-10);
    }
}

TEST_CASE("transmission is unity at the over-barrier resonance") {
    const double v0 = 1.0 * eV, m = electron_mass;
    // first resonance: k' w = pi inside the barrier
    double kp = std::sqrt(2.0 * m * v0) / hbar; // choose E = 2 v0 so k' = sqrt(2m v0)/hbar
    double w = std::numbers::pi / kp;
    BarrierSpec b = BarrierSpec::rectangular(v0, w);
    double e = 2.0 * v0;
    TransmissionResult tm = transfer_matrix_transmission(b, e, m);
    CHECK(tm.transmission == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rectangular_transmission(v0, w, e, m) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closed form at the barrier-top limit") {
    const double v0 = 1.0 * eV, w = 1e-9, m = electron_mass;
    double limit = rectangular_transmission(v0, w, v0, m);
    CHECK(limit == doctest::Approx(1.0 / (1.0 + m * v0 * w * w / (2.0 * hbar * hbar)))
                       .epsilon(1e-12));
    // approached continuously from both sides
    CHECK(rectangular_transmission(v0, w, v0 * (1.0 - 1e-9), m)
          == doctest::Approx(limit).epsilon(1e-6));
    CHECK(rectangular_transmission(v0, w, v0 * (1.0 + 1e-9), m)
          == doctest::Approx(limit).epsilon(1e-6));
}

TEST_CASE("multi-segment barriers stay unitary") {
    BarrierSpec b = BarrierSpec::piecewise(
        {{4e-10, 1.2 * eV}, {2e-10, -0.3 * eV}, {3e-10, 0.9 * eV}, {1e-10, 0.4 * eV}});
    for (double e : {0.05 * eV, 0.3 * eV, 0.7 * eV, 1.1 * eV, 2.0 * eV}) {
        TransmissionResult tm = transfer_matrix_transmission(b, e, electron_mass);
        CHECK(std::abs(tm.transmission + tm.reflection - 1.0) <= 1e-10);
        CHECK(tm.transmission > 0.0);
        CHECK(tm.transmission <= 1.0 + 1e-12);
    }
}

TEST_CASE("zero-width segments change nothing") {
    BarrierSpec a = BarrierSpec::piecewise({{5e-10, 1.0 * eV}, {5e-10, 0.5 * eV}});
    BarrierSpec b = BarrierSpec::piecewise(
        {{5e-10, 1.0 * eV}, {0.0, 3.0 * eV}, {5e-10, 0.5 * eV}, {0.0, -1.0 * eV}});
    for (double e : {0.2 * eV, 0.8 * eV, 1.5 * eV}) {
        TransmissionResult ta = transfer_matrix_transmission(a, e, electron_mass);
        TransmissionResult tb = transfer_matrix_transmission(b, e, electron_mass);
        CHECK(ta.transmission == tb.transmission);
        CHECK(ta.reflection == tb.reflection);
    }
}

TEST_CASE("deep tunneling stays finite in log space") {
    const double m = electron_mass;
    const double v0 = 2.0 * eV, e = 1.0 * eV;
    // kappa w = 800: the raw transmission underflows to zero
    double w = 800.0 / kappa(v0, e, m);
    BarrierSpec b = BarrierSpec::rectangular(v0, w);
    TransmissionResult tm = transfer_matrix_transmission(b, e, m);

    CHECK(std::isfinite(tm.log_transmission));
    CHECK(tm.log_transmission < -1500.0);
    CHECK(tm.transmission == 0.0);
    CHECK(tm.reflection == doctest::Approx(1.0).epsilon(1e-12));

    // the semiclassical exponent nails the log: ln T = -2 kappa w + ln(16 E (V0-E)/V0^2)
    double expect = -2.0 * 800.0 + std::log(16.0 * e * (v0 - e) / (v0 * v0));
    CHECK(tm.log_transmission == doctest::Approx(expect).epsilon(1e-6));

    TransmissionResult wkb = wkb_transmission(b, e, m);
    CHECK(wkb.log_transmission == doctest::Approx(-2.0 * 800.0).epsilon(1e-10));
    CHECK(std::abs(wkb.log_transmission / tm.log_transmission - 1.0) <= 1e-3);
}

TEST_CASE("semiclassical accuracy improves with barrier strength") {
    const double m = electron_mass;
    const double w = 1e-9;
    double prev = 1e300;
    for (double kw : {3.0, 5.0, 10.0, 20.0}) {
        double kap = kw / w;
        double e = kap * kap * hbar * hbar / (2.0 * m); // V0 = 2E puts kappa at sqrt(2mE)/hbar
        double v0 = 2.0 * e;
        BarrierSpec b = BarrierSpec::rectangular(v0, w);
        TransmissionResult exact = transfer_matrix_transmission(b, e, m);
        TransmissionResult wkb = wkb_transmission(b, e, m);
        double ln_ratio = std::abs(wkb.log_transmission - exact.log_transmission)
                          / std::abs(exact.log_transmission);
        CHECK(ln_ratio < prev);
        if (kw >= 10.0)
            CHECK(ln_ratio <= 0.1);
        prev = ln_ratio;
    }
}

TEST_CASE("piecewise wkb exponent is the forbidden-region sum") {
    const double m = electron_mass;
    BarrierSpec b = BarrierSpec::piecewise({{4e-10, 1.0 * eV}, {2e-10, 0.1 * eV}, {3e-10, 0.7 * eV}});
    double e = 0.5 * eV;
    TransmissionResult wkb = wkb_transmission(b, e, m);
    // the 0.1 eV segment is classically allowed at 0.5 eV and contributes nothing
    double expect = -2.0 * (kappa(1.0 * eV, e, m) * 4e-10 + kappa(0.7 * eV, e, m) * 3e-10);
    CHECK(wkb.log_transmission == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("smooth-barrier wkb integral matches the parabolic closed form") {
    // inverted parabola V(z) = V0 (1 - z^2/a^2): the forbidden-region integral
    // is analytic, exponent = pi a sqrt(2m) (V0 - E) / (hbar sqrt(V0))
    const double m = electron_mass;
    const double v0 = 1.0 * eV;
    const double a = 1e-9;
    auto profile = [=](double z) { return v0 * (1.0 - z * z / (a * a)); };
    BarrierSpec b = BarrierSpec::smooth(profile, -a, a);
    for (double e : {0.2 * eV, 0.5 * eV, 0.8 * eV}) {
        TransmissionResult wkb = wkb_transmission(b, e, m);
        double expect = -std::numbers::pi * a * std::sqrt(2.0 * m) * (v0 - e)
                        / (hbar * std::sqrt(v0));
        CHECK(wkb.log_transmission == doctest::Approx(expect).epsilon(1e-8));
    }
}

TEST_CASE("smooth barrier agrees with its own staircase") {
    const double m = electron_mass;
    const double v0 = 1.0 * eV, s = 4e-10;
    auto gauss = [=](double z) { return v0 * std::exp(-z * z / (2.0 * s * s)); };
    BarrierSpec b = BarrierSpec::smooth(gauss, -2e-9, 2e-9);

    const int n = 4000;
    std::vector<BarrierSegment> segs(n);
    double width = 4e-9 / n;
    for (int i = 0; i < n; ++i) {
        double zc = -2e-9 + (i + 0.5) * width;
        segs[i] = {width, gauss(zc)};
    }
    BarrierSpec stair = BarrierSpec::piecewise(std::move(segs));

    double e = 0.4 * eV;
    TransmissionResult smooth = wkb_transmission(b, e, m);
    TransmissionResult stepped = wkb_transmission(stair, e, m);
    CHECK(smooth.log_transmission
          == doctest::Approx(stepped.log_transmission).epsilon(1e-3));
}

TEST_CASE("invalid energies and methods are rejected") {
    BarrierSpec b = BarrierSpec::rectangular(1.0 * eV, 1e-9);
    CHECK_THROWS_AS(wkb_transmission(b, 0.0, electron_mass), domain_error);
    CHECK_THROWS_AS(wkb_transmission(b, -1.0 * eV, electron_mass), domain_error);
    CHECK_THROWS_AS(wkb_transmission(b, 1.5 * eV, electron_mass), domain_error); // above top
    CHECK_THROWS_AS(wkb_transmission(b, 0.5 * eV, 0.0), domain_error);
    CHECK_THROWS_AS(transfer_matrix_transmission(b, 1.0 * eV, electron_mass),
                    domain_error); // degenerate: E equals a segment height
    auto bump = [](double z) { return electron_volt * std::exp(-z * z / 2e-20); };
    BarrierSpec smooth = BarrierSpec::smooth(bump, -1e-9, 1e-9);
    CHECK_THROWS_AS(transfer_matrix_transmission(smooth, 0.5 * eV, electron_mass),
                    domain_error); // smooth form has no exact treatment
}

TEST_CASE("scenario carries the transverse coherence through unchanged") {
    TunnelScenario sc;
    sc.barrier = BarrierSpec::rectangular(1.0 * eV, 1e-9);
    sc.energy = 0.5 * eV;
    sc.mass = electron_mass;
    sc.weight_1 = 0.6;
    sc.weight_2 = 0.4;
    sc.coherence = 0.45;

    TunnelReport rep = tunnel_scenario(sc);
    CHECK(rep.coherence_after == 0.45);
    REQUIRE(rep.exact.has_value());
    CHECK(rep.transmitted_fraction == rep.exact->transmission);
    CHECK(rep.transmitted_fraction
          == doctest::Approx(rectangular_transmission(1.0 * eV, 1e-9, 0.5 * eV, electron_mass))
                 .epsilon(1e-10));
    CHECK(rep.transit_time
          == doctest::Approx(1e-9 / std::sqrt(2.0 * 0.5 * eV / electron_mass)).epsilon(1e-12));
    CHECK(rep.spread_negligible); // no momentum spread given

    sc.momentum_spread = 1e-26; // sharp beam: generous bound
    rep = tunnel_scenario(sc);
    CHECK(rep.spread_bound == doctest::Approx(2.0 * electron_mass * hbar / 1e-52).epsilon(1e-12));
    CHECK(rep.spread_negligible);

    sc.momentum_spread = 1e-22; // broad beam: the packet disperses in transit
    rep = tunnel_scenario(sc);
    CHECK_FALSE(rep.spread_negligible);
}

TEST_CASE("scenario above the barrier skips the semiclassical factor") {
    TunnelScenario sc;
    sc.barrier = BarrierSpec::rectangular(1.0 * eV, 1e-9);
    sc.energy = 3.0 * eV;
    sc.mass = electron_mass;
    TunnelReport rep = tunnel_scenario(sc);
    CHECK(rep.wkb.transmission == 1.0);
    CHECK(rep.wkb.method == "wkb-above-barrier");
    REQUIRE(rep.exact.has_value());
    CHECK(rep.exact->transmission
          == doctest::Approx(rectangular_transmission(1.0 * eV, 1e-9, 3.0 * eV, electron_mass))
                 .epsilon(1e-10));
}

TEST_CASE("scenario weight validation") {
    TunnelScenario sc;
    sc.barrier = BarrierSpec::rectangular(1.0 * eV, 1e-9);
    sc.energy = 0.5 * eV;
    sc.mass = electron_mass;
    sc.weight_1 = 0.7;
    sc.weight_2 = 0.4; // sums to 1.1
    CHECK_THROWS_AS(tunnel_scenario(sc), domain_error);
    sc.weight_1 = 0.5;
    sc.weight_2 = 0.5;
    sc.coherence = 0.6; // exceeds sqrt(w1 w2)
    CHECK_THROWS_AS(tunnel_scenario(sc), domain_error);
}

} // TEST_SUITE
