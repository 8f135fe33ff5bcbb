#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qr/constants.hpp"
#include "qr/errors.hpp"
#include "qr/gaussian.hpp"

using namespace qr;

namespace {

// analytic free-spreading std
double analytic_std(double mass, double sigma0, double t) {
    double r = hbar * t / (2.0 * mass * sigma0 * sigma0);
    return sigma0 * std::sqrt(1.0 + r * r);
}

} // namespace

TEST_SUITE("wavepacket") {

TEST_CASE("packet construction fixes the variance") {
    GaussianPacket p = make_packet(1e-6, 2e-27, 5e-7, electron_mass);
    CHECK(p.position_variance() == doctest::Approx(25e-14).epsilon(1e-12));
    CHECK(p.position_std() == doctest::Approx(5e-7).epsilon(1e-12));
    CHECK(p.size() == doctest::Approx(1e-6).epsilon(1e-12));
    CHECK(p.center == 1e-6);
    CHECK(p.momentum == 2e-27);
}

TEST_CASE("free spreading matches the analytic width") {
    double sigma0 = 5e-7;
    GaussianPacket p = make_packet(0.0, 0.0, sigma0, electron_mass);
    for (double t : {1e-10, 1e-9, 5e-9, 1e-8, 1e-7}) {
        GaussianPacket q = free_evolve(p, t);
        CHECK(q.position_std()
              == doctest::Approx(analytic_std(electron_mass, sigma0, t)).epsilon(1e-12));
        CHECK(q.position_std() == doctest::Approx(spread_std(electron_mass, sigma0, t)).epsilon(1e-12));
    }
}

TEST_CASE("doubling time definition and mass linearity") {
    double sigma0 = 1e-6;
    double td = doubling_time(electron_mass, sigma0);
    CHECK(td == doctest::Approx(2.0 * std::sqrt(3.0) * electron_mass * sigma0 * sigma0 / hbar)
                    .epsilon(1e-14));
    CHECK(spread_std(electron_mass, sigma0, td) == doctest::Approx(2.0 * sigma0).epsilon(1e-12));

    // linear in mass, quadratic in width
    for (double f : {2.0, 10.0, 1e5, 1e27}) {
        CHECK(doubling_time(f * electron_mass, sigma0) / td == doctest::Approx(f).epsilon(1e-10));
    }
    CHECK(doubling_time(electron_mass, 3.0 * sigma0) / td == doctest::Approx(9.0).epsilon(1e-10));
}

TEST_CASE("desk-scale doubling times land in the right decades") {
    // sigma0 = 0.5 um (size 1 um) throughout; reference decades for
    // electron, hydrogen atom, C70, and a 1 g weight
    struct Row { double mass; double reference; };
    const Row rows[] = {
        {electron_mass, 1e-8},
        {1.008 * atomic_mass_unit, 1.6e-5},
        {840.94 * atomic_mass_unit, 8e-3},
        {1e-3, 1e19},
    };
    for (const auto& r : rows) {
        double td = doubling_time(r.mass, 0.5e-6);
        double ratio = td / r.reference;
        CHECK_MESSAGE(ratio > 1.0 / 3.0, "mass ", r.mass, ": ratio ", ratio);
        CHECK_MESSAGE(ratio < 3.0, "mass ", r.mass, ": ratio ", ratio);
    }
}

TEST_CASE("ballistic center and momentum under a constant force") {
    GaussianPacket p = make_packet(1e-6, 3e-27, 2e-7, electron_mass);
    double F = 4e-22, t = 2e-9;
    GaussianPacket q = evolve_linear_force(p, F, t);
    CHECK(q.center
          == doctest::Approx(p.center + p.momentum * t / p.mass + 0.5 * F * t * t / p.mass)
                 .epsilon(1e-14));
    CHECK(q.momentum == doctest::Approx(p.momentum + F * t).epsilon(1e-14));
    // width evolution is force independent for a linear potential
    GaussianPacket qf = free_evolve(p, t);
    CHECK(q.position_variance() == doctest::Approx(qf.position_variance()).epsilon(1e-14));
}

TEST_CASE("evolution composes: two short steps equal one long step") {
    GaussianPacket p = make_packet(0.0, 1e-27, 3e-7, electron_mass);
    double F = 1e-23;
    GaussianPacket one = evolve_linear_force(p, F, 7e-9);
    GaussianPacket two = evolve_linear_force(evolve_linear_force(p, F, 3e-9), F, 4e-9);
    CHECK(two.center == doctest::Approx(one.center).epsilon(1e-12));
    CHECK(two.momentum == doctest::Approx(one.momentum).epsilon(1e-12));
    CHECK(two.position_variance() == doctest::Approx(one.position_variance()).epsilon(1e-10));
}

TEST_CASE("width parameter conventions") {
    // complex lift: w = 1/(2G)
    GaussianPacket p = make_packet(0, 0, 1e-6, electron_mass);
    auto w = p.width_parameter();
    CHECK(w.real() == doctest::Approx(1.0 / (2.0 * p.width_g.real())).epsilon(1e-12));
    CHECK(std::abs(w.imag()) < 1e-6 * w.real());

    // real lift: sigma = 0, w = 1/(4G), variance = G
    GaussianPacket r;
    r.width_g = 4e-14;
    r.sigma = 0.0;
    r.mass = electron_mass;
    r.validate();
    CHECK(r.position_variance() == doctest::Approx(4e-14).epsilon(1e-12));
}

TEST_CASE("validation rejects broken packets") {
    GaussianPacket p = make_packet(0, 0, 1e-6, electron_mass);
    p.mass = 0.0;
    CHECK_THROWS_AS(p.validate(), domain_error);

    GaussianPacket q = make_packet(0, 0, 1e-6, electron_mass);
    q.width_g = -1e-12;
    CHECK_THROWS_AS(q.validate(), domain_error);

    CHECK_THROWS_AS(make_packet(0, 0, 0.0, electron_mass), domain_error);
    CHECK_THROWS_AS(make_packet(0, 0, 1e-6, -1.0), domain_error);
    CHECK_THROWS_AS(doubling_time(0.0, 1e-6), domain_error);
    CHECK_THROWS_AS(spread_std(electron_mass, 1e-6, -1.0), domain_error);
}

TEST_CASE("coherent state: pinned width over many periods") {
    CoherentState s;
    s.amplitude = 1e-6;
    s.phase = 0.3;
    s.omega = 2.0 * std::numbers::pi * 1e5;
    s.mass = electron_mass;
    s.validate();

    double D = s.ground_variance();
    CHECK(D == doctest::Approx(hbar / (2.0 * s.mass * s.omega)).epsilon(1e-14));

    double T = 2.0 * std::numbers::pi / s.omega;
    for (int k = 0; k <= 70; ++k) {
        OscillatorPoint pt = coherent_evolve(s, k * T / 7.0);
        CHECK(pt.variance == doctest::Approx(D).epsilon(1e-12));
    }
    // classical orbit underneath
    OscillatorPoint p0 = coherent_evolve(s, 0.0);
    CHECK(p0.center == doctest::Approx(s.amplitude * std::cos(s.phase)).epsilon(1e-12));
    OscillatorPoint pT = coherent_evolve(s, 10.0 * T);
    CHECK(pT.center == doctest::Approx(p0.center).epsilon(1e-9));
    CHECK(pT.momentum == doctest::Approx(p0.momentum).epsilon(1e-9));
}

TEST_CASE("quench reproduces the oscillator packet and then spreads freely") {
    CoherentState s;
    s.amplitude = 2e-6;
    s.phase = 1.1;
    s.omega = 3e4;
    s.mass = 2000.0 * electron_mass;
    double D = s.ground_variance();

    for (double t0 : {0.0, 1e-5, 7e-5}) {
        OscillatorPoint pt = coherent_evolve(s, t0);
        GaussianPacket g = quench(s, t0);
        CHECK(g.center == doctest::Approx(pt.center).epsilon(1e-12));
        CHECK(g.momentum == doctest::Approx(pt.momentum).epsilon(1e-12));
        CHECK(g.position_variance() == doctest::Approx(D).epsilon(1e-12));
    }

    // after release the packet spreads like a free Gaussian of std sqrt(D)
    GaussianPacket g = quench(s, 0.0);
    double sig = std::sqrt(D);
    for (double t : {1e-4, 1e-3, 1e-2}) {
        GaussianPacket f = free_evolve(g, t);
        CHECK(f.position_std() == doctest::Approx(analytic_std(s.mass, sig, t)).epsilon(1e-10));
    }
    // doubling of the released packet happens at the free-diffusion time
    double td = doubling_time(s.mass, sig);
    GaussianPacket fd = free_evolve(g, td);
    CHECK(fd.position_std() == doctest::Approx(2.0 * sig).epsilon(1e-10));
}

TEST_CASE("a quenched 1 g oscillator keeps its width for geological times") {
    CoherentState s;
    s.amplitude = 1e-3;
    s.phase = 0.0;
    s.mass = 1e-3;
    s.omega = hbar / (2.0 * s.mass * 2.5e-13); // ground width 0.5 um
    GaussianPacket g = quench(s, 0.0);
    double before = g.position_std();
    GaussianPacket f = free_evolve(g, 1e6); // ~12 days
    CHECK(std::abs(f.position_std() / before - 1.0) < 1e-6);
}

TEST_CASE("coherent state validation") {
    CoherentState s;
    s.amplitude = 1e-6;
    s.omega = 0.0;
    s.mass = electron_mass;
    CHECK_THROWS_AS(s.validate(), domain_error);
    s.omega = 1e4;
    s.mass = -1.0;
    CHECK_THROWS_AS(s.validate(), domain_error);
}

} // TEST_SUITE
