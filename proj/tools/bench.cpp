// Times the OpenMP kernels against their serial reference implementations.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qr/constants.hpp"
#include "qr/large_spin.hpp"
#include "qr/parallel.hpp"
#include "qr/sg_experiment.hpp"
#include "qr/talbot.hpp"
#include "qr/wavefield.hpp"

using namespace qr;

namespace {

template <typename F>
double time_best_of(int reps, F f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        best = std::min(best, dt);
    }
    return best;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n",
                name, serial * 1e3, parallel * 1e3, serial / parallel);
}

} // namespace

int main() {
    std::printf("threads available: %d\n\n", parallel::threads());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        GratingSpec g;
        g.period = 2e-7;
        g.open_fraction = 0.5;
        g.n_slits = 40;
        double lambda = de_broglie_wavelength(22.989769 * atomic_mass_unit, 1000.0);
        double lt = talbot_length(g.period, lambda);
        Grid grid = Grid::centered(48 * g.period, 96 * 48);
        WaveField f = plane_wave(grid, lambda);
        apply_grating(f, g);
        PropagateOptions serial_opt{ExecPolicy::serial, false};
        PropagateOptions parallel_opt{ExecPolicy::parallel, false};
        double ts = time_best_of(2, [&] { propagate(f, 2.0 * lt, serial_opt); });
        double tp = time_best_of(2, [&] { propagate(f, 2.0 * lt, parallel_opt); });
        row("fresnel propagate", ts, tp);
    }

    {
        const std::uint64_t n = 2000000;
        const double theta = std::numbers::pi / 4.0;
        double ts = time_best_of(3, [&] { large_spin_distribution(n, theta, ExecPolicy::serial); });
        double tp = time_best_of(3, [&] { large_spin_distribution(n, theta, ExecPolicy::parallel); });
        row("collective spin weights", ts, tp);
    }

    {
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
        const std::size_t samples = 4000000;
        double ts = time_best_of(3, [&] {
            classical_sg_ensemble(sc, OrientationSampler{}, samples, 1, 512, ExecPolicy::serial);
        });
        double tp = time_best_of(3, [&] {
            classical_sg_ensemble(sc, OrientationSampler{}, samples, 1, 512, ExecPolicy::parallel);
        });
        row("classical beam ensemble", ts, tp);
    }

    return 0;
}
