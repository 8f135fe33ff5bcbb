#pragma once

#include <cstdint>
#include <vector>

#include "qr/parallel.hpp"

namespace qr {

// A spin-S pointer tilted by theta, decomposed over N = 2S spin-1/2
// constituents: weight(k) = C(N,k) cos^(2k)(theta/2) sin^(2(N-k))(theta/2).
// Weights are evaluated in log space (lgamma) and normalized with a
// log-sum-exp so N up to 10^7 cannot overflow.
struct LargeSpinDistribution {
    std::uint64_t n = 0;
    double theta = 0.0;
    std::vector<double> weight; // size n+1, normalized to 1
};

LargeSpinDistribution large_spin_distribution(std::uint64_t n, double theta,
                                              ExecPolicy policy = ExecPolicy::parallel);

struct SpikeAnalysis {
    double mean_x;     // <k/N>
    double std_x;      // std of k/N; exact value sqrt(x0(1-x0)/N)
    double x0;         // cos^2(theta/2)
    double sz_mean;    // <S_z> = N(mean_x - 1/2); exact value (N/2) cos(theta)
    double tv_gaussian; // total variation vs the discretized spike Gaussian
};

// the comparison Gaussian is exp(-N (x - x0)^2 / (2 x0 (1 - x0))) on the
// lattice x_k = k/N, normalized; theta must lie strictly inside (0, pi)
SpikeAnalysis spike_analysis(const LargeSpinDistribution& d);

} // namespace qr
