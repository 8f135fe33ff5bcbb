#include "qr/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qr::parallel {

namespace {
int requested_threads = 0;
}

void set_threads(int n) {
    requested_threads = n;
#ifdef _OPENMP
    if (n > 0)
        omp_set_num_threads(n);
#endif
}

int threads() {
#ifdef _OPENMP
    return requested_threads > 0 ? requested_threads : omp_get_max_threads();
#else
    return 1;
#endif
}

double kahan_sum(const double* data, std::size_t n) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double y = data[i] - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace qr::parallel
