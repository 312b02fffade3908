#include "coeffgap/rng.hpp"

#include <cmath>

namespace coeffgap {

std::vector<double> RngStream::simplex(int k) {
    std::vector<double> w(k);
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
        // exponential via inverse CDF; 1 - u keeps the argument in (0, 1]
        w[i] = -std::log(1.0 - uniform01());
        sum += w[i];
    }
    for (double& x : w) x /= sum;
    return w;
}

}  // namespace coeffgap
