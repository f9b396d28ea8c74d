#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "marc/channel.hpp"

namespace testutil {

inline marc::ChannelConfig example1() { return marc::validate({2, {6.0, 4.0}, 4.0, 1.0, 1.0}); }
inline marc::ChannelConfig example2() { return marc::validate({2, {6.0, 0.4}, 4.0, 1.0, 1.0}); }
inline marc::ChannelConfig bottleneck() { return marc::validate({2, {1.0, 1.0}, 100.0, 1.0, 1.0}); }

inline double log_uniform(std::mt19937_64& rng, double lo = 0.1, double hi = 10.0) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

inline marc::ChannelConfig random_config(std::mt19937_64& rng, int K) {
    std::vector<double> P(static_cast<std::size_t>(K));
    for (auto& p : P) p = log_uniform(rng);
    const double P_r = log_uniform(rng);
    const double N_r = log_uniform(rng);
    const double N_delta = log_uniform(rng);
    return marc::validate({K, P, P_r, N_r, N_delta});
}

inline std::vector<double> dirichlet_head(std::mt19937_64& rng, int K) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(static_cast<std::size_t>(K) + 1);
    double t = 0.0;
    for (auto& x : w) t += (x = e(rng));
    w.pop_back();
    for (auto& x : w) x /= t;
    return w;
}

}  // namespace testutil
