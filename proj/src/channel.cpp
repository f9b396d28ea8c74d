#include "marc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "marc/error.hpp"

namespace marc {

namespace {

void require_positive(double v, const std::string& field) {
    if (!std::isfinite(v) || !(v > 0.0))
        throw ValidationError(field, "must be a finite positive number, got " + std::to_string(v));
}

}  // namespace

ChannelParams ChannelConfig::params() const {
    return ChannelParams{K(), P_, P_r_, N_r_, N_delta_};
}

ChannelConfig validate(const ChannelParams& raw) {
    if (raw.K < 1) throw ValidationError("K", "at least one source is required");
    if (static_cast<int>(raw.P.size()) != raw.K)
        throw ValidationError("P", "expected " + std::to_string(raw.K) + " powers, got " +
                                       std::to_string(raw.P.size()));
    for (std::size_t k = 0; k < raw.P.size(); ++k)
        require_positive(raw.P[k], "P[" + std::to_string(k + 1) + "]");
    require_positive(raw.P_r, "P_r");
    require_positive(raw.N_r, "N_r");
    if (!std::isfinite(raw.N_delta) || raw.N_delta < 0.0)
        throw ValidationError("N_delta", "must be finite and >= 0, got " + std::to_string(raw.N_delta));

    ChannelConfig cfg;
    cfg.P_ = raw.P;
    cfg.P_r_ = raw.P_r;
    cfg.N_r_ = raw.N_r;
    cfg.N_delta_ = raw.N_delta;
    cfg.N_d_ = raw.N_r + raw.N_delta;
    cfg.P_max_ = *std::max_element(raw.P.begin(), raw.P.end());
    cfg.P_sum_ = std::accumulate(raw.P.begin(), raw.P.end(), 0.0);
    cfg.lambda_.reserve(raw.P.size());
    for (double p : raw.P) cfg.lambda_.push_back(p / cfg.P_max_);
    return cfg;
}

ChannelConfig symmetric(int K, double P, double P_r, double N_r, double N_delta) {
    if (K < 1) throw ValidationError("K", "at least one source is required");
    return validate(ChannelParams{K, std::vector<double>(static_cast<std::size_t>(K), P), P_r, N_r,
                                  N_delta});
}

double awgn_capacity(double snr) {
    if (std::isnan(snr) || snr < -1e-12)
        throw DomainError("awgn_capacity: negative SNR " + std::to_string(snr));
    return 0.5 * std::log2(1.0 + std::max(snr, 0.0));
}

}  // namespace marc
