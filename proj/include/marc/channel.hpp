#pragma once

#include <span>
#include <vector>

namespace marc {

/// Raw, unvalidated description of a degraded Gaussian multiaccess relay channel.
/// All quantities are linear (not dB).
struct ChannelParams {
    int K = 0;                    // number of sources
    std::vector<double> P;        // source powers, one per source
    double P_r = 0.0;             // relay power
    double N_r = 0.0;             // noise variance at the relay
    double N_delta = 0.0;         // extra noise variance at the destination
};

/// A validated channel. Only obtainable through validate() or symmetric(), so
/// every instance satisfies K >= 1, P_k > 0, P_r > 0, N_r > 0 and N_delta >= 0.
class ChannelConfig {
public:
    int K() const noexcept { return static_cast<int>(P_.size()); }
    std::span<const double> P() const noexcept { return P_; }
    double P(int k) const { return P_.at(static_cast<std::size_t>(k)); }
    double P_r() const noexcept { return P_r_; }
    double N_r() const noexcept { return N_r_; }
    double N_delta() const noexcept { return N_delta_; }
    /// Destination noise variance, N_r + N_delta.
    double N_d() const noexcept { return N_d_; }
    double P_max() const noexcept { return P_max_; }
    double P_sum() const noexcept { return P_sum_; }
    /// lambda_k = P_k / P_max, in (0, 1] with at least one entry equal to 1.
    std::span<const double> lambda() const noexcept { return lambda_; }
    double lambda(int k) const { return lambda_.at(static_cast<std::size_t>(k)); }

    ChannelParams params() const;

    friend ChannelConfig validate(const ChannelParams& raw);

private:
    ChannelConfig() = default;

    std::vector<double> P_;
    double P_r_ = 0.0;
    double N_r_ = 0.0;
    double N_delta_ = 0.0;
    double N_d_ = 0.0;
    double P_max_ = 0.0;
    double P_sum_ = 0.0;
    std::vector<double> lambda_;
};

/// Checks every model constraint and caches the derived quantities.
/// Throws ValidationError naming the first offending field ("K", "P[2]", "N_r", ...).
/// Source indices in field names are 1-based.
ChannelConfig validate(const ChannelParams& raw);

/// Symmetric channel: all K sources share the power P.
ChannelConfig symmetric(int K, double P, double P_r, double N_r, double N_delta);

/// Capacity of a real AWGN channel, 0.5 * log2(1 + snr), in bits per channel use.
/// Arguments in [-1e-12, 0) are treated as 0; anything lower throws DomainError.
double awgn_capacity(double snr);

}  // namespace marc
