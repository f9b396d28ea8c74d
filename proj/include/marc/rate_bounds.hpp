#pragma once

#include <span>
#include <vector>

#include "marc/channel.hpp"
#include "marc/polymatroid.hpp"
#include "marc/subset.hpp"

namespace marc {

// Feasibility slack used by the Gamma_OB / Gamma membership checks.
inline constexpr double kFeasibilityTol = 1e-12;

/// Source-relay correlation fractions gamma_k, with E[X_k X_r] = sqrt(gamma_k P_k P_r).
/// Membership in Gamma_OB (gamma_k in [0,1], sum <= 1) is enforced on construction.
class CorrelationVector {
public:
    explicit CorrelationVector(std::vector<double> gamma);
    static CorrelationVector zeros(int K) { return CorrelationVector(std::vector<double>(K, 0.0)); }

    int K() const noexcept { return static_cast<int>(gamma_.size()); }
    double operator[](int k) const { return gamma_[static_cast<std::size_t>(k)]; }
    std::span<const double> values() const noexcept { return gamma_; }
    double sum() const;
    double sum_over(Subset s) const;

private:
    std::vector<double> gamma_;
};

/// DF power split (alpha, beta) in Gamma: alpha_k in [0,1] is the share of source
/// power carrying fresh information, beta_k >= 0 with sum <= 1 the relay shares.
class DfPowerSplit {
public:
    DfPowerSplit(std::vector<double> alpha, std::vector<double> beta);

    int K() const noexcept { return static_cast<int>(alpha_.size()); }
    std::span<const double> alpha() const noexcept { return alpha_; }
    std::span<const double> beta() const noexcept { return beta_; }
    double alpha(int k) const { return alpha_[static_cast<std::size_t>(k)]; }
    double beta(int k) const { return beta_[static_cast<std::size_t>(k)]; }

private:
    std::vector<double> alpha_;
    std::vector<double> beta_;
};

enum class Receiver { Relay, Destination };

// Cutset bounds. Both return 0 for the empty set.
//
// B_r,S switches to C(sum_S P_k / N_r) when sum_{S^c} gamma_k = 1 (within 1e-12).
// Otherwise the coherent part is removed from the SNR; by Cauchy-Schwarz that
// argument is nonnegative on Gamma_OB, so small negative rounding is clamped and
// anything below -1e-12 * max(1, sum_S P_k / N_r) raises NumericalError.
double outer_bound_relay(const ChannelConfig& cfg, const CorrelationVector& gamma, Subset S);
double outer_bound_dest(const ChannelConfig& cfg, const CorrelationVector& gamma, Subset S);

// Decode-and-forward bounds, I_r,S and I_d,S. Both return 0 for the empty set.
double df_bound_relay(const ChannelConfig& cfg, const DfPowerSplit& split, Subset S);
double df_bound_dest(const ChannelConfig& cfg, const DfPowerSplit& split, Subset S);

double outer_bound(const ChannelConfig& cfg, const CorrelationVector& gamma, Receiver rx, Subset S);
double df_bound(const ChannelConfig& cfg, const DfPowerSplit& split, Receiver rx, Subset S);

/// gamma_k = (1 - alpha_k) beta_k.
CorrelationVector df_to_correlation(const DfPowerSplit& split);

/// Relay split maximizing I_d,K for fixed alpha: beta_k proportional to (1 - alpha_k) P_k,
/// or all zeros when alpha is the all-ones vector.
std::vector<double> beta_star(const ChannelConfig& cfg, std::span<const double> alpha);

/// gamma_k = c P_k / sum_{j in S} P_j on S and 0 elsewhere: the maximizer of
/// B_d,S when the correlation mass on S is capped at c.
std::vector<double> gamma_star_dest(const ChannelConfig& cfg, Subset S, double c);

// The four bound families as set functions over all 2^K subsets.
SubsetFunction outer_function(const ChannelConfig& cfg, const CorrelationVector& gamma, Receiver rx);
SubsetFunction df_function(const ChannelConfig& cfg, const DfPowerSplit& split, Receiver rx);

}  // namespace marc
