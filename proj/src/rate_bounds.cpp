#include "marc/rate_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "marc/error.hpp"

namespace marc {

namespace {

void require_K(const ChannelConfig& cfg, int K, const char* what) {
    if (K != cfg.K())
        throw DomainError(std::string(what) + " has " + std::to_string(K) +
                          " entries, channel has " + std::to_string(cfg.K()) + " sources");
}

double sum_powers(const ChannelConfig& cfg, Subset S) {
    double s = 0.0;
    for (int k = 0; k < cfg.K(); ++k)
        if (S.contains(k)) s += cfg.P(k);
    return s;
}

}  // namespace

CorrelationVector::CorrelationVector(std::vector<double> gamma) : gamma_(std::move(gamma)) {
    if (gamma_.empty()) throw DomainError("correlation vector is empty");
    double total = 0.0;
    for (std::size_t k = 0; k < gamma_.size(); ++k) {
        const double g = gamma_[k];
        if (!std::isfinite(g) || g < -kFeasibilityTol || g > 1.0 + kFeasibilityTol)
            throw DomainError("gamma[" + std::to_string(k + 1) + "] = " + std::to_string(g) +
                              " outside [0,1]");
        gamma_[k] = std::clamp(g, 0.0, 1.0);
        total += gamma_[k];
    }
    if (total > 1.0 + kFeasibilityTol)
        throw DomainError("sum of gamma = " + std::to_string(total) + " exceeds 1");
}

double CorrelationVector::sum() const { return std::accumulate(gamma_.begin(), gamma_.end(), 0.0); }

double CorrelationVector::sum_over(Subset s) const {
    double total = 0.0;
    for (int k = 0; k < K(); ++k)
        if (s.contains(k)) total += gamma_[static_cast<std::size_t>(k)];
    return total;
}

DfPowerSplit::DfPowerSplit(std::vector<double> alpha, std::vector<double> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.empty() || alpha_.size() != beta_.size())
        throw DomainError("alpha and beta must be nonempty and of equal length");
    double total = 0.0;
    for (std::size_t k = 0; k < alpha_.size(); ++k) {
        const double a = alpha_[k];
        const double b = beta_[k];
        if (!std::isfinite(a) || a < -kFeasibilityTol || a > 1.0 + kFeasibilityTol)
            throw DomainError("alpha[" + std::to_string(k + 1) + "] = " + std::to_string(a) +
                              " outside [0,1]");
        if (!std::isfinite(b) || b < -kFeasibilityTol)
            throw DomainError("beta[" + std::to_string(k + 1) + "] = " + std::to_string(b) +
                              " is negative");
        alpha_[k] = std::clamp(a, 0.0, 1.0);
        beta_[k] = std::max(b, 0.0);
        total += beta_[k];
    }
    if (total > 1.0 + kFeasibilityTol)
        throw DomainError("sum of beta = " + std::to_string(total) + " exceeds 1");
}

double outer_bound_relay(const ChannelConfig& cfg, const CorrelationVector& gamma, Subset S) {
    require_K(cfg, gamma.K(), "gamma");
    if (S.is_empty()) return 0.0;
    const double snr = sum_powers(cfg, S) / cfg.N_r();
    const double complement_mass = gamma.sum_over(S.complement(cfg.K()));
    if (std::abs(complement_mass - 1.0) <= kFeasibilityTol) return awgn_capacity(snr);

    const double residual = 1.0 - complement_mass;
    double coherent = 0.0;
    for (int k = 0; k < cfg.K(); ++k)
        if (S.contains(k)) coherent += std::sqrt(gamma[k] * cfg.P(k));
    double arg = snr - coherent * coherent / (cfg.N_r() * residual);
    if (arg < 0.0) {
        if (arg < -1e-12 * std::max(1.0, snr))
            throw NumericalError("B_r" + to_string(S) + ": SNR argument " + std::to_string(arg) +
                                 " is negative; gamma is infeasible");
        arg = 0.0;
    }
    return awgn_capacity(arg);
}

double outer_bound_dest(const ChannelConfig& cfg, const CorrelationVector& gamma, Subset S) {
    require_K(cfg, gamma.K(), "gamma");
    if (S.is_empty()) return 0.0;
    const double residual = 1.0 - gamma.sum_over(S.complement(cfg.K()));
    double num = residual * cfg.P_r();
    for (int k = 0; k < cfg.K(); ++k)
        if (S.contains(k)) num += cfg.P(k) + 2.0 * std::sqrt(gamma[k] * cfg.P(k) * cfg.P_r());
    return awgn_capacity(num / cfg.N_d());
}

double df_bound_relay(const ChannelConfig& cfg, const DfPowerSplit& split, Subset S) {
    require_K(cfg, split.K(), "split");
    if (S.is_empty()) return 0.0;
    double num = 0.0;
    for (int k = 0; k < cfg.K(); ++k)
        if (S.contains(k)) num += split.alpha(k) * cfg.P(k);
    return awgn_capacity(num / cfg.N_r());
}

double df_bound_dest(const ChannelConfig& cfg, const DfPowerSplit& split, Subset S) {
    require_K(cfg, split.K(), "split");
    if (S.is_empty()) return 0.0;
    double relay_share = 1.0;
    double num = 0.0;
    double coherent = 0.0;
    for (int k = 0; k < cfg.K(); ++k) {
        if (S.contains(k)) {
            num += cfg.P(k);
            coherent += std::sqrt((1.0 - split.alpha(k)) * split.beta(k) * cfg.P(k) * cfg.P_r());
        } else {
            relay_share -= split.beta(k);
        }
    }
    num += relay_share * cfg.P_r();
    return awgn_capacity(num / cfg.N_d() + 2.0 * coherent / cfg.N_d());
}

double outer_bound(const ChannelConfig& cfg, const CorrelationVector& gamma, Receiver rx, Subset S) {
    return rx == Receiver::Relay ? outer_bound_relay(cfg, gamma, S) : outer_bound_dest(cfg, gamma, S);
}

double df_bound(const ChannelConfig& cfg, const DfPowerSplit& split, Receiver rx, Subset S) {
    return rx == Receiver::Relay ? df_bound_relay(cfg, split, S) : df_bound_dest(cfg, split, S);
}

CorrelationVector df_to_correlation(const DfPowerSplit& split) {
    std::vector<double> gamma(static_cast<std::size_t>(split.K()));
    for (int k = 0; k < split.K(); ++k)
        gamma[static_cast<std::size_t>(k)] = (1.0 - split.alpha(k)) * split.beta(k);
    return CorrelationVector(std::move(gamma));
}

std::vector<double> beta_star(const ChannelConfig& cfg, std::span<const double> alpha) {
    require_K(cfg, static_cast<int>(alpha.size()), "alpha");
    std::vector<double> beta(alpha.size(), 0.0);
    double total = 0.0;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (alpha[k] < -kFeasibilityTol || alpha[k] > 1.0 + kFeasibilityTol)
            throw DomainError("alpha[" + std::to_string(k + 1) + "] outside [0,1]");
        beta[k] = std::max(0.0, 1.0 - alpha[k]) * cfg.P(static_cast<int>(k));
        total += beta[k];
    }
    if (!(total > 1e-300)) return std::vector<double>(alpha.size(), 0.0);
    for (double& b : beta) b /= total;
    return beta;
}

std::vector<double> gamma_star_dest(const ChannelConfig& cfg, Subset S, double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw DomainError("gamma_star_dest: c must lie in [0,1]");
    std::vector<double> gamma(static_cast<std::size_t>(cfg.K()), 0.0);
    const double total = sum_powers(cfg, S);
    if (total <= 0.0) return gamma;
    for (int k = 0; k < cfg.K(); ++k)
        if (S.contains(k)) gamma[static_cast<std::size_t>(k)] = c * cfg.P(k) / total;
    return gamma;
}

SubsetFunction outer_function(const ChannelConfig& cfg, const CorrelationVector& gamma, Receiver rx) {
    return SubsetFunction::tabulate(cfg.K(), [&](Subset S) { return outer_bound(cfg, gamma, rx, S); });
}

SubsetFunction df_function(const ChannelConfig& cfg, const DfPowerSplit& split, Receiver rx) {
    return SubsetFunction::tabulate(cfg.K(), [&](Subset S) { return df_bound(cfg, split, rx, S); });
}

}  // namespace marc
