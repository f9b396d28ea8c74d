#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "marc/channel.hpp"
#include "marc/rate_bounds.hpp"

namespace marc {

struct McReport {
    double estimate = 0.0;
    double std_error = 0.0;
    double target = 0.0;
    double z_score = 0.0;
    std::size_t n_samples = 0;
    // Target variance is zero (the conditioning makes the residual deterministic);
    // z_score is then 0 when |estimate - target| <= 1e-9 * scale and infinite otherwise.
    bool degenerate = false;
};

enum class McIdentity {
    // E[var(X_r | X_{S^c})] = (1 - sum_{S^c} gamma_k) P_r
    RelayGivenComplement,
    // E[var(sum_{k in S} X_k | X_r, X_{S^c})], the SNR numerator of B_r,S (times N_r)
    SourcesGivenRelayAndComplement,
};

/// Monte-Carlo check of a conditional-variance identity. Samples the DF signalling
/// construction with beta_k = gamma_k / sum(gamma), 1 - alpha_k = sum(gamma), which
/// realizes any gamma in Gamma_OB, and estimates the conditional variance as the
/// mean squared residual of a least-squares regression.
McReport mc_conditional_variance(const ChannelConfig& cfg, const CorrelationVector& gamma, Subset S,
                                 McIdentity identity, std::size_t n, std::uint64_t seed);

/// Convenience overload for the RelayGivenComplement identity.
McReport mc_relay_conditional_variance(const ChannelConfig& cfg, const CorrelationVector& gamma,
                                       Subset S, std::size_t n, std::uint64_t seed);

struct GridMaxMin {
    double value = 0.0;
    CorrelationVector argmax = CorrelationVector::zeros(1);
};

/// Lattice maximum of min(B_r,K, B_d,K) over Gamma_OB, then a local lattice at
/// step/10 around the best point and a compass search down to 1e-7. K <= 3.
GridMaxMin grid_maxmin(const ChannelConfig& cfg, double step);

using ParamFn = std::function<double(std::span<const double>)>;
using DomainSampler = std::function<std::vector<double>(std::mt19937_64&)>;

struct ChordWitness {
    std::vector<double> a;
    std::vector<double> b;
    double t = 0.0;
    double lhs = 0.0;  // fn(t a + (1-t) b)
    double rhs = 0.0;  // t fn(a) + (1-t) fn(b)
};

struct ChordResult {
    bool passed = true;
    std::size_t trials = 0;
    std::optional<ChordWitness> witness;
};

/// Midpoint-style concavity test along random chords of a convex domain; the
/// first chord with fn(mix) < mix of fn - 1e-9 is reported.
ChordResult chord_check(const ParamFn& fn, const DomainSampler& domain, std::size_t trials,
                        std::uint64_t seed);

// Uniform samplers for the parameter sets.
DomainSampler gamma_ob_sampler(int K);
/// (alpha, beta) flattened as [alpha_1..alpha_K, beta_1..beta_K].
DomainSampler df_split_sampler(int K);
/// gamma_S uniform on {sum_S gamma <= 1 - sum_{S^c} fixed}, gamma_{S^c} held fixed.
DomainSampler gamma_slice_sampler(const CorrelationVector& fixed, Subset S);

/// B_r,S as a function of s in [0,1] along the ray gamma_k = s^2 * budget * lambda_k / sum_S lambda
/// (k in S), gamma_{S^c} = fixed, budget = 1 - sum_{S^c} fixed. Along the ray
/// x = sum_S sqrt(lambda_k gamma_k) = s * sqrt(budget * sum_S lambda), so concavity in s is
/// concavity in x.
ParamFn relay_bound_along_x(const ChannelConfig& cfg, const CorrelationVector& fixed, Subset S);
DomainSampler unit_interval_sampler();

struct DominanceWitness {
    std::vector<double> alpha;
    std::vector<double> beta;
    Subset S;
    std::string relation;
    double outer = 0.0;
    double inner = 0.0;
};

struct DominanceResult {
    bool passed = true;
    std::size_t trials = 0;
    std::optional<DominanceWitness> witness;
};

/// For random (alpha, beta) in Gamma and gamma = (1 - alpha) beta:
///   B_d,S(gamma) >= I_d,S(alpha, beta) - 1e-12 and B_r,S(gamma) >= I_r,S(alpha) - 1e-12
/// for every S, and with beta = beta_star(alpha), |B_r,K(gamma) - I_r,K(alpha)| <= 1e-12.
DominanceResult dominance_check(const ChannelConfig& cfg, std::size_t trials, std::uint64_t seed);

}  // namespace marc
