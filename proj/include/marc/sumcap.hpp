#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "marc/channel.hpp"
#include "marc/polymatroid.hpp"
#include "marc/rate_bounds.hpp"

namespace marc {

enum class Regime { Bottleneck, Equalized };

/// Solution of the K-user max-min problem, shared by the cutset and DF bounds.
///
/// In the Equalized regime `root` r solves K0 r^2 + 2 K1 r - (K3 - K2) = 0 and the
/// max-min rules are the parameters with
///     sum_k lambda_k (1 - alpha_k) = r^2           (DF)
///     (sum_k sqrt(lambda_k gamma_k))^2 = r^2       (cutset)
/// so constraint_value = r^2. Printed tables that quote "(q*)^2 = 0.408" for the
/// 2-user examples are quoting r itself.
struct MaxMinSolution {
    Regime regime = Regime::Bottleneck;
    double root = 0.0;
    double sum_rate = 0.0;
    double constraint_value = 0.0;
    std::array<double, 4> K_coeffs{};  // K0 = P_max/N_r, K1 = sqrt(P_max P_r)/N_d,
                                       // K2 = (sum P + P_r)/N_d, K3 = sum P/N_r
};

/// True iff sum P / N_r <= (sum P + P_r) / N_d, i.e. the source-relay link is the
/// bottleneck. Equality counts as bottleneck.
bool bottleneck_check(const ChannelConfig& cfg);

MaxMinSolution solve_equalizer(const ChannelConfig& cfg);

/// sum_k lambda_k (1 - alpha_k).
double inner_rule_measure(const ChannelConfig& cfg, std::span<const double> alpha);
/// (sum_k sqrt(lambda_k gamma_k))^2.
double outer_rule_measure(const ChannelConfig& cfg, std::span<const double> gamma);

/// Validates alpha as a DF max-min rule and pairs it with beta_star.
/// Throws DomainError (message carries the residual) when the rule constraint
/// misses constraint_value by more than 1e-10 or alpha leaves [0,1]^K.
DfPowerSplit maxmin_rule_inner(const ChannelConfig& cfg, const MaxMinSolution& sol,
                               std::span<const double> alpha);

/// Validates gamma as a cutset max-min rule.
CorrelationVector gamma_rule_outer(const ChannelConfig& cfg, const MaxMinSolution& sol,
                                   std::span<const double> gamma);

/// Intersection of R_d(alpha, beta) and R_r(alpha): f1 = destination, f2 = relay.
IntersectionOutcome classify_inner(const ChannelConfig& cfg, const DfPowerSplit& split);
/// Same for the cutset polymatroids at a fixed gamma.
IntersectionOutcome classify_outer(const ChannelConfig& cfg, const CorrelationVector& gamma);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct RuleSample {
    std::vector<double> alpha;
    IntersectionOutcome outcome;
};

enum class ScanVerdict { ActiveClass, InactiveClass };

struct RuleSetScan {
    std::vector<RuleSample> samples;
    // K = 2 only: per-coordinate feasible range of alpha* and the active pieces.
    std::vector<Interval> feasible;
    std::vector<std::vector<Interval>> active_intervals;
    ScanVerdict verdict = ScanVerdict::InactiveClass;
    std::size_t active_count = 0;
};

struct ScanOptions {
    double resolution = 1e-3;
    std::size_t sweep_points = 201;       // K = 2 coarse sweep
    std::size_t random_points = 10000;    // K > 2
    int lattice_divisions = 12;           // K > 2 simplex lattice
    std::uint64_t seed = 20240611;
};

/// Samples the max-min rule set and classifies each rule's intersection.
/// K = 2 sweeps alpha_1 over its feasible interval (alpha_2 from the constraint)
/// and bisects every Active/Inactive switch until the bracket is narrower than
/// `resolution` in both coordinates. K > 2 uses seeded Dirichlet samples of the
/// constraint slice plus a simplex lattice. Requires the Equalized regime.
RuleSetScan scan_active_rules(const ChannelConfig& cfg, const MaxMinSolution& sol,
                              const ScanOptions& opts = {});

enum class CapacityStatus { Exact, UpperBoundOnly };

struct SumCapacity {
    double value = 0.0;
    CapacityStatus status = CapacityStatus::Exact;
    MaxMinSolution solution;
    std::optional<RuleSetScan> scan;  // empty in the Bottleneck regime
};

SumCapacity sum_capacity(const ChannelConfig& cfg, const ScanOptions& opts = {});

std::string to_string(Regime r);
std::string to_string(ScanVerdict v);
std::string to_string(CapacityStatus s);

}  // namespace marc
