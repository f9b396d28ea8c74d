#include "marc/sumcap.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "marc/error.hpp"
#include "parallel.hpp"

namespace marc {

namespace {

constexpr double kRuleTol = 1e-10;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// Constraint slice {u in prod [0, lambda_k] : sum u = c} with u_k = lambda_k (1 - alpha_k).
std::vector<double> alpha_from_slice(const ChannelConfig& cfg, const std::vector<double>& u) {
    std::vector<double> alpha(u.size());
    for (std::size_t k = 0; k < u.size(); ++k)
        alpha[k] = std::clamp(1.0 - u[k] / cfg.lambda(static_cast<int>(k)), 0.0, 1.0);
    return alpha;
}

IntersectionOutcome classify_alpha(const ChannelConfig& cfg, const std::vector<double>& alpha) {
    return classify_inner(cfg, DfPowerSplit(alpha, beta_star(cfg, alpha)));
}

void enumerate_compositions(int parts, int total, std::vector<int>& current,
                            std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int i = 0; i <= total; ++i) {
        current.push_back(i);
        enumerate_compositions(parts - 1, total - i, current, out);
        current.pop_back();
    }
}

RuleSetScan scan_two_user(const ChannelConfig& cfg, const MaxMinSolution& sol, const ScanOptions& opts) {
    const double l1 = cfg.lambda(0);
    const double l2 = cfg.lambda(1);
    const double c = sol.constraint_value;
    const double lo = 1.0 - std::min(l1, c) / l1;
    const double hi = 1.0 - std::max(0.0, c - l2) / l1;
    auto alpha2_of = [&](double a1) { return std::clamp(1.0 - (c - l1 * (1.0 - a1)) / l2, 0.0, 1.0); };
    auto rule = [&](double a1) { return std::vector<double>{a1, alpha2_of(a1)}; };

    RuleSetScan scan;
    scan.feasible = {Interval{lo, hi}, Interval{alpha2_of(hi), alpha2_of(lo)}};

    const std::size_t n = hi > lo ? std::max<std::size_t>(opts.sweep_points, 2) : 1;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = n == 1 ? lo : (i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));

    std::vector<RuleSample> coarse(n);
    detail::parallel_for(n, [&](std::size_t i) {
        auto alpha = rule(grid[i]);
        coarse[i] = RuleSample{alpha, classify_alpha(cfg, alpha)};
    });

    // Bisect every switch until the bracket is below resolution in both coordinates.
    const double slope = l1 / l2;
    std::vector<double> boundary(n, 0.0);  // boundary[i] sits between grid[i] and grid[i+1]
    std::vector<RuleSample> probes;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (coarse[i].outcome.kind == coarse[i + 1].outcome.kind) continue;
        double a = grid[i];
        double b = grid[i + 1];
        const IntersectionKind kind_a = coarse[i].outcome.kind;
        while (std::max(b - a, (b - a) * slope) > opts.resolution) {
            const double mid = 0.5 * (a + b);
            auto alpha = rule(mid);
            auto outcome = classify_alpha(cfg, alpha);
            const bool same_as_a = outcome.kind == kind_a;
            probes.push_back(RuleSample{std::move(alpha), outcome});
            (same_as_a ? a : b) = mid;
        }
        boundary[i] = 0.5 * (a + b);
    }

    std::vector<Interval> active1;
    for (std::size_t i = 0; i < n; ++i) {
        if (coarse[i].outcome.kind != IntersectionKind::Active) continue;
        if (i > 0 && coarse[i - 1].outcome.kind == IntersectionKind::Active) continue;
        std::size_t j = i;
        while (j + 1 < n && coarse[j + 1].outcome.kind == IntersectionKind::Active) ++j;
        active1.push_back(Interval{i == 0 ? lo : boundary[i - 1], j + 1 == n ? hi : boundary[j]});
    }
    std::vector<Interval> active2;
    for (const auto& iv : active1) active2.push_back(Interval{alpha2_of(iv.hi), alpha2_of(iv.lo)});
    scan.active_intervals = {active1, active2};

    scan.samples = std::move(coarse);
    scan.samples.insert(scan.samples.end(), std::make_move_iterator(probes.begin()),
                        std::make_move_iterator(probes.end()));
    std::stable_sort(scan.samples.begin(), scan.samples.end(),
                     [](const RuleSample& x, const RuleSample& y) { return x.alpha[0] < y.alpha[0]; });
    return scan;
}

RuleSetScan scan_many_users(const ChannelConfig& cfg, const MaxMinSolution& sol, const ScanOptions& opts) {
    const int K = cfg.K();
    const double c = sol.constraint_value;
    std::vector<std::vector<double>> slice_points;

    auto feasible = [&](const std::vector<double>& u) {
        for (int k = 0; k < K; ++k)
            if (u[static_cast<std::size_t>(k)] > cfg.lambda(k) * (1.0 + 1e-15)) return false;
        return true;
    };

    // Proportional rule: u_k = c lambda_k / sum lambda (always feasible since c < sum lambda).
    {
        double lsum = 0.0;
        for (int k = 0; k < K; ++k) lsum += cfg.lambda(k);
        std::vector<double> u(static_cast<std::size_t>(K));
        for (int k = 0; k < K; ++k) u[static_cast<std::size_t>(k)] = c * cfg.lambda(k) / lsum;
        slice_points.push_back(std::move(u));
    }

    if (K > 1) {
        std::vector<std::vector<int>> comps;
        std::vector<int> current;
        enumerate_compositions(K, opts.lattice_divisions, current, comps);
        for (const auto& comp : comps) {
            std::vector<double> u(static_cast<std::size_t>(K));
            for (int k = 0; k < K; ++k)
                u[static_cast<std::size_t>(k)] = c * comp[static_cast<std::size_t>(k)] / opts.lattice_divisions;
            if (feasible(u)) slice_points.push_back(std::move(u));
        }

        std::mt19937_64 rng(opts.seed);
        std::exponential_distribution<double> expo(1.0);
        std::size_t accepted = 0;
        for (std::size_t attempt = 0; attempt < 50 * opts.random_points && accepted < opts.random_points;
             ++attempt) {
            std::vector<double> u(static_cast<std::size_t>(K));
            double total = 0.0;
            for (auto& x : u) total += (x = expo(rng));
            for (auto& x : u) x *= c / total;
            if (!feasible(u)) continue;
            slice_points.push_back(std::move(u));
            ++accepted;
        }
    }

    RuleSetScan scan;
    scan.samples.resize(slice_points.size());
    detail::parallel_for(slice_points.size(), [&](std::size_t i) {
        auto alpha = alpha_from_slice(cfg, slice_points[i]);
        scan.samples[i] = RuleSample{alpha, classify_alpha(cfg, alpha)};
    });
    return scan;
}

}  // namespace

bool bottleneck_check(const ChannelConfig& cfg) {
    return cfg.P_sum() / cfg.N_r() <= (cfg.P_sum() + cfg.P_r()) / cfg.N_d();
}

MaxMinSolution solve_equalizer(const ChannelConfig& cfg) {
    MaxMinSolution sol;
    const double K0 = cfg.P_max() / cfg.N_r();
    const double K1 = std::sqrt(cfg.P_max() * cfg.P_r()) / cfg.N_d();
    const double K2 = (cfg.P_sum() + cfg.P_r()) / cfg.N_d();
    const double K3 = cfg.P_sum() / cfg.N_r();
    sol.K_coeffs = {K0, K1, K2, K3};

    if (bottleneck_check(cfg)) {
        sol.regime = Regime::Bottleneck;
        sol.sum_rate = awgn_capacity(K3);
        return sol;
    }
    // Positive root of K0 r^2 + 2 K1 r - (K3 - K2) = 0, written without cancellation.
    const double gap = K3 - K2;
    const double r = gap / (K1 + std::sqrt(K1 * K1 + gap * K0));
    sol.regime = Regime::Equalized;
    sol.root = r;
    sol.constraint_value = r * r;
    sol.sum_rate = awgn_capacity(K3 - K0 * r * r);
    const double dest = awgn_capacity(K2 + 2.0 * K1 * r);
    if (std::abs(sol.sum_rate - dest) > 1e-10)
        throw NumericalError("solve_equalizer: relay and destination sum bounds differ by " +
                             fmt(sol.sum_rate - dest));
    return sol;
}

double inner_rule_measure(const ChannelConfig& cfg, std::span<const double> alpha) {
    double s = 0.0;
    for (std::size_t k = 0; k < alpha.size(); ++k) s += cfg.lambda(static_cast<int>(k)) * (1.0 - alpha[k]);
    return s;
}

double outer_rule_measure(const ChannelConfig& cfg, std::span<const double> gamma) {
    double x = 0.0;
    for (std::size_t k = 0; k < gamma.size(); ++k)
        x += std::sqrt(cfg.lambda(static_cast<int>(k)) * std::max(gamma[k], 0.0));
    return x * x;
}

DfPowerSplit maxmin_rule_inner(const ChannelConfig& cfg, const MaxMinSolution& sol,
                               std::span<const double> alpha) {
    if (static_cast<int>(alpha.size()) != cfg.K())
        throw DomainError("maxmin_rule_inner: alpha has " + std::to_string(alpha.size()) + " entries");
    std::vector<double> a(alpha.begin(), alpha.end());
    auto beta = beta_star(cfg, a);
    DfPowerSplit split(a, std::move(beta));
    const double residual = inner_rule_measure(cfg, alpha) - sol.constraint_value;
    if (std::abs(residual) > kRuleTol)
        throw DomainError("max-min rule constraint sum lambda_k (1 - alpha_k) = " +
                          fmt(sol.constraint_value) + " violated, residual " + fmt(residual));
    return split;
}

CorrelationVector gamma_rule_outer(const ChannelConfig& cfg, const MaxMinSolution& sol,
                                   std::span<const double> gamma) {
    if (static_cast<int>(gamma.size()) != cfg.K())
        throw DomainError("gamma_rule_outer: gamma has " + std::to_string(gamma.size()) + " entries");
    CorrelationVector g(std::vector<double>(gamma.begin(), gamma.end()));
    const double residual = outer_rule_measure(cfg, g.values()) - sol.constraint_value;
    if (std::abs(residual) > kRuleTol)
        throw DomainError("max-min rule constraint (sum sqrt(lambda_k gamma_k))^2 = " +
                          fmt(sol.constraint_value) + " violated, residual " + fmt(residual));
    return g;
}

IntersectionOutcome classify_inner(const ChannelConfig& cfg, const DfPowerSplit& split) {
    return intersection_max_sum(df_function(cfg, split, Receiver::Destination),
                                df_function(cfg, split, Receiver::Relay));
}

IntersectionOutcome classify_outer(const ChannelConfig& cfg, const CorrelationVector& gamma) {
    return intersection_max_sum(outer_function(cfg, gamma, Receiver::Destination),
                                outer_function(cfg, gamma, Receiver::Relay));
}

RuleSetScan scan_active_rules(const ChannelConfig& cfg, const MaxMinSolution& sol, const ScanOptions& opts) {
    if (sol.regime != Regime::Equalized)
        throw DomainError("scan_active_rules requires the Equalized regime");
    if (!(opts.resolution > 0.0)) throw DomainError("scan resolution must be positive");
    RuleSetScan scan = cfg.K() == 2 ? scan_two_user(cfg, sol, opts) : scan_many_users(cfg, sol, opts);
    for (const auto& s : scan.samples)
        if (s.outcome.kind == IntersectionKind::Active) ++scan.active_count;
    scan.verdict = scan.active_count > 0 ? ScanVerdict::ActiveClass : ScanVerdict::InactiveClass;
    return scan;
}

SumCapacity sum_capacity(const ChannelConfig& cfg, const ScanOptions& opts) {
    SumCapacity out;
    out.solution = solve_equalizer(cfg);
    out.value = out.solution.sum_rate;
    if (out.solution.regime == Regime::Bottleneck) {
        out.status = CapacityStatus::Exact;
        return out;
    }
    out.scan = scan_active_rules(cfg, out.solution, opts);
    out.status = out.scan->verdict == ScanVerdict::ActiveClass ? CapacityStatus::Exact
                                                               : CapacityStatus::UpperBoundOnly;
    return out;
}

std::string to_string(Regime r) { return r == Regime::Bottleneck ? "Bottleneck" : "Equalized"; }

std::string to_string(ScanVerdict v) {
    return v == ScanVerdict::ActiveClass ? "ActiveClass" : "InactiveClass";
}

std::string to_string(CapacityStatus s) {
    return s == CapacityStatus::Exact ? "Exact" : "UpperBoundOnly";
}

}  // namespace marc
