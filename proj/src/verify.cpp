#include "marc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "marc/error.hpp"
#include "parallel.hpp"

namespace marc {

namespace {

// Draws the DF signalling construction for one channel use.
class SignalSampler {
public:
    SignalSampler(const ChannelConfig& cfg, const CorrelationVector& gamma, std::uint64_t seed)
        : K_(cfg.K()), rng_(seed), x_(static_cast<std::size_t>(K_)) {
        const double mass = gamma.sum();
        for (int k = 0; k < K_; ++k) {
            const double alpha = mass > 0.0 ? 1.0 - mass : 1.0;
            const double beta = mass > 0.0 ? gamma[k] / mass : 0.0;
            fresh_.push_back(std::sqrt(alpha * cfg.P(k)));
            shared_.push_back(std::sqrt((1.0 - alpha) * cfg.P(k)));
            relay_share_.push_back(std::sqrt(beta * cfg.P_r()));
            beta_sum_ += beta;
        }
        relay_own_ = std::sqrt(std::max(0.0, 1.0 - beta_sum_) * cfg.P_r());
    }

    // Fills sources() and returns X_r.
    double draw() {
        double xr = 0.0;
        for (int k = 0; k < K_; ++k) {
            const double v = normal_(rng_);
            const double v0 = normal_(rng_);
            x_[static_cast<std::size_t>(k)] = fresh_[static_cast<std::size_t>(k)] * v0 +
                                              shared_[static_cast<std::size_t>(k)] * v;
            xr += relay_share_[static_cast<std::size_t>(k)] * v;
        }
        return xr + relay_own_ * normal_(rng_);
    }

    const std::vector<double>& sources() const { return x_; }

private:
    int K_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::vector<double> fresh_, shared_, relay_share_;
    double beta_sum_ = 0.0;
    double relay_own_ = 0.0;
    std::vector<double> x_;
};

double objective(const ChannelConfig& cfg, const std::vector<double>& g) {
    const CorrelationVector gamma(g);
    const Subset all = Subset::full(cfg.K());
    return std::min(outer_bound_relay(cfg, gamma, all), outer_bound_dest(cfg, gamma, all));
}

bool in_gamma_ob(const std::vector<double>& g) {
    double s = 0.0;
    for (double v : g) {
        if (v < 0.0 || v > 1.0) return false;
        s += v;
    }
    return s <= 1.0 + 1e-15;
}

std::vector<double> dirichlet_head(std::mt19937_64& rng, int n_out, double scale) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(static_cast<std::size_t>(n_out) + 1);
    double total = 0.0;
    for (auto& x : w) total += (x = expo(rng));
    w.pop_back();
    for (auto& x : w) x *= scale / total;
    return w;
}

}  // namespace

McReport mc_conditional_variance(const ChannelConfig& cfg, const CorrelationVector& gamma, Subset S,
                                 McIdentity identity, std::size_t n, std::uint64_t seed) {
    if (gamma.K() != cfg.K()) throw DomainError("gamma dimension differs from the channel");
    if (S.is_empty()) throw DomainError("conditional-variance check needs a nonempty S");
    if (n < 2) throw DomainError("at least two samples are required");
    const int K = cfg.K();
    const Subset Sc = S.complement(K);

    std::vector<int> regressors;
    for (int k = 0; k < K; ++k)
        if (Sc.contains(k)) regressors.push_back(k);
    const bool relay_is_regressor = identity == McIdentity::SourcesGivenRelayAndComplement;
    const int p = static_cast<int>(regressors.size()) + (relay_is_regressor ? 1 : 0);

    auto observe = [&](SignalSampler& s, Eigen::VectorXd& x) {
        const double xr = s.draw();
        const auto& src = s.sources();
        int i = 0;
        for (int k : regressors) x(i++) = src[static_cast<std::size_t>(k)];
        double y = 0.0;
        if (relay_is_regressor) {
            x(i) = xr;
            for (int k = 0; k < K; ++k)
                if (S.contains(k)) y += src[static_cast<std::size_t>(k)];
        } else {
            y = xr;
        }
        return y;
    };

    // Pass 1: least-squares coefficients from the sample moments (zero-mean model, no intercept).
    Eigen::VectorXd x(p);
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(p, p);
    Eigen::VectorXd cross = Eigen::VectorXd::Zero(p);
    {
        SignalSampler sampler(cfg, gamma, seed);
        for (std::size_t i = 0; i < n; ++i) {
            const double y = observe(sampler, x);
            gram.noalias() += x * x.transpose();
            cross.noalias() += y * x;
        }
    }
    Eigen::VectorXd coef = Eigen::VectorXd::Zero(p);
    if (p > 0) coef = gram.completeOrthogonalDecomposition().solve(cross);

    // Pass 2: replay the same stream and average the squared residuals.
    long double sum = 0.0L;
    long double sum_sq = 0.0L;
    {
        SignalSampler sampler(cfg, gamma, seed);
        for (std::size_t i = 0; i < n; ++i) {
            const double y = observe(sampler, x);
            const double e = y - (p > 0 ? coef.dot(x) : 0.0);
            const long double e2 = static_cast<long double>(e) * e;
            sum += e2;
            sum_sq += e2 * e2;
        }
    }

    McReport report;
    report.n_samples = n;
    const long double nn = static_cast<long double>(n);
    const long double mean = sum / nn;
    const long double var = std::max(0.0L, (sum_sq - nn * mean * mean) / (nn - 1.0L));
    report.estimate = static_cast<double>(mean);
    report.std_error = static_cast<double>(std::sqrt(var / nn));

    const double complement_mass = gamma.sum_over(Sc);
    if (identity == McIdentity::RelayGivenComplement) {
        report.target = std::max(0.0, 1.0 - complement_mass) * cfg.P_r();
    } else {
        double ps = 0.0;
        double coherent = 0.0;
        for (int k = 0; k < K; ++k) {
            if (!S.contains(k)) continue;
            ps += cfg.P(k);
            coherent += std::sqrt(gamma[k] * cfg.P(k));
        }
        report.target = std::abs(complement_mass - 1.0) <= kFeasibilityTol
                            ? ps
                            : std::max(0.0, ps - coherent * coherent / (1.0 - complement_mass));
    }

    const double scale = std::max({report.target, cfg.P_r(), cfg.P_sum()});
    if (report.std_error <= 1e-12 * scale) {
        report.degenerate = true;
        report.z_score = std::abs(report.estimate - report.target) <= 1e-9 * scale
                             ? 0.0
                             : std::numeric_limits<double>::infinity();
    } else {
        report.z_score = (report.estimate - report.target) / report.std_error;
    }
    return report;
}

McReport mc_relay_conditional_variance(const ChannelConfig& cfg, const CorrelationVector& gamma, Subset S,
                                       std::size_t n, std::uint64_t seed) {
    return mc_conditional_variance(cfg, gamma, S, McIdentity::RelayGivenComplement, n, seed);
}

GridMaxMin grid_maxmin(const ChannelConfig& cfg, double step) {
    const int K = cfg.K();
    if (K > 3) throw UnsupportedDimension("grid_maxmin is limited to K <= 3");
    if (!(step > 0.0 && step <= 1.0)) throw DomainError("grid step must lie in (0, 1]");
    const int n = std::max(1, static_cast<int>(std::lround(1.0 / step)));
    const double h = 1.0 / n;

    // Coarse lattice {i/n : sum i <= n}, enumerated in lexicographic order.
    std::vector<std::vector<int>> points;
    std::vector<int> idx(static_cast<std::size_t>(K), 0);
    auto rec = [&](auto&& self, int k, int budget) -> void {
        if (k == K) {
            points.push_back(idx);
            return;
        }
        for (int i = 0; i <= budget; ++i) {
            idx[static_cast<std::size_t>(k)] = i;
            self(self, k + 1, budget - i);
        }
    };
    rec(rec, 0, n);

    std::vector<double> values(points.size());
    detail::parallel_for(points.size(), [&](std::size_t i) {
        std::vector<double> g(static_cast<std::size_t>(K));
        for (int k = 0; k < K; ++k) g[static_cast<std::size_t>(k)] = points[i][static_cast<std::size_t>(k)] * h;
        values[i] = objective(cfg, g);
    });
    const std::size_t best_i = static_cast<std::size_t>(
        std::max_element(values.begin(), values.end()) - values.begin());
    std::vector<double> best(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) best[static_cast<std::size_t>(k)] = points[best_i][static_cast<std::size_t>(k)] * h;
    double best_val = values[best_i];

    // Local lattice at step/10 over best +- step.
    const double sub = h / 10.0;
    const std::vector<double> centre = best;
    std::vector<int> off(static_cast<std::size_t>(K), -10);
    while (true) {
        std::vector<double> g(static_cast<std::size_t>(K));
        for (int k = 0; k < K; ++k)
            g[static_cast<std::size_t>(k)] = centre[static_cast<std::size_t>(k)] + off[static_cast<std::size_t>(k)] * sub;
        if (in_gamma_ob(g)) {
            const double v = objective(cfg, g);
            if (v > best_val) {
                best_val = v;
                best = g;
            }
        }
        int k = 0;
        while (k < K && ++off[static_cast<std::size_t>(k)] > 10) off[static_cast<std::size_t>(k++)] = -10;
        if (k == K) break;
    }

    // Compass search.
    for (double s = sub / 2.0; s > 1e-7; ) {
        bool moved = false;
        for (int k = 0; k < K && !moved; ++k) {
            for (double dir : {1.0, -1.0}) {
                auto g = best;
                g[static_cast<std::size_t>(k)] += dir * s;
                if (!in_gamma_ob(g)) continue;
                const double v = objective(cfg, g);
                if (v > best_val) {
                    best_val = v;
                    best = g;
                    moved = true;
                    break;
                }
            }
        }
        if (!moved) s /= 2.0;
    }
    return GridMaxMin{best_val, CorrelationVector(best)};
}

ChordResult chord_check(const ParamFn& fn, const DomainSampler& domain, std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ChordResult result;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto a = domain(rng);
        const auto b = domain(rng);
        const double w = unit(rng);
        std::vector<double> mix(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) mix[i] = w * a[i] + (1.0 - w) * b[i];
        const double lhs = fn(mix);
        const double rhs = w * fn(a) + (1.0 - w) * fn(b);
        ++result.trials;
        if (lhs < rhs - 1e-9) {
            result.passed = false;
            result.witness = ChordWitness{a, b, w, lhs, rhs};
            return result;
        }
    }
    return result;
}

DomainSampler gamma_ob_sampler(int K) {
    return [K](std::mt19937_64& rng) { return dirichlet_head(rng, K, 1.0); };
}

DomainSampler df_split_sampler(int K) {
    return [K](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<double> out(static_cast<std::size_t>(2 * K));
        for (int k = 0; k < K; ++k) out[static_cast<std::size_t>(k)] = unit(rng);
        const auto beta = dirichlet_head(rng, K, 1.0);
        std::copy(beta.begin(), beta.end(), out.begin() + K);
        return out;
    };
}

DomainSampler gamma_slice_sampler(const CorrelationVector& fixed, Subset S) {
    const int K = fixed.K();
    std::vector<double> base(fixed.values().begin(), fixed.values().end());
    const double budget = std::max(0.0, 1.0 - fixed.sum_over(S.complement(K)));
    return [K, S, base, budget](std::mt19937_64& rng) {
        auto g = base;
        const auto w = dirichlet_head(rng, S.size(), budget);
        std::size_t i = 0;
        for (int k = 0; k < K; ++k)
            if (S.contains(k)) g[static_cast<std::size_t>(k)] = w[i++];
        return g;
    };
}

ParamFn relay_bound_along_x(const ChannelConfig& cfg, const CorrelationVector& fixed, Subset S) {
    const int K = cfg.K();
    if (fixed.K() != K) throw DomainError("gamma dimension differs from the channel");
    if (S.is_empty()) throw DomainError("ray needs a nonempty S");
    std::vector<double> base(fixed.values().begin(), fixed.values().end());
    const double budget = std::max(0.0, 1.0 - fixed.sum_over(S.complement(K)));
    double lsum = 0.0;
    for (int k = 0; k < K; ++k)
        if (S.contains(k)) lsum += cfg.lambda(k);
    return [&cfg, S, K, base, budget, lsum](std::span<const double> s) {
        auto g = base;
        for (int k = 0; k < K; ++k)
            if (S.contains(k)) g[static_cast<std::size_t>(k)] = s[0] * s[0] * budget * cfg.lambda(k) / lsum;
        return outer_bound_relay(cfg, CorrelationVector(std::move(g)), S);
    };
}

DomainSampler unit_interval_sampler() {
    return [](std::mt19937_64& rng) {
        return std::vector<double>{std::uniform_real_distribution<double>(0.0, 1.0)(rng)};
    };
}

DominanceResult dominance_check(const ChannelConfig& cfg, std::size_t trials, std::uint64_t seed) {
    const int K = cfg.K();
    const auto sampler = df_split_sampler(K);
    std::mt19937_64 rng(seed);
    DominanceResult result;
    auto fail = [&](const DfPowerSplit& s, Subset S, const char* rel, double outer, double inner) {
        result.passed = false;
        result.witness = DominanceWitness{{s.alpha().begin(), s.alpha().end()},
                                          {s.beta().begin(), s.beta().end()}, S, rel, outer, inner};
    };
    for (std::size_t t = 0; t < trials && result.passed; ++t) {
        const auto flat = sampler(rng);
        const std::vector<double> alpha(flat.begin(), flat.begin() + K);
        const DfPowerSplit split(alpha, {flat.begin() + K, flat.end()});
        const CorrelationVector gamma = df_to_correlation(split);
        for (std::uint32_t m = 1; m < (std::uint32_t{1} << K) && result.passed; ++m) {
            const Subset S{m};
            const double bd = outer_bound_dest(cfg, gamma, S);
            const double id = df_bound_dest(cfg, split, S);
            if (bd < id - 1e-12) {
                fail(split, S, "B_d >= I_d", bd, id);
                break;
            }
            const double br = outer_bound_relay(cfg, gamma, S);
            const double ir = df_bound_relay(cfg, split, S);
            if (br < ir - 1e-12) fail(split, S, "B_r >= I_r", br, ir);
        }
        if (!result.passed) break;

        const DfPowerSplit opt(alpha, beta_star(cfg, alpha));
        const Subset all = Subset::full(K);
        const double br = outer_bound_relay(cfg, df_to_correlation(opt), all);
        const double ir = df_bound_relay(cfg, opt, all);
        if (std::abs(br - ir) > 1e-12) fail(opt, all, "B_r,K == I_r,K under beta*", br, ir);
        ++result.trials;
    }
    return result;
}

}  // namespace marc
