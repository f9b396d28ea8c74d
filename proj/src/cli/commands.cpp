#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "marc/cli.hpp"
#include "marc/error.hpp"
#include "marc/region.hpp"
#include "marc/sumcap.hpp"
#include "marc/verify.hpp"

namespace marc::cli {

using nlohmann::json;

namespace {

std::string f6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string vec6(std::span<const double> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + f6(v[i]);
    return s + ")";
}

std::string interval(const Interval& iv) { return "[" + f6(iv.lo) + "," + f6(iv.hi) + "]"; }

std::string intervals(const std::vector<Interval>& ivs) {
    if (ivs.empty()) return "none";
    std::string s;
    for (std::size_t i = 0; i < ivs.size(); ++i) s += (i ? "u" : "") + interval(ivs[i]);
    return s;
}

RunManifest manifest(const std::string& command, const std::string& path, const ChannelConfig* cfg,
                     json params) {
    RunManifest m;
    m.command = command;
    m.config_path = path;
    m.resolved = cfg ? config_to_json(*cfg) : json(nullptr);
    m.params = std::move(params);
    m.version = tool_version();
    return m;
}

// ---------------------------------------------------------------- sumcap

struct SumcapArgs {
    std::string config;
    double resolution = 1e-3;
    std::uint64_t seed = ScanOptions{}.seed;
    std::size_t samples = ScanOptions{}.random_points;
};

void print_scan(std::ostream& out, const ChannelConfig& cfg, const RuleSetScan& scan) {
    out << "scan verdict=" << to_string(scan.verdict) << " active=" << scan.active_count << "/"
        << scan.samples.size() << "\n";
    for (std::size_t k = 0; k < scan.feasible.size(); ++k) {
        out << "alpha" << k + 1 << " feasible=" << interval(scan.feasible[k])
            << " active=" << intervals(scan.active_intervals[k]) << "\n";
    }
    (void)cfg;
}

int cmd_sumcap(const SumcapArgs& a, std::ostream& out) {
    const auto loaded = load_config(a.config);
    const auto& cfg = loaded.config;
    if (!(a.resolution > 0.0 && a.resolution < 1.0)) throw ValidationError("--resolution", "must lie in (0, 1)");
    ScanOptions opts;
    opts.resolution = a.resolution;
    opts.seed = a.seed;
    opts.random_points = a.samples;
    const SumCapacity cap = sum_capacity(cfg, opts);
    const auto& sol = cap.solution;
    if (sol.regime == Regime::Bottleneck) {
        out << "regime=Bottleneck R=" << f6(cap.value) << " status=" << to_string(cap.status) << "\n";
    } else {
        out << "regime=Equalized root=" << f6(sol.root) << " c=" << f6(sol.constraint_value)
            << " R=" << f6(cap.value) << " status=" << to_string(cap.status) << "\n";
        if (cap.scan) print_scan(out, cfg, *cap.scan);
    }
    out << manifest("sumcap", a.config, &cfg,
                    {{"resolution", a.resolution}, {"seed", a.seed}, {"samples", a.samples}})
               .comment_line()
        << "\n";
    return kOk;
}

// ---------------------------------------------------------------- region

struct RegionArgs {
    std::string config;
    std::string bound = "both";
    double step = 0.02;
    std::string out = "region";
};

void write_polygon(const std::string& path, const RunManifest& m, const std::vector<Point2>& poly) {
    std::ofstream f(path);
    if (!f) throw ValidationError("--out", "cannot write " + path);
    f << m.comment_line() << "\n";
    f << "R1,R2\n";
    for (const auto& p : poly) f << g17(p[0]) << "," << g17(p[1]) << "\n";
}

int cmd_region(const RegionArgs& a, std::ostream& out) {
    const auto loaded = load_config(a.config);
    const auto& cfg = loaded.config;
    if (!std::isfinite(a.step) || !(a.step > 0.0 && a.step <= 0.5))
        throw ValidationError("--step", "must lie in (0, 0.5]");
    if (cfg.K() != 2) throw UnsupportedDimension("region export supports K = 2 only");

    std::vector<Point2> inner, outer;
    auto emit = [&](const std::string& which, const RegionPolytope& poly, std::vector<Point2>& pts) {
        pts = to_points(poly);
        const auto m = manifest("region", a.config, &cfg, {{"bound", which}, {"step", a.step}});
        const std::string path = a.out + "_" + which + ".csv";
        write_polygon(path, m, pts);
        out << which << " vertices=" << pts.size() << " area=" << f6(polygon_area(pts)) << " file=" << path
            << " digest=" << m.digest() << "\n";
    };
    if (a.bound == "inner" || a.bound == "both") emit("inner", build_df_region(cfg, a.step), inner);
    if (a.bound == "outer" || a.bound == "both") emit("outer", build_outer_region(cfg, a.step), outer);
    if (!inner.empty() && !outer.empty()) {
        double excess = 0.0;
        for (const auto& p : inner) excess = std::max(excess, distance_to_polygon(p, outer));
        out << "inner_outside_outer=" << f6(excess) << " hausdorff=" << f6(hausdorff_distance(inner, outer))
            << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
    std::string config;
    std::vector<double> alpha, beta, gamma;
};

void print_functions(std::ostream& out, const SubsetFunction& f1, const SubsetFunction& f2, int K) {
    out << "subset f1_dest f2_relay\n";
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << K); ++m) {
        const Subset S{m};
        out << to_string(S) << " " << f6(f1(S)) << " " << f6(f2(S)) << "\n";
    }
}

void print_outcome(std::ostream& out, const IntersectionOutcome& o) {
    out << "max_sum=" << f6(o.max_sum_rate) << " kind=" << to_string(o.kind)
        << " argmin=" << to_string(o.argmin_subset);
    if (o.two_user_case) out << " case=" << to_string(*o.two_user_case);
    out << "\n";
    if (!o.polymatroid_inputs)
        out << "note: a bound function is not submodular here; max_sum is the lemma value, an upper bound\n";
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
    const auto loaded = load_config(a.config);
    const auto& cfg = loaded.config;
    const int K = cfg.K();
    const std::size_t uK = static_cast<std::size_t>(K);
    const bool inner = !a.alpha.empty();
    if (inner == !a.gamma.empty()) throw ValidationError("--alpha/--gamma", "give exactly one of them");
    if (!inner && !a.beta.empty()) throw ValidationError("--beta", "only valid together with --alpha");

    const MaxMinSolution sol = solve_equalizer(cfg);
    auto need_rule = [&](const char* field) {
        if (sol.regime != Regime::Equalized)
            throw ValidationError(field, "the missing entry is solved from the rule constraint, "
                                         "which only exists in the Equalized regime");
    };

    json params;
    if (inner) {
        auto alpha = a.alpha;
        if (alpha.size() + 1 == uK) {
            need_rule("--alpha");
            double partial = 0.0;
            for (int k = 0; k + 1 < K; ++k) partial += cfg.lambda(k) * (1.0 - alpha[static_cast<std::size_t>(k)]);
            const double last = 1.0 - (sol.constraint_value - partial) / cfg.lambda(K - 1);
            if (!(last >= -1e-12 && last <= 1.0 + 1e-12))
                throw ValidationError("--alpha", "rule constraint sum lambda_k (1 - alpha_k) = " +
                                                     f6(sol.constraint_value) + " needs alpha_" +
                                                     std::to_string(K) + " = " + f6(last) + ", outside [0,1]");
            alpha.push_back(std::clamp(last, 0.0, 1.0));
        }
        if (alpha.size() != uK) throw ValidationError("--alpha", "expected " + std::to_string(K) + " or " +
                                                                  std::to_string(K - 1) + " entries");
        for (std::size_t k = 0; k < uK; ++k)
            if (!(alpha[k] >= 0.0 && alpha[k] <= 1.0))
                throw ValidationError("--alpha", "alpha_" + std::to_string(k + 1) + " outside [0,1]");
        std::vector<double> beta = a.beta.empty() ? beta_star(cfg, alpha) : a.beta;
        if (beta.size() != uK) throw ValidationError("--beta", "expected " + std::to_string(K) + " entries");
        double bsum = 0.0;
        for (double b : beta) bsum += b;
        if (bsum > 1.0 + 1e-12) throw ValidationError("--beta", "sum of beta is " + f6(bsum) + " > 1");
        const DfPowerSplit split(alpha, beta);
        out << "bound=inner alpha=" << vec6(split.alpha()) << " beta=" << vec6(split.beta())
            << (a.beta.empty() ? " (beta_star)" : "") << "\n";
        if (sol.regime == Regime::Equalized)
            out << "rule_residual=" << f6(inner_rule_measure(cfg, split.alpha()) - sol.constraint_value) << "\n";
        print_functions(out, df_function(cfg, split, Receiver::Destination),
                        df_function(cfg, split, Receiver::Relay), K);
        print_outcome(out, classify_inner(cfg, split));
        params = {{"alpha", alpha}, {"beta", beta}};
    } else {
        auto gamma = a.gamma;
        if (gamma.size() + 1 == uK) {
            need_rule("--gamma");
            double partial = 0.0;
            for (int k = 0; k + 1 < K; ++k)
                partial += std::sqrt(cfg.lambda(k) * std::max(0.0, gamma[static_cast<std::size_t>(k)]));
            const double rest = sol.root - partial;
            if (rest < -1e-12)
                throw ValidationError("--gamma", "rule constraint (sum sqrt(lambda_k gamma_k))^2 = " +
                                                     f6(sol.constraint_value) + " is already exceeded");
            gamma.push_back(std::max(0.0, rest) * std::max(0.0, rest) / cfg.lambda(K - 1));
        }
        if (gamma.size() != uK) throw ValidationError("--gamma", "expected " + std::to_string(K) + " or " +
                                                                  std::to_string(K - 1) + " entries");
        double gsum = 0.0;
        for (std::size_t k = 0; k < uK; ++k) {
            if (!(gamma[k] >= 0.0 && gamma[k] <= 1.0))
                throw ValidationError("--gamma", "gamma_" + std::to_string(k + 1) + " outside [0,1]");
            gsum += gamma[k];
        }
        if (gsum > 1.0 + 1e-12) throw ValidationError("--gamma", "sum of gamma is " + f6(gsum) + " > 1");
        const CorrelationVector g(gamma);
        out << "bound=outer gamma=" << vec6(g.values()) << "\n";
        if (sol.regime == Regime::Equalized)
            out << "rule_residual=" << f6(outer_rule_measure(cfg, g.values()) - sol.constraint_value) << "\n";
        print_functions(out, outer_function(cfg, g, Receiver::Destination),
                        outer_function(cfg, g, Receiver::Relay), K);
        print_outcome(out, classify_outer(cfg, g));
        params = {{"gamma", gamma}};
    }
    out << manifest("classify", a.config, &cfg, params).comment_line() << "\n";
    return kOk;
}

// ---------------------------------------------------------------- examples

struct Tally {
    int pass = 0, fail = 0;
};

void check(std::ostream& out, Tally& t, bool ok, const std::string& what) {
    (ok ? t.pass : t.fail)++;
    out << (ok ? "PASS " : "FAIL ") << what << "\n";
}

std::string near(double got, double ref, double tol) {
    return f6(got) + " vs reference " + f6(ref) + " (|err|=" + f6(std::abs(got - ref)) + " tol " + f6(tol) + ")";
}

int cmd_examples(std::ostream& out) {
    Tally t;
    const ChannelConfig ex1 = validate({2, {6.0, 4.0}, 4.0, 1.0, 1.0});
    const ChannelConfig ex2 = validate({2, {6.0, 0.4}, 4.0, 1.0, 1.0});

    out << "Example 1: P=(6,4) P_r=4 N_r=1 N_d=2\n";
    {
        const SumCapacity cap = sum_capacity(ex1);
        const auto& sol = cap.solution;
        out << "regime=" << to_string(sol.regime) << " root=" << f6(sol.root) << " c=" << f6(sol.constraint_value)
            << " R=" << f6(cap.value) << " status=" << to_string(cap.status) << "\n";
        out << "note: the reference value 0.408 is the root r; the rule constraint uses c = r^2\n";
        print_scan(out, ex1, *cap.scan);
        const auto& sc = *cap.scan;
        check(out, t, std::abs(sol.root - 0.408) <= 1e-3, "root " + near(sol.root, 0.408, 1e-3));
        check(out, t, std::abs(sc.feasible[0].lo - 0.833) <= 5e-3,
              "alpha1 lower endpoint " + near(sc.feasible[0].lo, 0.833, 5e-3));
        check(out, t, std::abs(sc.feasible[1].lo - 0.75) <= 5e-3,
              "alpha2 lower endpoint " + near(sc.feasible[1].lo, 0.75, 5e-3));
        check(out, t, sc.verdict == ScanVerdict::ActiveClass && sc.active_count == sc.samples.size(),
              "every max-min rule Active (" + std::to_string(sc.active_count) + "/" +
                  std::to_string(sc.samples.size()) + ")");
    }

    out << "Example 2: P=(6,0.4) P_r=4 N_r=1 N_d=2\n";
    {
        const SumCapacity cap = sum_capacity(ex2);
        const auto& sol = cap.solution;
        out << "regime=" << to_string(sol.regime) << " root=" << f6(sol.root) << " c=" << f6(sol.constraint_value)
            << " R=" << f6(cap.value) << " status=" << to_string(cap.status) << "\n";
        out << "note: the reference value 0.197 is the root r; lambda_2 = 1/15\n";
        print_scan(out, ex2, *cap.scan);
        const auto& sc = *cap.scan;
        check(out, t, std::abs(sol.root - 0.197) <= 1e-3, "root " + near(sol.root, 0.197, 1e-3));
        check(out, t, std::abs(sc.feasible[0].lo - 0.961) <= 5e-3,
              "alpha1 feasible endpoint " + near(sc.feasible[0].lo, 0.961, 5e-3));
        check(out, t, std::abs(sc.feasible[1].lo - 0.416) <= 1e-2,
              "alpha2 feasible endpoint " + near(sc.feasible[1].lo, 0.416, 1e-2));

        const auto& a1 = sc.active_intervals[0];
        const auto& a2 = sc.active_intervals[1];
        const bool one1 = a1.size() == 1, one2 = a2.size() == 1;
        check(out, t, one1 && std::abs(a1[0].lo - 0.961) <= 5e-3 && std::abs(a1[0].hi - 0.979) <= 5e-3,
              "alpha1 active interval " + intervals(a1) + " vs reference (0.961,0.979]");
        check(out, t, one2 && std::abs(a2[0].lo - 0.731) <= 5e-3 && std::abs(a2[0].hi - 1.0) <= 5e-3,
              "alpha2 active interval " + intervals(a2) + " vs reference (0.731,1]");
        const double a2_of_0979 = 1.0 - (sol.constraint_value - ex2.lambda(0) * (1.0 - 0.979)) / ex2.lambda(1);
        out << "info alpha2 on the constraint at alpha1=0.979 is " << f6(a2_of_0979) << "\n";

        bool all_case2 = true;
        std::size_t off = 0;
        for (const auto& s : sc.samples) {
            if (s.outcome.kind != IntersectionKind::Inactive) continue;
            ++off;
            all_case2 = all_case2 && s.outcome.two_user_case == TwoUserCase::Case2;
        }
        check(out, t, off > 0 && all_case2,
              "off-interval rules are inactive case 2 (" + std::to_string(off) + " inactive samples)");
    }
    out << "summary pass=" << t.pass << " fail=" << t.fail << "\n";
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string config;
    std::string suite = "all";
    std::uint64_t seed = 7;
    std::size_t n = 1000000;
    std::size_t trials = 1000;
    bool negative_control = false;
};

std::vector<double> draw_gamma(std::mt19937_64& rng, int K) { return gamma_ob_sampler(K)(rng); }

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const auto loaded = load_config(a.config);
    const auto& cfg = loaded.config;
    const int K = cfg.K();
    Tally t;
    const bool all = a.suite == "all";
    std::mt19937_64 rng(a.seed);

    if (all || a.suite == "mc") {
        if (a.n < 10000) out << "WARN mc sample count n=" << a.n << " is below 1e4; z-scores are unreliable\n";
        const std::uint32_t subsets = (std::uint32_t{1} << K) - 1;
        for (int rep = 0; rep < 4; ++rep) {
            const CorrelationVector g(draw_gamma(rng, K));
            const Subset S{1 + static_cast<std::uint32_t>(rng() % subsets)};
            for (auto id : {McIdentity::RelayGivenComplement, McIdentity::SourcesGivenRelayAndComplement}) {
                const McReport r = mc_conditional_variance(cfg, g, S, id, a.n, rng());
                const bool ok = std::abs(r.z_score) <= 4.0;
                const char* name = id == McIdentity::RelayGivenComplement ? "relay|complement" : "sources|relay,complement";
                check(out, t, ok,
                      std::string("mc ") + name + " S=" + to_string(S) + " gamma=" + vec6(g.values()) +
                          " est=" + f6(r.estimate) + " target=" + f6(r.target) + " z=" + f6(r.z_score) +
                          (r.degenerate ? " degenerate" : ""));
            }
        }
    }

    if (all || a.suite == "chords") {
        auto run_chord = [&](const std::string& name, const ParamFn& fn, const DomainSampler& dom,
                             bool asserted) {
            const ChordResult r = chord_check(fn, dom, a.trials, rng());
            std::string msg = "chord " + name + " trials=" + std::to_string(r.trials);
            if (r.witness) msg += " witness lhs=" + g17(r.witness->lhs) + " rhs=" + g17(r.witness->rhs);
            if (asserted) {
                check(out, t, r.passed, msg);
            } else {
                out << (r.passed ? "NOTE " : "XFAIL ") << msg << " (not asserted: not concave in general)\n";
            }
        };
        auto split_of = [K](std::span<const double> x) {
            return DfPowerSplit({x.begin(), x.begin() + K}, {x.begin() + K, x.end()});
        };
        const Subset full = Subset::full(K);
        for (std::uint32_t m = 1; m <= full.mask; ++m) {
            const Subset S{m};
            const std::string s = to_string(S);
            run_chord("B_d" + s + "(gamma)",
                      [&, S](std::span<const double> x) {
                          return outer_bound_dest(cfg, CorrelationVector({x.begin(), x.end()}), S);
                      },
                      gamma_ob_sampler(K), true);
            run_chord("I_d" + s + "(alpha,beta)",
                      [&, S, split_of](std::span<const double> x) { return df_bound_dest(cfg, split_of(x), S); },
                      df_split_sampler(K), true);
            run_chord("I_r" + s + "(alpha,beta)",
                      [&, S, split_of](std::span<const double> x) { return df_bound_relay(cfg, split_of(x), S); },
                      df_split_sampler(K), true);
            const CorrelationVector fixed(draw_gamma(rng, K));
            run_chord("B_r" + s + "(x)", relay_bound_along_x(cfg, fixed, S), unit_interval_sampler(), true);
            run_chord("B_r" + s + "(gamma_S | gamma_Sc fixed)",
                      [&, S](std::span<const double> x) {
                          return outer_bound_relay(cfg, CorrelationVector({x.begin(), x.end()}), S);
                      },
                      gamma_slice_sampler(fixed, S), S.size() == 1);
        }
        if (a.negative_control) {
            run_chord("negative-control sum x^2 (expected to fail)",
                      [](std::span<const double> x) {
                          double s = 0.0;
                          for (double v : x) s += v * v;
                          return s;
                      },
                      gamma_ob_sampler(K), true);
        }
    }

    if (all || a.suite == "grid") {
        if (K > 3) {
            out << "SKIP grid oracle is limited to K <= 3\n";
        } else {
            const MaxMinSolution sol = solve_equalizer(cfg);
            const GridMaxMin g = grid_maxmin(cfg, 0.01);
            const double err = std::abs(g.value - sol.sum_rate);
            check(out, t, err <= 1e-3,
                  "grid max-min " + f6(g.value) + " vs closed form " + f6(sol.sum_rate) + " |err|=" + g17(err) +
                      " argmax=" + vec6(g.argmax.values()));
        }
    }

    if (all || a.suite == "dominance") {
        const DominanceResult r = dominance_check(cfg, 500, rng());
        std::string msg = "dominance trials=" + std::to_string(r.trials);
        if (r.witness)
            msg += " witness S=" + to_string(r.witness->S) + " " + r.witness->relation + " outer=" +
                   g17(r.witness->outer) + " inner=" + g17(r.witness->inner);
        check(out, t, r.passed, msg);
    }

    out << "summary pass=" << t.pass << " fail=" << t.fail << "\n";
    out << manifest("verify", a.config, &cfg,
                    {{"suite", a.suite}, {"seed", a.seed}, {"n", a.n}, {"trials", a.trials},
                     {"negative_control", a.negative_control}})
               .comment_line()
        << "\n";
    return t.fail == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Capacity bounds for the degraded Gaussian multiaccess relay channel", "marc-cap"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    SumcapArgs sa;
    auto* sumcap = app.add_subcommand("sumcap", "Sum capacity and max-min rule classification");
    sumcap->add_option("config", sa.config, "JSON channel config")->required();
    sumcap->add_option("--resolution", sa.resolution, "Bisection resolution of the rule scan");
    sumcap->add_option("--seed", sa.seed, "Seed of the K > 2 rule sampler");
    sumcap->add_option("--samples", sa.samples, "Random rules sampled for K > 2");

    RegionArgs ra;
    auto* region = app.add_subcommand("region", "Export two-user rate regions as CSV polygons");
    region->add_option("config", ra.config, "JSON channel config")->required();
    region->add_option("--bound", ra.bound, "inner, outer or both")
        ->check(CLI::IsMember({"inner", "outer", "both"}));
    region->add_option("--step", ra.step, "Parameter lattice step");
    region->add_option("--out", ra.out, "Output prefix; writes <out>_inner.csv / <out>_outer.csv");

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "Classify one polymatroid intersection");
    classify->add_option("config", ca.config, "JSON channel config")->required();
    auto* opt_alpha = classify->add_option("--alpha", ca.alpha, "DF alpha; K-1 entries solve the last one")
                          ->delimiter(',');
    classify->add_option("--beta", ca.beta, "DF beta (default beta_star)")->delimiter(',')->needs(opt_alpha);
    classify->add_option("--gamma", ca.gamma, "Cutset gamma; K-1 entries solve the last one")
        ->delimiter(',')
        ->excludes(opt_alpha);

    auto* examples = app.add_subcommand("examples", "Reproduce the two built-in worked examples");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run the independent verification oracles");
    verify->add_option("config", va.config, "JSON channel config")->required();
    verify->add_option("--suite", va.suite, "mc, chords, grid, dominance or all")
        ->check(CLI::IsMember({"mc", "chords", "grid", "dominance", "all"}));
    verify->add_option("--seed", va.seed, "Master seed");
    verify->add_option("--n", va.n, "Monte-Carlo samples per identity");
    verify->add_option("--trials", va.trials, "Chords per function");
    verify->add_flag("--negative-control", va.negative_control, "Add a convex function that must fail");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        if (*sumcap) return cmd_sumcap(sa, out);
        if (*region) return cmd_region(ra, out);
        if (*classify) return cmd_classify(ca, out);
        if (*examples) return cmd_examples(out);
        if (*verify) {
            if (va.n < 2) throw ValidationError("--n", "needs at least 2 samples");
            return cmd_verify(va, out);
        }
    } catch (const ValidationError& e) {
        err << "error: invalid " << e.what() << "\n";
        return kInputError;
    } catch (const UnsupportedDimension& e) {
        err << "error: " << e.what() << "\n";
        return kUnsupportedDimension;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace marc::cli
