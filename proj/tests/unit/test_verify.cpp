#include <doctest.h>

#include "helpers.hpp"
#include "marc/error.hpp"
#include "marc/sumcap.hpp"
#include "marc/verify.hpp"

using namespace marc;

TEST_SUITE("verify") {

TEST_CASE("Monte-Carlo conditional variance") {
    const auto cfg = testutil::example1();
    const Subset s1{0b01}, all{0b11};

    const auto zero = mc_relay_conditional_variance(cfg, CorrelationVector::zeros(2), s1, 200000, 1);
    CHECK(zero.target == 4.0);
    CHECK(std::abs(zero.z_score) <= 4.0);
    CHECK(zero.std_error > 0.0);

    const CorrelationVector g({0.1, 0.05});
    const auto r = mc_relay_conditional_variance(cfg, g, s1, 200000, 2);
    CHECK(r.target == doctest::Approx(3.8));
    CHECK(std::abs(r.z_score) <= 4.0);
    CHECK(r.z_score == doctest::Approx((r.estimate - r.target) / r.std_error));

    const auto src = mc_conditional_variance(cfg, g, all, McIdentity::SourcesGivenRelayAndComplement, 200000, 3);
    CHECK(awgn_capacity(src.target / cfg.N_r()) == doctest::Approx(outer_bound_relay(cfg, g, all)).epsilon(1e-13));
    CHECK(std::abs(src.z_score) <= 4.0);

    // sum over S^c of gamma = 1: X_r is a function of X_{S^c}
    const auto lim = mc_relay_conditional_variance(cfg, CorrelationVector({0.0, 1.0}), s1, 10000, 4);
    CHECK(lim.target == 0.0);
    CHECK(lim.degenerate);
    CHECK(lim.z_score == 0.0);

    CHECK_THROWS_AS(mc_relay_conditional_variance(cfg, g, Subset{}, 100, 1), DomainError);
    CHECK_THROWS_AS(mc_relay_conditional_variance(cfg, g, s1, 1, 1), DomainError);
}

TEST_CASE("Monte-Carlo error shrinks like 1/sqrt(n)") {
    const auto cfg = testutil::example1();
    const CorrelationVector g({0.3, 0.2});
    const auto a = mc_relay_conditional_variance(cfg, g, Subset{0b01}, 50000, 9);
    const auto b = mc_relay_conditional_variance(cfg, g, Subset{0b01}, 100000, 9);
    const double ratio = b.std_error / a.std_error;
    CHECK(ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.2));
}

TEST_CASE("Monte-Carlo runs are reproducible") {
    const auto cfg = testutil::example2();
    const CorrelationVector g({0.2, 0.3});
    const auto a = mc_relay_conditional_variance(cfg, g, Subset{0b10}, 20000, 5);
    const auto b = mc_relay_conditional_variance(cfg, g, Subset{0b10}, 20000, 5);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("grid max-min") {
    const auto ex1 = grid_maxmin(testutil::example1(), 0.01);
    CHECK(ex1.value == doctest::Approx(1.6609640474436812).epsilon(1e-6));

    const auto bn = grid_maxmin(testutil::bottleneck(), 0.01);
    CHECK(bn.value == doctest::Approx(awgn_capacity(2.0)).epsilon(1e-14));
    CHECK(bn.argmax.sum() == 0.0);

    // with equal powers both sum bounds depend on gamma only through sum sqrt(gamma_k),
    // so the maximizers form the curve (sum sqrt(lambda_k gamma_k))^2 = r^2 and the
    // mirrored argmax is optimal too
    const auto symcfg = symmetric(2, 3.0, 2.0, 1.0, 1.0);
    const auto sym = grid_maxmin(symcfg, 0.01);
    const auto symsol = solve_equalizer(symcfg);
    CHECK(outer_rule_measure(symcfg, sym.argmax.values()) == doctest::Approx(symsol.constraint_value).epsilon(1e-4));
    const CorrelationVector mirrored({sym.argmax[1], sym.argmax[0]});
    const Subset all{0b11};
    CHECK(std::min(outer_bound_relay(symcfg, mirrored, all), outer_bound_dest(symcfg, mirrored, all)) ==
          doctest::Approx(sym.value).epsilon(1e-12));

    const auto cfg3 = validate({3, {2.0, 0.5, 1.0}, 3.0, 0.5, 1.25});
    const auto coarse = grid_maxmin(cfg3, 0.02);
    const auto fine = grid_maxmin(cfg3, 0.01);
    CHECK(fine.value >= coarse.value - 1e-9);
    CHECK(fine.value == doctest::Approx(1.3451438893784425).epsilon(1e-6));

    CHECK_THROWS_AS(grid_maxmin(symmetric(4, 1.0, 1.0, 1.0, 1.0), 0.1), UnsupportedDimension);
}

TEST_CASE("chords on the claimed domains") {
    const auto cfg = testutil::example1();
    const Subset all{0b11};
    const ParamFn bdk = [&](std::span<const double> x) {
        return outer_bound_dest(cfg, CorrelationVector({x.begin(), x.end()}), all);
    };
    CHECK(chord_check(bdk, gamma_ob_sampler(2), 1000, 1).passed);

    const ParamFn idk = [&](std::span<const double> x) {
        return df_bound_dest(cfg, DfPowerSplit({x[0], x[1]}, {x[2], x[3]}), all);
    };
    CHECK(chord_check(idk, df_split_sampler(2), 1000, 2).passed);

    const CorrelationVector fixed({0.2, 0.3});
    for (std::uint32_t m = 1; m < 4; ++m)
        CHECK(chord_check(relay_bound_along_x(cfg, fixed, Subset{m}), unit_interval_sampler(), 500, m).passed);

    const ParamFn convex = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; };
    const auto neg = chord_check(convex, gamma_ob_sampler(2), 100, 3);
    CHECK_FALSE(neg.passed);
    REQUIRE(neg.witness);
    CHECK(neg.witness->lhs < neg.witness->rhs);
}

TEST_CASE("B_r,K is not concave in gamma") {
    // (1,0) and (0,1) give C(4) and C(6); the midpoint gives C(5 - 2 sqrt 6)
    const auto cfg = testutil::example1();
    const Subset all{0b11};
    const double a = outer_bound_relay(cfg, CorrelationVector({1.0, 0.0}), all);
    const double b = outer_bound_relay(cfg, CorrelationVector({0.0, 1.0}), all);
    const double mid = outer_bound_relay(cfg, CorrelationVector({0.5, 0.5}), all);
    CHECK(a == doctest::Approx(1.1609640474436812).epsilon(1e-14));
    CHECK(b == doctest::Approx(1.4036774610288021).epsilon(1e-14));
    CHECK(mid == doctest::Approx(0.069420674867109572).epsilon(1e-12));
    CHECK(mid < 0.5 * (a + b));

    const ParamFn brk = [&](std::span<const double> x) {
        return outer_bound_relay(cfg, CorrelationVector({x.begin(), x.end()}), all);
    };
    CHECK_FALSE(chord_check(brk, gamma_ob_sampler(2), 1000, 4).passed);
}

TEST_CASE("dominance") {
    for (const auto& cfg : {testutil::example1(), testutil::example2(), symmetric(3, 1.0, 2.0, 1.0, 1.0)}) {
        const auto r = dominance_check(cfg, 500, 13);
        CHECK(r.passed);
        CHECK(r.trials == 500);
    }
    // alpha = 1 collapses everything onto gamma = 0
    const auto cfg = testutil::example1();
    const DfPowerSplit edge({1.0, 1.0}, beta_star(cfg, std::vector<double>{1.0, 1.0}));
    const auto g = df_to_correlation(edge);
    for (std::uint32_t m = 1; m < 4; ++m) {
        CHECK(outer_bound_relay(cfg, g, Subset{m}) == df_bound_relay(cfg, edge, Subset{m}));
        CHECK(outer_bound_dest(cfg, g, Subset{m}) == df_bound_dest(cfg, edge, Subset{m}));
    }
}

TEST_CASE("Active inner rules map to Active outer rules") {
    const auto cfg = symmetric(2, 4.0, 3.0, 1.0, 2.0);
    const auto sol = solve_equalizer(cfg);
    REQUIRE(sol.regime == Regime::Equalized);
    const auto scan = scan_active_rules(cfg, sol);
    for (const auto& s : scan.samples) {
        if (s.outcome.kind != IntersectionKind::Active) continue;
        const DfPowerSplit split(s.alpha, beta_star(cfg, s.alpha));
        CHECK(classify_outer(cfg, df_to_correlation(split)).kind == IntersectionKind::Active);
    }
}

}
