#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "marc/error.hpp"
#include "marc/polymatroid.hpp"
#include "marc/rate_bounds.hpp"

using namespace marc;

namespace {

const Subset s1{0b01}, s2{0b10}, s12{0b11};

}  // namespace

TEST_SUITE("rate_bounds") {

// mpmath oracle, tools/oracles/bounds_oracle.py
TEST_CASE("two-user values against the high-precision oracle") {
    const auto cfg = testutil::example1();
    const CorrelationVector g({0.1, 0.05});
    const DfPowerSplit split({0.9, 0.8}, {0.6, 0.3});
    const double tol = 1e-13;

    CHECK(outer_bound_relay(cfg, g, s1) == doctest::Approx(1.3354678619155045).epsilon(tol));
    CHECK(outer_bound_relay(cfg, g, s2) == doctest::Approx(1.1281698766298928).epsilon(tol));
    CHECK(outer_bound_relay(cfg, g, s12) == doctest::Approx(1.6245087131557307).epsilon(tol));
    CHECK(outer_bound_dest(cfg, g, s1) == doctest::Approx(1.4485421034196642).epsilon(tol));
    CHECK(outer_bound_dest(cfg, g, s2) == doctest::Approx(1.2547753634367462).epsilon(tol));
    CHECK(outer_bound_dest(cfg, g, s12) == doctest::Approx(1.6922750190312797).epsilon(tol));

    CHECK(df_bound_relay(cfg, split, s1) == doctest::Approx(1.3390359525563188).epsilon(tol));
    CHECK(df_bound_relay(cfg, split, s2) == doctest::Approx(1.035194663945699).epsilon(tol));
    CHECK(df_bound_relay(cfg, split, s12) == doctest::Approx(1.6315172029168969).epsilon(tol));
    CHECK(df_bound_dest(cfg, split, s1) == doctest::Approx(1.3612330122355455).epsilon(tol));
    CHECK(df_bound_dest(cfg, split, s2) == doctest::Approx(1.1284745073760997).epsilon(tol));
    CHECK(df_bound_dest(cfg, split, s12) == doctest::Approx(1.6738183654208974).epsilon(tol));
}

TEST_CASE("three-user values against the high-precision oracle") {
    const auto cfg = validate({3, {2.0, 0.5, 1.0}, 3.0, 0.5, 1.25});
    const CorrelationVector g({0.2, 0.1, 0.3});
    const double relay[] = {0.93723455895807054, 0.42399845327747501, 0.98287620162469718,
                            0.54976783677545721, 0.98263240614743176, 0.66459842137310546,
                            1.0105223571539668};
    const double dest[] = {1.0725722844675355, 0.68521713570785477, 1.2061381277303354,
                           0.97348481301318068, 1.3604992270777034, 1.1247844990105778,
                           1.4527774191129393};
    for (std::uint32_t m = 1; m < 8; ++m) {
        CAPTURE(m);
        CHECK(outer_bound_relay(cfg, g, Subset{m}) == doctest::Approx(relay[m - 1]).epsilon(1e-13));
        CHECK(outer_bound_dest(cfg, g, Subset{m}) == doctest::Approx(dest[m - 1]).epsilon(1e-13));
    }
}

TEST_CASE("empty set and zero correlation") {
    const auto cfg = testutil::example1();
    const auto z = CorrelationVector::zeros(2);
    CHECK(outer_bound_relay(cfg, z, Subset{}) == 0.0);
    CHECK(outer_bound_dest(cfg, z, Subset{}) == 0.0);
    const DfPowerSplit split({1.0, 1.0}, {0.0, 0.0});
    CHECK(df_bound_relay(cfg, split, Subset{}) == 0.0);
    CHECK(df_bound_dest(cfg, split, Subset{}) == 0.0);

    // gamma = 0: B_r,S = C(P_S/N_r), B_d,S = C((P_S + P_r)/N_d)
    CHECK(outer_bound_relay(cfg, z, s1) == doctest::Approx(awgn_capacity(6.0)));
    CHECK(outer_bound_dest(cfg, z, s12) == doctest::Approx(awgn_capacity(7.0)));
    // alpha = 1, beta = 0 collapses DF onto the gamma = 0 cutset values
    for (std::uint32_t m = 1; m < 4; ++m) {
        CHECK(df_bound_relay(cfg, split, Subset{m}) == doctest::Approx(outer_bound_relay(cfg, z, Subset{m})));
        CHECK(df_bound_dest(cfg, split, Subset{m}) == doctest::Approx(outer_bound_dest(cfg, z, Subset{m})));
    }
}

TEST_CASE("relay bound branch switch and zero point") {
    const auto cfg = testutil::example1();
    // sum over S^c of gamma = 1: B_r,{1} falls back to C(P_1/N_r)
    CHECK(outer_bound_relay(cfg, CorrelationVector({0.0, 1.0}), s1) == doctest::Approx(awgn_capacity(6.0)));
    // gamma proportional to P on S with unit mass drives B_r,S to 0
    const auto g = gamma_star_dest(cfg, s12, 1.0);
    CHECK(g[0] == doctest::Approx(0.6));
    CHECK(g[1] == doctest::Approx(0.4));
    CHECK(outer_bound_relay(cfg, CorrelationVector(g), s12) == doctest::Approx(0.0).epsilon(1e-12));
    // and it is where B_d,K peaks along the simplex
    std::mt19937_64 rng(3);
    const double peak = outer_bound_dest(cfg, CorrelationVector(g), s12);
    for (int i = 0; i < 200; ++i) {
        auto w = testutil::dirichlet_head(rng, 2);
        const double s = w[0] + w[1];
        CHECK(outer_bound_dest(cfg, CorrelationVector({w[0] / s, w[1] / s}), s12) <= peak + 1e-12);
    }
}

TEST_CASE("parameter sets are enforced") {
    CHECK_THROWS_AS(CorrelationVector({0.6, 0.5}), DomainError);
    CHECK_THROWS_AS(CorrelationVector({-0.1, 0.5}), DomainError);
    CHECK_THROWS_AS(DfPowerSplit({1.2, 0.5}, {0.2, 0.2}), DomainError);
    CHECK_THROWS_AS(DfPowerSplit({0.5, 0.5}, {0.7, 0.4}), DomainError);
    CHECK_THROWS_AS(outer_bound_relay(testutil::example1(), CorrelationVector({0.1}), s1), DomainError);
}

TEST_CASE("beta star and the correlation map") {
    const auto cfg = testutil::example1();
    const std::vector<double> alpha{0.9, 0.8};
    const auto b = beta_star(cfg, alpha);
    // (1 - alpha) P = (0.6, 0.8)
    CHECK(b[0] == doctest::Approx(0.6 / 1.4));
    CHECK(b[1] == doctest::Approx(0.8 / 1.4));
    const auto ones = beta_star(cfg, std::vector<double>{1.0, 1.0});
    CHECK(ones[0] == 0.0);
    CHECK(ones[1] == 0.0);

    const auto g = df_to_correlation(DfPowerSplit(alpha, b));
    CHECK(g[0] == doctest::Approx(0.1 * b[0]));
    CHECK(g[1] == doctest::Approx(0.2 * b[1]));

    // beta* maximizes I_d,K at fixed alpha
    const Subset all = Subset::full(2);
    const double best = df_bound_dest(cfg, DfPowerSplit(alpha, b), all);
    for (int i = 0; i <= 100; ++i) {
        const double b1 = i / 100.0;
        CHECK(df_bound_dest(cfg, DfPowerSplit(alpha, {b1, 1.0 - b1}), all) <= best + 1e-12);
    }
}

TEST_CASE("three families certify as polymatroids") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int K = 2; K <= 5; ++K) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto cfg = testutil::random_config(rng, K);
            const CorrelationVector g(testutil::dirichlet_head(rng, K));
            std::vector<double> alpha(static_cast<std::size_t>(K));
            for (auto& a : alpha) a = u(rng);
            const DfPowerSplit split(alpha, testutil::dirichlet_head(rng, K));
            CHECK(certify(outer_function(cfg, g, Receiver::Relay)).monotone);
            CHECK(certify(outer_function(cfg, g, Receiver::Destination)).polymatroid());
            CHECK(certify(df_function(cfg, split, Receiver::Relay)).polymatroid());
            CHECK(certify(df_function(cfg, split, Receiver::Destination)).polymatroid());
        }
    }
}

TEST_CASE("the relay cutset family is not submodular in general") {
    // values from tools/oracles/bounds_oracle.py formulas
    const auto cfg = validate({2, {0.110826654133175, 1.9910963262524717}, 0.10433016088770079, 5.787189691743241,
                               8.147492419852616 - 5.787189691743241});
    const CorrelationVector g({0.6296392141519664, 0.23447211476873075});
    const auto f = outer_function(cfg, g, Receiver::Relay);
    CHECK(f(s1) == doctest::Approx(0.002447970405022624).epsilon(1e-10));
    CHECK(f(s2) == doctest::Approx(0.08575450852961512).epsilon(1e-10));
    CHECK(f(s12) == doctest::Approx(0.13636849023407263).epsilon(1e-10));
    const auto c = certify(f);
    CHECK(c.monotone);
    CHECK_FALSE(c.submodular);
    REQUIRE(c.witness);
    CHECK(c.witness->S.is_empty());

    const auto o = intersection_max_sum(outer_function(cfg, g, Receiver::Destination), f);
    CHECK_FALSE(o.polymatroid_inputs);

    // at gamma = 0 the family is concave-of-modular and certifies
    CHECK(certify(outer_function(cfg, CorrelationVector::zeros(2), Receiver::Relay)).polymatroid());
}

TEST_CASE("cutset dominates decode-and-forward") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        const int K = 2 + rep % 3;
        const auto cfg = testutil::random_config(rng, K);
        std::vector<double> alpha(static_cast<std::size_t>(K));
        for (auto& a : alpha) a = u(rng);
        const DfPowerSplit split(alpha, testutil::dirichlet_head(rng, K));
        const auto g = df_to_correlation(split);
        for (std::uint32_t m = 1; m < (1u << K); ++m) {
            CHECK(outer_bound_dest(cfg, g, Subset{m}) >= df_bound_dest(cfg, split, Subset{m}) - 1e-12);
            CHECK(outer_bound_relay(cfg, g, Subset{m}) >= df_bound_relay(cfg, split, Subset{m}) - 1e-12);
        }
    }
}

}
