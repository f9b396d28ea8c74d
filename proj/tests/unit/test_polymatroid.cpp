#include <doctest.h>

#include <array>
#include <random>

#include "helpers.hpp"
#include "marc/error.hpp"
#include "marc/polymatroid.hpp"
#include "marc/rate_bounds.hpp"

using namespace marc;

TEST_SUITE("polymatroid") {

TEST_CASE("function invariants") {
    CHECK_THROWS_AS(SubsetFunction(2, {0.1, 1.0, 1.0, 2.0}), DomainError);
    CHECK_THROWS_AS(SubsetFunction(2, {0.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(SubsetFunction(2, {0.0, 1.0, std::nan(""), 2.0}), DomainError);
    const auto f = SubsetFunction::tabulate(3, [](Subset s) { return static_cast<double>(s.size()); });
    CHECK(f.full() == 3.0);
    CHECK(f(Subset{0b101}) == 2.0);
}

TEST_CASE("certify") {
    const auto card = SubsetFunction::tabulate(3, [](Subset s) { return static_cast<double>(s.size()); });
    const auto c = certify(card);
    CHECK(c.submodular);
    CHECK(c.monotone);

    const auto super = certify(SubsetFunction(2, {0.0, 0.0, 0.0, 1.0}));
    CHECK_FALSE(super.submodular);
    REQUIRE(super.witness);
    CHECK(super.witness->S.is_empty());
    CHECK(super.witness->k1 == 0);
    CHECK(super.witness->k2 == 1);

    const auto dec = certify(SubsetFunction(2, {0.0, 1.0, 1.0, 0.5}));
    CHECK_FALSE(dec.monotone);
    REQUIRE(dec.monotone_witness);
}

TEST_CASE("greedy vertices") {
    const auto card = SubsetFunction::tabulate(2, [](Subset s) { return static_cast<double>(s.size()); });
    const std::array<int, 2> p21{1, 0}, p12{0, 1};
    CHECK(vertex_enumeration(card, p21) == std::vector<double>{1.0, 1.0});

    const SubsetFunction f(2, {0.0, 1.0, 1.0, 1.5});
    const auto v = vertex_enumeration(f, p12);
    CHECK(v[0] == 1.0);
    CHECK(v[1] == 0.5);

    // Example-1 relay DF bounds at alpha = 1: (C(6), C(10) - C(6))
    const auto cfg = testutil::example1();
    const auto ir = df_function(cfg, DfPowerSplit({1.0, 1.0}, {0.0, 0.0}), Receiver::Relay);
    const auto w = vertex_enumeration(ir, p12);
    CHECK(w[0] == doctest::Approx(1.403677461028802).epsilon(1e-14));
    CHECK(w[1] == doctest::Approx(0.32603834828984657).epsilon(1e-13));

    CHECK_THROWS_AS(vertex_enumeration(SubsetFunction(2, {0.0, 0.0, 0.0, 1.0}), p12), DomainError);
    const std::array<int, 2> bad{0, 0};
    CHECK_THROWS_AS(vertex_enumeration(card, bad), DomainError);
}

TEST_CASE("greedy vertices satisfy every constraint") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 30; ++rep) {
        const int K = 2 + rep % 4;
        const auto cfg = testutil::random_config(rng, K);
        const auto f = outer_function(cfg, CorrelationVector(testutil::dirichlet_head(rng, K)), Receiver::Destination);
        std::vector<int> perm(static_cast<std::size_t>(K));
        for (int k = 0; k < K; ++k) perm[static_cast<std::size_t>(k)] = k;
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto v = vertex_enumeration(f, perm);
        double total = 0.0;
        for (double x : v) total += x;
        CHECK(total == doctest::Approx(f.full()).epsilon(1e-14));
        for (std::uint32_t m = 1; m < (1u << K); ++m) {
            double s = 0.0;
            for (int k = 0; k < K; ++k)
                if (Subset{m}.contains(k)) s += v[static_cast<std::size_t>(k)];
            CHECK(f(Subset{m}) - s >= -1e-12);
        }
    }
}

TEST_CASE("intersection examples") {
    const SubsetFunction a1(2, {0.0, 1.0, 1.0, 1.5}), a2(2, {0.0, 2.0, 2.0, 2.5});
    const auto act = intersection_max_sum(a1, a2);
    CHECK(act.max_sum_rate == 1.5);
    CHECK(act.kind == IntersectionKind::Active);
    CHECK(act.argmin_subset == Subset::full(2));

    const SubsetFunction i1(2, {0.0, 0.2, 1.0, 1.1}), i2(2, {0.0, 1.0, 0.2, 1.1});
    const auto ina = intersection_max_sum(i1, i2);
    CHECK(ina.max_sum_rate == doctest::Approx(0.4));
    CHECK(ina.kind == IntersectionKind::Inactive);
    CHECK(ina.argmin_subset == Subset{0b01});
    REQUIRE(ina.two_user_case);
    CHECK(*ina.two_user_case == TwoUserCase::Case2);

    const auto same = intersection_max_sum(a1, a1);
    CHECK(same.kind == IntersectionKind::Active);
    CHECK(same.max_sum_rate == 1.5);
    CHECK(*same.two_user_case == TwoUserCase::Case3b);

    CHECK_THROWS_AS(intersection_max_sum(a1, SubsetFunction(1, {0.0, 1.0})), DomainError);
}

TEST_CASE("tie between a mixed term and the full sum is Active") {
    // f1({1}) + f2({2}) = 1.5 = f1(K)
    const SubsetFunction f1(2, {0.0, 1.0, 1.0, 1.5}), f2(2, {0.0, 2.0, 0.5, 2.0});
    const auto o = intersection_max_sum(f1, f2);
    CHECK(o.kind == IntersectionKind::Active);
    CHECK(o.max_sum_rate == 1.5);
}

TEST_CASE("two-user labels") {
    const SubsetFunction lo(2, {0.0, 1.0, 1.0, 1.5}), hi(2, {0.0, 2.0, 2.0, 2.5});
    CHECK(classify_two_user(lo, hi) == TwoUserCase::Case3a);
    CHECK(classify_two_user(hi, lo) == TwoUserCase::Case3c);
    CHECK(classify_two_user(lo, lo) == TwoUserCase::Case3b);
    // mirror of the case-2 instance: argmin {2}
    const SubsetFunction i1(2, {0.0, 1.0, 0.2, 1.1}), i2(2, {0.0, 0.2, 1.0, 1.1});
    CHECK(classify_two_user(i1, i2) == TwoUserCase::Case1);
    CHECK_THROWS_AS(classify_two_user(SubsetFunction(1, {0.0, 1.0}), SubsetFunction(1, {0.0, 1.0})),
                    UnsupportedDimension);
    CHECK(to_string(TwoUserCase::Case3a) == "3a");
    CHECK(to_string(IntersectionKind::Inactive) == "Inactive");
}

TEST_CASE("max sum never exceeds either full sum, equality iff Active") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 200; ++rep) {
        const int K = 2 + rep % 4;
        const auto cfg = testutil::random_config(rng, K);
        const CorrelationVector g(testutil::dirichlet_head(rng, K));
        const auto f1 = outer_function(cfg, g, Receiver::Destination);
        const auto f2 = outer_function(cfg, g, Receiver::Relay);
        const auto o = intersection_max_sum(f1, f2);
        const double cap = std::min(f1.full(), f2.full());
        CHECK(o.max_sum_rate <= cap + 1e-15);
        if (o.kind == IntersectionKind::Active) CHECK(o.max_sum_rate == cap);
        else CHECK(o.max_sum_rate < cap - 1e-12);
    }
}

}
