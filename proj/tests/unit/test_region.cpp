#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "marc/error.hpp"
#include "marc/region.hpp"
#include "marc/sumcap.hpp"

using namespace marc;

namespace {

bool has_vertex(const RegionPolytope& poly, const std::vector<double>& v, double tol = 1e-12) {
    return std::any_of(poly.vertices.begin(), poly.vertices.end(), [&](const std::vector<double>& w) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (std::abs(v[i] - w[i]) > tol) return false;
        return true;
    });
}

double max_sum(const std::vector<Point2>& poly) {
    double best = 0.0;
    for (const auto& p : poly) best = std::max(best, p[0] + p[1]);
    return best;
}

}  // namespace

TEST_SUITE("region") {

TEST_CASE("two-user pentagon") {
    const auto cfg = testutil::bottleneck();
    const auto poly = build_intersection(cfg, DfPowerSplit({1.0, 1.0}, {0.0, 0.0}));
    const double s = awgn_capacity(2.0);
    CHECK(poly.vertices.size() == 5);
    CHECK(has_vertex(poly, {0.0, 0.0}));
    CHECK(has_vertex(poly, {0.5, 0.0}));
    CHECK(has_vertex(poly, {0.5, s - 0.5}));
    CHECK(has_vertex(poly, {s - 0.5, 0.5}));
    CHECK(has_vertex(poly, {0.0, 0.5}));
}

TEST_CASE("three-user box and polymatroid corners") {
    const auto box = SubsetFunction::tabulate(3, [](Subset S) {
        double v = 0.0;
        for (int k = 0; k < 3; ++k)
            if (S.contains(k)) v += k + 1.0;
        return v;
    });
    const auto loose = SubsetFunction::tabulate(3, [](Subset S) { return 10.0 * S.size(); });
    const auto p = polytope_vertices(box, loose);
    CHECK(p.vertices.size() == 8);
    CHECK(has_vertex(p, {1.0, 2.0, 3.0}));
    CHECK(has_vertex(p, {0.0, 2.0, 0.0}));

    std::mt19937_64 rng(29);
    const auto cfg = testutil::random_config(rng, 3);
    const CorrelationVector g(testutil::dirichlet_head(rng, 3));
    const auto f = outer_function(cfg, g, Receiver::Destination);
    const auto poly = polytope_vertices(f, f);
    std::vector<int> perm{0, 1, 2};
    do {
        CHECK(has_vertex(poly, vertex_enumeration(f, perm), 1e-9));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& v : poly.vertices) {
        for (std::uint32_t m = 1; m < 8; ++m) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k)
                if (Subset{m}.contains(k)) s += v[static_cast<std::size_t>(k)];
            CHECK(s <= f(Subset{m}) + 1e-9);
        }
    }
    CHECK_THROWS_AS(polytope_vertices(SubsetFunction(6, std::vector<double>(64, 0.0)),
                                      SubsetFunction(6, std::vector<double>(64, 0.0))),
                    UnsupportedDimension);
}

TEST_CASE("time-sharing mixtures") {
    const auto cfg = testutil::example1();
    const CorrelationVector a({0.2, 0.0}), b({0.0, 0.6});
    const TimeSharingMixture mix({{a, 0.25}, {b, 0.75}});
    const auto avg = mix.average();
    CHECK(avg[0] == doctest::Approx(0.05));
    CHECK(avg[1] == doctest::Approx(0.45));
    const Subset all = Subset::full(2);
    CHECK(mixture_bound(cfg, mix, Receiver::Relay, all) ==
          doctest::Approx(0.25 * outer_bound_relay(cfg, a, all) + 0.75 * outer_bound_relay(cfg, b, all)));
    CHECK(certify(mixture_function(cfg, mix, Receiver::Destination)).polymatroid());

    CHECK_THROWS_AS(TimeSharingMixture({{a, 0.5}, {b, 0.4}}), DomainError);
    CHECK_THROWS_AS(TimeSharingMixture({{a, 0.25}, {b, 0.25}, {a, 0.25}, {b, 0.25}}), DomainError);
}

TEST_CASE("planar helpers") {
    std::vector<Point2> pts{{1, 1}, {0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 0}, {0.5, 1.5}};
    const auto hull = convex_hull(pts);
    REQUIRE(hull.size() == 4);
    CHECK(hull[0] == Point2{0, 0});
    CHECK(hull[1] == Point2{2, 0});
    CHECK(hull[2] == Point2{2, 2});
    CHECK(hull[3] == Point2{0, 2});
    CHECK(polygon_area(hull) == doctest::Approx(4.0));
    CHECK(is_convex_ccw(hull));
    CHECK_FALSE(is_convex_ccw({{0, 0}, {0, 2}, {2, 2}, {2, 0}}));

    CHECK(distance_to_polygon({1, 1}, hull) == 0.0);
    CHECK(distance_to_polygon({3, 1}, hull) == doctest::Approx(1.0));
    CHECK(distance_to_polygon({3, 3}, hull) == doctest::Approx(std::sqrt(2.0)));

    std::vector<Point2> shifted;
    for (const auto& p : hull) shifted.push_back({p[0] + 0.5, p[1]});
    CHECK(hausdorff_distance(hull, shifted) == doctest::Approx(0.5));
    CHECK(hausdorff_distance(hull, hull) == 0.0);
}

TEST_CASE("Example 1 regions") {
    const auto cfg = testutil::example1();
    const double step = 0.05;
    const auto inner = to_points(build_df_region(cfg, step));
    const auto outer = to_points(build_outer_region(cfg, step));
    CHECK(is_convex_ccw(inner));
    CHECK(is_convex_ccw(outer));
    CHECK(inner.front() == Point2{0.0, 0.0});
    for (const auto& p : inner) CHECK(distance_to_polygon(p, outer) <= 2 * step);
    // the sum-rate face reaches the sum capacity up to lattice error
    const double R = solve_equalizer(cfg).sum_rate;
    CHECK(max_sum(inner) <= R + 1e-12);
    CHECK(max_sum(outer) <= R + 1e-12);
    CHECK(max_sum(inner) >= R - 0.01);
    CHECK(max_sum(outer) >= R - 0.01);
}

TEST_CASE("bottleneck regions coincide") {
    const auto cfg = testutil::bottleneck();
    const auto inner = to_points(build_df_region(cfg, 0.05));
    const auto outer = to_points(build_outer_region(cfg, 0.05));
    CHECK(hausdorff_distance(inner, outer) <= 0.1);
    CHECK(polygon_area(inner) == doctest::Approx(polygon_area(outer)).epsilon(1e-9));
}

TEST_CASE("region builders are two-user only") {
    const auto cfg = symmetric(3, 1.0, 1.0, 1.0, 1.0);
    CHECK_THROWS_AS(build_df_region(cfg, 0.1), UnsupportedDimension);
    CHECK_THROWS_AS(build_outer_region(cfg, 0.1), UnsupportedDimension);
    CHECK_THROWS_AS(build_df_region(testutil::example1(), 0.0), DomainError);
}

}
