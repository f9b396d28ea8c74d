#pragma once

#include <array>
#include <utility>
#include <variant>
#include <vector>

#include "marc/channel.hpp"
#include "marc/polymatroid.hpp"
#include "marc/rate_bounds.hpp"

namespace marc {

/// Convex combination of at most K+1 correlation vectors.
class TimeSharingMixture {
public:
    explicit TimeSharingMixture(std::vector<std::pair<CorrelationVector, double>> points);

    int K() const { return points_.front().first.K(); }
    const std::vector<std::pair<CorrelationVector, double>>& points() const { return points_; }
    /// sum_m eta_m gamma^(m), which stays in Gamma_OB.
    CorrelationVector average() const;

private:
    std::vector<std::pair<CorrelationVector, double>> points_;
};

/// sum_m eta_m B_{rx,S}(gamma^(m)).
double mixture_bound(const ChannelConfig& cfg, const TimeSharingMixture& mixture, Receiver rx,
                     Subset S);
SubsetFunction mixture_function(const ChannelConfig& cfg, const TimeSharingMixture& mixture,
                                Receiver rx);

struct Facet {
    Subset S;
    double bound;
};

struct RegionPolytope {
    int K = 0;
    std::vector<std::vector<double>> vertices;
    std::vector<Facet> facets;
};

using Point2 = std::array<double, 2>;

/// {R >= 0 : R_S <= min(f1(S), f2(S)) for all S}. K = 2 uses the closed-form
/// pentagon corners; 3 <= K <= 5 enumerates every K-subset of the tight
/// constraints and keeps the feasible solutions (slack >= -1e-9).
RegionPolytope polytope_vertices(const SubsetFunction& f1, const SubsetFunction& f2);

using RegionParams = std::variant<CorrelationVector, DfPowerSplit, TimeSharingMixture>;

RegionPolytope build_intersection(const ChannelConfig& cfg, const RegionParams& params);

/// Union of R_r(alpha) and R_d(alpha, beta) intersections over a lattice of Gamma:
/// alpha on an (n+1)^2 grid, beta on the triangular lattice {i/n, j/n : i + j <= n}
/// plus beta_star(alpha), with n = round(1/step). Returns the convex hull,
/// counterclockwise from the lexicographically smallest vertex. K = 2 only.
RegionPolytope build_df_region(const ChannelConfig& cfg, double step);

/// Convex hull of the per-gamma cutset intersections over the triangular lattice of
/// Gamma_OB. Taking the planar hull realizes the time-sharing closure. K = 2 only.
RegionPolytope build_outer_region(const ChannelConfig& cfg, double step);

// Planar helpers.

/// Andrew's monotone chain, counterclockwise from the lexicographically smallest
/// point, collinear points dropped (orientation epsilon 1e-12).
std::vector<Point2> convex_hull(std::vector<Point2> points);
double polygon_area(const std::vector<Point2>& ccw);
bool is_convex_ccw(const std::vector<Point2>& ccw, double eps = 1e-12);
/// Euclidean distance from p to the closed convex polygon (0 inside).
double distance_to_polygon(const Point2& p, const std::vector<Point2>& ccw);
/// Hausdorff distance between two closed convex polygons.
double hausdorff_distance(const std::vector<Point2>& a, const std::vector<Point2>& b);
std::vector<Point2> to_points(const RegionPolytope& poly);

}  // namespace marc
