#include "marc/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "marc/error.hpp"
#include "parallel.hpp"

namespace marc {

namespace {

constexpr double kVertexSlack = 1e-9;

double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Corners of {R >= 0 : R1 <= a, R2 <= b, R1 + R2 <= c}, counterclockwise from the origin.
void pentagon(double a, double b, double c, std::vector<Point2>& out) {
    a = std::min(a, c);
    b = std::min(b, c);
    out.push_back({0.0, 0.0});
    out.push_back({a, 0.0});
    if (a + b > c) {
        out.push_back({a, c - a});
        out.push_back({c - b, b});
    } else {
        out.push_back({a, b});
    }
    out.push_back({0.0, b});
}

std::vector<Point2> dedupe(const std::vector<Point2>& pts) {
    std::vector<Point2> out;
    for (const auto& p : pts) {
        if (!out.empty() && std::abs(out.back()[0] - p[0]) <= 1e-12 && std::abs(out.back()[1] - p[1]) <= 1e-12)
            continue;
        out.push_back(p);
    }
    while (out.size() > 1 && std::abs(out.back()[0] - out.front()[0]) <= 1e-12 &&
           std::abs(out.back()[1] - out.front()[1]) <= 1e-12)
        out.pop_back();
    return out;
}

RegionPolytope from_hull(const std::vector<Point2>& hull) {
    RegionPolytope poly;
    poly.K = 2;
    for (const auto& p : hull) poly.vertices.push_back({p[0], p[1]});
    return poly;
}

std::size_t lattice_divisions(double step) {
    if (!(step > 0.0 && step <= 1.0)) throw DomainError("grid step must lie in (0, 1]");
    return static_cast<std::size_t>(std::max(1.0, std::round(1.0 / step)));
}

void pentagon_of(const SubsetFunction& f1, const SubsetFunction& f2, std::vector<Point2>& out) {
    auto g = [&](std::uint32_t m) { return std::min(f1(Subset{m}), f2(Subset{m})); };
    pentagon(g(1), g(2), g(3), out);
}

}  // namespace

TimeSharingMixture::TimeSharingMixture(std::vector<std::pair<CorrelationVector, double>> points)
    : points_(std::move(points)) {
    if (points_.empty()) throw DomainError("mixture needs at least one point");
    const int K = points_.front().first.K();
    if (points_.size() > static_cast<std::size_t>(K) + 1)
        throw DomainError("mixture has " + std::to_string(points_.size()) + " points, at most K+1 = " +
                          std::to_string(K + 1) + " allowed");
    double total = 0.0;
    for (const auto& [gamma, eta] : points_) {
        if (gamma.K() != K) throw DomainError("mixture points have different dimensions");
        if (!std::isfinite(eta) || eta < 0.0) throw DomainError("mixture weights must be nonnegative");
        total += eta;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw DomainError("mixture weights sum to " + std::to_string(total) + ", expected 1");
}

CorrelationVector TimeSharingMixture::average() const {
    std::vector<double> avg(static_cast<std::size_t>(K()), 0.0);
    for (const auto& [gamma, eta] : points_)
        for (int k = 0; k < K(); ++k) avg[static_cast<std::size_t>(k)] += eta * gamma[k];
    return CorrelationVector(std::move(avg));
}

double mixture_bound(const ChannelConfig& cfg, const TimeSharingMixture& mixture, Receiver rx, Subset S) {
    double total = 0.0;
    for (const auto& [gamma, eta] : mixture.points()) total += eta * outer_bound(cfg, gamma, rx, S);
    return total;
}

SubsetFunction mixture_function(const ChannelConfig& cfg, const TimeSharingMixture& mixture, Receiver rx) {
    return SubsetFunction::tabulate(cfg.K(), [&](Subset S) { return mixture_bound(cfg, mixture, rx, S); });
}

RegionPolytope polytope_vertices(const SubsetFunction& f1, const SubsetFunction& f2) {
    if (f1.K() != f2.K()) throw DomainError("polytope_vertices: ground sets differ");
    const int K = f1.K();
    if (K > 5) throw UnsupportedDimension("vertex enumeration is limited to K <= 5");

    RegionPolytope poly;
    poly.K = K;
    const std::uint32_t n_sets = (std::uint32_t{1} << K);
    std::vector<double> g(n_sets, 0.0);
    for (std::uint32_t m = 1; m < n_sets; ++m) {
        g[m] = std::min(f1(Subset{m}), f2(Subset{m}));
        poly.facets.push_back(Facet{Subset{m}, g[m]});
    }

    if (K == 1) {
        poly.vertices = {{0.0}, {g[1]}};
        return poly;
    }
    if (K == 2) {
        std::vector<Point2> pts;
        pentagon(g[1], g[2], g[3], pts);
        for (const auto& p : dedupe(pts)) poly.vertices.push_back({p[0], p[1]});
        return poly;
    }

    // Rows 0..K-1: R_k >= 0 (tight at R_k = 0). Rows K..: sum_S R <= g(S).
    const int rows = K + static_cast<int>(n_sets) - 1;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, K);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);
    for (int k = 0; k < K; ++k) A(k, k) = 1.0;
    for (std::uint32_t m = 1; m < n_sets; ++m) {
        const int r = K + static_cast<int>(m) - 1;
        for (int k = 0; k < K; ++k)
            if (Subset{m}.contains(k)) A(r, k) = 1.0;
        b(r) = g[m];
    }
    auto feasible = [&](const Eigen::VectorXd& x) {
        for (int k = 0; k < K; ++k)
            if (x(k) < -kVertexSlack) return false;
        for (int r = K; r < rows; ++r)
            if (A.row(r).dot(x) > b(r) + kVertexSlack) return false;
        return true;
    };

    std::vector<bool> pick(static_cast<std::size_t>(rows), false);
    std::fill(pick.begin(), pick.begin() + K, true);
    Eigen::MatrixXd M(K, K);
    Eigen::VectorXd rhs(K);
    do {
        int i = 0;
        for (int r = 0; r < rows; ++r) {
            if (!pick[static_cast<std::size_t>(r)]) continue;
            M.row(i) = A.row(r);
            rhs(i) = b(r);
            ++i;
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
        if (lu.rank() < K) continue;
        const Eigen::VectorXd x = lu.solve(rhs);
        if (!feasible(x)) continue;
        std::vector<double> v(x.data(), x.data() + K);
        for (double& c : v) c = std::max(c, 0.0);
        const bool dup = std::any_of(poly.vertices.begin(), poly.vertices.end(), [&](const auto& w) {
            for (int k = 0; k < K; ++k)
                if (std::abs(w[static_cast<std::size_t>(k)] - v[static_cast<std::size_t>(k)]) > kVertexSlack)
                    return false;
            return true;
        });
        if (!dup) poly.vertices.push_back(std::move(v));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(poly.vertices.begin(), poly.vertices.end());
    return poly;
}

RegionPolytope build_intersection(const ChannelConfig& cfg, const RegionParams& params) {
    struct Visitor {
        const ChannelConfig& cfg;
        RegionPolytope operator()(const CorrelationVector& g) const {
            return polytope_vertices(outer_function(cfg, g, Receiver::Destination),
                                     outer_function(cfg, g, Receiver::Relay));
        }
        RegionPolytope operator()(const DfPowerSplit& s) const {
            return polytope_vertices(df_function(cfg, s, Receiver::Destination),
                                     df_function(cfg, s, Receiver::Relay));
        }
        RegionPolytope operator()(const TimeSharingMixture& m) const {
            return polytope_vertices(mixture_function(cfg, m, Receiver::Destination),
                                     mixture_function(cfg, m, Receiver::Relay));
        }
    };
    return std::visit(Visitor{cfg}, params);
}

RegionPolytope build_df_region(const ChannelConfig& cfg, double step) {
    if (cfg.K() != 2) throw UnsupportedDimension("DF region export supports K = 2 only");
    const std::size_t n = lattice_divisions(step);
    const double h = 1.0 / static_cast<double>(n);

    std::vector<std::vector<Point2>> row_hulls(n + 1);
    detail::parallel_for(n + 1, [&](std::size_t i) {
        std::vector<Point2> pts;
        const double a1 = std::min(1.0, static_cast<double>(i) * h);
        for (std::size_t j = 0; j <= n; ++j) {
            const double a2 = std::min(1.0, static_cast<double>(j) * h);
            const std::vector<double> alpha{a1, a2};
            const DfPowerSplit relay_split(alpha, {0.0, 0.0});
            const SubsetFunction relay = df_function(cfg, relay_split, Receiver::Relay);
            auto add = [&](std::vector<double> beta) {
                const DfPowerSplit split(alpha, std::move(beta));
                pentagon_of(df_function(cfg, split, Receiver::Destination), relay, pts);
            };
            for (std::size_t p = 0; p <= n; ++p)
                for (std::size_t q = 0; p + q <= n; ++q)
                    add({static_cast<double>(p) * h, std::min(static_cast<double>(q) * h, 1.0 - static_cast<double>(p) * h)});
            add(beta_star(cfg, alpha));
        }
        row_hulls[i] = convex_hull(std::move(pts));
    });
    std::vector<Point2> all;
    for (const auto& hull : row_hulls) all.insert(all.end(), hull.begin(), hull.end());
    return from_hull(convex_hull(std::move(all)));
}

RegionPolytope build_outer_region(const ChannelConfig& cfg, double step) {
    if (cfg.K() != 2) throw UnsupportedDimension("outer region export supports K = 2 only");
    const std::size_t n = lattice_divisions(step);
    const double h = 1.0 / static_cast<double>(n);

    std::vector<std::vector<Point2>> row_hulls(n + 1);
    detail::parallel_for(n + 1, [&](std::size_t i) {
        std::vector<Point2> pts;
        const double g1 = static_cast<double>(i) * h;
        for (std::size_t j = 0; i + j <= n; ++j) {
            const CorrelationVector gamma({g1, std::min(static_cast<double>(j) * h, 1.0 - g1)});
            pentagon_of(outer_function(cfg, gamma, Receiver::Destination),
                        outer_function(cfg, gamma, Receiver::Relay), pts);
        }
        row_hulls[i] = convex_hull(std::move(pts));
    });
    std::vector<Point2> all;
    for (const auto& hull : row_hulls) all.insert(all.end(), hull.begin(), hull.end());
    return from_hull(convex_hull(std::move(all)));
}

std::vector<Point2> convex_hull(std::vector<Point2> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) return points;

    constexpr double eps = 1e-12;
    std::vector<Point2> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= eps) --k;
        hull[k++] = p;
    }
    for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= eps) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

double polygon_area(const std::vector<Point2>& ccw) {
    double a = 0.0;
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        const auto& p = ccw[i];
        const auto& q = ccw[(i + 1) % ccw.size()];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * a;
}

bool is_convex_ccw(const std::vector<Point2>& ccw, double eps) {
    const std::size_t n = ccw.size();
    if (n < 3) return true;
    for (std::size_t i = 0; i < n; ++i)
        if (cross(ccw[i], ccw[(i + 1) % n], ccw[(i + 2) % n]) < -eps) return false;
    return true;
}

double distance_to_polygon(const Point2& p, const std::vector<Point2>& ccw) {
    auto seg_dist = [&](const Point2& a, const Point2& b) {
        const double dx = b[0] - a[0];
        const double dy = b[1] - a[1];
        const double len2 = dx * dx + dy * dy;
        double t = len2 > 0.0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        return std::hypot(p[0] - (a[0] + t * dx), p[1] - (a[1] + t * dy));
    };
    const std::size_t n = ccw.size();
    if (n == 0) return std::numeric_limits<double>::infinity();
    if (n == 1) return std::hypot(p[0] - ccw[0][0], p[1] - ccw[0][1]);
    bool inside = n >= 3;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = ccw[i];
        const auto& b = ccw[(i + 1) % n];
        if (cross(a, b, p) < -1e-12) inside = false;
        best = std::min(best, seg_dist(a, b));
    }
    return inside ? 0.0 : best;
}

double hausdorff_distance(const std::vector<Point2>& a, const std::vector<Point2>& b) {
    double d = 0.0;
    for (const auto& p : a) d = std::max(d, distance_to_polygon(p, b));
    for (const auto& p : b) d = std::max(d, distance_to_polygon(p, a));
    return d;
}

std::vector<Point2> to_points(const RegionPolytope& poly) {
    if (poly.K != 2) throw UnsupportedDimension("to_points requires a 2-user polytope");
    std::vector<Point2> pts;
    for (const auto& v : poly.vertices) pts.push_back({v[0], v[1]});
    return pts;
}

}  // namespace marc
