#include "valconv/geometry.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

using namespace valconv;

namespace {

constexpr double kPi = std::numbers::pi;

double urand(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

// independent oracle: hull of all pairwise vertex sums (monotone chain)
std::vector<Vec2> hull_of_sums(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    std::vector<Vec2> pts;
    for (const auto& p : a)
        for (const auto& q : b) pts.push_back(p + q);
    std::sort(pts.begin(), pts.end(), [](Vec2 p, Vec2 q) {
        return p.x < q.x || (p.x == q.x && p.y < q.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Vec2 p, Vec2 q) { return p.x == q.x && p.y == q.y; }),
              pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Vec2> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 1e-12) --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 1e-12) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

ConvexBody random_polygon(std::mt19937_64& rng, int min_v = 3, int max_v = 7) {
    int n = min_v + static_cast<int>(rng() % static_cast<unsigned>(max_v - min_v + 1));
    std::vector<double> angles;
    for (int i = 0; i < n; ++i) angles.push_back(urand(rng, 0.0, 2.0 * kPi));
    std::sort(angles.begin(), angles.end());
    std::vector<Vec2> vs;
    for (double a : angles) {
        double r = urand(rng, 0.3, 1.2);
        vs.push_back({r * std::cos(a), r * std::sin(a)});
    }
    auto h = hull_of_sums(vs, {{0.0, 0.0}});
    if (h.size() < 3) return ConvexBody::polygon({{0, 0}, {1, 0}, {0, 1}});
    return ConvexBody::polygon(h);
}

ConvexBody unit_square() { return ConvexBody::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

} // namespace

TEST_CASE("support function on exact bodies") {
    auto sq = unit_square();
    CHECK(support_function(sq, Vec2{1, 0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(support_function(sq, Vec2{-1, -1}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(support_function(sq, Vec2{1, 1}) == doctest::Approx(2.0).epsilon(1e-12));

    auto iv = ConvexBody::interval(-2.0, 3.0);
    CHECK(support_function(iv, std::vector<double>{-1.0}) == doctest::Approx(2.0));
    CHECK(support_function(iv, std::vector<double>{2.0}) == doctest::Approx(6.0));

    CHECK_THROWS_AS(support_function(sq, Vec2{0, 0}), std::invalid_argument);
}

TEST_CASE("support function is positively homogeneous and additive under sums") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 25; ++rep) {
        auto A = random_polygon(rng);
        auto B = random_polygon(rng);
        auto S = minkowski_sum(A, B);
        for (const auto& d : unit_direction_grid(32)) {
            double ha = support_function(A, d);
            double hb = support_function(B, d);
            CHECK(support_function(S, d) == doctest::Approx(ha + hb).epsilon(1e-9));
            std::vector<double> d3{3.0 * d[0], 3.0 * d[1]};
            CHECK(support_function(A, d3) == doctest::Approx(3.0 * ha).epsilon(1e-9));
        }
    }
}

TEST_CASE("product support adds factor supports with h(0) = 0") {
    auto sq = unit_square();
    auto iv = ConvexBody::interval(-2.0, 3.0);
    CHECK(product_support(sq, iv, {1.0, 0.0}, {1.0}) == doctest::Approx(4.0));
    CHECK(product_support(sq, iv, {1.0, 0.0}, {0.0}) == doctest::Approx(1.0));
    CHECK(product_support(sq, iv, {0.0, 0.0}, {0.0}) == doctest::Approx(0.0));
}

TEST_CASE("minkowski sum of intervals is exact") {
    auto s = minkowski_sum(ConvexBody::interval(0, 1), ConvexBody::interval(2, 5));
    CHECK(s.as_interval().lo == 2.0);
    CHECK(s.as_interval().hi == 6.0);
}

TEST_CASE("minkowski sum: triangle plus segment against vertex-sum oracle") {
    auto tri = ConvexBody::polygon({{0, 0}, {1, 0}, {0, 1}});
    auto seg = ConvexBody::polygon({{0, 0}, {1, 0}});
    auto got = minkowski_sum(tri, seg);
    auto want = ConvexBody::polygon(hull_of_sums(tri.as_polygon().vertices, seg.as_polygon().vertices));
    CHECK(body_close(got, want, 1e-9));
    CHECK(got.as_polygon().vertices.size() == 4);
}

TEST_CASE("minkowski sum matches vertex-sum hull oracle on random polygons") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 40; ++rep) {
        auto A = random_polygon(rng);
        auto B = rep % 3 == 0
                     ? ConvexBody::polygon({{urand(rng, -1, 0), urand(rng, -1, 0)},
                                            {urand(rng, 0.1, 1), urand(rng, 0.1, 1)}})
                     : random_polygon(rng);
        auto got = minkowski_sum(A, B);
        auto want = ConvexBody::polygon(hull_of_sums(A.as_polygon().vertices, B.as_polygon().vertices));
        CAPTURE(rep);
        CHECK(body_close(got, want, 1e-9));
    }
}

TEST_CASE("minkowski sum with a point body is exact translation") {
    auto sq = unit_square();
    auto moved = minkowski_sum(sq, ConvexBody::point2({0.0, 0.0}));
    CHECK(body_equal(moved, sq));
    auto shifted = minkowski_sum(sq, ConvexBody::point2({2.0, -1.0}));
    CHECK(shifted.as_polygon().vertices[0].x == doctest::Approx(2.0));
}

TEST_CASE("minkowski dimension mismatch rejected") {
    CHECK_THROWS_AS(minkowski_sum(unit_square(), ConvexBody::interval(0, 1)), std::invalid_argument);
}

TEST_CASE("volume of polygons and sampled bodies") {
    CHECK(volume(ConvexBody::interval(-2, 3)) == 5.0);
    CHECK(volume(unit_square()) == doctest::Approx(1.0).epsilon(1e-12));

    // 256-gon inscribed in the unit circle; closed form (n/2) sin(2 pi / n)
    int n = 256;
    std::vector<Vec2> vs;
    for (int k = 0; k < n; ++k)
        vs.push_back({std::cos(2 * kPi * k / n), std::sin(2 * kPi * k / n)});
    double want = 0.5 * n * std::sin(2 * kPi / n);
    CHECK(volume(ConvexBody::polygon(vs)) == doctest::Approx(want).epsilon(1e-12));
    CHECK(std::abs(volume(ConvexBody::polygon(vs)) - kPi) / kPi < 1e-3);

    // sampled disk reconstructed from 256 support samples
    auto disk = ConvexBody::sampled_disk(256);
    CHECK(std::abs(volume(disk) - kPi) / kPi < 1e-3);

    CHECK(volume(ConvexBody::point2({3, 4})) == 0.0);
}

TEST_CASE("scale behaves like Minkowski dilation") {
    auto sq = unit_square();
    CHECK(volume(scale(sq, 2.0)) == doctest::Approx(4.0));
    auto z = scale(sq, 0.0);
    CHECK(z.as_polygon().vertices.size() == 1);
    CHECK_THROWS_AS(scale(sq, -1.0), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 10; ++rep) {
        auto A = random_polygon(rng);
        double s = urand(rng, 0.1, 1.5), t = urand(rng, 0.1, 1.5);
        auto lhs = scale(A, s + t);
        auto rhs = minkowski_sum(scale(A, s), scale(A, t));
        CHECK(body_close(lhs, rhs, 1e-9));
        CHECK(volume(scale(A, s)) == doctest::Approx(s * s * volume(A)).epsilon(1e-9));
    }
}

TEST_CASE("membership is consistent with the support function") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        auto A = random_polygon(rng);
        Vec2 p{urand(rng, -1.5, 1.5), urand(rng, -1.5, 1.5)};
        bool in = membership(A, p);
        bool support_says_in = true;
        for (const auto& d : unit_direction_grid(64))
            if (p.x * d[0] + p.y * d[1] > support_function(A, d) + 1e-7) support_says_in = false;
        if (in) CHECK(support_says_in);
        // strictly outside by support must not be a member
        bool far_out = false;
        for (const auto& d : unit_direction_grid(64))
            if (p.x * d[0] + p.y * d[1] > support_function(A, d) + 1e-6) far_out = true;
        if (far_out) CHECK_FALSE(in);
    }
    // degenerate bodies
    auto seg = ConvexBody::polygon({{0, 0}, {1, 1}});
    CHECK(membership(seg, Vec2{0.5, 0.5}));
    CHECK_FALSE(membership(seg, Vec2{0.5, 0.6}));
    CHECK_FALSE(membership(seg, Vec2{1.5, 1.5}));
    CHECK(membership(ConvexBody::point2({2, 2}), Vec2{2, 2}));
}

TEST_CASE("sampled membership uses the sampled half planes") {
    auto disk = ConvexBody::sampled_disk(64);
    CHECK(membership(disk, Vec2{0.5, 0.5}));
    CHECK_FALSE(membership(disk, Vec2{1.2, 0.0}));
}

TEST_CASE("rotational smoothing: identity kernel reproduces the body support") {
    auto sq = unit_square();
    auto sm = rotational_smoothing(sq, {{0.0, 1.0}}, 128);
    const auto& s = sm.as_sampled();
    for (size_t i = 0; i < s.directions.size(); ++i) {
        CHECK(s.values[i] == doctest::Approx(support_function(sq, s.directions[i])).epsilon(1e-12));
        CHECK(support_function(sm, s.directions[i]) == doctest::Approx(s.values[i]).epsilon(1e-12));
    }
}

TEST_CASE("rotational smoothing: full-circle uniform kernel flattens to the mean width") {
    // quadrature oracle: (1/2pi) integral of h_square over all angles = 2/pi
    int m = 720;
    double oracle = 0.0;
    for (int k = 0; k < m; ++k) {
        double a = 2 * kPi * k / m;
        oracle += std::max(0.0, std::cos(a)) + std::max(0.0, std::sin(a));
    }
    oracle /= m;
    CHECK(oracle == doctest::Approx(2.0 / kPi).epsilon(1e-4));

    auto kernel = uniform_angle_kernel(2 * kPi * (1.0 - 1.0 / 256.0), 256);
    auto sm = rotational_smoothing(unit_square(), kernel, 64);
    for (double v : sm.as_sampled().values) CHECK(v == doctest::Approx(oracle).epsilon(2e-3));
}

TEST_CASE("rotational smoothing: shrinking kernels converge to the body") {
    auto sq = unit_square();
    auto grid = unit_direction_grid(64);
    double prev = 1e9;
    for (double w : {0.4, 0.2, 0.1}) {
        auto sm = rotational_smoothing(sq, uniform_angle_kernel(w, 17));
        double d = support_distance(sm, sq, grid);
        CHECK(d < prev);
        prev = d;
        CHECK(is_sampled_sublinear(sm.as_sampled(), 1e-9));
    }
    CHECK(prev < 0.05);
}

TEST_CASE("rotational smoothing validates kernels") {
    CHECK_THROWS_AS(rotational_smoothing(unit_square(), {{0.0, 0.7}}), std::invalid_argument);
    CHECK_THROWS_AS(rotational_smoothing(unit_square(), {{0.0, -1.0}, {0.1, 2.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(rotational_smoothing(unit_square(), {}), std::invalid_argument);
}

TEST_CASE("support distance") {
    auto sq = unit_square();
    CHECK(support_distance(sq, sq, unit_direction_grid(16)) == 0.0);
    auto big = scale(sq, 2.0);
    // the gap is h_square itself, maximal along the diagonal
    CHECK(support_distance(sq, big, unit_direction_grid(64)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK_THROWS_AS(support_distance(sq, big, {}), std::invalid_argument);
}

TEST_CASE("sampled sublinearity validation rejects spikes") {
    auto dirs = unit_direction_grid(64);
    std::vector<double> vals(64, 1.0);
    vals[10] = 2.0;
    CHECK_THROWS_AS(ConvexBody::support_sampled(2, dirs, vals), std::invalid_argument);
    vals[10] = 1.0;
    CHECK_NOTHROW(ConvexBody::support_sampled(2, dirs, vals));
}

TEST_CASE("polygon canonical form and validation") {
    // cyclic rotation of the input does not matter
    auto a = ConvexBody::polygon({{1, 1}, {0, 1}, {0, 0}, {1, 0}});
    auto b = unit_square();
    CHECK(body_equal(a, b));
    // collinear mid-vertices get stripped
    auto c = ConvexBody::polygon({{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(body_equal(c, b));
    // non-convex rejected
    CHECK_THROWS_AS(ConvexBody::polygon({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}}), std::invalid_argument);
    // clockwise rejected
    CHECK_THROWS_AS(ConvexBody::polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), std::invalid_argument);
    // collinear input collapses to a segment
    auto seg = ConvexBody::polygon({{0, 0}, {2, 2}, {1, 1}});
    CHECK(seg.as_polygon().vertices.size() == 2);
    CHECK(seg.as_polygon().vertices[1].x == 2.0);
    CHECK_THROWS_AS(ConvexBody::interval(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("bounding boxes") {
    auto bb = bounding_box(unit_square());
    CHECK(bb.lo[0] == 0.0);
    CHECK(bb.hi[1] == 1.0);
    auto ib = bounding_box(ConvexBody::interval(-2, 5));
    CHECK(ib.dim == 1);
    CHECK(ib.hi[0] == 5.0);
    auto db = bounding_box(ConvexBody::sampled_disk(256));
    CHECK(db.lo[0] == doctest::Approx(-1.0).epsilon(1e-3));
    CHECK(db.hi[1] == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("minkowski commutes and associates on polygons") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 15; ++rep) {
        auto A = random_polygon(rng);
        auto B = random_polygon(rng);
        auto C = random_polygon(rng);
        CHECK(body_close(minkowski_sum(A, B), minkowski_sum(B, A), 1e-9));
        CHECK(body_close(minkowski_sum(minkowski_sum(A, B), C),
                         minkowski_sum(A, minkowski_sum(B, C)), 1e-9));
    }
}
