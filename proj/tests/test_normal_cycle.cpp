#include "valconv/normal_cycle.hpp"

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

ConvexBody square(double lo, double hi) {
    return ConvexBody::polygon({{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}});
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

ConvexBody random_polygon(std::mt19937_64& rng, double radius, Vec2 center) {
    int n = 3 + static_cast<int>(rng() % 6);
    std::vector<double> angles(static_cast<size_t>(n));
    for (double& a : angles)
        a = uniform(rng, 0.0, 2.0 * kPi);
    std::sort(angles.begin(), angles.end());
    std::vector<Vec2> pts;
    for (double a : angles)
        pts.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
    return ConvexBody::polygon(pts);
}

ConvexBody sampled_ellipse(double a, double b, int n) {
    auto dirs = unit_direction_grid(n);
    std::vector<double> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double c = dirs[static_cast<size_t>(i)][0];
        double s = dirs[static_cast<size_t>(i)][1];
        vals[static_cast<size_t>(i)] = std::sqrt(a * a * c * c + b * b * s * s);
    }
    return ConvexBody::support_sampled(2, dirs, vals);
}

} // namespace

TEST_CASE("normal cycle of the unit square lists the four axis normals") {
    NormalCycle2D cyc = normal_cycle(square(0.0, 1.0));
    REQUIRE(cyc.edges.size() == 4);
    REQUIRE(cyc.arcs.size() == 4);
    // canonical order starts at the origin vertex, bottom edge first
    CHECK(cyc.edges[0].normal_angle == doctest::Approx(-kPi / 2).epsilon(1e-15));
    CHECK(cyc.edges[1].normal_angle == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(cyc.edges[2].normal_angle == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(cyc.edges[3].normal_angle == doctest::Approx(kPi).epsilon(1e-15));
    // arc at (1, 0) turns from the bottom normal to the right normal
    CHECK(cyc.arcs[0].vertex.x == 1.0);
    CHECK(cyc.arcs[0].vertex.y == 0.0);
    CHECK(cyc.arcs[0].theta_start == doctest::Approx(-kPi / 2).epsilon(1e-15));
    CHECK(cyc.arcs[0].theta_end == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    double turn = 0.0;
    for (const CycleArc& a : cyc.arcs)
        turn += a.theta_end - a.theta_start;
    CHECK(turn == doctest::Approx(2.0 * kPi).epsilon(1e-12));
}

TEST_CASE("normal cycle of points and segments") {
    NormalCycle2D pt = normal_cycle(ConvexBody::point2({0.3, -0.2}));
    CHECK(pt.edges.empty());
    REQUIRE(pt.arcs.size() == 1);
    CHECK(pt.arcs[0].theta_end - pt.arcs[0].theta_start == doctest::Approx(2.0 * kPi));

    NormalCycle2D seg = normal_cycle(ConvexBody::polygon({{0.0, 0.0}, {2.0, 1.0}}));
    REQUIRE(seg.edges.size() == 2);
    REQUIRE(seg.arcs.size() == 2);
    for (const CycleArc& a : seg.arcs)
        CHECK(a.theta_end - a.theta_start == doctest::Approx(kPi).epsilon(1e-12));

    CHECK_THROWS_AS(normal_cycle(ConvexBody::interval(0.0, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(normal_cycle(ConvexBody::sampled_disk(64)), std::invalid_argument);
}

TEST_CASE("normal cycle arcs of random polygons are positive and close up") {
    std::mt19937_64 rng(314u);
    for (int rep = 0; rep < 25; ++rep) {
        ConvexBody body = random_polygon(rng, uniform(rng, 0.5, 2.0),
                                         {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)});
        NormalCycle2D cyc = normal_cycle(body);
        const std::vector<Vec2>& v = body.as_polygon().vertices;
        REQUIRE(cyc.edges.size() == v.size());
        double turn = 0.0;
        for (size_t i = 0; i < cyc.arcs.size(); ++i) {
            double span = cyc.arcs[i].theta_end - cyc.arcs[i].theta_start;
            CHECK(span > 0.0);
            CHECK(span < kPi);
            turn += span;
        }
        CHECK(turn == doctest::Approx(2.0 * kPi).epsilon(1e-12));
        for (const CycleEdge& e : cyc.edges) {
            Vec2 d = e.end - e.start;
            Vec2 nrm{std::cos(e.normal_angle), std::sin(e.normal_angle)};
            // outer normal is orthogonal to the edge and points right of it
            CHECK(std::abs(dot(nrm, d)) < 1e-12 * std::hypot(d.x, d.y));
            CHECK(cross(nrm, d) > 0.0);
        }
    }
}

TEST_CASE("constant turn form counts one for every body inside its cutoff") {
    const ValuationForm2D& euler = form_catalog().at("euler");
    std::mt19937_64 rng(555u);
    CHECK(evaluate_form(euler, square(0.0, 1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(evaluate_form(euler, ConvexBody::point2({1.5, -2.0})) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(evaluate_form(euler, ConvexBody::polygon({{-3.0, 0.0}, {3.5, 1.0}})) ==
          doctest::Approx(1.0).epsilon(1e-12));
    for (int rep = 0; rep < 10; ++rep) {
        ConvexBody body = random_polygon(rng, uniform(rng, 0.3, 1.8),
                                         {uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)});
        CHECK(evaluate_form(euler, body) == doctest::Approx(1.0).epsilon(1e-12));
    }
    // far outside the support box the form vanishes identically
    CHECK(evaluate_form(euler, ConvexBody::point2({20.0, 0.0})) == 0.0);
}

TEST_CASE("boundary and density forms both reproduce polygon areas") {
    const ValuationForm2D& stokes = form_catalog().at("stokes-area");
    const ValuationForm2D& dens = form_catalog().at("area-density");
    std::mt19937_64 rng(808u);
    for (int rep = 0; rep < 12; ++rep) {
        ConvexBody body = random_polygon(rng, uniform(rng, 0.3, 2.0),
                                         {uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5)});
        double area = volume(body);
        CHECK(evaluate_form(stokes, body) == doctest::Approx(area).epsilon(1e-9));
        CHECK(evaluate_form(dens, body) == doctest::Approx(area).epsilon(1e-9));
    }
    // degenerate bodies carry no area
    CHECK(evaluate_form(stokes, ConvexBody::point2({0.5, 0.5})) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(evaluate_form(dens, ConvexBody::polygon({{0.0, 0.0}, {1.0, 0.0}})) == 0.0);
}

TEST_CASE("scaled outline evaluation matches closed forms on the disk") {
    ConvexBody disk = ConvexBody::sampled_disk(256);
    const ValuationForm2D& euler = form_catalog().at("euler");
    const ValuationForm2D& stokes = form_catalog().at("stokes-area");
    const ValuationForm2D& dens = form_catalog().at("area-density");
    for (double t : {0.0, 0.5, 1.0, 2.0}) {
        CHECK(evaluate_form_scaled(euler, disk, t) == doctest::Approx(1.0).epsilon(1e-12));
        // pi t^2 up to the fourth order error of the angular derivative stencil
        CHECK(evaluate_form_scaled(stokes, disk, t) ==
              doctest::Approx(kPi * t * t).scale(1.0).epsilon(1e-6));
    }
    // the density path sees the inscribed polygon of the outline
    CHECK(evaluate_form_scaled(dens, disk, 1.0) == doctest::Approx(kPi).epsilon(1e-3));
    CHECK_THROWS_AS(evaluate_form_scaled(euler, disk, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_form_scaled(euler, square(0.0, 1.0), 1.0), std::invalid_argument);
}

TEST_CASE("scale derivative on the disk matches the cosine moment integral") {
    // independent oracle: high resolution trapezoid of cos(t) exp(cos(t))
    int m = 8192;
    double oracle = 0.0;
    for (int k = 0; k < m; ++k) {
        double th = 2.0 * kPi * k / m;
        oracle += std::cos(th) * std::exp(std::cos(th));
    }
    oracle *= 2.0 * kPi / m;

    const ValuationForm2D& slope = form_catalog().at("disk-slope");
    ConvexBody disk = ConvexBody::sampled_disk(256);
    double tau = tau_smooth(slope, disk);
    CHECK(tau == doctest::Approx(oracle).epsilon(1e-9));
    // sanity: the moment is clearly away from zero
    CHECK(std::abs(oracle) > 3.5);
}

TEST_CASE("forms constant in position have zero scale derivative") {
    ConvexBody disk = ConvexBody::sampled_disk(128);
    CHECK(tau_smooth(form_catalog().at("euler"), disk) == 0.0);
}

TEST_CASE("difference quotients converge first order to the scale derivative") {
    std::vector<ConvexBody> bodies;
    bodies.push_back(ConvexBody::sampled_disk(256));
    bodies.push_back(sampled_ellipse(1.3, 0.8, 256));
    for (const char* name : {"tau-a", "tau-b", "tau-c"}) {
        const ValuationForm2D& form = form_catalog().at(name);
        for (const ConvexBody& body : bodies) {
            double tau = tau_smooth(form, body);
            double e1 = std::abs(scaled_difference(form, body, 1e-2) - tau);
            double e2 = std::abs(scaled_difference(form, body, 1e-3) - tau);
            CHECK(std::abs(tau) > 0.05);
            CHECK(e2 <= 1e-2 * std::max(1.0, std::abs(tau)));
            double ratio = e1 / e2;
            CHECK(ratio >= 8.0);
            CHECK(ratio <= 12.0);
        }
    }
}

TEST_CASE("square rate formula: value, linearity and difference quotient") {
    const auto& catalog = form_catalog();
    CHECK(tau_square(catalog.at("square-cos"), 1.0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(tau_square(catalog.at("square-mixed"), 1.0) == doctest::Approx(-1.2).epsilon(1e-12));
    CHECK(tau_square(catalog.at("square-skew"), 1.0) == doctest::Approx(0.8).epsilon(1e-9));
    // linear in the half width
    CHECK(tau_square(catalog.at("square-mixed"), 2.5) ==
          doctest::Approx(2.5 * tau_square(catalog.at("square-mixed"), 1.0)).epsilon(1e-12));

    // the four corner contributions can cancel exactly
    ValuationForm2D cancel;
    cancel.a1 = [](Vec2, double th) { return std::cos(th); };
    cancel.a2 = [](Vec2, double th) { return std::cos(2.0 * th); };
    cancel.a3 = [](Vec2, double) { return 0.0; };
    cancel.support_box = Box{2, {-1.0, -1.0}, {1.0, 1.0}};
    CHECK(tau_square(cancel, 1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    for (const char* name : {"square-cos", "square-mixed", "square-skew"}) {
        const ValuationForm2D& form = catalog.at(name);
        double want = tau_square(form, 1.0);
        double got = scaled_difference(form, square(-1.0, 1.0), 1e-3);
        CHECK(got == doctest::Approx(want).epsilon(1e-2).scale(1.0));
    }

    CHECK_THROWS_AS(tau_square(catalog.at("square-cos"), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tau_square(catalog.at("square-cos"), -2.0), std::invalid_argument);
}

TEST_CASE("form evaluation validates inputs") {
    const ValuationForm2D& euler = form_catalog().at("euler");
    CHECK_THROWS_AS(evaluate_form(euler, ConvexBody::interval(0.0, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_form(euler, ConvexBody::sampled_disk(64)), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_form(euler, square(0.0, 1.0), 1), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_form(euler, square(0.0, 1.0), 100), std::invalid_argument);
    ValuationForm2D broken;
    broken.a1 = [](Vec2, double) { return 0.0; };
    CHECK_THROWS_AS(evaluate_form(broken, square(0.0, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(scaled_difference(euler, square(0.0, 1.0), 0.0), std::invalid_argument);
    // sampled bodies must come on a uniform ccw angle grid
    auto dirs = unit_direction_grid(16);
    std::swap(dirs[3], dirs[4]);
    std::vector<double> vals(16, 1.0);
    CHECK_THROWS_AS(evaluate_form_scaled(euler, ConvexBody::support_sampled(2, dirs, vals), 1.0),
                    std::invalid_argument);
}

TEST_CASE("catalog carries the expected named forms") {
    const auto& catalog = form_catalog();
    for (const char* name : {"euler", "stokes-area", "area-density", "disk-slope", "tau-a",
                             "tau-b", "tau-c", "square-cos", "square-mixed", "square-skew"}) {
        REQUIRE(catalog.count(name) == 1);
        const ValuationForm2D& f = catalog.at(name);
        CHECK(f.support_box.dim == 2);
        CHECK(f.support_box.hi[0] > 0.0);
    }
}
