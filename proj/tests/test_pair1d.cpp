#include "valconv/pair1d.hpp"

#include "valconv/measure.hpp"
#include "valconv/valuation.hpp"

#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace valconv;

namespace {

Measure uniform_1d(double lo, double hi, double spacing, double density = 1.0) {
    int cells = static_cast<int>(std::llround((hi - lo) / spacing));
    return make_grid({lo}, spacing, {cells},
                     std::vector<double>(static_cast<size_t>(cells), density));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

} // namespace

TEST_CASE("tabulated pair reproduces atom measures away from the jumps") {
    Measure mu = make_atoms(1, {{{0.2}, 1.5}, {{0.7}, -0.5}});
    Pair1D p = from_term(mu, ConvexBody::interval(0.0, 0.5), 1e-3);
    CHECK(p.right_constant == doctest::Approx(1.0).epsilon(1e-14));
    // K + A = [0.1, 0.65] holds only the first atom
    CHECK(evaluate(p, 0.1, 0.15) == doctest::Approx(1.5).epsilon(1e-12));
    // K + A = [0.25, 0.75] holds only the second
    CHECK(evaluate(p, 0.25, 0.25) == doctest::Approx(-0.5).epsilon(1e-12));
    // covering interval gives the total mass
    CHECK(evaluate(p, -5.0, 5.0) == doctest::Approx(1.0).epsilon(1e-14));
    // interval outside the reach gives zero
    CHECK(evaluate(p, 2.0, 3.0) == 0.0);
    CHECK(evaluate(p, -3.0, -2.5) == 0.0);
}

TEST_CASE("tabulated pair reproduces a uniform density exactly between nodes") {
    Measure mu = uniform_1d(0.0, 1.0, 1e-3);
    Pair1D p = from_term(mu, ConvexBody::interval(-0.25, 0.25), 1e-3);
    CHECK(evaluate(p, 0.3, 0.4) == doctest::Approx(0.6).epsilon(1e-9));
    CHECK(evaluate(p, 0.5, 0.5) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(p.right_constant == doctest::Approx(1.0).epsilon(1e-12));
    // cumulative tails are snapped exactly
    CHECK(p.f.front() == 0.0);
    CHECK(p.g.back() == p.right_constant);
}

TEST_CASE("pair evaluation agrees with direct valuation evaluation") {
    std::mt19937_64 rng(11u);
    Measure mu = uniform_1d(-0.5, 0.75, 1e-3, 0.8);
    ConvexBody a = ConvexBody::interval(-0.125, 0.25);
    Pair1D p = from_term(mu, a, 1e-3);
    SmoothValuation psi = make_valuation(1, {{1.0, mu, a}});
    for (int rep = 0; rep < 25; ++rep) {
        double x = uniform(rng, -1.2, 1.2);
        double y = uniform(rng, -1.2, 1.2);
        if (x > y)
            std::swap(x, y);
        double via_pair = evaluate(p, x, y);
        double direct = evaluate(psi, ConvexBody::interval(x, y));
        CHECK(via_pair == doctest::Approx(direct).epsilon(1e-3));
    }
}

TEST_CASE("pair convolution matches tabulating the convolved measure") {
    Measure mu1 = uniform_1d(0.0, 1.0, 1e-3);
    Measure mu2 = make_measure(1, {{{0.3}, 0.4}},
                               GridDensity{{-0.5}, 1e-3, {500},
                                           std::vector<double>(500, 1.2)});
    ConvexBody a1 = ConvexBody::interval(0.0, 0.25);
    ConvexBody a2 = ConvexBody::interval(-0.5, -0.2);

    Pair1D p1 = from_term(mu1, a1, 1e-3);
    Pair1D p2 = from_term(mu2, a2, 1e-3);
    Pair1D conv = convolve(p1, p2);

    Pair1D want = from_term(convolve(mu1, mu2), minkowski_sum(a1, a2), 1e-3);
    CHECK(conv.right_constant == doctest::Approx(want.right_constant).epsilon(1e-12));
    CHECK(conv.right_constant == p1.right_constant * p2.right_constant);
    CHECK(conv.f.front() == 0.0);
    CHECK(conv.g.back() == conv.right_constant);

    std::mt19937_64 rng(42u);
    for (int rep = 0; rep < 50; ++rep) {
        double x = uniform(rng, -2.0, 2.5);
        double y = x + uniform(rng, 0.0, 1.5);
        double got = evaluate(conv, x, y);
        double ref = evaluate(want, x, y);
        CHECK(got == doctest::Approx(ref).epsilon(1e-3).scale(1.0));
    }
}

TEST_CASE("pair convolution is consistent with the valuation product") {
    Measure mu1 = uniform_1d(-0.25, 0.5, 1e-3, 1.5);
    Measure mu2 = uniform_1d(0.0, 0.375, 1e-3, 0.9);
    ConvexBody a1 = ConvexBody::interval(0.0, 0.125);
    ConvexBody a2 = ConvexBody::interval(-0.25, 0.0);
    Pair1D conv = convolve(from_term(mu1, a1, 1e-3), from_term(mu2, a2, 1e-3));
    SmoothValuation prod = convolve(make_valuation(1, {{1.0, mu1, a1}}),
                                    make_valuation(1, {{1.0, mu2, a2}}));
    std::mt19937_64 rng(7u);
    for (int rep = 0; rep < 20; ++rep) {
        double x = uniform(rng, -1.0, 1.0);
        double y = x + uniform(rng, 0.0, 1.0);
        CHECK(evaluate(conv, x, y) ==
              doctest::Approx(evaluate(prod, ConvexBody::interval(x, y))).epsilon(1e-3).scale(1.0));
    }
}

TEST_CASE("a unit atom at zero acts as an approximate convolution identity") {
    Measure mu = uniform_1d(0.0, 0.8, 1e-3, 1.25);
    Pair1D p = from_term(mu, ConvexBody::interval(0.0, 0.3), 1e-3);
    Pair1D e = from_term(dirac({0.0}), ConvexBody::interval(0.0, 0.0), 1e-3);
    Pair1D conv = convolve(e, p);
    std::mt19937_64 rng(3u);
    for (int rep = 0; rep < 20; ++rep) {
        double x = uniform(rng, -0.8, 1.2);
        double y = x + uniform(rng, 0.0, 0.9);
        CHECK(evaluate(conv, x, y) ==
              doctest::Approx(evaluate(p, x, y)).epsilon(5e-3).scale(1.0));
    }
}

TEST_CASE("pair convolution commutes and associates up to discretization") {
    Pair1D p1 = from_term(uniform_1d(0.0, 0.5, 1e-3), ConvexBody::interval(0.0, 0.1), 1e-3);
    Pair1D p2 = from_term(uniform_1d(-0.3, 0.2, 1e-3, 0.7), ConvexBody::interval(-0.1, 0.0), 1e-3);
    Pair1D p3 = from_term(make_atoms(1, {{{0.15}, 0.8}}), ConvexBody::interval(0.0, 0.05), 1e-3);

    Pair1D ab = convolve(p1, p2);
    Pair1D ba = convolve(p2, p1);
    Pair1D abc1 = convolve(ab, p3);
    Pair1D abc2 = convolve(p1, convolve(p2, p3));
    std::mt19937_64 rng(5u);
    for (int rep = 0; rep < 20; ++rep) {
        double x = uniform(rng, -1.0, 1.0);
        double y = x + uniform(rng, 0.0, 1.0);
        CHECK(evaluate(ab, x, y) == doctest::Approx(evaluate(ba, x, y)).epsilon(1e-4).scale(1.0));
        CHECK(evaluate(abc1, x, y) ==
              doctest::Approx(evaluate(abc2, x, y)).epsilon(1e-3).scale(1.0));
    }
}

TEST_CASE("pair sum and scaling stay consistent on aligned grids") {
    Pair1D p1 = from_term(uniform_1d(0.0, 0.5, 1e-3), ConvexBody::interval(0.0, 0.125), 1e-3);
    Pair1D p2 = from_term(uniform_1d(-0.25, 0.25, 1e-3, 2.0), ConvexBody::interval(0.0, 0.0), 1e-3);
    Pair1D combo = pair_add(p1, pair_scale(p2, -2.0));
    CHECK(combo.right_constant == doctest::Approx(p1.right_constant - 2.0 * p2.right_constant)
                                      .epsilon(1e-12));
    std::mt19937_64 rng(9u);
    for (int rep = 0; rep < 20; ++rep) {
        double x = uniform(rng, -0.8, 0.8);
        double y = x + uniform(rng, 0.0, 0.8);
        CHECK(evaluate(combo, x, y) ==
              doctest::Approx(evaluate(p1, x, y) - 2.0 * evaluate(p2, x, y)).epsilon(1e-9));
    }

    SmoothValuation psi = make_valuation(
        1, {{1.0, uniform_1d(0.0, 0.5, 1e-3), ConvexBody::interval(0.0, 0.125)},
            {-2.0, uniform_1d(-0.25, 0.25, 1e-3, 2.0), ConvexBody::interval(0.0, 0.0)}});
    Pair1D via_valuation = pair_from_valuation(psi, 1e-3);
    for (int rep = 0; rep < 10; ++rep) {
        double x = uniform(rng, -0.8, 0.8);
        double y = x + uniform(rng, 0.0, 0.8);
        CHECK(evaluate(via_valuation, x, y) ==
              doctest::Approx(evaluate(combo, x, y)).epsilon(1e-9));
    }
}

TEST_CASE("pair validation and error paths") {
    CHECK_THROWS_AS(evaluate(Pair1D{0.0, 1e-3, {0.0, 0.0}, {0.0, 0.0}, 0.0}, 1.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(from_term(dirac({0.0, 0.0}), ConvexBody::interval(0.0, 1.0), 1e-3),
                    std::invalid_argument);
    CHECK_THROWS_AS(from_term(dirac({0.0}), ConvexBody::point2({0.0, 0.0}), 1e-3),
                    std::invalid_argument);
    CHECK_THROWS_AS(from_term(dirac({0.0}), ConvexBody::interval(0.0, 1.0), -1.0),
                    std::invalid_argument);
    Pair1D a = from_term(dirac({0.0}), ConvexBody::interval(0.0, 0.0), 1e-3);
    Pair1D b = from_term(dirac({0.0}), ConvexBody::interval(0.0, 0.0), 2e-3);
    CHECK_THROWS_AS(convolve(a, b), std::invalid_argument);
    CHECK_THROWS_AS(pair_add(a, b), std::invalid_argument);
    // boundary samples must satisfy the tail invariant
    CHECK_THROWS_AS(make_pair1d(0.0, 1e-3, {0.5, 1.0}, {0.0, 1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_pair1d(0.0, 1e-3, {0.0, 0.5}, {0.0, 1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_pair1d(0.0, 0.0, {0.0, 1.0}, {0.0, 1.0}, 1.0), std::invalid_argument);
    SmoothValuation bad = make_valuation(2, {});
    CHECK_THROWS_AS(pair_from_valuation(bad, 1e-3), std::invalid_argument);
}
