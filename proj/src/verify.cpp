#include "valconv/verify.hpp"

#include "valconv/geometry.hpp"
#include "valconv/measure.hpp"
#include "valconv/normal_cycle.hpp"
#include "valconv/pair1d.hpp"
#include "valconv/valuation.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace valconv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double snap(double x, double step) { return step * std::round(x / step); }

std::mt19937_64 seeded(const VerifyOptions& opt, std::uint64_t salt) {
    return std::mt19937_64(opt.seed * 0x9e3779b97f4a7c15ull + salt);
}

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

double pick_limit(const VerifyOptions& opt, double fallback) {
    return opt.tolerance > 0.0 ? opt.tolerance : fallback;
}

// cap <= 0 means the check carries no runtime budget
CheckResult finish(int criterion, std::string name, double measured, double limit,
                   const Stopwatch& watch, double cap, std::string details) {
    CheckResult r;
    r.criterion = criterion;
    r.name = std::move(name);
    r.measured = measured;
    r.limit = limit;
    r.seconds = watch.seconds();
    r.pass = measured <= limit && (cap <= 0.0 || r.seconds < cap);
    r.details = std::move(details);
    return r;
}

// every coordinate lands on the 0.05 lattice so translated grid copies merge
Measure random_lattice_measure(std::mt19937_64& rng, int dim) {
    const double step = 0.05;
    if (rng() % 2 == 0) {
        std::vector<Atom> atoms;
        int n = uniform_int(rng, 1, 3);
        for (int i = 0; i < n; ++i) {
            std::vector<double> point;
            for (int d = 0; d < dim; ++d)
                point.push_back(snap(uniform(rng, -0.6, 0.6), step));
            double w = uniform(rng, 0.2, 1.4) * (rng() % 4 == 0 ? -1.0 : 1.0);
            atoms.push_back({point, w});
        }
        return make_atoms(dim, atoms);
    }
    std::vector<double> center;
    for (int d = 0; d < dim; ++d)
        center.push_back(snap(uniform(rng, -0.4, 0.4), step));
    return smooth_bump(center, uniform(rng, 0.12, 0.22), uniform(rng, 0.5, 1.8), step);
}

ConvexBody random_generic_body(std::mt19937_64& rng, int dim) {
    int pick = uniform_int(rng, 0, 2);
    double x = uniform(rng, -0.5, 0.1);
    if (dim == 1) {
        if (pick == 0)
            return ConvexBody::point1(x);
        return ConvexBody::interval(x, x + uniform(rng, 0.15, 0.5));
    }
    double y = uniform(rng, -0.5, 0.1);
    if (pick == 0)
        return ConvexBody::point2({x, y});
    double w = uniform(rng, 0.15, 0.5);
    double t = uniform(rng, 0.15, 0.5);
    if (pick == 1)
        return ConvexBody::polygon({{x, y}, {x + w, y}, {x + w, y + t}, {x, y + t}});
    return ConvexBody::polygon({{x, y}, {x + w, y}, {x, y + t}});
}

SmoothValuation random_lattice_valuation(std::mt19937_64& rng, int dim, int nterms) {
    std::vector<ValuationTerm> terms;
    for (int i = 0; i < nterms; ++i) {
        double c = uniform(rng, 0.4, 1.5) * (rng() % 2 == 0 ? 1.0 : -1.0);
        terms.push_back({c, random_lattice_measure(rng, dim), random_generic_body(rng, dim)});
    }
    return make_valuation(dim, terms);
}

ConvexBody random_probe(std::mt19937_64& rng, int dim) {
    double x = uniform(rng, -1.4, -0.2);
    double w = uniform(rng, 0.8, 1.6);
    if (dim == 1)
        return ConvexBody::interval(x, x + w);
    double y = uniform(rng, -1.4, -0.2);
    return ConvexBody::polygon({{x, y}, {x + w, y}, {x + w, y + w}, {x, y + w}});
}

Measure random_dyadic_measure(std::mt19937_64& rng) {
    const double h = 0.0625;
    if (rng() % 2 == 0) {
        std::vector<Atom> atoms;
        int n = uniform_int(rng, 1, 3);
        for (int i = 0; i < n; ++i) {
            double w = uniform(rng, 0.25, 1.5) * (rng() % 3 == 0 ? -1.0 : 1.0);
            atoms.push_back({{uniform_int(rng, -16, 16) * h, uniform_int(rng, -16, 16) * h}, w});
        }
        return make_atoms(2, atoms);
    }
    int nx = uniform_int(rng, 3, 7);
    int ny = uniform_int(rng, 3, 7);
    std::vector<double> vals(static_cast<size_t>(nx) * ny);
    for (auto& v : vals)
        v = uniform(rng, 0.2, 1.0);
    return make_grid({uniform_int(rng, -12, 4) * h, uniform_int(rng, -12, 4) * h}, h, {nx, ny},
                     vals);
}

ConvexBody random_dyadic_body(std::mt19937_64& rng) {
    const double s = 0.125;
    double x = uniform_int(rng, -8, 4) * s;
    double y = uniform_int(rng, -8, 4) * s;
    int pick = uniform_int(rng, 0, 2);
    if (pick == 0)
        return ConvexBody::point2({x, y});
    double w = uniform_int(rng, 1, 5) * s;
    double t = uniform_int(rng, 1, 5) * s;
    if (pick == 1)
        return ConvexBody::polygon({{x, y}, {x + w, y}, {x + w, y + t}, {x, y + t}});
    return ConvexBody::polygon({{x, y}, {x + w, y}, {x, y + t}});
}

SmoothValuation random_dyadic_valuation(std::mt19937_64& rng) {
    std::vector<ValuationTerm> terms;
    int n = uniform_int(rng, 1, 2);
    for (int i = 0; i < n; ++i)
        terms.push_back({uniform(rng, 0.4, 1.5), random_dyadic_measure(rng),
                         random_dyadic_body(rng)});
    return make_valuation(2, terms);
}

// a uniform distribution: constant density on a lattice aligned interval
Measure random_uniform_measure(std::mt19937_64& rng, double h) {
    double lo = snap(uniform(rng, -0.6, -0.1), h);
    double hi = snap(uniform(rng, 0.1, 0.6), h);
    int n = static_cast<int>(std::lround((hi - lo) / h));
    std::vector<double> values(static_cast<size_t>(n), uniform(rng, 0.3, 1.0));
    return make_grid({lo}, h, {n}, values);
}

Measure random_oned_measure(std::mt19937_64& rng, double h) {
    if (rng() % 2 == 0)
        return random_uniform_measure(rng, h);
    return smooth_bump({snap(uniform(rng, -0.3, 0.3), h)}, uniform(rng, 0.1, 0.25),
                       uniform(rng, 0.4, 1.2), h);
}

// small translation interval, degenerate {0} included
ConvexBody random_small_interval(std::mt19937_64& rng) {
    if (rng() % 4 == 0)
        return ConvexBody::interval(0.0, 0.0);
    double p = uniform(rng, -0.3, 0.25);
    return ConvexBody::interval(p, p + uniform(rng, 0.05, 0.45));
}

ConvexBody sampled_ellipse(double a, double b, int n) {
    auto dirs = unit_direction_grid(n);
    std::vector<double> values(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double c = dirs[static_cast<size_t>(i)][0];
        double s = dirs[static_cast<size_t>(i)][1];
        values[static_cast<size_t>(i)] = std::sqrt(a * a * c * c + b * b * s * s);
    }
    return ConvexBody::support_sampled(2, dirs, values);
}

ConvexBody random_polygon(std::mt19937_64& rng, int verts) {
    std::vector<double> angles(static_cast<size_t>(verts));
    for (int attempt = 0; attempt < 20; ++attempt) {
        for (auto& t : angles)
            t = uniform(rng, 0.0, 2.0 * kPi);
        std::sort(angles.begin(), angles.end());
        double gap = angles.front() + 2.0 * kPi - angles.back();
        for (size_t i = 1; i < angles.size(); ++i)
            gap = std::min(gap, angles[i] - angles[i - 1]);
        if (gap > 0.05)
            break;
    }
    double r = uniform(rng, 0.5, 3.2);
    double cx = uniform(rng, -0.5, 0.5);
    double cy = uniform(rng, -0.5, 0.5);
    std::vector<Vec2> pts;
    for (double t : angles)
        pts.push_back({cx + r * std::cos(t), cy + r * std::sin(t)});
    return ConvexBody::polygon(pts);
}

std::vector<double> random_values(std::mt19937_64& rng, int count) {
    std::vector<double> v(static_cast<size_t>(count));
    for (auto& x : v)
        x = uniform(rng, 0.1, 1.1);
    return v;
}

double grid_difference(const Measure& a, const Measure& b) {
    if (!a.density || !b.density)
        return kInf;
    const GridDensity& ga = *a.density;
    const GridDensity& gb = *b.density;
    if (ga.shape != gb.shape || ga.origin.size() != gb.origin.size())
        return kInf;
    double worst = 0.0;
    for (size_t i = 0; i < ga.origin.size(); ++i)
        worst = std::max(worst, std::abs(ga.origin[i] - gb.origin[i]));
    for (size_t i = 0; i < ga.values.size(); ++i)
        worst = std::max(worst, std::abs(ga.values[i] - gb.values[i]));
    return worst;
}

CheckResult check_oned(const VerifyOptions& opt) {
    Stopwatch watch;
    auto rng = seeded(opt, 0x11);
    const double h = opt.grid_spacing;
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        Measure m1 = random_oned_measure(rng, h);
        Measure m2 = random_oned_measure(rng, h);
        ConvexBody a1 = random_small_interval(rng);
        ConvexBody a2 = random_small_interval(rng);
        Pair1D conv = convolve(from_term(m1, a1, h), from_term(m2, a2, h));
        Pair1D ref = from_term(convolve(m1, m2), minkowski_sum(a1, a2), h);
        SmoothValuation product = convolve(make_valuation(1, {{1.0, m1, a1}}),
                                           make_valuation(1, {{1.0, m2, a2}}));
        worst = std::max(worst, std::abs(conv.right_constant - ref.right_constant));
        double lo = ref.origin - 0.3;
        double hi = ref.origin + h * static_cast<double>(ref.f.size() - 1) + 0.3;
        for (int e = 0; e < 50; ++e) {
            double x = uniform(rng, lo, hi - 0.9);
            double y = x + uniform(rng, 0.05, 0.8);
            double via_pairs = evaluate(conv, x, y);
            double via_measure = evaluate(ref, x, y);
            double via_valuation = evaluate(product, ConvexBody::interval(x, y));
            worst = std::max({worst, std::abs(via_pairs - via_measure),
                              std::abs(via_pairs - via_valuation)});
        }
    }
    return finish(1, "one-dimensional-engine", worst, pick_limit(opt, 1e-3), watch, 30.0,
                  "20 random bump or block pairs, tabulated convolution against the measure "
                  "route and direct evaluation on 50 intervals each, cap 30 s");
}

CheckResult check_associativity(const VerifyOptions& opt) {
    Stopwatch watch;
    auto rng = seeded(opt, 0x21);
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        int dim = rep % 2 == 0 ? 2 : 1;
        SmoothValuation a = random_lattice_valuation(rng, dim, 2);
        SmoothValuation b = random_lattice_valuation(rng, dim, 2);
        SmoothValuation c = random_lattice_valuation(rng, dim, 2);
        SmoothValuation lhs = convolve(convolve(a, b), c);
        SmoothValuation rhs = convolve(a, convolve(b, c));
        for (int probe = 0; probe < 10; ++probe) {
            ConvexBody K = random_probe(rng, dim);
            worst = std::max(worst, std::abs(evaluate(lhs, K) - evaluate(rhs, K)));
        }
    }
    return finish(2, "convolution-associativity", worst, pick_limit(opt, 1e-6), watch, 60.0,
                  "10 random two-term triples in one and two dimensions, both groupings "
                  "evaluated on 10 probes each, cap 60 s");
}

CheckResult check_identity(const VerifyOptions& opt) {
    Stopwatch watch;
    (void)opt;
    std::vector<SmoothValuation> battery;
    {
        std::vector<double> vals(40);
        for (int i = 0; i < 40; ++i)
            vals[static_cast<size_t>(i)] = 0.8 + 0.4 * std::sin(0.3 * i);
        battery.push_back(make_valuation(
            1, {{0.7, dirac({0.3}, 1.2), ConvexBody::interval(-0.2, 0.4)},
                {-0.4, make_grid({-0.5}, 0.025, {40}, vals), ConvexBody::point1(0.15)}}));
    }
    battery.push_back(make_valuation(1, {{1.0, make_atoms(1, {{{-0.35}, 0.5}, {{0.2}, -0.3}}),
                                          ConvexBody::interval(0.0, 0.3)}}));
    battery.push_back(make_valuation(
        2, {{0.9, make_atoms(2, {{{0.25, -0.15}, 0.6}, {{-0.1, 0.3}, 0.4}}),
             ConvexBody::polygon({{0.0, 0.0}, {0.3, 0.0}, {0.0, 0.3}})}}));
    battery.push_back(make_valuation(
        2, {{1.3, smooth_bump({0.1, -0.2}, 0.25, 1.0, 0.05),
             ConvexBody::polygon({{-0.2, -0.2}, {0.2, -0.2}, {0.2, 0.2}, {-0.2, 0.2}})}}));
    {
        std::vector<double> vals(25);
        for (int i = 0; i < 25; ++i)
            vals[static_cast<size_t>(i)] = 1.0 + 0.5 * std::cos(0.7 * i);
        Measure mixed = make_measure(2, {{{0.15, 0.35}, 0.8}},
                                     GridDensity{{-0.2, -0.2}, 0.1, {5, 5}, vals});
        battery.push_back(make_valuation(2, {{0.5, mixed, ConvexBody::point2({0.4, -0.3})},
                                             {-0.8, dirac({0.0, 0.1}, 0.9),
                                              ConvexBody::polygon({{0.0, 0.0}, {0.25, 0.1},
                                                                   {0.05, 0.3}})}}));
    }
    int failures = 0;
    for (const auto& psi : battery) {
        SmoothValuation e = identity_valuation(psi.dim);
        if (!valuation_equal(convolve(psi, e), psi))
            ++failures;
        if (!valuation_equal(convolve(e, psi), psi))
            ++failures;
    }
    return finish(3, "identity-element", failures, 0.0, watch, 0.0,
                  "both products against a battery of atom, grid and mixed valuations, "
                  "compared structurally");
}

CheckResult check_volume_image(const VerifyOptions& opt) {
    Stopwatch watch;
    auto rng = seeded(opt, 0x22);
    double worst = 0.0;
    for (int rep = 0; rep < 5 && worst < kInf; ++rep) {
        int dim = rep % 2 == 0 ? 2 : 1;
        SmoothValuation a = random_lattice_valuation(rng, dim, 2);
        SmoothValuation b = random_lattice_valuation(rng, dim, 2);
        TransInvValuation lhs = f_transform(convolve(a, b));
        TransInvValuation rhs = bf_convolve(f_transform(a), f_transform(b));
        if (lhs.terms.size() != rhs.terms.size()) {
            worst = kInf;
            break;
        }
        for (size_t k = 0; k < lhs.terms.size(); ++k) {
            if (!body_equal(lhs.terms[k].body, rhs.terms[k].body)) {
                worst = kInf;
                break;
            }
            worst = std::max(worst, std::abs(lhs.terms[k].coeff - rhs.terms[k].coeff));
        }
    }
    return finish(4, "volume-image-homomorphism", worst, 1e-12, watch, 0.0,
                  "5 random two-term pairs, termwise coefficients within 1e-12, bodies exact");
}

CheckResult check_support_bound(const VerifyOptions& opt) {
    Stopwatch watch;
    auto rng = seeded(opt, 0x23);
    int failures = 0;
    for (int rep = 0; rep < 20; ++rep) {
        SmoothValuation a = random_dyadic_valuation(rng);
        SmoothValuation b = random_dyadic_valuation(rng);
        Box outer = box_sum(support_bound(a), support_bound(b));
        if (!box_contains(outer, support_bound(convolve(a, b))))
            ++failures;
    }
    for (int rep = 0; rep < 20; ++rep) {
        Measure m1 = random_dyadic_measure(rng);
        Measure m2 = random_dyadic_measure(rng);
        Box outer = box_sum(measure_box(m1), measure_box(m2));
        if (!box_contains(outer, measure_box(convolve(m1, m2))))
            ++failures;
    }
    return finish(5, "support-bound-additivity", failures, 0.0, watch, 0.0,
                  "20 valuation pairs and 20 measure pairs on the 1/16 lattice, box containment "
                  "compared exactly");
}

CheckResult check_spectral(const VerifyOptions& opt) {
    Stopwatch watch;
    auto rng = seeded(opt, 0x24);
    double worst = 0.0;
    {
        Measure m1 = make_grid({-0.75}, 1.0 / 512, {420}, random_values(rng, 420));
        Measure m2 = make_grid({-0.25}, 1.0 / 512, {380}, random_values(rng, 380));
        worst = std::max(worst, grid_difference(convolve(m1, m2, ConvPath::kDirect),
                                                convolve(m1, m2, ConvPath::kSpectral)));
    }
    {
        Measure m1 = make_grid({-0.5, -0.5}, 1.0 / 16, {26, 22}, random_values(rng, 26 * 22));
        Measure m2 = make_grid({-0.25, -0.75}, 1.0 / 16, {24, 28}, random_values(rng, 24 * 28));
        worst = std::max(worst, grid_difference(convolve(m1, m2, ConvPath::kDirect),
                                                convolve(m1, m2, ConvPath::kSpectral)));
    }
    return finish(11, "direct-vs-spectral", worst, pick_limit(opt, 1e-9), watch, 0.0,
                  "per-cell sup difference between both paths on one and two dimensional grids");
}

CheckResult check_steiner(const VerifyOptions& opt) {
    Stopwatch watch;
    struct Row {
        ConvexBody body;
        std::array<double, 3> want;
    };
    std::vector<Row> rows;
    rows.push_back({ConvexBody::polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}),
                    {1.0, 4.0, kPi}});
    rows.push_back({ConvexBody::point2({0.3, -0.2}), {0.0, 0.0, kPi}});
    rows.push_back({ConvexBody::polygon({{-1.0, 0.5}, {1.0, 0.5}}), {0.0, 4.0, kPi}});
    std::vector<double> radii = {0.0, 0.25, 0.5, 0.75, 1.0};
    double worst = 0.0;
    for (const auto& row : rows) {
        std::array<double, 3> got = steiner_coefficients(row.body, radii);
        for (int k = 0; k < 3; ++k)
            worst = std::max(worst, std::abs(got[static_cast<size_t>(k)] -
                                             row.want[static_cast<size_t>(k)]) /
                                        std::max(1.0, std::abs(row.want[static_cast<size_t>(k)])));
    }
    return finish(6, "steiner-coefficients", worst, pick_limit(opt, 0.01), watch, 10.0,
                  "square, point and segment against area, perimeter and pi, cap 10 s");
}

CheckResult check_smoothing(const VerifyOptions& opt) {
    Stopwatch watch;
    (void)opt;
    ConvexBody square =
        ConvexBody::polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
    auto grid = unit_direction_grid(256);
    std::array<double, 3> widths = {0.4, 0.2, 0.1};
    std::array<double, 3> dist = {0.0, 0.0, 0.0};
    int violations = 0;
    for (size_t i = 0; i < widths.size(); ++i) {
        ConvexBody smoothed = rotational_smoothing(square, uniform_angle_kernel(widths[i], 129));
        if (!is_sampled_sublinear(smoothed.as_sampled()))
            ++violations;
        dist[i] = support_distance(smoothed, square, grid);
    }
    if (!(dist[0] > dist[1] && dist[1] > dist[2]))
        ++violations;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "support distances %.4f > %.4f > %.4f under shrinking kernels, iterates stay "
                  "sublinear",
                  dist[0], dist[1], dist[2]);
    return finish(10, "smoothing-contraction", violations > 0 ? kInf : dist[2], 0.05, watch, 0.0,
                  detail);
}

CheckResult check_cycle_closure(const VerifyOptions& opt) {
    Stopwatch watch;
    auto rng = seeded(opt, 0x31);
    const ValuationForm2D& euler = form_catalog().at("euler");
    double worst = 0.0;
    int structural = 0;
    for (int rep = 0; rep < 20; ++rep) {
        ConvexBody body = random_polygon(rng, uniform_int(rng, 3, 9));
        NormalCycle2D cycle = normal_cycle(body);
        const std::vector<Vec2>& v = body.as_polygon().vertices;
        size_t verts = v.size();
        if (cycle.edges.size() != verts || cycle.arcs.size() != verts) {
            ++structural;
        } else {
            // the projected cycle reproduces the boundary edge for edge
            for (size_t i = 0; i < verts; ++i) {
                const CycleEdge& e = cycle.edges[i];
                const Vec2& p = v[i];
                const Vec2& q = v[(i + 1) % verts];
                if (e.start.x != p.x || e.start.y != p.y || e.end.x != q.x || e.end.y != q.y)
                    ++structural;
            }
        }
        double turn = 0.0;
        for (const auto& arc : cycle.arcs) {
            double span = arc.theta_end - arc.theta_start;
            if (!(span > 0.0 && span < kPi))
                ++structural;
            turn += span;
        }
        worst = std::max(worst, std::abs(turn - 2.0 * kPi));
        worst = std::max(worst, std::abs(evaluate_form(euler, body) - 1.0));
    }
    return finish(7, "normal-cycle-closure", structural > 0 ? kInf : worst, 1e-12, watch, 0.0,
                  "20 random polygons: boundary edges reproduced exactly, arc spans close up to "
                  "one turn, Euler pairing returns 1");
}

void check_tau_rows(const VerifyOptions& opt, std::vector<CheckResult>& out) {
    Stopwatch watch;
    std::vector<ConvexBody> bodies = {ConvexBody::sampled_disk(256),
                                      sampled_ellipse(1.3, 0.8, 256)};
    double worst_rel = 0.0;
    double worst_order = 0.0;
    for (const auto& body : bodies) {
        for (const char* name : {"tau-a", "tau-b", "tau-c"}) {
            const ValuationForm2D& form = form_catalog().at(name);
            double tau = tau_smooth(form, body);
            double e2 = std::abs(scaled_difference(form, body, 1e-2) - tau);
            double e3 = std::abs(scaled_difference(form, body, 1e-3) - tau);
            worst_rel = std::max(worst_rel, e3 / std::max(1.0, std::abs(tau)));
            worst_order = std::max(worst_order, std::abs(e2 / e3 - 10.0));
        }
    }
    out.push_back(finish(8, "tau-derivative-agreement", worst_rel, pick_limit(opt, 1e-2), watch,
                         0.0,
                         "derivative valuation against one sided differences at h = 1e-3 on a "
                         "disk and an ellipse"));
    out.push_back(finish(8, "tau-derivative-order", worst_order, 2.0, watch, 0.0,
                         "difference error shrinks 10x from h = 1e-2 to 1e-3 (first order, "
                         "ratio within [8, 12])"));
}

void check_square_rows(const VerifyOptions& opt, std::vector<CheckResult>& out) {
    const auto& catalog = form_catalog();
    Stopwatch closed_watch;
    double closed = std::abs(tau_square(catalog.at("square-cos"), 1.0) - 4.0);
    out.push_back(finish(9, "square-formula-closed-form", closed, 1e-9, closed_watch, 10.0,
                         "cosine form on the side-2 square equals 4, cap 10 s"));
    Stopwatch fd_watch;
    ConvexBody square =
        ConvexBody::polygon({{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}});
    double worst = 0.0;
    for (const char* name : {"square-cos", "square-mixed", "square-skew"}) {
        const ValuationForm2D& form = catalog.at(name);
        double expected = tau_square(form, 1.0);
        double fd = scaled_difference(form, square, 1e-3);
        worst = std::max(worst, std::abs(fd - expected) / std::max(1.0, std::abs(expected)));
    }
    out.push_back(finish(9, "square-formula-vs-difference", worst, pick_limit(opt, 1e-2),
                         fd_watch, 10.0,
                         "closed form against one sided differences for three corner forms, "
                         "cap 10 s"));
}

} // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    bool all = suite == "all";
    bool matched = all;
    if (all || suite == "oned") {
        matched = true;
        out.push_back(check_oned(opt));
    }
    if (all || suite == "algebra") {
        matched = true;
        out.push_back(check_associativity(opt));
        out.push_back(check_identity(opt));
        out.push_back(check_volume_image(opt));
        out.push_back(check_support_bound(opt));
        out.push_back(check_spectral(opt));
    }
    if (all || suite == "steiner") {
        matched = true;
        out.push_back(check_steiner(opt));
        out.push_back(check_smoothing(opt));
    }
    if (all || suite == "tau") {
        matched = true;
        out.push_back(check_cycle_closure(opt));
        check_tau_rows(opt, out);
        check_square_rows(opt, out);
    }
    if (!matched)
        throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return !checks.empty();
}

} // namespace valconv
