#include "valconv/normal_cycle.hpp"

#include "valconv/numeric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace valconv {

namespace {

constexpr double kPi = std::numbers::pi;

double edge_integral(const ValuationForm2D& form, const CycleEdge& e, const GaussRule& rule) {
    Vec2 d = e.end - e.start;
    KahanSum s;
    for (size_t q = 0; q < rule.nodes.size(); ++q) {
        double t = 0.5 * (rule.nodes[q] + 1.0);
        Vec2 x = e.start + t * d;
        s.add(0.5 * rule.weights[q] *
              (form.a1(x, e.normal_angle) * d.x + form.a2(x, e.normal_angle) * d.y));
    }
    return s.value();
}

double arc_integral(const ValuationForm2D& form, const CycleArc& a, const GaussRule& rule) {
    double span = a.theta_end - a.theta_start;
    int panels = std::max(1, static_cast<int>(std::ceil(span / (0.5 * kPi) - 1e-12)));
    KahanSum s;
    for (int p = 0; p < panels; ++p) {
        double lo = a.theta_start + span * p / panels;
        double hi = a.theta_start + span * (p + 1) / panels;
        double mid = 0.5 * (lo + hi);
        double half = 0.5 * (hi - lo);
        for (size_t q = 0; q < rule.nodes.size(); ++q)
            s.add(half * rule.weights[q] * form.a3(a.vertex, mid + half * rule.nodes[q]));
    }
    return s.value();
}

// integral over the fan triangulation around the vertex centroid; the corner
// singularity of the map is absorbed by the extra factor of s
double fan_integral(const std::function<double(Vec2)>& f, const std::vector<Vec2>& pts,
                    const GaussRule& rule) {
    size_t n = pts.size();
    if (!f || n < 3)
        return 0.0;
    Vec2 c{0.0, 0.0};
    for (const Vec2& p : pts)
        c = c + (1.0 / static_cast<double>(n)) * p;
    KahanSum total;
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = pts[i];
        Vec2 b = pts[(i + 1) % n];
        double cr = cross(a - c, b - c);
        if (cr == 0.0)
            continue;
        for (size_t qs = 0; qs < rule.nodes.size(); ++qs) {
            double sp = 0.5 * (rule.nodes[qs] + 1.0);
            for (size_t qt = 0; qt < rule.nodes.size(); ++qt) {
                double tp = 0.5 * (rule.nodes[qt] + 1.0);
                Vec2 x = c + sp * ((a - c) + tp * (b - a));
                total.add(0.25 * rule.weights[qs] * rule.weights[qt] * f(x) * sp * cr);
            }
        }
    }
    return total.value();
}

void check_form(const ValuationForm2D& form) {
    if (!form.a1 || !form.a2 || !form.a3)
        throw std::invalid_argument("form coefficients a1, a2, a3 must all be callable");
}

// uniform-angle outline of a sampled body and its angular derivatives
struct OutlineData {
    std::vector<double> theta;
    std::vector<Vec2> g;
    std::vector<Vec2> gd;
    double dtheta = 0.0;
};

OutlineData outline_data(const ConvexBody& body) {
    if (body.dim() != 2 || !body.is_sampled())
        throw std::invalid_argument("scaled evaluation needs a planar sampled body");
    const SupportSampled& s = body.as_sampled();
    size_t n = s.directions.size();
    if (n < 8)
        throw std::invalid_argument("scaled evaluation needs at least 8 directions");
    double step = 2.0 * kPi / static_cast<double>(n);
    std::vector<double> theta(n);
    for (size_t i = 0; i < n; ++i)
        theta[i] = std::atan2(s.directions[i][1], s.directions[i][0]);
    for (size_t i = 0; i < n; ++i) {
        double gap = std::fmod(theta[(i + 1) % n] - theta[i] + 2.0 * kPi, 2.0 * kPi);
        if (std::abs(gap - step) > 1e-9)
            throw std::invalid_argument("scaled evaluation needs a uniform ccw angle grid");
    }
    std::vector<double> hd = periodic_derivative4(s.values, step);
    OutlineData d;
    d.theta = std::move(theta);
    d.dtheta = step;
    d.g.resize(n);
    std::vector<double> g1(n), g2(n);
    for (size_t i = 0; i < n; ++i) {
        double cx = s.directions[i][0];
        double cy = s.directions[i][1];
        g1[i] = s.values[i] * cx - hd[i] * cy;
        g2[i] = s.values[i] * cy + hd[i] * cx;
        d.g[i] = {g1[i], g2[i]};
    }
    std::vector<double> g1d = periodic_derivative4(g1, step);
    std::vector<double> g2d = periodic_derivative4(g2, step);
    d.gd.resize(n);
    for (size_t i = 0; i < n; ++i)
        d.gd[i] = {g1d[i], g2d[i]};
    return d;
}

ValuationForm2D make_form(std::function<double(Vec2, double)> a1,
                          std::function<double(Vec2, double)> a2,
                          std::function<double(Vec2, double)> a3,
                          std::function<double(Vec2)> density, double extent) {
    ValuationForm2D f;
    f.a1 = std::move(a1);
    f.a2 = std::move(a2);
    f.a3 = std::move(a3);
    f.density = std::move(density);
    f.support_box = Box{2, {-extent, -extent}, {extent, extent}};
    return f;
}

// C-infinity step: 0 for s <= 0, 1 for s >= 1
double bump_step(double s) {
    if (s <= 0.0)
        return 0.0;
    if (s >= 1.0)
        return 1.0;
    double a = std::exp(-1.0 / s);
    double b = std::exp(-1.0 / (1.0 - s));
    return a / (a + b);
}

// identically 1 inside radius r0, identically 0 outside r1
double radial_cutoff(Vec2 x, double r0, double r1) {
    double r = std::sqrt(x.x * x.x + x.y * x.y);
    return bump_step((r1 - r) / (r1 - r0));
}

} // namespace

NormalCycle2D normal_cycle(const ConvexBody& body) {
    if (body.dim() != 2 || !body.is_polygon())
        throw std::invalid_argument("normal_cycle: planar polygon bodies only");
    const std::vector<Vec2>& v = body.as_polygon().vertices;
    size_t n = v.size();
    NormalCycle2D out;
    if (n == 1) {
        out.arcs.push_back({v[0], 0.0, 2.0 * kPi});
        return out;
    }
    std::vector<double> angles(n);
    for (size_t i = 0; i < n; ++i) {
        Vec2 d = v[(i + 1) % n] - v[i];
        double ny = -d.x;
        if (ny == 0.0)
            ny = 0.0; // drop the sign of zero so horizontal normals land at pi, not -pi
        angles[i] = std::atan2(ny, d.y); // outer normal (dy, -dx) normalized
        out.edges.push_back({v[i], v[(i + 1) % n], angles[i]});
    }
    for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n;
        double span = std::fmod(angles[j] - angles[i], 2.0 * kPi);
        if (span <= 0.0)
            span += 2.0 * kPi;
        out.arcs.push_back({v[j], angles[i], angles[i] + span});
    }
    return out;
}

double evaluate_form(const ValuationForm2D& form, const ConvexBody& body, int quad_order) {
    check_form(form);
    if (body.dim() != 2)
        throw std::invalid_argument("evaluate_form: planar bodies only");
    if (body.is_sampled())
        throw std::invalid_argument("evaluate_form: sampled bodies use evaluate_form_scaled");
    if (quad_order < 2 || quad_order > 64)
        throw std::invalid_argument("evaluate_form: quadrature order out of range");
    NormalCycle2D cyc = normal_cycle(body);
    const GaussRule& rule = gauss_legendre(quad_order);
    KahanSum total;
    for (const CycleEdge& e : cyc.edges)
        total.add(edge_integral(form, e, rule));
    for (const CycleArc& a : cyc.arcs)
        total.add(arc_integral(form, a, rule));
    total.add(fan_integral(form.density, body.as_polygon().vertices, rule));
    return total.value();
}

double evaluate_form_scaled(const ValuationForm2D& form, const ConvexBody& sampled_body,
                            double t) {
    check_form(form);
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument("evaluate_form_scaled: scale must be nonnegative");
    OutlineData d = outline_data(sampled_body);
    size_t n = d.g.size();
    KahanSum total;
    for (size_t i = 0; i < n; ++i) {
        Vec2 x = t * d.g[i];
        double edge = t * (form.a1(x, d.theta[i]) * d.gd[i].x + form.a2(x, d.theta[i]) * d.gd[i].y);
        total.add(d.dtheta * (edge + form.a3(x, d.theta[i])));
    }
    if (form.density && t > 0.0) {
        std::vector<Vec2> pts(n);
        for (size_t i = 0; i < n; ++i)
            pts[i] = t * d.g[i];
        total.add(fan_integral(form.density, pts, gauss_legendre(12)));
    }
    return total.value();
}

double tau_smooth(const ValuationForm2D& form, const ConvexBody& sampled_body) {
    check_form(form);
    OutlineData d = outline_data(sampled_body);
    const double eps = 1e-5;
    KahanSum total;
    for (size_t i = 0; i < d.g.size(); ++i) {
        double th = d.theta[i];
        double da3_x1 = (form.a3({eps, 0.0}, th) - form.a3({-eps, 0.0}, th)) / (2.0 * eps);
        double da3_x2 = (form.a3({0.0, eps}, th) - form.a3({0.0, -eps}, th)) / (2.0 * eps);
        total.add(d.dtheta * (da3_x1 * d.g[i].x + da3_x2 * d.g[i].y +
                              form.a1({0.0, 0.0}, th) * d.gd[i].x +
                              form.a2({0.0, 0.0}, th) * d.gd[i].y));
    }
    return total.value();
}

double tau_square(const ValuationForm2D& form, double half_width) {
    check_form(form);
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw std::invalid_argument("tau_square: half width must be positive");
    Vec2 o{0.0, 0.0};
    return 2.0 * half_width *
           (form.a1(o, -0.5 * kPi) + form.a2(o, 0.0) - form.a1(o, 0.5 * kPi) - form.a2(o, kPi));
}

double scaled_difference(const ValuationForm2D& form, const ConvexBody& body, double h,
                         int quad_order) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("scaled_difference: step must be positive");
    if (body.is_sampled())
        return (evaluate_form_scaled(form, body, h) - evaluate_form_scaled(form, body, 0.0)) / h;
    return (evaluate_form(form, scale(body, h), quad_order) -
            evaluate_form(form, scale(body, 0.0), quad_order)) /
           h;
}

const std::map<std::string, ValuationForm2D>& form_catalog() {
    static const std::map<std::string, ValuationForm2D> catalog = [] {
        std::map<std::string, ValuationForm2D> m;
        auto zero2 = [](Vec2, double) { return 0.0; };
        auto wide = [](Vec2 x) { return radial_cutoff(x, 6.0, 8.0); };
        auto tight = [](Vec2 x) { return radial_cutoff(x, 2.0, 3.0); };

        // total arc turn over 2 pi: 1 on every convex body inside the cutoff
        m.emplace("euler", make_form(zero2, zero2,
                                     [=](Vec2 x, double) { return wide(x) / (2.0 * kPi); },
                                     nullptr, 8.0));
        // boundary form of the area integrand
        m.emplace("stokes-area",
                  make_form([=](Vec2 x, double) { return -0.5 * x.y * wide(x); },
                            [=](Vec2 x, double) { return 0.5 * x.x * wide(x); }, zero2, nullptr,
                            8.0));
        // the area again, through the absolutely continuous part
        m.emplace("area-density",
                  make_form(zero2, zero2, zero2, [=](Vec2 x) { return wide(x); }, 8.0));
        // arc coefficient linear in x1; its scale derivative on the unit disk
        // is the first cosine moment of exp(cos theta)
        m.emplace("disk-slope",
                  make_form(zero2, zero2,
                            [=](Vec2 x, double th) { return x.x * std::exp(std::cos(th)) * tight(x); },
                            nullptr, 3.0));

        m.emplace("tau-a",
                  make_form(
                      [=](Vec2 x, double th) { return (0.25 * std::sin(th) + 0.2 * x.y) * tight(x); },
                      [=](Vec2 x, double th) { return (0.15 * std::cos(th) - 0.1 * x.x) * tight(x); },
                      [=](Vec2 x, double th) {
                          return std::sin(0.8 * x.x - 0.5 * x.y + 0.3) *
                                 (0.6 + 0.4 * std::cos(th)) * tight(x);
                      },
                      [=](Vec2 x) { return 0.5 * tight(x); }, 3.0));
        m.emplace("tau-b",
                  make_form(
                      [=](Vec2 x, double th) { return 0.4 * std::cos(x.x + th) * tight(x); },
                      [=](Vec2 x, double th) { return 0.3 * std::sin(x.y + 2.0 * th) * tight(x); },
                      [=](Vec2 x, double th) {
                          return std::exp(0.3 * x.x + 0.4 * x.y) * (0.5 + 0.3 * std::sin(th)) *
                                 tight(x);
                      },
                      [=](Vec2 x) { return 0.2 * tight(x); }, 3.0));
        m.emplace("tau-c",
                  make_form(
                      [=](Vec2 x, double th) { return (0.5 * std::sin(th) + 0.1 * x.x * x.y) * tight(x); },
                      [=](Vec2 x, double th) { return (0.2 * std::cos(2.0 * th) + 0.1 * x.y) * tight(x); },
                      [=](Vec2 x, double th) {
                          return 0.3 * std::sin(x.y + 0.4) * (1.0 + 0.2 * std::cos(th)) * tight(x);
                      },
                      nullptr, 3.0));

        // arc coefficients below do not depend on x near the origin, which is
        // what the square rate formula assumes
        m.emplace("square-cos",
                  make_form(zero2, [=](Vec2 x, double th) { return std::cos(th) * tight(x); },
                            zero2, nullptr, 3.0));
        m.emplace("square-mixed",
                  make_form(
                      [=](Vec2 x, double th) { return (0.5 * std::sin(th) - 0.2 * x.y) * tight(x); },
                      [=](Vec2 x, double th) {
                          return (0.3 + 0.2 * std::cos(th) + 0.1 * x.x) * tight(x);
                      },
                      [=](Vec2 x, double th) { return 0.2 * (1.0 + 0.5 * std::sin(th)) * tight(x); },
                      [=](Vec2 x) { return 0.3 * tight(x); }, 3.0));
        m.emplace("square-skew",
                  make_form(
                      [=](Vec2 x, double th) {
                          return (0.1 * std::sin(th) + 0.2 * std::cos(th) + 0.15 * x.x) * tight(x);
                      },
                      [=](Vec2 x, double th) {
                          return (0.25 + 0.4 * std::sin(th) + 0.3 * std::cos(th) - 0.1 * x.y) *
                                 tight(x);
                      },
                      [=](Vec2 x, double th) { return 0.1 * std::cos(2.0 * th) * tight(x); },
                      nullptr, 3.0));
        return m;
    }();
    return catalog;
}

} // namespace valconv
