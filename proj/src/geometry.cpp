#include "valconv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace valconv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double angle_of(double x, double y) {
    double a = std::atan2(y, x);
    if (a < 0.0) a += kTwoPi;
    return a;
}

double coord_scale(const std::vector<Vec2>& vs) {
    double m = 1.0;
    for (const auto& v : vs) m = std::max({m, std::abs(v.x), std::abs(v.y)});
    return m;
}

// canonical form: dedupe, reduce collinear chains, validate convex ccw,
// rotate so the lowest-then-leftmost vertex comes first
std::vector<Vec2> canonical_vertices(std::vector<Vec2> in) {
    if (in.empty()) throw std::invalid_argument("polygon: at least one vertex required");
    for (const auto& v : in)
        if (!std::isfinite(v.x) || !std::isfinite(v.y))
            throw std::invalid_argument("polygon: non-finite vertex");

    const double pos_eps = 1e-12 * coord_scale(in);
    std::vector<Vec2> vs;
    for (const auto& v : in) {
        if (vs.empty() || std::abs(v.x - vs.back().x) > pos_eps || std::abs(v.y - vs.back().y) > pos_eps)
            vs.push_back(v);
    }
    while (vs.size() > 1 && std::abs(vs.front().x - vs.back().x) <= pos_eps &&
           std::abs(vs.front().y - vs.back().y) <= pos_eps)
        vs.pop_back();

    if (vs.size() == 1) return vs;

    // fully collinear input collapses to its extreme points (a segment)
    {
        Vec2 u{0.0, 0.0};
        double best = 0.0;
        for (size_t i = 1; i < vs.size(); ++i) {
            Vec2 d = vs[i] - vs[0];
            double n = std::hypot(d.x, d.y);
            if (n > best) { best = n; u = d; }
        }
        bool collinear = true;
        for (size_t i = 1; i < vs.size() && collinear; ++i) {
            Vec2 d = vs[i] - vs[0];
            if (std::abs(cross(u, d)) > 1e-12 * best * std::hypot(d.x, d.y) + 1e-300) collinear = false;
        }
        if (collinear) {
            size_t imin = 0, imax = 0;
            double tmin = 0.0, tmax = 0.0;
            for (size_t i = 0; i < vs.size(); ++i) {
                double t = dot(vs[i] - vs[0], u);
                if (t < tmin) { tmin = t; imin = i; }
                if (t > tmax) { tmax = t; imax = i; }
            }
            std::vector<Vec2> seg{vs[imin], vs[imax]};
            if (seg[0].y > seg[1].y || (seg[0].y == seg[1].y && seg[0].x > seg[1].x))
                std::swap(seg[0], seg[1]);
            return seg;
        }
    }

    // reduce forward-collinear chains, reject concavities and spikes
    bool changed = true;
    while (changed && vs.size() > 2) {
        changed = false;
        for (size_t i = 0; i < vs.size(); ++i) {
            size_t p = (i + vs.size() - 1) % vs.size();
            size_t n = (i + 1) % vs.size();
            Vec2 e1 = vs[i] - vs[p];
            Vec2 e2 = vs[n] - vs[i];
            double m = std::hypot(e1.x, e1.y) * std::hypot(e2.x, e2.y);
            double c = cross(e1, e2);
            if (c < -1e-9 * m)
                throw std::invalid_argument("polygon: vertices not convex counterclockwise");
            if (c <= 1e-12 * m) {
                if (dot(e1, e2) > 0.0) {
                    vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                    break;
                }
                throw std::invalid_argument("polygon: degenerate spike in vertex chain");
            }
        }
    }

    double area2 = 0.0;
    for (size_t i = 0; i < vs.size(); ++i) {
        size_t n = (i + 1) % vs.size();
        area2 += vs[i].x * vs[n].y - vs[n].x * vs[i].y;
    }
    if (vs.size() > 2 && area2 <= 0.0)
        throw std::invalid_argument("polygon: vertices not convex counterclockwise");

    size_t lo = 0;
    for (size_t i = 1; i < vs.size(); ++i)
        if (vs[i].y < vs[lo].y || (vs[i].y == vs[lo].y && vs[i].x < vs[lo].x)) lo = i;
    std::rotate(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(lo), vs.end());
    return vs;
}

std::vector<size_t> angle_order(const SupportSampled& s) {
    std::vector<size_t> idx(s.directions.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return angle_of(s.directions[a][0], s.directions[a][1]) <
               angle_of(s.directions[b][0], s.directions[b][1]);
    });
    return idx;
}

std::optional<std::vector<double>> as_point(const ConvexBody& b) {
    if (b.is_interval()) {
        const auto& iv = b.as_interval();
        if (iv.lo == iv.hi) return std::vector<double>{iv.lo};
    } else if (b.is_polygon()) {
        const auto& p = b.as_polygon();
        if (p.vertices.size() == 1) return std::vector<double>{p.vertices[0].x, p.vertices[0].y};
    }
    return std::nullopt;
}

int sampled_sign_index(const SupportSampled& s, double sign) {
    for (size_t i = 0; i < s.directions.size(); ++i)
        if (std::abs(s.directions[i][0] - sign) <= 1e-9) return static_cast<int>(i);
    return -1;
}

} // namespace

Box box_sum(const Box& a, const Box& b) {
    if (a.dim != b.dim) throw std::invalid_argument("box_sum: dimension mismatch");
    Box r;
    r.dim = a.dim;
    for (int d = 0; d < a.dim; ++d) {
        r.lo[static_cast<size_t>(d)] = a.lo[static_cast<size_t>(d)] + b.lo[static_cast<size_t>(d)];
        r.hi[static_cast<size_t>(d)] = a.hi[static_cast<size_t>(d)] + b.hi[static_cast<size_t>(d)];
    }
    return r;
}

Box box_union(const Box& a, const Box& b) {
    if (a.dim != b.dim) throw std::invalid_argument("box_union: dimension mismatch");
    Box r;
    r.dim = a.dim;
    for (int d = 0; d < a.dim; ++d) {
        r.lo[static_cast<size_t>(d)] = std::min(a.lo[static_cast<size_t>(d)], b.lo[static_cast<size_t>(d)]);
        r.hi[static_cast<size_t>(d)] = std::max(a.hi[static_cast<size_t>(d)], b.hi[static_cast<size_t>(d)]);
    }
    return r;
}

Box box_negate(const Box& a) {
    Box r;
    r.dim = a.dim;
    for (int d = 0; d < a.dim; ++d) {
        r.lo[static_cast<size_t>(d)] = -a.hi[static_cast<size_t>(d)];
        r.hi[static_cast<size_t>(d)] = -a.lo[static_cast<size_t>(d)];
    }
    return r;
}

bool box_contains(const Box& outer, const Box& inner) {
    if (outer.dim != inner.dim) throw std::invalid_argument("box_contains: dimension mismatch");
    for (int d = 0; d < outer.dim; ++d) {
        size_t k = static_cast<size_t>(d);
        if (inner.lo[k] < outer.lo[k] || inner.hi[k] > outer.hi[k]) return false;
    }
    return true;
}

ConvexBody ConvexBody::interval(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
        throw std::invalid_argument("interval: requires finite lo <= hi");
    ConvexBody b;
    b.rep_ = Interval{lo, hi};
    return b;
}

ConvexBody ConvexBody::polygon(std::vector<Vec2> vertices) {
    ConvexBody b;
    b.rep_ = Polygon{canonical_vertices(std::move(vertices))};
    return b;
}

ConvexBody ConvexBody::support_sampled(int dim, std::vector<std::vector<double>> directions,
                                       std::vector<double> values) {
    if (dim < 1) throw std::invalid_argument("support_sampled: dim must be >= 1");
    if (directions.empty() || directions.size() != values.size())
        throw std::invalid_argument("support_sampled: directions/values size mismatch or empty");
    for (const auto& d : directions) {
        if (static_cast<int>(d.size()) != dim)
            throw std::invalid_argument("support_sampled: direction of wrong dimension");
        if (std::abs(norm2(d) - 1.0) > 1e-9)
            throw std::invalid_argument("support_sampled: directions must be unit vectors");
    }
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("support_sampled: non-finite value");
    SupportSampled s{dim, std::move(directions), std::move(values)};
    if (dim == 2 && !is_sampled_sublinear(s, 1e-9))
        throw std::invalid_argument("support_sampled: samples violate sublinearity");
    ConvexBody b;
    b.rep_ = std::move(s);
    return b;
}

ConvexBody ConvexBody::point1(double p) { return interval(p, p); }

ConvexBody ConvexBody::point2(Vec2 p) { return polygon({p}); }

ConvexBody ConvexBody::sampled_disk(int n_directions, double radius) {
    if (radius < 0.0) throw std::invalid_argument("sampled_disk: negative radius");
    return support_sampled(2, unit_direction_grid(n_directions),
                           std::vector<double>(static_cast<size_t>(n_directions), radius));
}

int ConvexBody::dim() const {
    if (is_interval()) return 1;
    if (is_polygon()) return 2;
    return as_sampled().dim;
}

const Interval& ConvexBody::as_interval() const {
    if (!is_interval()) throw std::logic_error("body is not an interval");
    return std::get<Interval>(rep_);
}

const Polygon& ConvexBody::as_polygon() const {
    if (!is_polygon()) throw std::logic_error("body is not a polygon");
    return std::get<Polygon>(rep_);
}

const SupportSampled& ConvexBody::as_sampled() const {
    if (!is_sampled()) throw std::logic_error("body is not support-sampled");
    return std::get<SupportSampled>(rep_);
}

std::vector<std::vector<double>> unit_direction_grid(int n) {
    if (n < 1) throw std::invalid_argument("unit_direction_grid: n must be >= 1");
    std::vector<std::vector<double>> dirs;
    dirs.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        double a = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        dirs.push_back({std::cos(a), std::sin(a)});
    }
    return dirs;
}

std::vector<Vec2> sampled_outline(const SupportSampled& s) {
    if (s.dim != 2) throw std::invalid_argument("sampled_outline: dim 2 required");
    auto idx = angle_order(s);
    size_t n = idx.size();
    if (n < 3) throw std::runtime_error("sampled_outline: need at least 3 directions");
    std::vector<Vec2> out;
    out.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        size_t i = idx[k], j = idx[(k + 1) % n];
        double ai = angle_of(s.directions[i][0], s.directions[i][1]);
        double aj = angle_of(s.directions[j][0], s.directions[j][1]);
        double gap = aj - ai;
        if (k + 1 == n) gap += kTwoPi;
        if (gap >= kPi - 1e-9)
            throw std::runtime_error("sampled_outline: angular gap >= pi, reconstruction unbounded");
        double ax = s.directions[i][0], ay = s.directions[i][1];
        double bx = s.directions[j][0], by = s.directions[j][1];
        double det = ax * by - ay * bx;
        double hi = s.values[i], hj = s.values[j];
        out.push_back({(hi * by - hj * ay) / det, (ax * hj - bx * hi) / det});
    }
    return out;
}

double support_function(const ConvexBody& body, const std::vector<double>& direction) {
    if (static_cast<int>(direction.size()) != body.dim())
        throw std::invalid_argument("support_function: direction dimension mismatch");
    double n = norm2(direction);
    if (n <= 0.0 || !std::isfinite(n))
        throw std::invalid_argument("support_function: zero or non-finite direction");
    if (body.is_interval()) {
        const auto& iv = body.as_interval();
        double d = direction[0];
        return d >= 0.0 ? iv.hi * d : iv.lo * d;
    }
    if (body.is_polygon()) {
        const auto& p = body.as_polygon();
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& v : p.vertices) best = std::max(best, v.x * direction[0] + v.y * direction[1]);
        return best;
    }
    const auto& s = body.as_sampled();
    if (s.dim == 1) {
        int i = sampled_sign_index(s, direction[0] > 0.0 ? 1.0 : -1.0);
        if (i < 0) throw std::runtime_error("support_function: required 1-d direction not sampled");
        return s.values[static_cast<size_t>(i)] * n;
    }
    if (s.dim == 2) {
        double qa = angle_of(direction[0], direction[1]);
        for (size_t i = 0; i < s.directions.size(); ++i) {
            double da = angle_of(s.directions[i][0], s.directions[i][1]);
            double diff = std::abs(da - qa);
            diff = std::min(diff, kTwoPi - diff);
            if (diff <= 1e-12) return s.values[i] * n;
        }
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& v : sampled_outline(s))
            best = std::max(best, v.x * direction[0] + v.y * direction[1]);
        return best;
    }
    // dim >= 3: only exact sampled directions are evaluable
    for (size_t i = 0; i < s.directions.size(); ++i) {
        bool match = true;
        for (size_t d = 0; d < direction.size() && match; ++d)
            if (std::abs(s.directions[i][d] - direction[d] / n) > 1e-12) match = false;
        if (match) return s.values[i] * n;
    }
    throw std::runtime_error("support_function: off-grid evaluation unsupported for dim > 2");
}

double support_function(const ConvexBody& body, Vec2 direction) {
    return support_function(body, std::vector<double>{direction.x, direction.y});
}

double product_support(const ConvexBody& a, const ConvexBody& b,
                       const std::vector<double>& xi1, const std::vector<double>& xi2) {
    if (static_cast<int>(xi1.size()) != a.dim() || static_cast<int>(xi2.size()) != b.dim())
        throw std::invalid_argument("product_support: direction dimension mismatch");
    double h = 0.0;
    if (norm2(xi1) > 0.0) h += support_function(a, xi1);
    if (norm2(xi2) > 0.0) h += support_function(b, xi2);
    return h;
}

namespace {

// both operands in canonical form, so their edge lists are already sorted by
// angle in [0, 2pi); classic convex edge merge
ConvexBody polygon_minkowski(const Polygon& A, const Polygon& B) {
    auto edges_of = [](const Polygon& P) {
        std::vector<Vec2> es;
        size_t n = P.vertices.size();
        if (n < 2) return es;
        for (size_t i = 0; i < n; ++i) es.push_back(P.vertices[(i + 1) % n] - P.vertices[i]);
        if (n == 2) es.resize(2); // a->b and b->a
        return es;
    };
    std::vector<Vec2> ea = edges_of(A), eb = edges_of(B);
    Vec2 start = A.vertices[0] + B.vertices[0];

    std::vector<Vec2> merged;
    size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        Vec2 e;
        if (i < ea.size() && j < eb.size()) {
            double c = cross(ea[i], eb[j]);
            double m = std::hypot(ea[i].x, ea[i].y) * std::hypot(eb[j].x, eb[j].y);
            if (std::abs(c) <= 1e-12 * m && dot(ea[i], eb[j]) > 0.0) {
                e = ea[i] + eb[j];
                ++i;
                ++j;
            } else if (angle_of(ea[i].x, ea[i].y) <= angle_of(eb[j].x, eb[j].y)) {
                e = ea[i++];
            } else {
                e = eb[j++];
            }
        } else if (i < ea.size()) {
            e = ea[i++];
        } else {
            e = eb[j++];
        }
        merged.push_back(e);
    }

    std::vector<Vec2> verts;
    verts.reserve(merged.size());
    Vec2 cur = start;
    for (size_t k = 0; k + 1 <= merged.size(); ++k) {
        verts.push_back(cur);
        cur = cur + merged[k];
    }
    return ConvexBody::polygon(std::move(verts));
}

} // namespace

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    if (auto p = as_point(a)) return translate(b, *p);
    if (auto p = as_point(b)) return translate(a, *p);
    if (a.is_interval() && b.is_interval()) {
        const auto& x = a.as_interval();
        const auto& y = b.as_interval();
        return ConvexBody::interval(x.lo + y.lo, x.hi + y.hi);
    }
    if (a.is_polygon() && b.is_polygon()) return polygon_minkowski(a.as_polygon(), b.as_polygon());
    if (a.is_sampled() && b.is_sampled()) {
        const auto& x = a.as_sampled();
        const auto& y = b.as_sampled();
        if (x.directions.size() != y.directions.size())
            throw std::invalid_argument("minkowski_sum: sampled bodies need a common direction grid");
        for (size_t i = 0; i < x.directions.size(); ++i)
            for (size_t d = 0; d < x.directions[i].size(); ++d)
                if (std::abs(x.directions[i][d] - y.directions[i][d]) > 1e-9)
                    throw std::invalid_argument("minkowski_sum: sampled bodies need a common direction grid");
        std::vector<double> vals(x.values.size());
        for (size_t i = 0; i < vals.size(); ++i) vals[i] = x.values[i] + y.values[i];
        return ConvexBody::support_sampled(x.dim, x.directions, std::move(vals));
    }
    // sampled with exact: sample the exact body's support onto the grid
    const ConvexBody& s = a.is_sampled() ? a : b;
    const ConvexBody& e = a.is_sampled() ? b : a;
    const auto& ss = s.as_sampled();
    std::vector<double> vals(ss.values);
    for (size_t i = 0; i < vals.size(); ++i) vals[i] += support_function(e, ss.directions[i]);
    return ConvexBody::support_sampled(ss.dim, ss.directions, std::move(vals));
}

ConvexBody scale(const ConvexBody& body, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("scale: factor must be >= 0");
    if (body.is_interval()) {
        const auto& iv = body.as_interval();
        return ConvexBody::interval(t * iv.lo, t * iv.hi);
    }
    if (body.is_polygon()) {
        std::vector<Vec2> vs = body.as_polygon().vertices;
        for (auto& v : vs) v = t * v;
        return ConvexBody::polygon(std::move(vs));
    }
    const auto& s = body.as_sampled();
    std::vector<double> vals(s.values);
    for (auto& v : vals) v *= t;
    return ConvexBody::support_sampled(s.dim, s.directions, std::move(vals));
}

ConvexBody translate(const ConvexBody& body, const std::vector<double>& offset) {
    if (static_cast<int>(offset.size()) != body.dim())
        throw std::invalid_argument("translate: offset dimension mismatch");
    if (body.is_interval()) {
        const auto& iv = body.as_interval();
        return ConvexBody::interval(iv.lo + offset[0], iv.hi + offset[0]);
    }
    if (body.is_polygon()) {
        std::vector<Vec2> vs = body.as_polygon().vertices;
        for (auto& v : vs) v = v + Vec2{offset[0], offset[1]};
        return ConvexBody::polygon(std::move(vs));
    }
    const auto& s = body.as_sampled();
    std::vector<double> vals(s.values);
    for (size_t i = 0; i < vals.size(); ++i) {
        double sh = 0.0;
        for (size_t d = 0; d < offset.size(); ++d) sh += offset[d] * s.directions[i][d];
        vals[i] += sh;
    }
    return ConvexBody::support_sampled(s.dim, s.directions, std::move(vals));
}

double volume(const ConvexBody& body) {
    if (body.is_interval()) {
        const auto& iv = body.as_interval();
        return iv.hi - iv.lo;
    }
    if (body.is_polygon()) {
        const auto& vs = body.as_polygon().vertices;
        if (vs.size() < 3) return 0.0;
        double a2 = 0.0;
        for (size_t i = 0; i < vs.size(); ++i) {
            size_t j = (i + 1) % vs.size();
            a2 += vs[i].x * vs[j].y - vs[j].x * vs[i].y;
        }
        return 0.5 * a2;
    }
    const auto& s = body.as_sampled();
    if (s.dim == 1) {
        int ip = sampled_sign_index(s, 1.0), im = sampled_sign_index(s, -1.0);
        if (ip < 0 || im < 0) throw std::runtime_error("volume: 1-d sampled body missing +-1 directions");
        return s.values[static_cast<size_t>(ip)] + s.values[static_cast<size_t>(im)];
    }
    if (s.dim == 2) {
        auto vs = sampled_outline(s);
        double a2 = 0.0;
        for (size_t i = 0; i < vs.size(); ++i) {
            size_t j = (i + 1) % vs.size();
            a2 += vs[i].x * vs[j].y - vs[j].x * vs[i].y;
        }
        return 0.5 * a2;
    }
    throw std::runtime_error("volume: unsupported for sampled bodies of dim > 2");
}

bool membership(const ConvexBody& body, const std::vector<double>& point, double tol) {
    if (static_cast<int>(point.size()) != body.dim())
        throw std::invalid_argument("membership: point dimension mismatch");
    if (body.is_interval()) {
        const auto& iv = body.as_interval();
        return point[0] >= iv.lo - tol && point[0] <= iv.hi + tol;
    }
    if (body.is_polygon()) {
        const auto& vs = body.as_polygon().vertices;
        Vec2 p{point[0], point[1]};
        if (vs.size() == 1)
            return std::abs(p.x - vs[0].x) <= tol && std::abs(p.y - vs[0].y) <= tol;
        if (vs.size() == 2) {
            Vec2 d = vs[1] - vs[0];
            double len = std::hypot(d.x, d.y);
            double off = cross(d, p - vs[0]) / len;
            if (std::abs(off) > tol) return false;
            double t = dot(p - vs[0], d) / (len * len);
            return t >= -tol / len && t <= 1.0 + tol / len;
        }
        for (size_t i = 0; i < vs.size(); ++i) {
            size_t j = (i + 1) % vs.size();
            Vec2 e = vs[j] - vs[i];
            if (cross(e, p - vs[i]) < -tol * std::hypot(e.x, e.y)) return false;
        }
        return true;
    }
    const auto& s = body.as_sampled();
    for (size_t i = 0; i < s.directions.size(); ++i) {
        double d = 0.0;
        for (size_t k = 0; k < point.size(); ++k) d += point[k] * s.directions[i][k];
        if (d > s.values[i] + tol) return false;
    }
    return true;
}

bool membership(const ConvexBody& body, Vec2 point, double tol) {
    return membership(body, std::vector<double>{point.x, point.y}, tol);
}

Box bounding_box(const ConvexBody& body) {
    Box r;
    if (body.is_interval()) {
        const auto& iv = body.as_interval();
        r.dim = 1;
        r.lo[0] = iv.lo;
        r.hi[0] = iv.hi;
        return r;
    }
    if (body.is_polygon()) {
        const auto& vs = body.as_polygon().vertices;
        r.dim = 2;
        r.lo = {vs[0].x, vs[0].y};
        r.hi = {vs[0].x, vs[0].y};
        for (const auto& v : vs) {
            r.lo[0] = std::min(r.lo[0], v.x);
            r.lo[1] = std::min(r.lo[1], v.y);
            r.hi[0] = std::max(r.hi[0], v.x);
            r.hi[1] = std::max(r.hi[1], v.y);
        }
        return r;
    }
    const auto& s = body.as_sampled();
    if (s.dim == 1) {
        int ip = sampled_sign_index(s, 1.0), im = sampled_sign_index(s, -1.0);
        if (ip < 0 || im < 0)
            throw std::runtime_error("bounding_box: 1-d sampled body missing +-1 directions");
        r.dim = 1;
        r.lo[0] = -s.values[static_cast<size_t>(im)];
        r.hi[0] = s.values[static_cast<size_t>(ip)];
        return r;
    }
    if (s.dim != 2) throw std::runtime_error("bounding_box: unsupported for sampled dim > 2");
    auto vs = sampled_outline(s);
    r.dim = 2;
    r.lo = {vs[0].x, vs[0].y};
    r.hi = {vs[0].x, vs[0].y};
    for (const auto& v : vs) {
        r.lo[0] = std::min(r.lo[0], v.x);
        r.lo[1] = std::min(r.lo[1], v.y);
        r.hi[0] = std::max(r.hi[0], v.x);
        r.hi[1] = std::max(r.hi[1], v.y);
    }
    return r;
}

ConvexBody rotational_smoothing(const ConvexBody& body, const std::vector<KernelNode>& kernel,
                                int grid_size) {
    if (body.dim() != 2) throw std::invalid_argument("rotational_smoothing: dim 2 body required");
    if (kernel.empty()) throw std::invalid_argument("rotational_smoothing: empty kernel");
    double wsum = 0.0;
    for (const auto& k : kernel) {
        if (k.weight < 0.0) throw std::invalid_argument("rotational_smoothing: negative kernel weight");
        wsum += k.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-9)
        throw std::invalid_argument("rotational_smoothing: kernel weights must sum to 1");
    auto dirs = unit_direction_grid(grid_size);
    std::vector<double> vals(dirs.size(), 0.0);
    for (size_t i = 0; i < dirs.size(); ++i) {
        for (const auto& k : kernel) {
            double c = std::cos(k.angle), s = std::sin(k.angle);
            // R(-angle) applied to the grid direction
            std::vector<double> rd{c * dirs[i][0] + s * dirs[i][1], -s * dirs[i][0] + c * dirs[i][1]};
            vals[i] += k.weight * support_function(body, rd);
        }
    }
    return ConvexBody::support_sampled(2, std::move(dirs), std::move(vals));
}

std::vector<KernelNode> uniform_angle_kernel(double width, int count) {
    if (count < 1) throw std::invalid_argument("uniform_angle_kernel: count must be >= 1");
    if (width < 0.0) throw std::invalid_argument("uniform_angle_kernel: negative width");
    std::vector<KernelNode> k;
    k.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        double a = count == 1 ? 0.0
                              : -0.5 * width + width * static_cast<double>(i) / static_cast<double>(count - 1);
        k.push_back({a, 1.0 / static_cast<double>(count)});
    }
    return k;
}

double support_distance(const ConvexBody& a, const ConvexBody& b,
                        const std::vector<std::vector<double>>& directions) {
    if (directions.empty()) throw std::invalid_argument("support_distance: empty direction grid");
    double m = 0.0;
    for (const auto& d : directions)
        m = std::max(m, std::abs(support_function(a, d) - support_function(b, d)));
    return m;
}

bool is_sampled_sublinear(const SupportSampled& s, double tol) {
    if (s.dim != 2) return true; // checked only where the reconstruction exists
    size_t n = s.directions.size();
    std::vector<double> angles(n);
    for (size_t i = 0; i < n; ++i) angles[i] = angle_of(s.directions[i][0], s.directions[i][1]);
    auto idx = angle_order(s);
    std::vector<double> sorted(n);
    for (size_t i = 0; i < n; ++i) sorted[i] = angles[idx[i]];
    auto nearest = [&](double a) -> size_t {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
        size_t cands[3];
        size_t m = 0;
        if (it != sorted.end()) cands[m++] = static_cast<size_t>(it - sorted.begin());
        if (it != sorted.begin()) cands[m++] = static_cast<size_t>(it - sorted.begin()) - 1;
        cands[m++] = it == sorted.end() ? 0 : n - 1;
        size_t best = cands[0];
        double bd = std::numeric_limits<double>::infinity();
        for (size_t k = 0; k < m; ++k) {
            double d = std::abs(sorted[cands[k]] - a);
            d = std::min(d, kTwoPi - d);
            if (d < bd) { bd = d; best = cands[k]; }
        }
        return best;
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            double sx = s.directions[i][0] + s.directions[j][0];
            double sy = s.directions[i][1] + s.directions[j][1];
            double ns = std::hypot(sx, sy);
            if (ns < 1e-9) continue;
            double ma = angle_of(sx, sy);
            size_t k = nearest(ma);
            double d = std::abs(sorted[k] - ma);
            d = std::min(d, kTwoPi - d);
            if (d > 1e-9) continue;
            double hk = s.values[idx[k]];
            if (hk * ns > s.values[i] + s.values[j] + tol) return false;
        }
    }
    return true;
}

namespace {

bool sampled_equal(const SupportSampled& a, const SupportSampled& b, double tol) {
    if (a.dim != b.dim || a.directions.size() != b.directions.size()) return false;
    for (size_t i = 0; i < a.directions.size(); ++i)
        for (size_t d = 0; d < a.directions[i].size(); ++d)
            if (std::abs(a.directions[i][d] - b.directions[i][d]) > tol) return false;
    for (size_t i = 0; i < a.values.size(); ++i)
        if (std::abs(a.values[i] - b.values[i]) > tol) return false;
    return true;
}

bool body_match(const ConvexBody& a, const ConvexBody& b, double tol) {
    if (a.is_interval() != b.is_interval() || a.is_polygon() != b.is_polygon()) return false;
    if (a.is_interval()) {
        const auto& x = a.as_interval();
        const auto& y = b.as_interval();
        return std::abs(x.lo - y.lo) <= tol && std::abs(x.hi - y.hi) <= tol;
    }
    if (a.is_polygon()) {
        const auto& x = a.as_polygon().vertices;
        const auto& y = b.as_polygon().vertices;
        if (x.size() != y.size()) return false;
        for (size_t i = 0; i < x.size(); ++i)
            if (std::abs(x[i].x - y[i].x) > tol || std::abs(x[i].y - y[i].y) > tol) return false;
        return true;
    }
    return sampled_equal(a.as_sampled(), b.as_sampled(), tol);
}

} // namespace

bool body_equal(const ConvexBody& a, const ConvexBody& b) { return body_match(a, b, 0.0); }

bool body_close(const ConvexBody& a, const ConvexBody& b, double tol) { return body_match(a, b, tol); }

} // namespace valconv
