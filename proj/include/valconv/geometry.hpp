#pragma once

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

namespace valconv {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

// Axis-aligned box in dimension 1 or 2 (index 1 unused when dim == 1).
struct Box {
    int dim = 0;
    std::array<double, 2> lo{0.0, 0.0};
    std::array<double, 2> hi{0.0, 0.0};
};

Box box_sum(const Box& a, const Box& b);
Box box_union(const Box& a, const Box& b);
Box box_negate(const Box& a);
// inner fits inside outer, compared with plain <= / >= (no slack)
bool box_contains(const Box& outer, const Box& inner);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Convex polygon, counterclockwise, canonical form: consecutive duplicates and
// interior collinear vertices removed, first vertex is the lowest (then
// leftmost) one. One vertex = point, two = segment.
struct Polygon {
    std::vector<Vec2> vertices;
};

// Body given by support-function samples h(xi_i) on unit directions xi_i.
// Semantics: the intersection of the sampled half-planes <x, xi_i> <= h_i.
struct SupportSampled {
    int dim = 0;
    std::vector<std::vector<double>> directions;
    std::vector<double> values;
};

class ConvexBody {
public:
    static ConvexBody interval(double lo, double hi);
    static ConvexBody polygon(std::vector<Vec2> vertices);
    static ConvexBody support_sampled(int dim, std::vector<std::vector<double>> directions,
                                      std::vector<double> values);
    // single point {p}, dim 1 or 2
    static ConvexBody point1(double p);
    static ConvexBody point2(Vec2 p);
    // h == radius on a uniform n-direction grid (a sampled disk)
    static ConvexBody sampled_disk(int n_directions, double radius = 1.0);

    int dim() const;
    bool is_interval() const { return std::holds_alternative<Interval>(rep_); }
    bool is_polygon() const { return std::holds_alternative<Polygon>(rep_); }
    bool is_sampled() const { return std::holds_alternative<SupportSampled>(rep_); }
    const Interval& as_interval() const;
    const Polygon& as_polygon() const;
    const SupportSampled& as_sampled() const;

private:
    std::variant<Interval, Polygon, SupportSampled> rep_;
};

// uniform ccw angular grid, direction k at angle 2*pi*k/n
std::vector<std::vector<double>> unit_direction_grid(int n);

// h_body(direction); positively homogeneous, direction need not be unit.
// Zero direction is rejected.
double support_function(const ConvexBody& body, const std::vector<double>& direction);
double support_function(const ConvexBody& body, Vec2 direction); // dim-2 shorthand

// h_{A x B}((xi1, xi2)) = h_A(xi1) + h_B(xi2); h(0) := 0 on either factor.
double product_support(const ConvexBody& a, const ConvexBody& b,
                       const std::vector<double>& xi1, const std::vector<double>& xi2);

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);
ConvexBody scale(const ConvexBody& body, double t); // t >= 0
ConvexBody translate(const ConvexBody& body, const std::vector<double>& offset);

// length / area; SupportSampled reconstructed from consecutive support-line
// intersections (approximate for data sampled off a smooth body)
double volume(const ConvexBody& body);

bool membership(const ConvexBody& body, const std::vector<double>& point, double tol = 1e-9);
bool membership(const ConvexBody& body, Vec2 point, double tol = 1e-9);

Box bounding_box(const ConvexBody& body);

// vertices of the half-plane intersection polygon of a dim-2 sampled body,
// ccw; requires every angular gap < pi
std::vector<Vec2> sampled_outline(const SupportSampled& s);

struct KernelNode {
    double angle = 0.0;
    double weight = 0.0;
};

// weights must be nonnegative and sum to 1 (within 1e-9);
// h_out(xi_k) = sum_j w_j * h_body(R(-angle_j) xi_k) on a uniform grid
ConvexBody rotational_smoothing(const ConvexBody& body, const std::vector<KernelNode>& kernel,
                                int grid_size = 256);
std::vector<KernelNode> uniform_angle_kernel(double width, int count);

// sup over the grid of |h_a - h_b|; grid must be nonempty
double support_distance(const ConvexBody& a, const ConvexBody& b,
                        const std::vector<std::vector<double>>& directions);

// checks h(normalize(xi_i + xi_j)) * |xi_i + xi_j| <= h(xi_i) + h(xi_j)
// for every sampled pair whose normalized midpoint is itself sampled
bool is_sampled_sublinear(const SupportSampled& s, double tol = 1e-9);

// exact structural equality of canonical representations
bool body_equal(const ConvexBody& a, const ConvexBody& b);
// same, with per-coordinate tolerance
bool body_close(const ConvexBody& a, const ConvexBody& b, double tol);

} // namespace valconv
