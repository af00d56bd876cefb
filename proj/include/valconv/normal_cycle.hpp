#pragma once

#include "valconv/geometry.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace valconv {

struct CycleEdge {
    Vec2 start;
    Vec2 end;
    double normal_angle;
};

// ccw arc of outer normals at a vertex; extent lies in (0, 2 pi]
struct CycleArc {
    Vec2 vertex;
    double theta_start = 0.0;
    double theta_end = 0.0;
};

struct NormalCycle2D {
    std::vector<CycleEdge> edges;
    std::vector<CycleArc> arcs;
};

// boundary-and-normal decomposition of a planar polygon, segment or point
NormalCycle2D normal_cycle(const ConvexBody& body);

// integrand paired against the cycle: a1, a2 against the two position
// differentials along edges, a3 against the normal angle along arcs, plus an
// optional absolutely continuous area density; all coefficients are smooth
// and vanish outside support_box
struct ValuationForm2D {
    std::function<double(Vec2, double)> a1;
    std::function<double(Vec2, double)> a2;
    std::function<double(Vec2, double)> a3;
    std::function<double(Vec2)> density;
    Box support_box;
};

double evaluate_form(const ValuationForm2D& form, const ConvexBody& body, int quad_order = 16);

// evaluation of a sampled-support body scaled by t >= 0 through its angular
// outline x(theta) = t * g(theta); the samples must sit on a uniform angle
// grid
double evaluate_form_scaled(const ValuationForm2D& form, const ConvexBody& sampled_body, double t);

// derivative at scale zero of t -> evaluate_form_scaled(form, body, t)
double tau_smooth(const ValuationForm2D& form, const ConvexBody& sampled_body);

// derivative at scale zero for the square [-w, w]^2; assumes the arc
// coefficient does not depend on position near the origin
double tau_square(const ValuationForm2D& form, double half_width);

// one sided difference quotient (mu(h) - mu(0)) / h of the scaled evaluation
double scaled_difference(const ValuationForm2D& form, const ConvexBody& body, double h,
                         int quad_order = 16);

// named forms used by the verification suites
const std::map<std::string, ValuationForm2D>& form_catalog();

} // namespace valconv
