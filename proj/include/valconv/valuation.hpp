#pragma once

#include "valconv/geometry.hpp"
#include "valconv/measure.hpp"

#include <array>
#include <vector>

namespace valconv {

// one summand of a valuation K -> coeff * mu(K + A)
struct ValuationTerm {
    double coeff = 0.0;
    Measure measure;
    ConvexBody body;
};

struct SmoothValuation {
    int dim = 0;
    std::vector<ValuationTerm> terms;
};

// translation invariant image: K -> coeff * vol(K + A), coefficients carry
// the dual volume factor
struct TransInvTerm {
    double coeff = 0.0;
    ConvexBody body;
};

struct TransInvValuation {
    int dim = 0;
    std::vector<TransInvTerm> terms;
};

SmoothValuation make_valuation(int dim, std::vector<ValuationTerm> terms);
// unit dirac at the origin paired with the origin point body
SmoothValuation identity_valuation(int dim);

double evaluate(const SmoothValuation& psi, const ConvexBody& K, int subsamples = 4);

// termwise product rule: (c, mu, A) * (d, nu, B) -> (c d, mu * nu, A + B),
// terms ordered by (left index, right index)
SmoothValuation convolve(const SmoothValuation& a, const SmoothValuation& b,
                         ConvPath path = ConvPath::kAuto);

TransInvValuation f_transform(const SmoothValuation& psi);
double evaluate_ti(const TransInvValuation& v, const ConvexBody& K);
TransInvValuation bf_convolve(const TransInvValuation& a, const TransInvValuation& b);

// box containing the support of every term: union of box(mu_i) + box(-A_i)
Box support_bound(const SmoothValuation& psi);

// quadratic fit of t -> vol(K + t * sampled disk) over the given radii
std::array<double, 3> steiner_coefficients(const ConvexBody& body, const std::vector<double>& radii,
                                           int disk_directions = 256);

// sort terms deterministically and merge terms with identical (measure, body)
SmoothValuation canonicalize(const SmoothValuation& psi);

SmoothValuation add_valuations(const SmoothValuation& a, const SmoothValuation& b);
SmoothValuation scale_valuation(double c, SmoothValuation psi);

bool valuation_equal(const SmoothValuation& a, const SmoothValuation& b); // exact structural
bool valuation_close(const SmoothValuation& a, const SmoothValuation& b, double tol);
bool ti_close(const TransInvValuation& a, const TransInvValuation& b, double coeff_tol,
              double body_tol);

} // namespace valconv
