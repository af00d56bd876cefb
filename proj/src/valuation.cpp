#include "valconv/valuation.hpp"

#include "valconv/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace valconv {

namespace {

void check_term(int dim, const ValuationTerm& t) {
    if (t.measure.dim != dim)
        throw std::invalid_argument("valuation term measure dimension mismatch");
    if (t.body.dim() != dim)
        throw std::invalid_argument("valuation term body dimension mismatch");
    if (!std::isfinite(t.coeff))
        throw std::invalid_argument("valuation term coefficient not finite");
}

// flatten to a sortable key: kind tag followed by the defining numbers
std::vector<double> body_key(const ConvexBody& b) {
    std::vector<double> k;
    if (b.is_interval()) {
        const Interval& iv = b.as_interval();
        k = {0.0, iv.lo, iv.hi};
    } else if (b.is_polygon()) {
        const Polygon& p = b.as_polygon();
        k.push_back(1.0);
        k.push_back(static_cast<double>(p.vertices.size()));
        for (const Vec2& v : p.vertices) {
            k.push_back(v.x);
            k.push_back(v.y);
        }
    } else {
        const SupportSampled& s = b.as_sampled();
        k.push_back(2.0);
        k.push_back(static_cast<double>(s.dim));
        k.push_back(static_cast<double>(s.directions.size()));
        for (const auto& d : s.directions)
            k.insert(k.end(), d.begin(), d.end());
        k.insert(k.end(), s.values.begin(), s.values.end());
    }
    return k;
}

std::vector<double> measure_key(const Measure& m) {
    std::vector<double> k;
    k.push_back(static_cast<double>(m.dim));
    k.push_back(static_cast<double>(m.atoms.size()));
    for (const Atom& a : m.atoms) {
        k.insert(k.end(), a.point.begin(), a.point.end());
        k.push_back(a.weight);
    }
    if (m.density) {
        const GridDensity& g = *m.density;
        k.push_back(1.0);
        k.insert(k.end(), g.origin.begin(), g.origin.end());
        k.push_back(g.spacing);
        for (int s : g.shape)
            k.push_back(static_cast<double>(s));
        k.insert(k.end(), g.values.begin(), g.values.end());
    } else {
        k.push_back(0.0);
    }
    return k;
}

std::vector<double> term_key(const ValuationTerm& t) {
    std::vector<double> k = measure_key(t.measure);
    std::vector<double> bk = body_key(t.body);
    k.insert(k.end(), bk.begin(), bk.end());
    return k;
}

} // namespace

SmoothValuation make_valuation(int dim, std::vector<ValuationTerm> terms) {
    if (dim != 1 && dim != 2)
        throw std::invalid_argument("valuation dimension must be 1 or 2");
    for (const ValuationTerm& t : terms)
        check_term(dim, t);
    return SmoothValuation{dim, std::move(terms)};
}

SmoothValuation identity_valuation(int dim) {
    std::vector<double> origin(static_cast<size_t>(dim), 0.0);
    ConvexBody pt = dim == 1 ? ConvexBody::point1(0.0) : ConvexBody::point2({0.0, 0.0});
    return make_valuation(dim, {{1.0, dirac(origin, 1.0), pt}});
}

double evaluate(const SmoothValuation& psi, const ConvexBody& K, int subsamples) {
    if (K.dim() != psi.dim)
        throw std::invalid_argument("evaluate: body dimension mismatch");
    KahanSum total;
    for (const ValuationTerm& t : psi.terms)
        total.add(t.coeff * measure_of_body(t.measure, minkowski_sum(K, t.body), subsamples));
    return total.value();
}

SmoothValuation convolve(const SmoothValuation& a, const SmoothValuation& b, ConvPath path) {
    if (a.dim != b.dim)
        throw std::invalid_argument("convolve: valuation dimension mismatch");
    SmoothValuation out;
    out.dim = a.dim;
    out.terms.reserve(a.terms.size() * b.terms.size());
    for (const ValuationTerm& ta : a.terms)
        for (const ValuationTerm& tb : b.terms)
            out.terms.push_back({ta.coeff * tb.coeff, convolve(ta.measure, tb.measure, path),
                                 minkowski_sum(ta.body, tb.body)});
    return out;
}

TransInvValuation f_transform(const SmoothValuation& psi) {
    TransInvValuation out;
    out.dim = psi.dim;
    out.terms.reserve(psi.terms.size());
    for (const ValuationTerm& t : psi.terms)
        out.terms.push_back({t.coeff * total_mass(t.measure), t.body});
    return out;
}

double evaluate_ti(const TransInvValuation& v, const ConvexBody& K) {
    if (K.dim() != v.dim)
        throw std::invalid_argument("evaluate_ti: body dimension mismatch");
    KahanSum total;
    for (const TransInvTerm& t : v.terms)
        total.add(t.coeff * volume(minkowski_sum(K, t.body)));
    return total.value();
}

TransInvValuation bf_convolve(const TransInvValuation& a, const TransInvValuation& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("bf_convolve: dimension mismatch");
    TransInvValuation out;
    out.dim = a.dim;
    out.terms.reserve(a.terms.size() * b.terms.size());
    for (const TransInvTerm& ta : a.terms)
        for (const TransInvTerm& tb : b.terms)
            out.terms.push_back({ta.coeff * tb.coeff, minkowski_sum(ta.body, tb.body)});
    return out;
}

Box support_bound(const SmoothValuation& psi) {
    Box out;
    out.dim = psi.dim;
    bool first = true;
    for (const ValuationTerm& t : psi.terms) {
        Box piece = box_sum(measure_box(t.measure), box_negate(bounding_box(t.body)));
        out = first ? piece : box_union(out, piece);
        first = false;
    }
    return out;
}

std::array<double, 3> steiner_coefficients(const ConvexBody& body, const std::vector<double>& radii,
                                           int disk_directions) {
    if (body.dim() != 2)
        throw std::invalid_argument("steiner_coefficients: body must be planar");
    std::vector<double> distinct = radii;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3)
        throw std::invalid_argument("steiner_coefficients: need at least 3 distinct radii");
    for (double r : radii)
        if (!(r >= 0.0) || !std::isfinite(r))
            throw std::invalid_argument("steiner_coefficients: radii must be nonnegative");
    ConvexBody disk = ConvexBody::sampled_disk(disk_directions);
    std::vector<double> vols(radii.size());
    for (size_t i = 0; i < radii.size(); ++i)
        vols[i] = volume(minkowski_sum(body, scale(disk, radii[i])));
    return fit_quadratic(radii, vols);
}

SmoothValuation canonicalize(const SmoothValuation& psi) {
    struct Keyed {
        std::vector<double> key;
        ValuationTerm term;
    };
    std::vector<Keyed> rows;
    rows.reserve(psi.terms.size());
    for (const ValuationTerm& t : psi.terms)
        rows.push_back({term_key(t), t});
    std::stable_sort(rows.begin(), rows.end(), [](const Keyed& a, const Keyed& b) {
        return std::lexicographical_compare(a.key.begin(), a.key.end(), b.key.begin(), b.key.end());
    });
    SmoothValuation out;
    out.dim = psi.dim;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i > 0 && rows[i].key == rows[i - 1].key)
            out.terms.back().coeff += rows[i].term.coeff;
        else
            out.terms.push_back(std::move(rows[i].term));
    }
    return out;
}

SmoothValuation add_valuations(const SmoothValuation& a, const SmoothValuation& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("add_valuations: dimension mismatch");
    SmoothValuation out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

SmoothValuation scale_valuation(double c, SmoothValuation psi) {
    for (ValuationTerm& t : psi.terms)
        t.coeff *= c;
    return psi;
}

bool valuation_equal(const SmoothValuation& a, const SmoothValuation& b) {
    return valuation_close(a, b, 0.0);
}

bool valuation_close(const SmoothValuation& a, const SmoothValuation& b, double tol) {
    if (a.dim != b.dim || a.terms.size() != b.terms.size())
        return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        const ValuationTerm& ta = a.terms[i];
        const ValuationTerm& tb = b.terms[i];
        if (std::abs(ta.coeff - tb.coeff) > tol)
            return false;
        if (!measure_close(ta.measure, tb.measure, tol))
            return false;
        if (!body_close(ta.body, tb.body, tol))
            return false;
    }
    return true;
}

bool ti_close(const TransInvValuation& a, const TransInvValuation& b, double coeff_tol,
              double body_tol) {
    if (a.dim != b.dim || a.terms.size() != b.terms.size())
        return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        if (std::abs(a.terms[i].coeff - b.terms[i].coeff) > coeff_tol)
            return false;
        if (!body_close(a.terms[i].body, b.terms[i].body, body_tol))
            return false;
    }
    return true;
}

} // namespace valconv
