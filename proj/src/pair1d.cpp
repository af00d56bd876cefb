#include "valconv/pair1d.hpp"

#include "valconv/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace valconv {

namespace {

constexpr double kTailTol = 1e-9;

// cumulative function F(x) = mu((-inf, x]), exact at the flat tails
struct Cumulative {
    std::vector<double> pos;  // sorted atom positions
    std::vector<double> acc;  // acc[i] = weight of the first i atoms
    bool has_grid = false;
    double grid_origin = 0.0;
    double grid_spacing = 1.0;
    std::vector<double> cell_values;
    std::vector<double> cell_prefix;  // cell_prefix[k] = integral over first k cells
    double total = 0.0;

    explicit Cumulative(const Measure& m) {
        std::vector<Atom> atoms = m.atoms;
        std::sort(atoms.begin(), atoms.end(),
                  [](const Atom& a, const Atom& b) { return a.point[0] < b.point[0]; });
        acc.push_back(0.0);
        KahanSum aw;
        for (const Atom& a : atoms) {
            pos.push_back(a.point[0]);
            aw.add(a.weight);
            acc.push_back(aw.value());
        }
        double grid_total = 0.0;
        if (m.density) {
            has_grid = true;
            grid_origin = m.density->origin[0];
            grid_spacing = m.density->spacing;
            cell_values = m.density->values;
            cell_prefix.push_back(0.0);
            KahanSum gw;
            for (double v : cell_values) {
                gw.add(v * grid_spacing);
                cell_prefix.push_back(gw.value());
            }
            grid_total = cell_prefix.back();
        }
        total = acc.back() + grid_total;
    }

    double operator()(double x) const {
        size_t i = std::upper_bound(pos.begin(), pos.end(), x) - pos.begin();
        double value = acc[i];
        if (has_grid) {
            double u = (x - grid_origin) / grid_spacing;
            double cells = static_cast<double>(cell_values.size());
            if (u >= cells) {
                value += cell_prefix.back();
            } else if (u > 0.0) {
                size_t k = static_cast<size_t>(u);
                value += cell_prefix[k] + cell_values[k] * (x - (grid_origin + static_cast<double>(k) * grid_spacing));
            }
        }
        return value;
    }
};

double sample_clamped(const std::vector<double>& v, double origin, double h, double x) {
    double u = (x - origin) / h;
    if (u <= 0.0)
        return v.front();
    double last = static_cast<double>(v.size() - 1);
    if (u >= last)
        return v.back();
    size_t j = static_cast<size_t>(u);
    double t = u - static_cast<double>(j);
    return v[j] + t * (v[j + 1] - v[j]);
}

std::vector<double> central_derivative(const std::vector<double>& f, double h) {
    size_t n = f.size();
    std::vector<double> d(n, 0.0);
    if (n < 2)
        return d;
    d[0] = (f[1] - f[0]) / h;
    d[n - 1] = (f[n - 1] - f[n - 2]) / h;
    for (size_t i = 1; i + 1 < n; ++i)
        d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    return d;
}

void snap_tails(std::vector<double>& v, double right_constant, const char* what) {
    double scale = std::max({1.0, std::abs(right_constant)});
    if (std::abs(v.front()) > kTailTol * scale || std::abs(v.back() - right_constant) > kTailTol * scale)
        throw std::runtime_error(std::string(what) + ": tail values drifted past the snap tolerance");
    v.front() = 0.0;
    v.back() = right_constant;
}

void check_spacings(const Pair1D& p1, const Pair1D& p2, const char* what) {
    if (std::abs(p1.spacing - p2.spacing) > 1e-12 * std::max(p1.spacing, 1.0))
        throw std::invalid_argument(std::string(what) + ": grid spacings differ");
}

} // namespace

Pair1D make_pair1d(double origin, double spacing, std::vector<double> f, std::vector<double> g,
                   double right_constant) {
    if (!(spacing > 0.0) || !std::isfinite(spacing) || !std::isfinite(origin))
        throw std::invalid_argument("make_pair1d: bad grid");
    if (f.size() != g.size() || f.size() < 2)
        throw std::invalid_argument("make_pair1d: f and g need equal length >= 2");
    for (double v : f)
        if (!std::isfinite(v))
            throw std::invalid_argument("make_pair1d: non-finite sample");
    for (double v : g)
        if (!std::isfinite(v))
            throw std::invalid_argument("make_pair1d: non-finite sample");
    double scale = std::max(1.0, std::abs(right_constant));
    if (std::abs(f.front()) > 1e-12 * scale || std::abs(g.front()) > 1e-12 * scale ||
        std::abs(f.back() - right_constant) > 1e-12 * scale ||
        std::abs(g.back() - right_constant) > 1e-12 * scale)
        throw std::invalid_argument("make_pair1d: boundary values violate the tail invariant");
    f.front() = 0.0;
    g.front() = 0.0;
    f.back() = right_constant;
    g.back() = right_constant;
    return Pair1D{origin, spacing, std::move(f), std::move(g), right_constant};
}

double evaluate(const Pair1D& p, double a, double b) {
    if (!(a <= b))
        throw std::invalid_argument("evaluate: interval needs a <= b");
    return sample_clamped(p.g, p.origin, p.spacing, b) - sample_clamped(p.f, p.origin, p.spacing, a);
}

Pair1D from_term(const Measure& mu, const ConvexBody& segment, double spacing) {
    if (mu.dim != 1)
        throw std::invalid_argument("from_term: measure must be one dimensional");
    if (!segment.is_interval())
        throw std::invalid_argument("from_term: body must be an interval");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw std::invalid_argument("from_term: spacing must be positive");
    const Interval& seg = segment.as_interval();
    Box box = measure_box(mu);
    Cumulative cum(mu);
    // two flat samples beyond the support on each side
    double lo = box.lo[0] - seg.hi - 2.0 * spacing;
    double hi = box.hi[0] - seg.lo + 2.0 * spacing;
    size_t count = static_cast<size_t>(std::ceil((hi - lo) / spacing)) + 1;
    count = std::max<size_t>(count, 4);
    Pair1D out;
    out.origin = lo;
    out.spacing = spacing;
    out.right_constant = cum.total;
    out.f.resize(count);
    out.g.resize(count);
    for (size_t i = 0; i < count; ++i) {
        double x = lo + static_cast<double>(i) * spacing;
        out.f[i] = cum(x + seg.lo);
        out.g[i] = cum(x + seg.hi);
    }
    snap_tails(out.f, out.right_constant, "from_term");
    snap_tails(out.g, out.right_constant, "from_term");
    return out;
}

Pair1D convolve(const Pair1D& p1, const Pair1D& p2) {
    check_spacings(p1, p2, "convolve");
    double h = p1.spacing;
    size_t n1 = p1.f.size();
    size_t n2 = p2.f.size();
    Pair1D out;
    out.origin = p1.origin + p2.origin;
    out.spacing = h;
    out.right_constant = p1.right_constant * p2.right_constant;
    size_t n = n1 + n2 - 1;
    out.f.assign(n, 0.0);
    out.g.assign(n, 0.0);
    // differentiate the left factor, then sum against the right factor with
    // constant extension; the flat padding keeps the end masses exact
    std::vector<double> df = central_derivative(p1.f, h);
    std::vector<double> dg = central_derivative(p1.g, h);
    auto clamped = [](const std::vector<double>& v, ptrdiff_t j) {
        if (j < 0)
            return v.front();
        if (j >= static_cast<ptrdiff_t>(v.size()))
            return v.back();
        return v[static_cast<size_t>(j)];
    };
    for (size_t k = 0; k < n; ++k) {
        KahanSum sf, sg;
        for (size_t i = 0; i < n1; ++i) {
            ptrdiff_t j = static_cast<ptrdiff_t>(k) - static_cast<ptrdiff_t>(i);
            if (df[i] != 0.0)
                sf.add(df[i] * clamped(p2.f, j));
            if (dg[i] != 0.0)
                sg.add(dg[i] * clamped(p2.g, j));
        }
        out.f[k] = h * sf.value();
        out.g[k] = h * sg.value();
    }
    snap_tails(out.f, out.right_constant, "convolve");
    snap_tails(out.g, out.right_constant, "convolve");
    return out;
}

Pair1D pair_add(const Pair1D& p1, const Pair1D& p2) {
    check_spacings(p1, p2, "pair_add");
    double h = p1.spacing;
    double lo = std::min(p1.origin, p2.origin);
    double hi = std::max(p1.origin + h * static_cast<double>(p1.f.size() - 1),
                         p2.origin + h * static_cast<double>(p2.f.size() - 1));
    size_t count = static_cast<size_t>(std::ceil((hi - lo) / h)) + 1;
    count = std::max<size_t>(count, 2);
    Pair1D out;
    out.origin = lo;
    out.spacing = h;
    out.right_constant = p1.right_constant + p2.right_constant;
    out.f.resize(count);
    out.g.resize(count);
    for (size_t i = 0; i < count; ++i) {
        double x = lo + static_cast<double>(i) * h;
        out.f[i] = sample_clamped(p1.f, p1.origin, h, x) + sample_clamped(p2.f, p2.origin, h, x);
        out.g[i] = sample_clamped(p1.g, p1.origin, h, x) + sample_clamped(p2.g, p2.origin, h, x);
    }
    snap_tails(out.f, out.right_constant, "pair_add");
    snap_tails(out.g, out.right_constant, "pair_add");
    return out;
}

Pair1D pair_scale(Pair1D p, double c) {
    if (!std::isfinite(c))
        throw std::invalid_argument("pair_scale: scalar not finite");
    for (double& v : p.f)
        v *= c;
    for (double& v : p.g)
        v *= c;
    p.right_constant *= c;
    return p;
}

Pair1D pair_from_valuation(const SmoothValuation& psi, double spacing) {
    if (psi.dim != 1)
        throw std::invalid_argument("pair_from_valuation: valuation must be one dimensional");
    for (const ValuationTerm& t : psi.terms)
        if (!t.body.is_interval())
            throw std::invalid_argument("pair_from_valuation: bodies must be intervals");
    if (psi.terms.empty())
        return Pair1D{0.0, spacing, {0.0, 0.0}, {0.0, 0.0}, 0.0};
    Pair1D acc = pair_scale(from_term(psi.terms[0].measure, psi.terms[0].body, spacing),
                            psi.terms[0].coeff);
    for (size_t i = 1; i < psi.terms.size(); ++i)
        acc = pair_add(acc, pair_scale(from_term(psi.terms[i].measure, psi.terms[i].body, spacing),
                                       psi.terms[i].coeff));
    return acc;
}

} // namespace valconv
