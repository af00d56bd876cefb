#include "valconv/measure.hpp"

#include "valconv/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace valconv {

namespace {

constexpr long long kSpectralThreshold = 1LL << 16;

long long cell_count(const std::vector<int>& shape) {
    long long n = 1;
    for (int s : shape) n *= s;
    return n;
}

double cell_volume(const GridDensity& g, int dim) {
    double v = 1.0;
    for (int d = 0; d < dim; ++d) v *= g.spacing;
    return v;
}

void validate_grid(const GridDensity& g, int dim) {
    if (static_cast<int>(g.origin.size()) != dim)
        throw std::invalid_argument("grid density: origin dimension mismatch");
    if (!(g.spacing > 0.0) || !std::isfinite(g.spacing))
        throw std::invalid_argument("grid density: spacing must be positive");
    if (static_cast<int>(g.shape.size()) != dim)
        throw std::invalid_argument("grid density: shape dimension mismatch");
    for (int s : g.shape)
        if (s < 1) throw std::invalid_argument("grid density: shape entries must be positive");
    if (static_cast<long long>(g.values.size()) != cell_count(g.shape))
        throw std::invalid_argument("grid density: values size does not match shape");
    for (double v : g.values)
        if (!std::isfinite(v)) throw std::invalid_argument("grid density: non-finite value");
    for (double o : g.origin)
        if (!std::isfinite(o)) throw std::invalid_argument("grid density: non-finite origin");
}

void validate_measure(const Measure& m) {
    if (m.dim < 1 || m.dim > 2) throw std::invalid_argument("measure: dim must be 1 or 2");
    for (const auto& a : m.atoms) {
        if (static_cast<int>(a.point.size()) != m.dim)
            throw std::invalid_argument("measure: atom dimension mismatch");
        if (!std::isfinite(a.weight))
            throw std::invalid_argument("measure: non-finite atom weight");
        for (double c : a.point)
            if (!std::isfinite(c)) throw std::invalid_argument("measure: non-finite atom point");
    }
    if (m.density) validate_grid(*m.density, m.dim);
}

// ---- dense grid convolution, direct path ----

GridDensity conv_direct(const GridDensity& u, const GridDensity& v, int dim) {
    GridDensity w;
    w.spacing = u.spacing;
    double cv = cell_volume(u, dim);
    if (dim == 1) {
        int n1 = u.shape[0], n2 = v.shape[0];
        w.origin = {u.origin[0] + v.origin[0]};
        w.shape = {n1 + n2 - 1};
        w.values.assign(static_cast<size_t>(n1 + n2 - 1), 0.0);
        for (int k = 0; k < n1 + n2 - 1; ++k) {
            KahanSum acc;
            int jlo = std::max(0, k - n2 + 1), jhi = std::min(n1 - 1, k);
            for (int j = jlo; j <= jhi; ++j)
                acc.add(u.values[static_cast<size_t>(j)] * v.values[static_cast<size_t>(k - j)]);
            w.values[static_cast<size_t>(k)] = acc.value() * cv;
        }
        return w;
    }
    int ax = u.shape[0], ay = u.shape[1], bx = v.shape[0], by = v.shape[1];
    int ox = ax + bx - 1, oy = ay + by - 1;
    w.origin = {u.origin[0] + v.origin[0], u.origin[1] + v.origin[1]};
    w.shape = {ox, oy};
    w.values.assign(static_cast<size_t>(ox) * static_cast<size_t>(oy), 0.0);
    for (int kx = 0; kx < ox; ++kx) {
        int jxlo = std::max(0, kx - bx + 1), jxhi = std::min(ax - 1, kx);
        for (int ky = 0; ky < oy; ++ky) {
            int jylo = std::max(0, ky - by + 1), jyhi = std::min(ay - 1, ky);
            KahanSum acc;
            for (int jx = jxlo; jx <= jxhi; ++jx) {
                const double* urow = &u.values[static_cast<size_t>(jx) * static_cast<size_t>(ay)];
                const double* vrow =
                    &v.values[static_cast<size_t>(kx - jx) * static_cast<size_t>(by)];
                for (int jy = jylo; jy <= jyhi; ++jy)
                    acc.add(urow[jy] * vrow[ky - jy]);
            }
            w.values[static_cast<size_t>(kx) * static_cast<size_t>(oy) + static_cast<size_t>(ky)] =
                acc.value() * cv;
        }
    }
    return w;
}

// ---- dense grid convolution, spectral path ----

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
    size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? -1.0 : 1.0);
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> cw(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                std::complex<double> x = a[i + k];
                std::complex<double> y = a[i + k + len / 2] * cw;
                a[i + k] = x + y;
                a[i + k + len / 2] = x - y;
                cw *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

size_t next_pow2(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// forward/backward transform along both axes of an nx-by-ny row-major array
void fft2(std::vector<std::complex<double>>& a, size_t nx, size_t ny, bool inverse) {
    std::vector<std::complex<double>> row(ny), col(nx);
    for (size_t x = 0; x < nx; ++x) {
        for (size_t y = 0; y < ny; ++y) row[y] = a[x * ny + y];
        fft_inplace(row, inverse);
        for (size_t y = 0; y < ny; ++y) a[x * ny + y] = row[y];
    }
    for (size_t y = 0; y < ny; ++y) {
        for (size_t x = 0; x < nx; ++x) col[x] = a[x * ny + y];
        fft_inplace(col, inverse);
        for (size_t x = 0; x < nx; ++x) a[x * ny + y] = col[x];
    }
}

GridDensity conv_spectral(const GridDensity& u, const GridDensity& v, int dim) {
    GridDensity w;
    w.spacing = u.spacing;
    double cv = cell_volume(u, dim);
    if (dim == 1) {
        size_t n1 = static_cast<size_t>(u.shape[0]), n2 = static_cast<size_t>(v.shape[0]);
        size_t no = n1 + n2 - 1, np = next_pow2(no);
        std::vector<std::complex<double>> fa(np), fb(np);
        for (size_t i = 0; i < n1; ++i) fa[i] = u.values[i];
        for (size_t i = 0; i < n2; ++i) fb[i] = v.values[i];
        fft_inplace(fa, false);
        fft_inplace(fb, false);
        for (size_t i = 0; i < np; ++i) fa[i] *= fb[i];
        fft_inplace(fa, true);
        w.origin = {u.origin[0] + v.origin[0]};
        w.shape = {static_cast<int>(no)};
        w.values.resize(no);
        for (size_t i = 0; i < no; ++i) w.values[i] = fa[i].real() * cv;
        return w;
    }
    size_t ax = static_cast<size_t>(u.shape[0]), ay = static_cast<size_t>(u.shape[1]);
    size_t bx = static_cast<size_t>(v.shape[0]), by = static_cast<size_t>(v.shape[1]);
    size_t ox = ax + bx - 1, oy = ay + by - 1;
    size_t px = next_pow2(ox), py = next_pow2(oy);
    std::vector<std::complex<double>> fa(px * py), fb(px * py);
    for (size_t x = 0; x < ax; ++x)
        for (size_t y = 0; y < ay; ++y) fa[x * py + y] = u.values[x * ay + y];
    for (size_t x = 0; x < bx; ++x)
        for (size_t y = 0; y < by; ++y) fb[x * py + y] = v.values[x * by + y];
    fft2(fa, px, py, false);
    fft2(fb, px, py, false);
    for (size_t i = 0; i < px * py; ++i) fa[i] *= fb[i];
    fft2(fa, px, py, true);
    w.origin = {u.origin[0] + v.origin[0], u.origin[1] + v.origin[1]};
    w.shape = {static_cast<int>(ox), static_cast<int>(oy)};
    w.values.resize(ox * oy);
    for (size_t x = 0; x < ox; ++x)
        for (size_t y = 0; y < oy; ++y) w.values[x * oy + y] = fa[x * py + y].real() * cv;
    return w;
}

// conv_direct/conv_spectral pair input cell j with output cell j1+j2, but the sum of
// two uniform cells is a tent of width 2h straddling cells j1+j2 and j1+j2+1 equally.
// Averaging adjacent raw products per axis yields the exact cell averages of the
// convolved density on n1+n2 cells: origin stays on the operand lattice, total mass
// stays the product, and the [1/2, 1/2] smoothing commutes so exact associativity holds.
GridDensity spread_half_cells(const GridDensity& s, int dim) {
    GridDensity w;
    w.spacing = s.spacing;
    w.origin = s.origin;
    if (dim == 1) {
        int m = s.shape[0];
        w.shape = {m + 1};
        w.values.resize(static_cast<size_t>(m) + 1);
        auto at = [&](int k) { return k < 0 || k >= m ? 0.0 : s.values[static_cast<size_t>(k)]; };
        for (int k = 0; k <= m; ++k)
            w.values[static_cast<size_t>(k)] = 0.5 * (at(k) + at(k - 1));
        return w;
    }
    int mx = s.shape[0], my = s.shape[1];
    w.shape = {mx + 1, my + 1};
    w.values.resize(static_cast<size_t>(mx + 1) * static_cast<size_t>(my + 1));
    auto at = [&](int x, int y) {
        if (x < 0 || x >= mx || y < 0 || y >= my) return 0.0;
        return s.values[static_cast<size_t>(x) * static_cast<size_t>(my) + static_cast<size_t>(y)];
    };
    for (int x = 0; x <= mx; ++x)
        for (int y = 0; y <= my; ++y)
            w.values[static_cast<size_t>(x) * static_cast<size_t>(my + 1) + static_cast<size_t>(y)] =
                0.25 * (at(x, y) + at(x - 1, y) + at(x, y - 1) + at(x - 1, y - 1));
    return w;
}

GridDensity conv_grids(const GridDensity& u, const GridDensity& v, int dim, ConvPath path) {
    if (std::abs(u.spacing - v.spacing) > 1e-12 * u.spacing)
        throw std::runtime_error("convolve: incompatible grid spacings (no resampling)");
    std::vector<int> out_shape(u.shape.size());
    for (size_t d = 0; d < u.shape.size(); ++d) out_shape[d] = u.shape[d] + v.shape[d] - 1;
    bool spectral = path == ConvPath::kSpectral ||
                    (path == ConvPath::kAuto && cell_count(out_shape) > kSpectralThreshold);
    return spread_half_cells(spectral ? conv_spectral(u, v, dim) : conv_direct(u, v, dim), dim);
}

// accumulate translated grid copies; all offsets must sit on one lattice
std::optional<GridDensity> merge_grid_pieces(std::vector<GridDensity> pieces, int dim) {
    if (pieces.empty()) return std::nullopt;
    if (pieces.size() == 1) return std::move(pieces[0]);
    double h = pieces[0].spacing;
    for (const auto& p : pieces)
        if (std::abs(p.spacing - h) > 1e-12 * h)
            throw std::runtime_error("convolve: incompatible grid spacings (no resampling)");
    const std::vector<double>& anchor = pieces[0].origin;
    std::vector<std::vector<long long>> offs(pieces.size(), std::vector<long long>(static_cast<size_t>(dim)));
    for (size_t i = 0; i < pieces.size(); ++i) {
        for (int d = 0; d < dim; ++d) {
            double raw = (pieces[i].origin[static_cast<size_t>(d)] - anchor[static_cast<size_t>(d)]) / h;
            long long k = std::llround(raw);
            if (std::abs(raw - static_cast<double>(k)) > 1e-9)
                throw std::runtime_error(
                    "convolve: translated grid copies do not share a lattice (atom offsets must be "
                    "multiples of the grid spacing)");
            offs[i][static_cast<size_t>(d)] = k;
        }
    }
    std::vector<long long> lo(static_cast<size_t>(dim)), hi(static_cast<size_t>(dim));
    for (int d = 0; d < dim; ++d) {
        size_t k = static_cast<size_t>(d);
        lo[k] = offs[0][k];
        hi[k] = offs[0][k] + pieces[0].shape[k];
        for (size_t i = 1; i < pieces.size(); ++i) {
            lo[k] = std::min(lo[k], offs[i][k]);
            hi[k] = std::max(hi[k], offs[i][k] + pieces[i].shape[k]);
        }
    }
    GridDensity out;
    out.spacing = h;
    out.origin.resize(static_cast<size_t>(dim));
    out.shape.resize(static_cast<size_t>(dim));
    for (int d = 0; d < dim; ++d) {
        size_t k = static_cast<size_t>(d);
        out.origin[k] = anchor[k] + static_cast<double>(lo[k]) * h;
        out.shape[k] = static_cast<int>(hi[k] - lo[k]);
    }
    out.values.assign(static_cast<size_t>(cell_count(out.shape)), 0.0);
    for (size_t i = 0; i < pieces.size(); ++i) {
        const auto& p = pieces[i];
        if (dim == 1) {
            long long base = offs[i][0] - lo[0];
            for (int x = 0; x < p.shape[0]; ++x)
                out.values[static_cast<size_t>(base + x)] += p.values[static_cast<size_t>(x)];
        } else {
            long long bx = offs[i][0] - lo[0], by = offs[i][1] - lo[1];
            for (int x = 0; x < p.shape[0]; ++x)
                for (int y = 0; y < p.shape[1]; ++y)
                    out.values[static_cast<size_t>(bx + x) * static_cast<size_t>(out.shape[1]) +
                               static_cast<size_t>(by + y)] +=
                        p.values[static_cast<size_t>(x) * static_cast<size_t>(p.shape[1]) +
                                 static_cast<size_t>(y)];
        }
    }
    return out;
}

GridDensity translated_copy(const GridDensity& g, const std::vector<double>& shift, double weight) {
    GridDensity out = g;
    for (size_t d = 0; d < out.origin.size(); ++d) out.origin[d] += shift[d];
    for (auto& v : out.values) v *= weight;
    return out;
}

} // namespace

Measure make_atoms(int dim, std::vector<Atom> atoms) {
    Measure m{dim, std::move(atoms), std::nullopt};
    validate_measure(m);
    return m;
}

Measure make_grid(std::vector<double> origin, double spacing, std::vector<int> shape,
                  std::vector<double> values) {
    int dim = static_cast<int>(origin.size());
    Measure m{dim, {}, GridDensity{std::move(origin), spacing, std::move(shape), std::move(values)}};
    validate_measure(m);
    return m;
}

Measure make_measure(int dim, std::vector<Atom> atoms, std::optional<GridDensity> density) {
    Measure m{dim, std::move(atoms), std::move(density)};
    validate_measure(m);
    return m;
}

Measure dirac(std::vector<double> point, double weight) {
    int dim = static_cast<int>(point.size());
    return make_atoms(dim, {Atom{std::move(point), weight}});
}

double total_mass(const Measure& mu) {
    KahanSum acc;
    for (const auto& a : mu.atoms) acc.add(a.weight);
    if (mu.density) {
        double cv = cell_volume(*mu.density, mu.dim);
        KahanSum cells;
        for (double v : mu.density->values) cells.add(v);
        acc.add(cells.value() * cv);
    }
    return acc.value();
}

Measure convolve(const Measure& mu, const Measure& nu, ConvPath path) {
    if (mu.dim != nu.dim) throw std::invalid_argument("convolve: dimension mismatch");
    Measure out;
    out.dim = mu.dim;
    for (const auto& a : mu.atoms) {
        for (const auto& b : nu.atoms) {
            Atom s;
            s.point.resize(a.point.size());
            for (size_t d = 0; d < a.point.size(); ++d) s.point[d] = a.point[d] + b.point[d];
            s.weight = a.weight * b.weight;
            out.atoms.push_back(std::move(s));
        }
    }
    std::vector<GridDensity> pieces;
    if (mu.density && nu.density) pieces.push_back(conv_grids(*mu.density, *nu.density, mu.dim, path));
    if (nu.density)
        for (const auto& a : mu.atoms) pieces.push_back(translated_copy(*nu.density, a.point, a.weight));
    if (mu.density)
        for (const auto& b : nu.atoms) pieces.push_back(translated_copy(*mu.density, b.point, b.weight));
    out.density = merge_grid_pieces(std::move(pieces), mu.dim);
    return out;
}

double measure_of_body(const Measure& mu, const ConvexBody& body, int subsamples) {
    if (mu.dim != body.dim()) throw std::invalid_argument("measure_of_body: dimension mismatch");
    if (subsamples < 1) throw std::invalid_argument("measure_of_body: subsamples must be >= 1");
    KahanSum acc;
    for (const auto& a : mu.atoms)
        if (membership(body, a.point)) acc.add(a.weight);
    if (!mu.density) return acc.value();

    const GridDensity& g = *mu.density;
    double h = g.spacing;
    double cv = cell_volume(g, mu.dim);
    Box bb = bounding_box(body);
    double tol = 1e-9;
    int s = subsamples;

    if (mu.dim == 1) {
        for (int i = 0; i < g.shape[0]; ++i) {
            double v = g.values[static_cast<size_t>(i)];
            if (v == 0.0) continue;
            double x0 = g.origin[0] + static_cast<double>(i) * h;
            double x1 = x0 + h;
            if (x1 < bb.lo[0] - tol || x0 > bb.hi[0] + tol) continue;
            bool in0 = membership(body, std::vector<double>{x0});
            bool in1 = membership(body, std::vector<double>{x1});
            double frac;
            if (in0 && in1) {
                frac = 1.0;
            } else {
                int hits = 0;
                for (int k = 0; k < s; ++k) {
                    double x = x0 + (2.0 * k + 1.0) / (2.0 * s) * h;
                    if (membership(body, std::vector<double>{x})) ++hits;
                }
                if (hits == 0) continue;
                frac = static_cast<double>(hits) / static_cast<double>(s);
            }
            acc.add(v * frac * cv);
        }
        return acc.value();
    }

    int ny = g.shape[1];
    for (int ix = 0; ix < g.shape[0]; ++ix) {
        double x0 = g.origin[0] + static_cast<double>(ix) * h;
        double x1 = x0 + h;
        if (x1 < bb.lo[0] - tol || x0 > bb.hi[0] + tol) continue;
        for (int iy = 0; iy < ny; ++iy) {
            double v = g.values[static_cast<size_t>(ix) * static_cast<size_t>(ny) +
                                static_cast<size_t>(iy)];
            if (v == 0.0) continue;
            double y0 = g.origin[1] + static_cast<double>(iy) * h;
            double y1 = y0 + h;
            if (y1 < bb.lo[1] - tol || y0 > bb.hi[1] + tol) continue;
            bool inside = membership(body, Vec2{x0, y0}) && membership(body, Vec2{x1, y0}) &&
                          membership(body, Vec2{x1, y1}) && membership(body, Vec2{x0, y1});
            double frac;
            if (inside) {
                frac = 1.0;
            } else {
                int hits = 0;
                for (int kx = 0; kx < s; ++kx) {
                    double x = x0 + (2.0 * kx + 1.0) / (2.0 * s) * h;
                    for (int ky = 0; ky < s; ++ky) {
                        double y = y0 + (2.0 * ky + 1.0) / (2.0 * s) * h;
                        if (membership(body, Vec2{x, y})) ++hits;
                    }
                }
                if (hits == 0) continue;
                frac = static_cast<double>(hits) / static_cast<double>(s * s);
            }
            acc.add(v * frac * cv);
        }
    }
    return acc.value();
}

Measure smooth_bump(std::vector<double> center, double radius, double mass, double spacing) {
    int dim = static_cast<int>(center.size());
    if (dim < 1 || dim > 2) throw std::invalid_argument("smooth_bump: dim must be 1 or 2");
    if (!(radius > 0.0)) throw std::invalid_argument("smooth_bump: radius must be positive");
    if (!(spacing > 0.0)) throw std::invalid_argument("smooth_bump: spacing must be positive");
    if (spacing >= radius) throw std::invalid_argument("smooth_bump: spacing must be below radius");
    if (!std::isfinite(mass)) throw std::invalid_argument("smooth_bump: non-finite mass");

    int m = static_cast<int>(std::ceil(radius / spacing));
    auto profile = [&](double r2) {
        double q = r2 / (radius * radius);
        return q < 1.0 ? std::exp(-1.0 / (1.0 - q)) : 0.0;
    };
    GridDensity g;
    g.spacing = spacing;
    if (dim == 1) {
        g.origin = {center[0] - static_cast<double>(m) * spacing};
        g.shape = {2 * m};
        g.values.resize(static_cast<size_t>(2 * m));
        for (int i = 0; i < 2 * m; ++i) {
            double x = (static_cast<double>(i - m) + 0.5) * spacing;
            g.values[static_cast<size_t>(i)] = profile(x * x);
        }
    } else {
        g.origin = {center[0] - static_cast<double>(m) * spacing,
                    center[1] - static_cast<double>(m) * spacing};
        g.shape = {2 * m, 2 * m};
        g.values.resize(static_cast<size_t>(2 * m) * static_cast<size_t>(2 * m));
        for (int ix = 0; ix < 2 * m; ++ix) {
            double x = (static_cast<double>(ix - m) + 0.5) * spacing;
            for (int iy = 0; iy < 2 * m; ++iy) {
                double y = (static_cast<double>(iy - m) + 0.5) * spacing;
                g.values[static_cast<size_t>(ix) * static_cast<size_t>(2 * m) +
                         static_cast<size_t>(iy)] = profile(x * x + y * y);
            }
        }
    }
    double cv = 1.0;
    for (int d = 0; d < dim; ++d) cv *= spacing;
    KahanSum raw;
    for (double v : g.values) raw.add(v);
    double total = raw.value() * cv;
    if (!(total > 0.0)) throw std::runtime_error("smooth_bump: degenerate discretization");
    double f = mass / total;
    for (auto& v : g.values) v *= f;
    return make_measure(dim, {}, std::move(g));
}

Box measure_box(const Measure& mu) {
    Box b;
    b.dim = mu.dim;
    bool seen = false;
    for (const auto& a : mu.atoms) {
        for (int d = 0; d < mu.dim; ++d) {
            size_t k = static_cast<size_t>(d);
            if (!seen) {
                b.lo[k] = a.point[k];
                b.hi[k] = a.point[k];
            } else {
                b.lo[k] = std::min(b.lo[k], a.point[k]);
                b.hi[k] = std::max(b.hi[k], a.point[k]);
            }
        }
        seen = true;
    }
    if (mu.density) {
        const GridDensity& g = *mu.density;
        double h = g.spacing;
        if (mu.dim == 1) {
            int lo = -1, hi = -1;
            for (int i = 0; i < g.shape[0]; ++i) {
                if (g.values[static_cast<size_t>(i)] != 0.0) {
                    if (lo < 0) lo = i;
                    hi = i;
                }
            }
            if (lo >= 0) {
                double glo = g.origin[0] + static_cast<double>(lo) * h;
                double ghi = g.origin[0] + static_cast<double>(hi + 1) * h;
                if (!seen) {
                    b.lo[0] = glo;
                    b.hi[0] = ghi;
                } else {
                    b.lo[0] = std::min(b.lo[0], glo);
                    b.hi[0] = std::max(b.hi[0], ghi);
                }
                seen = true;
            }
        } else {
            int xlo = -1, xhi = -1, ylo = -1, yhi = -1;
            int ny = g.shape[1];
            for (int ix = 0; ix < g.shape[0]; ++ix) {
                for (int iy = 0; iy < ny; ++iy) {
                    if (g.values[static_cast<size_t>(ix) * static_cast<size_t>(ny) +
                                 static_cast<size_t>(iy)] != 0.0) {
                        if (xlo < 0 || ix < xlo) xlo = ix;
                        if (ix > xhi) xhi = ix;
                        if (ylo < 0 || iy < ylo) ylo = iy;
                        if (iy > yhi) yhi = iy;
                    }
                }
            }
            if (xlo >= 0) {
                double gx0 = g.origin[0] + static_cast<double>(xlo) * h;
                double gx1 = g.origin[0] + static_cast<double>(xhi + 1) * h;
                double gy0 = g.origin[1] + static_cast<double>(ylo) * h;
                double gy1 = g.origin[1] + static_cast<double>(yhi + 1) * h;
                if (!seen) {
                    b.lo = {gx0, gy0};
                    b.hi = {gx1, gy1};
                } else {
                    b.lo[0] = std::min(b.lo[0], gx0);
                    b.hi[0] = std::max(b.hi[0], gx1);
                    b.lo[1] = std::min(b.lo[1], gy0);
                    b.hi[1] = std::max(b.hi[1], gy1);
                }
                seen = true;
            }
        }
    }
    return b; // zero measure: degenerate box at the origin
}

Measure scale_weights(Measure mu, double c) {
    for (auto& a : mu.atoms) a.weight *= c;
    if (mu.density)
        for (auto& v : mu.density->values) v *= c;
    return mu;
}

namespace {

bool measure_match(const Measure& a, const Measure& b, double tol) {
    if (a.dim != b.dim || a.atoms.size() != b.atoms.size()) return false;
    if (a.density.has_value() != b.density.has_value()) return false;
    for (size_t i = 0; i < a.atoms.size(); ++i) {
        if (std::abs(a.atoms[i].weight - b.atoms[i].weight) > tol) return false;
        for (size_t d = 0; d < a.atoms[i].point.size(); ++d)
            if (std::abs(a.atoms[i].point[d] - b.atoms[i].point[d]) > tol) return false;
    }
    if (a.density) {
        const auto& x = *a.density;
        const auto& y = *b.density;
        if (x.shape != y.shape) return false;
        if (std::abs(x.spacing - y.spacing) > tol) return false;
        for (size_t d = 0; d < x.origin.size(); ++d)
            if (std::abs(x.origin[d] - y.origin[d]) > tol) return false;
        for (size_t i = 0; i < x.values.size(); ++i)
            if (std::abs(x.values[i] - y.values[i]) > tol) return false;
    }
    return true;
}

} // namespace

bool measure_equal(const Measure& a, const Measure& b) { return measure_match(a, b, 0.0); }

bool measure_close(const Measure& a, const Measure& b, double tol) { return measure_match(a, b, tol); }

} // namespace valconv
