#include "valconv/numeric.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace valconv {

namespace {

GaussRule compute_gauss(int n) {
    // Newton iteration on Legendre polynomials, nodes symmetric about 0
    GaussRule r;
    r.nodes.resize(static_cast<size_t>(n));
    r.weights.resize(static_cast<size_t>(n));
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = p2;
            }
            pp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[static_cast<size_t>(i)] = -x;
        r.nodes[static_cast<size_t>(n - 1 - i)] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[static_cast<size_t>(i)] = w;
        r.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    return r;
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1 || n > 256) throw std::invalid_argument("gauss_legendre: order out of range");
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss(n)).first;
    return it->second;
}

std::vector<double> periodic_derivative4(const std::vector<double>& f, double dx) {
    size_t n = f.size();
    if (n < 5) throw std::invalid_argument("periodic_derivative4: need at least 5 samples");
    if (dx <= 0.0) throw std::invalid_argument("periodic_derivative4: spacing must be positive");
    std::vector<double> d(n);
    for (size_t i = 0; i < n; ++i) {
        double fm2 = f[(i + n - 2) % n], fm1 = f[(i + n - 1) % n];
        double fp1 = f[(i + 1) % n], fp2 = f[(i + 2) % n];
        d[i] = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * dx);
    }
    return d;
}

std::array<double, 3> fit_quadratic(const std::vector<double>& t, const std::vector<double>& y) {
    if (t.size() != y.size() || t.size() < 3)
        throw std::invalid_argument("fit_quadratic: need matching lists of >= 3 samples");
    {
        int distinct = 1;
        for (size_t i = 1; i < t.size(); ++i) {
            bool seen = false;
            for (size_t j = 0; j < i; ++j)
                if (t[i] == t[j]) seen = true;
            if (!seen) ++distinct;
        }
        if (distinct < 3) throw std::invalid_argument("fit_quadratic: need >= 3 distinct abscissae");
    }
    double s[5] = {0, 0, 0, 0, 0};
    double b[3] = {0, 0, 0};
    for (size_t i = 0; i < t.size(); ++i) {
        double p = 1.0;
        for (int k = 0; k <= 4; ++k) {
            s[k] += p;
            if (k <= 2) b[k] += p * y[i];
            p *= t[i];
        }
    }
    double a[3][4] = {{s[0], s[1], s[2], b[0]}, {s[1], s[2], s[3], b[1]}, {s[2], s[3], s[4], b[2]}};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        for (int k = 0; k < 4; ++k) std::swap(a[col][k], a[piv][k]);
        if (a[col][col] == 0.0) throw std::runtime_error("fit_quadratic: singular normal equations");
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            for (int k = col; k < 4; ++k) a[r][k] -= f * a[col][k];
        }
    }
    return {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

} // namespace valconv
