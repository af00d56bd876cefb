#pragma once

#include "valconv/geometry.hpp"

#include <optional>
#include <vector>

namespace valconv {

struct Atom {
    std::vector<double> point;
    double weight = 0.0;
};

// uniform grid of cell-averaged density; cell k spans
// [origin + k*spacing, origin + (k+1)*spacing] per axis, row-major values
struct GridDensity {
    std::vector<double> origin;
    double spacing = 0.0;
    std::vector<int> shape;
    std::vector<double> values;
};

// compactly supported signed measure: point atoms plus an optional density
struct Measure {
    int dim = 0;
    std::vector<Atom> atoms;
    std::optional<GridDensity> density;
};

Measure make_atoms(int dim, std::vector<Atom> atoms);
Measure make_grid(std::vector<double> origin, double spacing, std::vector<int> shape,
                  std::vector<double> values);
Measure make_measure(int dim, std::vector<Atom> atoms, std::optional<GridDensity> density);
Measure dirac(std::vector<double> point, double weight = 1.0);

double total_mass(const Measure& mu);

enum class ConvPath { kAuto, kDirect, kSpectral };

// measure convolution: atom x atom summed points, atom x grid translated
// copies (which must land on one lattice), grid x grid discrete convolution;
// kAuto picks direct below 2^16 result cells and spectral above
Measure convolve(const Measure& mu, const Measure& nu, ConvPath path = ConvPath::kAuto);

// mu(body); grid cells crossing the boundary are resolved by s^dim midpoint
// subsampling, interior cells counted whole
double measure_of_body(const Measure& mu, const ConvexBody& body, int subsamples = 4);

// radially symmetric C-infinity bump of the given total mass, cell averages
// approximated by center values
Measure smooth_bump(std::vector<double> center, double radius, double mass, double spacing);

// hull of atom positions and nonzero grid cells; zero measure gives the origin
Box measure_box(const Measure& mu);

Measure scale_weights(Measure mu, double c);

bool measure_equal(const Measure& a, const Measure& b); // exact structural
bool measure_close(const Measure& a, const Measure& b, double tol);

} // namespace valconv
