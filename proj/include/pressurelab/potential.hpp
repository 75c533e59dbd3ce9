#pragma once

#include <variant>
#include <vector>

#include "pressurelab/point.hpp"

namespace plab {

// phi(x) = table[x_0 ... x_{w-1}], table indexed lexicographically over all
// A^w words (entries at inadmissible words are ignored by the dynamics).
struct LocallyConstant {
    int window;                 // w >= 1
    std::vector<double> table;  // size A^w
};

// phi(x) = sum_{k>=0} rho^k * symbol_values[x_k]; evaluates in closed form
// on eventually periodic points. Genuinely not locally constant.
struct GeometricSeries {
    double rho;  // in (0,1)
    std::vector<double> symbol_values;  // size A
};

using Potential = std::variant<LocallyConstant, GeometricSeries>;

Potential make_zero_potential(const SftSystem& sys);

void validate_potential(const SftSystem& sys, const Potential& phi);

double phi_value(const SftSystem& sys, const Potential& phi, const Point& x);

// S_n phi(x) = sum_{j<n} phi(f^j x), exact (closed form per term for the
// geometric family).
double birkhoff_sum(const SftSystem& sys, const Potential& phi, const Point& x, int n);

// Birkhoff sum over the periodic point (w)^inf, using cyclic windows. Equal
// to birkhoff_sum on Point::periodic(w) but cheap enough for bulk use.
double birkhoff_sum_periodic_word(const SftSystem& sys, const Potential& phi, const Word& w);

// Certified bound on eps(delta) = sup{|phi(x)-phi(y)| : d(x,y) < delta}.
// Exact for locally constant potentials, a vanishing upper bound for the
// geometric family.
double modulus_of_continuity(const SftSystem& sys, const Potential& phi, double delta);

// Upper bound on sup |phi| over the system (exact for locally constant).
double sup_norm_bound(const SftSystem& sys, const Potential& phi);

// The potential phi + c (same family).
Potential add_constant(const SftSystem& sys, const Potential& phi, double c);

}  // namespace plab
