#pragma once

#include <array>

#include "fano7/hypermatrix.hpp"

namespace fano7 {

// The 8 canonical skew-block entries of the charge matrix. Unconstrained
// reals; black-hole charges carry no normalization.
struct CanonicalCharges {
    double x12 = 0, x34 = 0, x56 = 0, x78 = 0;
    double y12 = 0, y34 = 0, y56 = 0, y78 = 0;
};

// Four electric and four magnetic charges.
struct BlackHoleCharges {
    double q0 = 0, q1 = 0, q2 = 0, q3 = 0;
    double p0 = 0, p1 = 0, p2 = 0, p3 = 0;
};

// Quartic invariant in the canonical basis:
//   -(x12 y12 + x34 y34 + x56 y56 + x78 y78)^2
//   - 4 (x12 x34 x56 x78 + y12 y34 y56 y78)
//   + 4 (sum over block pairs of x x y y).
double i4_canonical(const CanonicalCharges& c);

// Dictionary between the canonical charges, the four skew eigenvalues
// lambda_I = x + iy, the real single-line tensor, and the black-hole
// charges. All round trips are exact.
std::array<Complex, 4> lambdas(const CanonicalCharges& c);
CanonicalCharges charges_from_lambdas(const std::array<Complex, 4>& l);

Hypermatrix charges_to_hypermatrix(const CanonicalCharges& c);
// Reads the real parts; the dictionary lives on the real charge slice.
CanonicalCharges charges_from_hypermatrix(const Hypermatrix& a);

BlackHoleCharges to_black_hole(const CanonicalCharges& c);
CanonicalCharges from_black_hole(const BlackHoleCharges& b);

}  // namespace fano7
