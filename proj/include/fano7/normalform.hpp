#pragma once

#include <array>
#include <optional>

#include "fano7/hypermatrix.hpp"

namespace fano7 {

// Charge-eigenvalue moduli and the one residual phase of the canonical
// reduction; the five parameters on which the invariant closes.
struct NormalForm {
    std::array<double, 4> rho{};  // non-negative moduli
    double phi = 0.0;             // radians
};

// Quartic invariant from the normal form. Both printed shapes are
// evaluated: the modulus polynomial plus phase term, and the four-factor
// product plus phase term; they must agree to 1e-12 relative or
// FormMismatch is thrown (an implementation bug, not an input error).
double i4_eigen(const NormalForm& nf);

// The four signed eigenvalue combinations
//   l1 = r1+r2+r3+r4, l2 = r1+r2-r3-r4, l3 = r1-r2+r3-r4, l4 = r1-r2-r3+r4,
// reordered (by the relabeling freedom of the rho's) so that
// l1 >= l2 >= l3 >= |l4|. When phi = 0 their product equals i4_eigen.
std::array<double, 4> normal_form_lambdas(const NormalForm& nf);

enum class HoleKind { LargeBPS, LargeNonBPS, Small };
enum class BPSFraction { Eighth, Quarter, Half, Undetermined };

struct Classification {
    HoleKind kind;
    BPSFraction bps = BPSFraction::Undetermined;  // meaningful for Small only
};

const char* kind_name(HoleKind k);
const char* bps_name(BPSFraction f);

// Sign classification of the invariant with the zero threshold
// zero_tol * scale^4. For Small inputs with a normal form whose phase is
// within 1e-9 of zero (mod 2pi), the count of nonzero lambdas (threshold
// 1e-9 * scale) fixes the preserved supersymmetry fraction: 3 -> 1/8,
// 2 -> 1/4, 1 -> 1/2; anything else is Undetermined.
Classification classify(double i4, double scale, const std::optional<NormalForm>& nf = {},
                        double zero_tol = 1e-8);

// Horizon entropy, pi * sqrt(|I4|).
double entropy(double i4);

enum class RebitClass { GHZNegative, SeparableOrW, GHZPositive };

const char* rebit_class_name(RebitClass c);

// Three-way sign classification of a real-amplitude hyperdeterminant,
// threshold 1e-8 * scale^4.
RebitClass rebit_class(double det, double scale);

// Classify a tensor directly; throws NotRebit when any imaginary part
// exceeds 1e-12 * scale. The zero tensor is separable.
RebitClass rebit_class_of(const Hypermatrix& a);

}  // namespace fano7
