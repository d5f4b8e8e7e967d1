#pragma once

#include <cstdint>
#include <optional>

#include "fano7/contraction.hpp"
#include "fano7/hypermatrix.hpp"

namespace fano7 {

// Cayley's hyperdeterminant by direct expansion of the 12-monomial
// polynomial. This is the reference path; the contraction-engine path
// below must agree with it and is kept as a permanent cross-check.
Complex cayley_det(const Hypermatrix& a);

// Same quantity as -1/2 times the canonical epsilon contraction of four
// copies of the tensor.
Complex cayley_det_contracted(const Hypermatrix& a);

// The canonical hyperdeterminant contraction pattern on axis labels
// (l0, l1, l2): copies 1,2 fully paired with each other, copies 3,4
// likewise.
ContractionPattern hyperdeterminant_pattern(std::uint8_t l0 = 0, std::uint8_t l1 = 1,
                                            std::uint8_t l2 = 2);

// Three-way entanglement measure, 4|Det a|.
double tangle3(const Hypermatrix& a);

// A solution of the bilinear kernel system: three spinor pairs p,q,r,
// none identically zero, with all six contractions below the residual.
struct KernelWitness {
    std::array<Complex, 2> p, q, r;
    double residual;    // max |equation| over the six bilinear equations
    int restarts_used;  // restarts consumed before convergence
};

// Multi-start damped Gauss-Newton search for a kernel witness. Each pair
// is kept projectively normalized (largest-magnitude component fixed at
// 1). Returns nullopt after max_restarts failed starts; that signals
// either Det a != 0 or search failure, never a proof.
std::optional<KernelWitness> kernel_witness(const Hypermatrix& a, int max_restarts = 64,
                                            double tol = 1e-10,
                                            std::uint64_t seed = 0x5eedULL);

}  // namespace fano7
