#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fano7/fano.hpp"
#include "fano7/hypermatrix.hpp"

namespace fano7 {

// One unimodular factor per qubit.
struct SL2Tuple {
    std::array<SL2, 7> g{};

    static SL2Tuple identity() { return {}; }
    const SL2& operator[](Qubit q) const { return g[static_cast<size_t>(id(q))]; }
    SL2& operator[](Qubit q) { return g[static_cast<size_t>(id(q))]; }
    // (this after other): factorwise matrix product
    SL2Tuple after(const SL2Tuple& other) const;
};

// Deterministic random unimodular 2x2: entries drawn with magnitude
// ~spread, then the matrix is divided by a square root of its
// determinant. Draws with |det| below 1e-6*spread^2 are redrawn; after
// 100 attempts throws Degenerate.
SL2 random_sl2(std::uint64_t seed, double spread = 1.0);
SL2Tuple random_sl2_tuple(std::uint64_t seed, double spread = 1.0);

// A permutation of the 7 points that carries lines to lines.
struct FanoAutomorphism {
    std::array<Qubit, 7> map{};  // image of point i at position i

    Qubit operator()(Qubit p) const { return map[static_cast<size_t>(id(p))]; }
    FanoAutomorphism then(const FanoAutomorphism& second) const;  // second∘this

    static FanoAutomorphism identity();
    static FanoAutomorphism shift();     // x -> x+1 (A->B->...->G->A)
    static FanoAutomorphism doubling();  // x -> 2x mod 7
    // Validates line preservation; throws NotAutomorphism.
    static FanoAutomorphism from_map(const std::array<Qubit, 7>& m);
};

// Apply each factor to every line through its point, on the matching axis.
SevenQubitState act(const SevenQubitState& psi, const SL2Tuple& g);

// Move each block to the image line, reordering tensor axes to the image
// line's canonical point order.
SevenQubitState relabel(const SevenQubitState& psi, const FanoAutomorphism& sigma);

struct InvarianceReport {
    int samples = 0;
    double max_residual = 0.0;  // relative to scale^4
    bool pass = false;
    std::vector<std::string> checks;  // one line per check
};

// Randomized invariance harness over the accessible subgroup: per sample,
// a random 56-component state, a random SL2 tuple and a random
// shift/doubling automorphism; residuals are |delta I4| / scale^4 with
// scale the larger of the input and transformed max component. Throws
// InvarianceViolated (message names the sample) past tol.
InvarianceReport invariance_suite(std::uint64_t seed, int samples, double tol);

}  // namespace fano7
