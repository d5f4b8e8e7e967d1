#pragma once

#include "fano7/cayley.hpp"
#include "fano7/fano.hpp"

namespace fano7 {

// State supported on the three lines through one point (24 components).
struct N4State {
    Qubit apex;
    std::array<Hypermatrix, 3> blocks{};  // lines_through(apex), ascending line index
};

// Extract the three blocks; throws WrongApex if any other line is populated.
N4State n4_from_state(const SevenQubitState& psi, Qubit apex);
SevenQubitState embed(const N4State& s);

// The 24 numbers split by the apex index: P holds the apex-index-0 slices,
// Q the apex-index-1 slices, three 4-component blocks each, ordered by
// line. The inner product pairs each block with eps (x) eps.
struct PQVector {
    std::array<Complex, 12> P{}, Q{};
};

// Requires apex A; other apexes are handled inside i4_n4 by relabeling.
PQVector pq_split(const N4State& s);

// eps(x)eps pairing, summed over the three blocks: x.y = eps^{i1 i2}
// eps^{j1 j2} x_{i1 j1} y_{i2 j2} per block, with eps^{01} = +1.
Complex pq_dot(const std::array<Complex, 12>& x, const std::array<Complex, 12>& y);

// Quartic invariant of the three-line sector: P^2 Q^2 - (P.Q)^2.
// Independent of the catalog route; valid for every apex.
Complex i4_n4(const N4State& s);

// One-line sector: the invariant collapses to -Det a.
inline Complex i4_n2(const Hypermatrix& a) { return -cayley_det(a); }

}  // namespace fano7
