#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "fano7/hypermatrix.hpp"

namespace fano7 {

// The seven qubits, canonically numbered 0..6 in letter order.
enum class Qubit : std::uint8_t { A = 0, B, C, D, E, F, G };

constexpr int kPoints = 7;
constexpr int kLines = 7;

char qubit_char(Qubit q);
Qubit qubit_from_char(char c);  // throws Error on anything outside A..G
inline int id(Qubit q) { return static_cast<int>(q); }
inline Qubit qubit(int i) { return static_cast<Qubit>(((i % 7) + 7) % 7); }

// One oriented line of the plane. The internal point order is the literal
// letter order of the canonical list ABD, BCE, CDF, DEG, EFA, FGB, GAC;
// line k is {k, k+1, k+3} mod 7.
struct Line {
    std::array<Qubit, 3> pts;
    int index;  // canonical position 0..6

    bool contains(Qubit q) const {
        return pts[0] == q || pts[1] == q || pts[2] == q;
    }
    int axis_of(Qubit q) const;  // 0..2, or -1 if absent
    std::string name() const;    // e.g. "ABD"
};

const std::array<Line, 7>& canonical_lines();
const Line& line(int index);
int line_index_by_name(const std::string& name);  // -1 if not canonical

// The unique canonical line through two distinct points; throws SamePoint.
const Line& line_through(Qubit x, Qubit y);

// Canonical indices of the three lines through a point, ascending.
std::array<int, 3> lines_through(Qubit p);

// The four lines avoiding point p, in the cyclic order that makes the
// loop contractions covariant under the shift automorphism:
// indices (p+1, p+2, p+3, p+5) mod 7.
std::array<int, 4> loop_lines(Qubit p);

// ---------------------------------------------------------------------
// Octonion multiplication table

struct SignedQubit {
    Qubit q;
    int sign;  // +1 or -1
};

// Product of two distinct imaginary units; throws DiagonalUndefined for
// x == y (the table's diagonal is blank). The table is stored as data and
// validated at startup against the line-orientation rule, so a
// transcription error fails loudly.
SignedQubit octonion_product(Qubit x, Qubit y);

// Throws StructureBroken if the stored table disagrees with the rule
// "for every line (X,Y,Z) in cyclic order: XY=+Z, YZ=+X, ZX=+Y" or is not
// antisymmetric.
void validate_octonion_table();

// ---------------------------------------------------------------------
// The 56-component state: one 2x2x2 block per line

struct SevenQubitState {
    std::array<Hypermatrix, 7> blocks{};  // indexed by canonical line index

    Hypermatrix& operator[](int line_idx) { return blocks[static_cast<size_t>(line_idx)]; }
    const Hypermatrix& operator[](int line_idx) const {
        return blocks[static_cast<size_t>(line_idx)];
    }
    double max_abs() const;
    bool finite() const;
};

double state_norm(const SevenQubitState& psi);
SevenQubitState normalize(const SevenQubitState& psi);  // throws ZeroState

// ---------------------------------------------------------------------
// Incidence structure

struct IncidenceReport {
    // (i) every pair of lines shares exactly one point
    int line_pairs = 0;
    bool pair_shared_point_ok = false;
    // (ii) every point lies on exactly 3 lines and is absent from 4
    bool point_on_three_ok = false;
    bool point_absent_four_ok = false;
    // (iii) every pair of points is jointly absent from exactly 2 lines
    bool point_pair_absent_two_ok = false;
    // (iv) triples: collinear triples are absent from 0 lines,
    //      non-collinear triples from exactly 1
    int collinear_triples = 0;
    int noncollinear_triples = 0;
    bool triple_counts_ok = false;
    // Enumerated fact: a non-collinear triple IS jointly excluded from one
    // line, so the blanket claim "three individuals are never excluded"
    // holds only for collinear triples. Recorded, not asserted.
    bool every_triple_somewhere_included = false;
    std::string note;
};

// Verify the canonical plane; throws StructureBroken on any deviation.
IncidenceReport incidence_report();

// Same checks against an arbitrary line table (for corruption tests).
IncidenceReport incidence_report_for(const std::array<Line, 7>& lines);

// ---------------------------------------------------------------------
// Qutrit embedding counts

struct QutritRow {
    int doublets;           // number of 2's in the factor pattern
    long multiplicity;      // C(7, doublets)
    long dim_per_term;      // 2^doublets
};

struct QutritCounts {
    std::array<QutritRow, 8> rows;  // doublets = 7 down to 0
    long total_dimension;           // sum multiplicity * dim = 3^7
    bool lines_in_k3_stratum;       // all 7 line patterns among the k=3 terms
};

QutritCounts qutrit_embedding_counts();

}  // namespace fano7
