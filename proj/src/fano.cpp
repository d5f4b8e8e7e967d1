#include "fano7/fano.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "fano7/errors.hpp"

namespace fano7 {

char qubit_char(Qubit q) { return static_cast<char>('A' + id(q)); }

Qubit qubit_from_char(char c) {
    if (c < 'A' || c > 'G') throw Error(std::string("not a qubit label: ") + c);
    return static_cast<Qubit>(c - 'A');
}

int Line::axis_of(Qubit q) const {
    for (int ax = 0; ax < 3; ++ax)
        if (pts[static_cast<size_t>(ax)] == q) return ax;
    return -1;
}

std::string Line::name() const {
    return {qubit_char(pts[0]), qubit_char(pts[1]), qubit_char(pts[2])};
}

const std::array<Line, 7>& canonical_lines() {
    static const std::array<Line, 7> lines = [] {
        std::array<Line, 7> ls{};
        for (int k = 0; k < 7; ++k)
            ls[static_cast<size_t>(k)] = Line{{qubit(k), qubit(k + 1), qubit(k + 3)}, k};
        return ls;
    }();
    return lines;
}

const Line& line(int index) { return canonical_lines()[static_cast<size_t>(index)]; }

int line_index_by_name(const std::string& name) {
    for (const Line& l : canonical_lines())
        if (l.name() == name) return l.index;
    return -1;
}

const Line& line_through(Qubit x, Qubit y) {
    if (x == y) throw SamePoint(std::string("line_through(") + qubit_char(x) + ", " +
                                qubit_char(y) + "): points coincide");
    for (const Line& l : canonical_lines())
        if (l.contains(x) && l.contains(y)) return l;
    throw StructureBroken("no canonical line through the pair");  // unreachable
}

std::array<int, 3> lines_through(Qubit p) {
    std::array<int, 3> out{};
    int n = 0;
    for (const Line& l : canonical_lines())
        if (l.contains(p)) out[static_cast<size_t>(n++)] = l.index;
    if (n != 3) throw StructureBroken("point is not on exactly 3 lines");
    return out;
}

std::array<int, 4> loop_lines(Qubit p) {
    const int k = id(p);
    return {(k + 1) % 7, (k + 2) % 7, (k + 3) % 7, (k + 5) % 7};
}

// ---------------------------------------------------------------------

namespace {

// Octonion table, copied entry-for-entry. Row = left factor, column =
// right factor; value is the signed product unit. 0 marks the blank
// diagonal; otherwise sign * (index + 1).
constexpr int kOctonion[7][7] = {
    //        A   B   C   D   E   F   G
    /* A */ { 0, +4, +7, -2, +6, -5, -3},
    /* B */ {-4,  0, +5, +1, -3, +7, -6},
    /* C */ {-7, -5,  0, +6, +2, -4, +1},
    /* D */ {+2, -1, -6,  0, +7, +3, -5},
    /* E */ {-6, +3, -2, -7,  0, +1, +4},
    /* F */ {+5, -7, +4, -3, -1,  0, +2},
    /* G */ {+3, +6, -1, +5, -4, -2,  0},
};

std::once_flag g_table_checked;

}  // namespace

void validate_octonion_table() {
    for (int x = 0; x < 7; ++x) {
        for (int y = 0; y < 7; ++y) {
            if (x == y) {
                if (kOctonion[x][y] != 0) throw StructureBroken("octonion diagonal not blank");
                continue;
            }
            const int v = kOctonion[x][y];
            if (v == 0 || std::abs(v) > 7) throw StructureBroken("octonion entry out of range");
            if (kOctonion[y][x] != -v) throw StructureBroken("octonion table not antisymmetric");
        }
    }
    // cyclic relations along every oriented line
    for (const Line& l : canonical_lines()) {
        for (int i = 0; i < 3; ++i) {
            const int x = id(l.pts[static_cast<size_t>(i)]);
            const int y = id(l.pts[static_cast<size_t>((i + 1) % 3)]);
            const int z = id(l.pts[static_cast<size_t>((i + 2) % 3)]);
            if (kOctonion[x][y] != z + 1)
                throw StructureBroken("octonion table disagrees with line orientation at " +
                                      l.name());
        }
    }
}

SignedQubit octonion_product(Qubit x, Qubit y) {
    std::call_once(g_table_checked, validate_octonion_table);
    if (x == y)
        throw DiagonalUndefined(std::string("octonion_product(") + qubit_char(x) + ", " +
                                qubit_char(y) + "): diagonal is undefined");
    const int v = kOctonion[id(x)][id(y)];
    return {qubit(std::abs(v) - 1), v > 0 ? +1 : -1};
}

// ---------------------------------------------------------------------

double SevenQubitState::max_abs() const {
    double m = 0.0;
    for (const Hypermatrix& h : blocks) m = std::max(m, h.max_abs());
    return m;
}

bool SevenQubitState::finite() const {
    for (const Hypermatrix& h : blocks)
        if (!h.finite()) return false;
    return true;
}

double state_norm(const SevenQubitState& psi) {
    double s2 = 0.0;
    for (const Hypermatrix& h : psi.blocks)
        for (const Complex& c : h.a) s2 += std::norm(c);
    return std::sqrt(s2);
}

SevenQubitState normalize(const SevenQubitState& psi) {
    const double n = state_norm(psi);
    if (n == 0.0) throw ZeroState("normalize: zero state");
    SevenQubitState out = psi;
    for (Hypermatrix& h : out.blocks)
        for (Complex& c : h.a) c /= n;
    return out;
}

// ---------------------------------------------------------------------

IncidenceReport incidence_report_for(const std::array<Line, 7>& lines) {
    IncidenceReport rep;

    // (i) shared points per line pair
    rep.pair_shared_point_ok = true;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            ++rep.line_pairs;
            int shared = 0;
            for (int p = 0; p < 7; ++p)
                if (lines[static_cast<size_t>(i)].contains(qubit(p)) &&
                    lines[static_cast<size_t>(j)].contains(qubit(p)))
                    ++shared;
            if (shared != 1) rep.pair_shared_point_ok = false;
        }
    if (!rep.pair_shared_point_ok)
        throw StructureBroken("a line pair does not share exactly one point");

    // (ii) per-point incidence
    rep.point_on_three_ok = rep.point_absent_four_ok = true;
    for (int p = 0; p < 7; ++p) {
        int on = 0;
        for (const Line& l : lines)
            if (l.contains(qubit(p))) ++on;
        if (on != 3) rep.point_on_three_ok = false;
        if (7 - on != 4) rep.point_absent_four_ok = false;
    }
    if (!rep.point_on_three_ok || !rep.point_absent_four_ok)
        throw StructureBroken("a point is not on exactly 3 of 7 lines");

    // (iii) joint absence of point pairs
    rep.point_pair_absent_two_ok = true;
    for (int p = 0; p < 7; ++p)
        for (int q = p + 1; q < 7; ++q) {
            int absent = 0;
            for (const Line& l : lines)
                if (!l.contains(qubit(p)) && !l.contains(qubit(q))) ++absent;
            if (absent != 2) rep.point_pair_absent_two_ok = false;
        }
    if (!rep.point_pair_absent_two_ok)
        throw StructureBroken("a point pair is not jointly absent from exactly 2 lines");

    // (iv) triples, by brute enumeration
    rep.triple_counts_ok = true;
    rep.every_triple_somewhere_included = true;
    for (int p = 0; p < 7; ++p)
        for (int q = p + 1; q < 7; ++q)
            for (int r = q + 1; r < 7; ++r) {
                bool collinear = false;
                int absent = 0;
                for (const Line& l : lines) {
                    const bool hp = l.contains(qubit(p)), hq = l.contains(qubit(q)),
                               hr = l.contains(qubit(r));
                    if (hp && hq && hr) collinear = true;
                    if (!hp && !hq && !hr) ++absent;
                }
                if (collinear) {
                    ++rep.collinear_triples;
                    if (absent != 0) rep.triple_counts_ok = false;
                } else {
                    ++rep.noncollinear_triples;
                    if (absent != 1) rep.triple_counts_ok = false;
                    if (absent > 0) rep.every_triple_somewhere_included = false;
                }
            }
    if (rep.collinear_triples != 7 || rep.noncollinear_triples != 28 || !rep.triple_counts_ok)
        throw StructureBroken("triple exclusion counts deviate from the Fano values");

    rep.note =
        "every non-collinear triple is jointly absent from exactly one line; "
        "only collinear triples are never excluded";
    return rep;
}

IncidenceReport incidence_report() { return incidence_report_for(canonical_lines()); }

// ---------------------------------------------------------------------

QutritCounts qutrit_embedding_counts() {
    QutritCounts out{};
    long counts[8] = {};
    long line_mask_hits = 0;

    // enumerate the 2^7 doublet/singlet patterns directly
    for (int mask = 0; mask < 128; ++mask) {
        int k = 0;
        for (int b = 0; b < 7; ++b) k += (mask >> b) & 1;
        ++counts[k];
        if (k == 3) {
            for (const Line& l : canonical_lines()) {
                int lm = 0;
                for (Qubit p : l.pts) lm |= 1 << id(p);
                if (lm == mask) ++line_mask_hits;
            }
        }
    }

    long total = 0;
    for (int row = 0; row < 8; ++row) {
        const int k = 7 - row;  // list from seven doublets down to none
        const long dim = 1L << k;
        out.rows[static_cast<size_t>(row)] = QutritRow{k, counts[k], dim};
        total += counts[k] * dim;
    }
    out.total_dimension = total;
    out.lines_in_k3_stratum = (line_mask_hits == 7);
    return out;
}

}  // namespace fano7
