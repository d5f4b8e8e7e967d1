#include "fano7/catalog.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "fano7/cayley.hpp"
#include "fano7/errors.hpp"
#include "fano7/rng.hpp"
#include "fano7/subsectors.hpp"

namespace fano7 {

const char* term_class_name(TermClass c) {
    switch (c) {
        case TermClass::Quartic: return "quartic";
        case TermClass::Cross: return "cross";
        case TermClass::Loop: return "loop";
    }
    return "?";
}

std::string QuarticTerm::line_ids() const {
    std::string out;
    const int unique = (cls == TermClass::Quartic) ? 1 : (cls == TermClass::Cross) ? 2 : 4;
    const int step = (cls == TermClass::Cross) ? 2 : 1;
    for (int i = 0; i < unique; ++i) {
        if (i) out += ',';
        out += line(lines[static_cast<size_t>(i * step)]).name();
    }
    return out;
}

namespace {

// Slot index: tensor position t, axis ax -> t*3 + ax.
constexpr std::uint8_t slot_at(int t, int ax) { return static_cast<std::uint8_t>(t * 3 + ax); }

void fill_slots(ContractionPattern& p, const std::array<int, 4>& lines_idx) {
    for (int t = 0; t < 4; ++t) {
        const Line& l = line(lines_idx[static_cast<size_t>(t)]);
        for (int ax = 0; ax < 3; ++ax)
            p.slots[slot_at(t, ax)] =
                Slot{static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(ax),
                     static_cast<std::uint8_t>(id(l.pts[static_cast<size_t>(ax)]))};
    }
}

QuarticTerm make_quartic_term(int line_idx, double coeff) {
    QuarticTerm term;
    term.cls = TermClass::Quartic;
    term.lines = {line_idx, line_idx, line_idx, line_idx};
    term.coefficient = coeff;
    fill_slots(term.pattern, term.lines);
    // the canonical hyperdeterminant pairing: first two axes within the
    // copy pairs (0,1) and (2,3), third axis crossing as (0,3), (1,2)
    term.pattern.pairs[0] = {slot_at(0, 0), slot_at(1, 0)};
    term.pattern.pairs[1] = {slot_at(0, 1), slot_at(1, 1)};
    term.pattern.pairs[2] = {slot_at(2, 0), slot_at(3, 0)};
    term.pattern.pairs[3] = {slot_at(2, 1), slot_at(3, 1)};
    term.pattern.pairs[4] = {slot_at(0, 2), slot_at(3, 2)};
    term.pattern.pairs[5] = {slot_at(1, 2), slot_at(2, 2)};
    return term;
}

QuarticTerm make_cross_term(int li, int lj, double coeff) {
    QuarticTerm term;
    term.cls = TermClass::Cross;
    term.lines = {li, li, lj, lj};
    term.coefficient = coeff;
    fill_slots(term.pattern, term.lines);

    const Line& a = line(li);
    const Line& b = line(lj);
    Qubit shared = a.pts[0];
    int shared_count = 0;
    for (Qubit p : a.pts)
        if (b.contains(p)) {
            shared = p;
            ++shared_count;
        }
    if (shared_count != 1) throw StructureBroken("cross term lines do not share one point");

    int np = 0;
    // the shared point's four indices, contracted across the two pairs
    const int ax_a = a.axis_of(shared), ax_b = b.axis_of(shared);
    term.pattern.pairs[static_cast<size_t>(np++)] = {slot_at(0, ax_a), slot_at(2, ax_b)};
    term.pattern.pairs[static_cast<size_t>(np++)] = {slot_at(1, ax_a), slot_at(3, ax_b)};
    // every other label within its own pair of copies
    for (int ax = 0; ax < 3; ++ax) {
        if (ax != ax_a) term.pattern.pairs[static_cast<size_t>(np++)] = {slot_at(0, ax), slot_at(1, ax)};
        if (ax != ax_b) term.pattern.pairs[static_cast<size_t>(np++)] = {slot_at(2, ax), slot_at(3, ax)};
    }
    return term;
}

QuarticTerm make_loop_term(Qubit omitted, double coeff) {
    QuarticTerm term;
    term.cls = TermClass::Loop;
    const auto loop = loop_lines(omitted);
    term.lines = {loop[0], loop[1], loop[2], loop[3]};
    term.coefficient = coeff;
    fill_slots(term.pattern, term.lines);

    // each label except the omitted point occurs in exactly two of the
    // four lines; contract its two slots, earlier tensor position first
    int np = 0;
    for (int p = 0; p < 7; ++p) {
        const Qubit label = qubit(p);
        if (label == omitted) continue;
        std::array<std::uint8_t, 2> pair{};
        int found = 0;
        for (int t = 0; t < 4; ++t) {
            const int ax = line(term.lines[static_cast<size_t>(t)]).axis_of(label);
            if (ax >= 0) {
                if (found < 2) pair[static_cast<size_t>(found)] = slot_at(t, ax);
                ++found;
            }
        }
        if (found != 2) throw StructureBroken("loop label does not occur exactly twice");
        term.pattern.pairs[static_cast<size_t>(np++)] = pair;
    }
    return term;
}

}  // namespace

TermCatalog::TermCatalog(const CalibrationRecord& rec) : record_(rec) {
    terms_.reserve(35);
    for (int k = 0; k < 7; ++k) terms_.push_back(make_quartic_term(k, rec.quartic));
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) terms_.push_back(make_cross_term(i, j, rec.cross));
    for (int p = 0; p < 7; ++p) terms_.push_back(make_loop_term(qubit(p), rec.loop));
    plans_.reserve(terms_.size());
    for (const QuarticTerm& t : terms_) plans_.emplace_back(t.pattern);
}

int TermCatalog::quartic_count() const { return 7; }
int TermCatalog::cross_count() const { return 21; }
int TermCatalog::loop_count() const { return 7; }

Complex TermCatalog::evaluate_term(int term_index, const SevenQubitState& psi) const {
    const QuarticTerm& t = terms_[static_cast<size_t>(term_index)];
    const auto& ls = t.lines;
    return t.coefficient * plans_[static_cast<size_t>(term_index)].evaluate(
                               psi[ls[0]], psi[ls[1]], psi[ls[2]], psi[ls[3]]);
}

Complex TermCatalog::evaluate(const SevenQubitState& psi) const {
    Complex sum{0.0, 0.0};
    for (int i = 0; i < static_cast<int>(terms_.size()); ++i) {
        const QuarticTerm& t = terms_[static_cast<size_t>(i)];
        // skip terms with an unpopulated line; they contribute zero
        bool zero = false;
        for (int li : t.lines)
            if (psi[li].is_zero()) {
                zero = true;
                break;
            }
        if (!zero) sum += evaluate_term(i, psi);
    }
    return sum;
}

TermCatalog TermCatalog::with_cross_negated(int cross_ordinal) const {
    if (cross_ordinal < 0 || cross_ordinal >= 21)
        throw Error("with_cross_negated: ordinal out of range");
    TermCatalog out = *this;
    QuarticTerm& t = out.terms_[static_cast<size_t>(7 + cross_ordinal)];
    t.coefficient = -t.coefficient;
    return out;
}

const TermCatalog& standard_catalog() {
    static const TermCatalog cat{CalibrationRecord{}};
    return cat;
}

TermCatalog build_catalog(const CalibrationRecord& rec) { return TermCatalog(rec); }
TermCatalog build_catalog() { return TermCatalog(CalibrationRecord{}); }

Complex i4_fano(const SevenQubitState& psi) { return standard_catalog().evaluate(psi); }
Complex i4_fano(const SevenQubitState& psi, const TermCatalog& catalog) {
    return catalog.evaluate(psi);
}

double tangle7(const SevenQubitState& psi) { return 4.0 * std::abs(i4_fano(psi)); }

// ---------------------------------------------------------------------

CalibrationRecord calibrate_signs(std::uint64_t seed, int samples) {
    CalibrationRecord rec;

    // Quartic normalization: the single-line term must reproduce -Det.
    // The canonical contraction of four copies evaluates to -2 Det, so
    // the coefficient is (-Det)/(-2 Det) on any state with Det != 0.
    {
        Hypermatrix ghz;
        const double c = 1.0 / std::sqrt(2.0);
        ghz.at(0, 0, 0) = c;
        ghz.at(1, 1, 1) = c;
        const Complex det = cayley_det(ghz);
        const Complex raw = cayley_det_contracted(ghz) * -2.0;  // the raw contraction
        rec.quartic = (-det / raw).real();
        if (std::abs(-det / raw - Complex{rec.quartic, 0.0}) > 1e-12)
            throw CalibrationFailed("quartic anchor is not real");
    }

    // Cross sign: require agreement with the N=4 oracle on random
    // three-line states at every apex; exactly one sign may fit.
    const double cross_mag = 2.0 * std::abs(rec.quartic);
    double chosen_cross = 0.0;
    double chosen_residual = 0.0;
    for (double sign : {+1.0, -1.0}) {
        CalibrationRecord trial = rec;
        trial.cross = sign * cross_mag;
        trial.loop = 0.0;  // loops vanish on three-concurrent-line states anyway
        const TermCatalog cat(trial);
        double worst = 0.0;
        const int n = std::max(8, samples / 16);
        for (int apex = 0; apex < 7; ++apex) {
            for (int s = 0; s < n; ++s) {
                auto rng = rng_for(seed ^ 0xc705c705ULL, static_cast<std::uint64_t>(apex * 100003 + s));
                N4State st;
                st.apex = qubit(apex);
                for (auto& h : st.blocks) h = random_hypermatrix(rng);
                const SevenQubitState psi = embed(st);
                const double scale = std::max(psi.max_abs(), 1e-30);
                const Complex lhs = cat.evaluate(psi);
                const Complex rhs = i4_n4(st);
                worst = std::max(worst, std::abs(lhs - rhs) / std::pow(scale, 4));
            }
        }
        if (worst <= 1e-9) {
            if (chosen_cross != 0.0)
                throw CalibrationFailed("both cross signs satisfy the N=4 oracle");
            chosen_cross = trial.cross;
            chosen_residual = worst;
        }
    }
    if (chosen_cross == 0.0)
        throw CalibrationFailed("no cross sign satisfies the N=4 oracle within 1e-9");
    rec.cross = chosen_cross;
    rec.cross_oracle_residual = chosen_residual;

    // Loop sign: plus, as printed, at magnitude ratio 8; then screen the
    // measure bound on normalized random states plus the dedicated probe.
    // A loop sign that pushes 4|I4| past 1 is rejected here.
    rec.loop = 8.0 * std::abs(rec.quartic);
    {
        const TermCatalog cat(rec);
        const SevenQubitState probe = loop_sign_probe_state();
        double max_measure = 4.0 * std::abs(cat.evaluate(probe));
        for (int s = 0; s < samples; ++s) {
            auto rng = rng_for(seed ^ 0x100bULL, static_cast<std::uint64_t>(s));
            SevenQubitState psi;
            for (auto& h : psi.blocks) h = random_hypermatrix(rng);
            psi = normalize(psi);
            max_measure = std::max(max_measure, 4.0 * std::abs(cat.evaluate(psi)));
        }
        if (max_measure > 1.0 + 1e-6)
            throw CalibrationFailed("sampled measure bound exceeded: max 4|I4| = " +
                                    std::to_string(max_measure));
        rec.measure_bound_max = max_measure;

        CalibrationRecord negated = rec;
        negated.loop = -rec.loop;
        const double opposite = 4.0 * std::abs(TermCatalog(negated).evaluate(probe));
        if (opposite > 1.0 + 1e-6) {
            rec.loop_sign_note =
                "loop sign pinned: the negated sign reaches 4|I4| = " +
                std::to_string(opposite) + " > 1 on the probe state";
        } else {
            rec.loop_sign_note =
                "loop sign taken positive as printed; the sampled bound did not "
                "separate the signs on this run";
        }
    }
    return rec;
}

SevenQubitState loop_sign_probe_state() {
    // found by hill-climbing the measure of the negated-loop catalog;
    // amplitudes in thousandths, normalized below
    static constexpr int kW[7][16] = {
        {-22, 15, 103, -183, 177, 54, 60, -29, 172, -53, 38, -70, -125, -8, 121, -119},
        {-120, -145, -82, 45, -87, 25, -129, -119, -87, 1, -55, -169, 0, -179, -62, 91},
        {151, -122, -69, 71, 86, 15, 160, -50, 46, -120, -133, -42, -65, 131, -159, -25},
        {1, -79, -149, -93, -110, 127, 131, -31, -84, 174, -74, -62, -71, 82, -144, 67},
        {32, 41, 124, 143, 20, -192, -2, 86, -160, -132, -36, -16, 4, -8, 66, 185},
        {-39, -60, 168, 114, -79, -158, -62, 46, 155, 96, 50, -35, -45, -108, 103, -148},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    };
    SevenQubitState psi;
    for (int li = 0; li < 7; ++li)
        for (int k = 0; k < 8; ++k)
            psi[li].a[static_cast<size_t>(k)] =
                Complex{kW[li][2 * k] / 1000.0, kW[li][2 * k + 1] / 1000.0};
    return normalize(psi);
}

// ---------------------------------------------------------------------

void save_calibration(const CalibrationRecord& rec, std::ostream& out) {
    const TermCatalog cat(rec);
    out.precision(17);
    for (const QuarticTerm& t : cat.terms())
        out << term_class_name(t.cls) << ' ' << t.line_ids() << ' ' << t.coefficient << '\n';
}

void save_calibration_file(const CalibrationRecord& rec, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot write calibration file: " + path);
    save_calibration(rec, f);
}

CalibrationRecord load_calibration(std::istream& in) {
    CalibrationRecord rec;
    bool have_q = false, have_c = false, have_l = false;
    std::string cls, ids;
    double coeff = 0.0;
    int n = 0;
    while (in >> cls >> ids >> coeff) {
        ++n;
        if (cls == "quartic") {
            if (have_q && coeff != rec.quartic)
                throw CalibrationFailed("inconsistent quartic coefficients in record");
            rec.quartic = coeff;
            have_q = true;
        } else if (cls == "cross") {
            if (have_c && coeff != rec.cross)
                throw CalibrationFailed("inconsistent cross coefficients in record");
            rec.cross = coeff;
            have_c = true;
        } else if (cls == "loop") {
            if (have_l && coeff != rec.loop)
                throw CalibrationFailed("inconsistent loop coefficients in record");
            rec.loop = coeff;
            have_l = true;
        } else {
            throw CalibrationFailed("unknown term class in record: " + cls);
        }
    }
    if (n != 35 || !have_q || !have_c || !have_l)
        throw CalibrationFailed("calibration record must list all 35 terms");
    return rec;
}

CalibrationRecord load_calibration_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CalibrationMissing("calibration file not found: " + path);
    return load_calibration(f);
}

}  // namespace fano7
