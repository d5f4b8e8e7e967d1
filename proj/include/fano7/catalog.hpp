#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fano7/contraction.hpp"
#include "fano7/fano.hpp"

namespace fano7 {

enum class TermClass { Quartic, Cross, Loop };

const char* term_class_name(TermClass c);

// One monomial class of the 35-term decomposition: the participating
// lines (with multiplicity, in pattern order), the contraction, and the
// signed coefficient multiplying the raw contraction value.
struct QuarticTerm {
    TermClass cls;
    std::array<int, 4> lines;  // canonical line indices, one per tensor position
    double coefficient;
    ContractionPattern pattern;

    std::string line_ids() const;  // e.g. "ABD,BCE,CDF,EFA"
};

// Per-class signed coefficients of the raw contractions. The quartic
// value 1/2 makes a single-line term equal exactly -Det of that line
// (the canonical contraction evaluates to -2 Det); cross and loop follow
// at magnitude ratio 1 : 2 : 8.
struct CalibrationRecord {
    double quartic = 0.5;
    double cross = 1.0;
    double loop = 4.0;

    // diagnostics filled in by calibrate_signs
    double cross_oracle_residual = 0.0;   // worst i4 vs N=4 oracle mismatch
    double measure_bound_max = 0.0;       // max 4|I4| over the sampled screen
    std::string loop_sign_note;
};

// The full 35-term catalog: 7 quartic (one per line), 21 cross (one per
// line pair), 7 loop (one per omitted point, lines in cyclic order).
class TermCatalog {
  public:
    explicit TermCatalog(const CalibrationRecord& rec);

    const std::vector<QuarticTerm>& terms() const { return terms_; }
    const CalibrationRecord& record() const { return record_; }

    Complex evaluate(const SevenQubitState& psi) const;
    Complex evaluate_term(int term_index, const SevenQubitState& psi) const;

    // Copy with one cross coefficient negated (mutation testing hook).
    TermCatalog with_cross_negated(int cross_ordinal) const;

    int quartic_count() const;
    int cross_count() const;
    int loop_count() const;

  private:
    CalibrationRecord record_;
    std::vector<QuarticTerm> terms_;
    std::vector<ContractionPlan> plans_;
};

// Catalog with the frozen calibrated coefficients.
const TermCatalog& standard_catalog();

// Catalog from an explicit record (build_catalog() uses the frozen one).
TermCatalog build_catalog(const CalibrationRecord& rec);
TermCatalog build_catalog();

// Cartan quartic invariant of the 56-component state; complex in
// general, real for real-amplitude states.
Complex i4_fano(const SevenQubitState& psi);
Complex i4_fano(const SevenQubitState& psi, const TermCatalog& catalog);

// Seven-qubit entanglement measure, 4|I4|.
double tangle7(const SevenQubitState& psi);

// A normalized state, found by numerical optimization, that separates
// the two loop-sign hypotheses: the calibrated catalog stays within the
// measure bound on it while the negated loop sign reaches 4|I4| ~ 4/3.
// Two overlapping loop quadruples interfere there (every line except GAC
// is populated).
SevenQubitState loop_sign_probe_state();

// Re-derive the signed coefficients from the oracles: the quartic
// normalization from the single-line identity, the cross sign from the
// N=4 three-line oracle at every apex, the loop sign as printed subject
// to the measure bound max 4|I4| <= 1 + 1e-6 over `samples` normalized
// random states plus the probe state above. Throws CalibrationFailed if
// no assignment fits within 1e-9 relative.
CalibrationRecord calibrate_signs(std::uint64_t seed, int samples);

// Text persistence, one line per term: `class line-ids coefficient`.
void save_calibration(const CalibrationRecord& rec, std::ostream& out);
void save_calibration_file(const CalibrationRecord& rec, const std::string& path);
CalibrationRecord load_calibration(std::istream& in);
// Throws CalibrationMissing if the file cannot be opened.
CalibrationRecord load_calibration_file(const std::string& path);

}  // namespace fano7
