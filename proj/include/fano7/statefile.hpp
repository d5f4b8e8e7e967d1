#pragma once

#include <iosfwd>
#include <string>

#include "fano7/fano.hpp"

namespace fano7 {

// State file layout: a top-level object with a "lines" mapping from the
// canonical line name to 8 [re, im] pairs in binary index order; omitted
// lines are zero. Throws StateFileError on anything malformed: unknown
// line names, wrong entry counts, non-finite numbers.
SevenQubitState parse_state(const std::string& text);
SevenQubitState load_state_file(const std::string& path);

// Deterministic serialization: numbers printed with 17 significant
// digits (lossless for doubles), lines in canonical order, zero blocks
// omitted.
std::string serialize_state(const SevenQubitState& psi);

}  // namespace fano7
