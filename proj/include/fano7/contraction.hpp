#pragma once

#include <array>
#include <cstdint>

#include "fano7/hypermatrix.hpp"

namespace fano7 {

// One index slot of a four-tensor contraction: which tensor (0..3), which
// axis (0..2), and the qubit label carried by that axis. Labels are opaque
// ids; paired slots must carry equal labels.
struct Slot {
    std::uint8_t tensor;
    std::uint8_t axis;
    std::uint8_t label;
};

// A full epsilon contraction of four 2x2x2 tensors: 12 slots matched into
// 6 pairs. Within a pair the first slot is the "upper-left" epsilon index,
// so swapping a pair's slot order negates the value.
struct ContractionPattern {
    std::array<Slot, 12> slots{};
    std::array<std::array<std::uint8_t, 2>, 6> pairs{};
};

// Throws InvalidPattern unless every (tensor, axis) combination appears
// exactly once, the pairs form a perfect matching on slots, and paired
// slots carry equal labels.
void validate(const ContractionPattern& p);

// Precompiled evaluation plan. Only pair assignments with opposite binary
// indices survive the epsilon weights, so the sum has 2^6 = 64 terms; each
// step caches the sign and the four flat entry offsets.
class ContractionPlan {
  public:
    explicit ContractionPlan(const ContractionPattern& p);

    Complex evaluate(const Hypermatrix& t0, const Hypermatrix& t1, const Hypermatrix& t2,
                     const Hypermatrix& t3) const;

  private:
    struct Step {
        std::int8_t sign;
        std::array<std::uint8_t, 4> offset;
    };
    std::array<Step, 64> steps_{};
};

// Convention: eps^{01} = +1, eps^{10} = -1, eps^{00} = eps^{11} = 0.
Complex epsilon_contract(const std::array<const Hypermatrix*, 4>& tensors,
                         const ContractionPattern& pattern);

}  // namespace fano7
