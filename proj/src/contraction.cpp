#include "fano7/contraction.hpp"

#include <bit>

#include "fano7/errors.hpp"

namespace fano7 {

void validate(const ContractionPattern& p) {
    bool seen_slot[4][3] = {};
    for (const Slot& s : p.slots) {
        if (s.tensor > 3) throw InvalidPattern("slot tensor position out of range");
        if (s.axis > 2) throw InvalidPattern("slot axis out of range");
        if (seen_slot[s.tensor][s.axis]) throw InvalidPattern("duplicate (tensor, axis) slot");
        seen_slot[s.tensor][s.axis] = true;
    }
    bool used[12] = {};
    for (const auto& pr : p.pairs) {
        for (std::uint8_t i : pr) {
            if (i >= 12) throw InvalidPattern("pair references slot out of range");
            if (used[i]) throw InvalidPattern("slot appears in more than one pair");
            used[i] = true;
        }
        if (p.slots[pr[0]].label != p.slots[pr[1]].label)
            throw InvalidPattern("paired slots carry different qubit labels");
    }
    for (bool u : used)
        if (!u) throw InvalidPattern("matching is not perfect");
}

ContractionPlan::ContractionPlan(const ContractionPattern& p) {
    validate(p);
    for (int mask = 0; mask < 64; ++mask) {
        Step& st = steps_[mask];
        st.sign = (std::popcount(static_cast<unsigned>(mask)) & 1) ? -1 : 1;
        st.offset = {0, 0, 0, 0};
        for (int pi = 0; pi < 6; ++pi) {
            const int first_bit = (mask >> pi) & 1;  // index of the pair's first slot
            const Slot& s0 = p.slots[p.pairs[pi][0]];
            const Slot& s1 = p.slots[p.pairs[pi][1]];
            st.offset[s0.tensor] |= static_cast<std::uint8_t>(first_bit << (2 - s0.axis));
            st.offset[s1.tensor] |= static_cast<std::uint8_t>((1 - first_bit) << (2 - s1.axis));
        }
    }
}

Complex ContractionPlan::evaluate(const Hypermatrix& t0, const Hypermatrix& t1,
                                  const Hypermatrix& t2, const Hypermatrix& t3) const {
    Complex sum{0.0, 0.0};
    for (const Step& st : steps_) {
        const Complex prod =
            t0.a[st.offset[0]] * t1.a[st.offset[1]] * t2.a[st.offset[2]] * t3.a[st.offset[3]];
        sum += (st.sign > 0) ? prod : -prod;
    }
    return sum;
}

Complex epsilon_contract(const std::array<const Hypermatrix*, 4>& tensors,
                         const ContractionPattern& pattern) {
    ContractionPlan plan(pattern);
    return plan.evaluate(*tensors[0], *tensors[1], *tensors[2], *tensors[3]);
}

}  // namespace fano7
