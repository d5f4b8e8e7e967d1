#include "fano7/subsectors.hpp"

#include "fano7/errors.hpp"
#include "fano7/group.hpp"

namespace fano7 {

N4State n4_from_state(const SevenQubitState& psi, Qubit apex) {
    N4State out;
    out.apex = apex;
    const auto through = lines_through(apex);
    for (int k = 0; k < 7; ++k) {
        const bool on = (k == through[0] || k == through[1] || k == through[2]);
        if (!on && !psi[k].is_zero())
            throw WrongApex("state populates line " + line(k).name() + " away from apex " +
                            qubit_char(apex));
    }
    for (int b = 0; b < 3; ++b) out.blocks[static_cast<size_t>(b)] = psi[through[static_cast<size_t>(b)]];
    return out;
}

SevenQubitState embed(const N4State& s) {
    SevenQubitState psi;
    const auto through = lines_through(s.apex);
    for (int b = 0; b < 3; ++b) psi[through[static_cast<size_t>(b)]] = s.blocks[static_cast<size_t>(b)];
    return psi;
}

PQVector pq_split(const N4State& s) {
    if (s.apex != Qubit::A)
        throw WrongApex("pq_split: dictionary is defined at apex A; relabel first");
    PQVector v;
    const auto through = lines_through(Qubit::A);
    for (int b = 0; b < 3; ++b) {
        const Line& l = line(through[static_cast<size_t>(b)]);
        const int ka = l.axis_of(Qubit::A);
        // the two non-apex axes, in line order
        int rem[2], nr = 0;
        for (int ax = 0; ax < 3; ++ax)
            if (ax != ka) rem[nr++] = ax;
        const Hypermatrix& h = s.blocks[static_cast<size_t>(b)];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                int idx0[3], idx1[3];
                idx0[ka] = 0;
                idx1[ka] = 1;
                idx0[rem[0]] = idx1[rem[0]] = i;
                idx0[rem[1]] = idx1[rem[1]] = j;
                v.P[static_cast<size_t>(4 * b + 2 * i + j)] = h.at(idx0[0], idx0[1], idx0[2]);
                v.Q[static_cast<size_t>(4 * b + 2 * i + j)] = h.at(idx1[0], idx1[1], idx1[2]);
            }
    }
    return v;
}

Complex pq_dot(const std::array<Complex, 12>& x, const std::array<Complex, 12>& y) {
    static constexpr double eps[2][2] = {{0.0, 1.0}, {-1.0, 0.0}};
    Complex sum{0.0, 0.0};
    for (int b = 0; b < 3; ++b)
        for (int i1 = 0; i1 < 2; ++i1)
            for (int i2 = 0; i2 < 2; ++i2)
                for (int j1 = 0; j1 < 2; ++j1)
                    for (int j2 = 0; j2 < 2; ++j2) {
                        const double w = eps[i1][i2] * eps[j1][j2];
                        if (w == 0.0) continue;
                        sum += w * x[static_cast<size_t>(4 * b + 2 * i1 + j1)] *
                               y[static_cast<size_t>(4 * b + 2 * i2 + j2)];
                    }
    return sum;
}

Complex i4_n4(const N4State& s) {
    N4State at_a = s;
    if (s.apex != Qubit::A) {
        // shift^k with k = 7 - id(apex) carries the apex to A
        FanoAutomorphism sigma = FanoAutomorphism::identity();
        const FanoAutomorphism step = FanoAutomorphism::shift();
        for (int i = 0; i < (7 - id(s.apex)) % 7; ++i) sigma = sigma.then(step);
        at_a = n4_from_state(relabel(embed(s), sigma), Qubit::A);
    }
    const PQVector v = pq_split(at_a);
    const Complex p2 = pq_dot(v.P, v.P);
    const Complex q2 = pq_dot(v.Q, v.Q);
    const Complex pq = pq_dot(v.P, v.Q);
    return p2 * q2 - pq * pq;
}

}  // namespace fano7
