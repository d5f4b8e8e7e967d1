#include "fano7/charges.hpp"

namespace fano7 {

double i4_canonical(const CanonicalCharges& c) {
    const double trace = c.x12 * c.y12 + c.x34 * c.y34 + c.x56 * c.y56 + c.x78 * c.y78;
    const double quads = c.x12 * c.x34 * c.x56 * c.x78 + c.y12 * c.y34 * c.y56 * c.y78;
    const double mixed = c.x12 * c.x34 * c.y12 * c.y34 + c.x12 * c.x56 * c.y12 * c.y56 +
                         c.x34 * c.x56 * c.y34 * c.y56 + c.x12 * c.x78 * c.y12 * c.y78 +
                         c.x34 * c.x78 * c.y34 * c.y78 + c.x56 * c.x78 * c.y56 * c.y78;
    return -trace * trace - 4.0 * quads + 4.0 * mixed;
}

std::array<Complex, 4> lambdas(const CanonicalCharges& c) {
    return {Complex{c.x12, c.y12}, Complex{c.x34, c.y34}, Complex{c.x56, c.y56},
            Complex{c.x78, c.y78}};
}

CanonicalCharges charges_from_lambdas(const std::array<Complex, 4>& l) {
    CanonicalCharges c;
    c.x12 = l[0].real();
    c.y12 = l[0].imag();
    c.x34 = l[1].real();
    c.y34 = l[1].imag();
    c.x56 = l[2].real();
    c.y56 = l[2].imag();
    c.x78 = l[3].real();
    c.y78 = l[3].imag();
    return c;
}

// lambda_1 = x12 + i y12 = a111 + i a000
// lambda_2 = x34 + i y34 = a001 + i a110
// lambda_3 = x56 + i y56 = a010 + i a101
// lambda_4 = x78 + i y78 = a100 + i a011
Hypermatrix charges_to_hypermatrix(const CanonicalCharges& c) {
    Hypermatrix a;
    a.at(1, 1, 1) = c.x12;
    a.at(0, 0, 0) = c.y12;
    a.at(0, 0, 1) = c.x34;
    a.at(1, 1, 0) = c.y34;
    a.at(0, 1, 0) = c.x56;
    a.at(1, 0, 1) = c.y56;
    a.at(1, 0, 0) = c.x78;
    a.at(0, 1, 1) = c.y78;
    return a;
}

CanonicalCharges charges_from_hypermatrix(const Hypermatrix& a) {
    CanonicalCharges c;
    c.x12 = a.at(1, 1, 1).real();
    c.y12 = a.at(0, 0, 0).real();
    c.x34 = a.at(0, 0, 1).real();
    c.y34 = a.at(1, 1, 0).real();
    c.x56 = a.at(0, 1, 0).real();
    c.y56 = a.at(1, 0, 1).real();
    c.x78 = a.at(1, 0, 0).real();
    c.y78 = a.at(0, 1, 1).real();
    return c;
}

// lambda_1 = -q0 - i p0,  lambda_2 = -p1 + i q1,
// lambda_3 = -p2 + i q2,  lambda_4 = +p3 - i q3
BlackHoleCharges to_black_hole(const CanonicalCharges& c) {
    BlackHoleCharges b;
    b.q0 = -c.x12;
    b.p0 = -c.y12;
    b.p1 = -c.x34;
    b.q1 = c.y34;
    b.p2 = -c.x56;
    b.q2 = c.y56;
    b.p3 = c.x78;
    b.q3 = -c.y78;
    return b;
}

CanonicalCharges from_black_hole(const BlackHoleCharges& b) {
    CanonicalCharges c;
    c.x12 = -b.q0;
    c.y12 = -b.p0;
    c.x34 = -b.p1;
    c.y34 = b.q1;
    c.x56 = -b.p2;
    c.y56 = b.q2;
    c.x78 = b.p3;
    c.y78 = -b.q3;
    return c;
}

}  // namespace fano7
