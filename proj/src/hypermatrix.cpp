#include "fano7/hypermatrix.hpp"

#include <cmath>
#include <stdexcept>

namespace fano7 {

bool Hypermatrix::finite() const {
    for (const auto& c : a) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
}

bool Hypermatrix::is_zero() const {
    for (const auto& c : a) {
        if (c != Complex{0.0, 0.0}) return false;
    }
    return true;
}

double Hypermatrix::max_abs() const {
    double m = 0.0;
    for (const auto& c : a) m = std::max(m, std::abs(c));
    return m;
}

Hypermatrix& Hypermatrix::operator+=(const Hypermatrix& o) {
    for (int i = 0; i < 8; ++i) a[i] += o.a[i];
    return *this;
}

Hypermatrix Hypermatrix::operator*(Complex c) const {
    Hypermatrix r;
    for (int i = 0; i < 8; ++i) r.a[i] = a[i] * c;
    return r;
}

bool SL2::unimodular(double tol) const {
    double scale = 0.0;
    for (Complex c : {m00, m01, m10, m11}) scale = std::max(scale, std::abs(c));
    double ref = std::max(1.0, scale * scale);
    return std::abs(det() - Complex{1.0, 0.0}) <= tol * ref;
}

SL2 SL2::operator*(const SL2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

Hypermatrix apply_sl2(const Hypermatrix& a, const SL2& g, int axis) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("apply_sl2: axis must be 0, 1 or 2");
    Hypermatrix r;
    const int shift = 2 - axis;
    for (int idx = 0; idx < 8; ++idx) {
        const int bit = (idx >> shift) & 1;
        // row `bit` of g times the two source entries along `axis`
        const Complex g0 = (bit == 0) ? g.m00 : g.m10;
        const Complex g1 = (bit == 0) ? g.m01 : g.m11;
        const int src0 = (idx & ~(1 << shift));
        const int src1 = src0 | (1 << shift);
        r.a[idx] = g0 * a.a[src0] + g1 * a.a[src1];
    }
    return r;
}

Hypermatrix triality_permute(const Hypermatrix& a, const std::array<int, 3>& perm) {
    bool seen[3] = {false, false, false};
    for (int m = 0; m < 3; ++m) {
        if (perm[m] < 0 || perm[m] > 2 || seen[perm[m]])
            throw std::invalid_argument("triality_permute: not a permutation of {0,1,2}");
        seen[perm[m]] = true;
    }
    Hypermatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const int src[3] = {i, j, k};
                int dst[3] = {0, 0, 0};
                for (int m = 0; m < 3; ++m) dst[perm[m]] = src[m];
                r.at(dst[0], dst[1], dst[2]) = a.at(i, j, k);
            }
    return r;
}

}  // namespace fano7
