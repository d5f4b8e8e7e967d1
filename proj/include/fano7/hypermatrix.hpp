#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace fano7 {

using Complex = std::complex<double>;

// 2x2x2 coefficient tensor of one tripartite block. Entries are stored in
// binary index order 000,001,...,111; axis 0 is the first qubit of the
// owning line, axis 1 the second, axis 2 the third.
struct Hypermatrix {
    std::array<Complex, 8> a{};

    static constexpr int index(int i, int j, int k) { return (i << 2) | (j << 1) | k; }

    Complex& at(int i, int j, int k) { return a[index(i, j, k)]; }
    const Complex& at(int i, int j, int k) const { return a[index(i, j, k)]; }

    bool finite() const;
    bool is_zero() const;
    double max_abs() const;

    Hypermatrix& operator+=(const Hypermatrix& o);
    Hypermatrix operator*(Complex c) const;
};

// 2x2 complex matrix; group elements are expected to have det == 1.
struct SL2 {
    Complex m00{1.0}, m01{0.0}, m10{0.0}, m11{1.0};

    Complex det() const { return m00 * m11 - m01 * m10; }
    bool unimodular(double tol = 1e-12) const;
    SL2 operator*(const SL2& o) const;  // matrix product

    static SL2 identity() { return {}; }
};

// Apply g along one axis (0..2): a'_{i...} = sum_j g_{ij} a_{j...}.
Hypermatrix apply_sl2(const Hypermatrix& a, const SL2& g, int axis);

// Permute tensor axes; perm[m] is the destination position of axis m.
// A single entry at (i0,i1,i2) moves to the index whose perm[m]-th
// position equals i_m.
Hypermatrix triality_permute(const Hypermatrix& a, const std::array<int, 3>& perm);

}  // namespace fano7
