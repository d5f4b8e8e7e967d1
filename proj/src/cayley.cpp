#include "fano7/cayley.hpp"

#include <algorithm>
#include <cmath>

#include "fano7/rng.hpp"

namespace fano7 {

Complex cayley_det(const Hypermatrix& t) {
    const Complex a000 = t.at(0, 0, 0), a001 = t.at(0, 0, 1), a010 = t.at(0, 1, 0),
                  a011 = t.at(0, 1, 1), a100 = t.at(1, 0, 0), a101 = t.at(1, 0, 1),
                  a110 = t.at(1, 1, 0), a111 = t.at(1, 1, 1);
    const Complex squares = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
                            a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
    const Complex doubles = a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 +
                            a000 * a100 * a011 * a111 + a001 * a010 * a101 * a110 +
                            a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101;
    const Complex quads = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;
    return squares - 2.0 * doubles + 4.0 * quads;
}

ContractionPattern hyperdeterminant_pattern(std::uint8_t l0, std::uint8_t l1, std::uint8_t l2) {
    ContractionPattern p;
    const std::uint8_t labels[3] = {l0, l1, l2};
    for (std::uint8_t t = 0; t < 4; ++t)
        for (std::uint8_t ax = 0; ax < 3; ++ax)
            p.slots[t * 3 + ax] = Slot{t, ax, labels[ax]};
    // The first two axes pair copies (0,1) and (2,3); the third axis
    // crosses the halves, (0,3) and (1,2). Pairing every axis within the
    // same halves would square an antisymmetric two-copy pairing and
    // vanish identically.
    auto slot = [](int t, int ax) { return static_cast<std::uint8_t>(t * 3 + ax); };
    p.pairs[0] = {slot(0, 0), slot(1, 0)};
    p.pairs[1] = {slot(0, 1), slot(1, 1)};
    p.pairs[2] = {slot(2, 0), slot(3, 0)};
    p.pairs[3] = {slot(2, 1), slot(3, 1)};
    p.pairs[4] = {slot(0, 2), slot(3, 2)};
    p.pairs[5] = {slot(1, 2), slot(2, 2)};
    return p;
}

Complex cayley_det_contracted(const Hypermatrix& a) {
    static const ContractionPlan plan{hyperdeterminant_pattern()};
    return -0.5 * plan.evaluate(a, a, a, a);
}

double tangle3(const Hypermatrix& a) { return 4.0 * std::abs(cayley_det(a)); }

namespace {

// State of the witness search: three spinor pairs, each kept with its
// largest-magnitude component pinned at exactly 1.
struct Pairs {
    std::array<Complex, 2> p, q, r;

    static void pin(std::array<Complex, 2>& v) {
        const int big = (std::abs(v[0]) >= std::abs(v[1])) ? 0 : 1;
        const Complex w = v[big];
        v[0] /= w;
        v[1] /= w;
        v[big] = Complex{1.0, 0.0};
    }
};

// The six bilinear equations of the kernel system.
std::array<Complex, 6> residuals(const Hypermatrix& a, const Pairs& s) {
    std::array<Complex, 6> f{};
    for (int A = 0; A < 2; ++A)
        for (int B = 0; B < 2; ++B)
            for (int D = 0; D < 2; ++D) {
                const Complex e = a.at(A, B, D);
                f[0 + D] += e * s.p[A] * s.q[B];  // a_{ABD} p^A q^B
                f[2 + B] += e * s.p[A] * s.r[D];  // a_{ABD} p^A r^D
                f[4 + A] += e * s.q[B] * s.r[D];  // a_{ABD} q^B r^D
            }
    return f;
}

double max_abs(const std::array<Complex, 6>& f) {
    double m = 0.0;
    for (const Complex& c : f) m = std::max(m, std::abs(c));
    return m;
}

// Solve (JhJ + lambda I) d = -Jh f for the three free components, where J
// is the 6x3 Jacobian in the free components (the pinned ones are
// constant). Gaussian elimination with partial pivoting on the 3x3 normal
// system.
bool gn_step(const Hypermatrix& a, const Pairs& s, const std::array<int, 3>& free_idx,
             const std::array<Complex, 6>& f, double lambda, std::array<Complex, 3>& delta) {
    Complex J[6][3] = {};
    const int fp = free_idx[0], fq = free_idx[1], fr = free_idx[2];
    for (int A = 0; A < 2; ++A)
        for (int B = 0; B < 2; ++B)
            for (int D = 0; D < 2; ++D) {
                const Complex e = a.at(A, B, D);
                if (A == fp) {
                    J[0 + D][0] += e * s.q[B];
                    J[2 + B][0] += e * s.r[D];
                }
                if (B == fq) {
                    J[0 + D][1] += e * s.p[A];
                    J[4 + A][1] += e * s.r[D];
                }
                if (D == fr) {
                    J[2 + B][2] += e * s.p[A];
                    J[4 + A][2] += e * s.q[B];
                }
            }
    Complex M[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Complex acc{0.0, 0.0};
            for (int k = 0; k < 6; ++k) acc += std::conj(J[k][i]) * J[k][j];
            M[i][j] = acc;
        }
        M[i][i] += lambda;
        Complex rhs{0.0, 0.0};
        for (int k = 0; k < 6; ++k) rhs += std::conj(J[k][i]) * f[k];
        M[i][3] = -rhs;
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(M[row][col]) > std::abs(M[piv][col])) piv = row;
        if (std::abs(M[piv][col]) < 1e-300) return false;
        if (piv != col)
            for (int j = col; j < 4; ++j) std::swap(M[piv][j], M[col][j]);
        for (int row = col + 1; row < 3; ++row) {
            const Complex m = M[row][col] / M[col][col];
            for (int j = col; j < 4; ++j) M[row][j] -= m * M[col][j];
        }
    }
    for (int i = 2; i >= 0; --i) {
        Complex acc = M[i][3];
        for (int j = i + 1; j < 3; ++j) acc -= M[i][j] * delta[j];
        delta[i] = acc / M[i][i];
    }
    return true;
}

}  // namespace

std::optional<KernelWitness> kernel_witness(const Hypermatrix& a, int max_restarts, double tol,
                                            std::uint64_t seed) {
    const double fscale = std::max(1.0, a.max_abs());
    for (int restart = 0; restart < max_restarts; ++restart) {
        auto rng = rng_for(seed, static_cast<std::uint64_t>(restart));
        Pairs s;
        for (auto* v : {&s.p, &s.q, &s.r}) {
            (*v)[0] = random_complex(rng, 1.0);
            (*v)[1] = random_complex(rng, 1.0);
            Pairs::pin(*v);
        }
        double lambda = 1e-3;
        auto f = residuals(a, s);
        double res = max_abs(f) / fscale;
        for (int iter = 0; iter < 80 && res > tol * 0.01; ++iter) {
            std::array<int, 3> free_idx = {std::abs(s.p[0]) >= std::abs(s.p[1]) ? 1 : 0,
                                           std::abs(s.q[0]) >= std::abs(s.q[1]) ? 1 : 0,
                                           std::abs(s.r[0]) >= std::abs(s.r[1]) ? 1 : 0};
            std::array<Complex, 3> delta;
            if (!gn_step(a, s, free_idx, f, lambda * fscale * fscale, delta)) break;
            Pairs trial = s;
            trial.p[free_idx[0]] += delta[0];
            trial.q[free_idx[1]] += delta[1];
            trial.r[free_idx[2]] += delta[2];
            Pairs::pin(trial.p);
            Pairs::pin(trial.q);
            Pairs::pin(trial.r);
            const auto ft = residuals(a, trial);
            const double rt = max_abs(ft) / fscale;
            if (rt < res) {
                s = trial;
                f = ft;
                res = rt;
                lambda = std::max(lambda / 3.0, 1e-14);
            } else {
                lambda *= 10.0;
                if (lambda > 1e8) break;
            }
        }
        if (res <= tol) return KernelWitness{s.p, s.q, s.r, res, restart + 1};
    }
    return std::nullopt;
}

}  // namespace fano7
