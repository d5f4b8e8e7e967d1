#include "fano7/normalform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fano7/cayley.hpp"
#include "fano7/errors.hpp"

namespace fano7 {

double i4_eigen(const NormalForm& nf) {
    const double r1 = nf.rho[0], r2 = nf.rho[1], r3 = nf.rho[2], r4 = nf.rho[3];
    const double prod = r1 * r2 * r3 * r4;
    const double cosp = std::cos(nf.phi);

    // modulus polynomial form
    const double s4 = r1 * r1 * r1 * r1 + r2 * r2 * r2 * r2 + r3 * r3 * r3 * r3 + r4 * r4 * r4 * r4;
    double s22 = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) s22 += nf.rho[static_cast<size_t>(i)] * nf.rho[static_cast<size_t>(i)] * nf.rho[static_cast<size_t>(j)] * nf.rho[static_cast<size_t>(j)];
    const double form_a = s4 - 2.0 * s22 + 8.0 * prod * cosp;

    // factored form
    const double form_b = (r1 + r2 + r3 + r4) * (r1 + r2 - r3 - r4) * (r1 - r2 + r3 - r4) *
                              (r1 - r2 - r3 + r4) +
                          8.0 * prod * (cosp - 1.0);

    const double scale = std::max({r1, r2, r3, r4, 0.0});
    const double tol = 1e-12 * std::max(1.0, scale * scale * scale * scale);
    if (std::abs(form_a - form_b) > tol) {
        std::ostringstream msg;
        msg << "eigenvalue forms disagree: " << form_a << " vs " << form_b;
        throw FormMismatch(msg.str());
    }
    return form_b;
}

std::array<double, 4> normal_form_lambdas(const NormalForm& nf) {
    const double r1 = nf.rho[0], r2 = nf.rho[1], r3 = nf.rho[2], r4 = nf.rho[3];
    const double l1 = r1 + r2 + r3 + r4;
    double rest[3] = {r1 + r2 - r3 - r4, r1 - r2 + r3 - r4, r1 - r2 - r3 + r4};

    // Relabeling the rho's permutes {l2,l3,l4} up to an even number of
    // sign flips, so the product sign is preserved. Sort the magnitudes
    // and park the product sign on the smallest.
    const double prod = rest[0] * rest[1] * rest[2];
    double mags[3] = {std::abs(rest[0]), std::abs(rest[1]), std::abs(rest[2])};
    std::sort(mags, mags + 3, std::greater<double>());
    const double sign = (prod < 0.0) ? -1.0 : 1.0;
    return {l1, mags[0], mags[1], sign * mags[2]};
}

const char* kind_name(HoleKind k) {
    switch (k) {
        case HoleKind::LargeBPS: return "large-bps";
        case HoleKind::LargeNonBPS: return "large-nonbps";
        case HoleKind::Small: return "small";
    }
    return "?";
}

const char* bps_name(BPSFraction f) {
    switch (f) {
        case BPSFraction::Eighth: return "1/8";
        case BPSFraction::Quarter: return "1/4";
        case BPSFraction::Half: return "1/2";
        case BPSFraction::Undetermined: return "undetermined";
    }
    return "?";
}

Classification classify(double i4, double scale, const std::optional<NormalForm>& nf,
                        double zero_tol) {
    if (!(scale > 0.0)) throw Error("classify: scale must be positive");
    Classification out{HoleKind::Small, BPSFraction::Undetermined};
    const double threshold = zero_tol * scale * scale * scale * scale;
    if (std::abs(i4) > threshold) {
        out.kind = (i4 > 0.0) ? HoleKind::LargeBPS : HoleKind::LargeNonBPS;
        return out;
    }
    if (nf) {
        const double phase = std::remainder(nf->phi, 2.0 * M_PI);
        if (std::abs(phase) <= 1e-9) {
            const auto l = normal_form_lambdas(*nf);
            int nonzero = 0;
            for (double v : l)
                if (std::abs(v) > 1e-9 * scale) ++nonzero;
            if (nonzero == 3) out.bps = BPSFraction::Eighth;
            else if (nonzero == 2) out.bps = BPSFraction::Quarter;
            else if (nonzero == 1) out.bps = BPSFraction::Half;
        }
    }
    return out;
}

double entropy(double i4) { return M_PI * std::sqrt(std::abs(i4)); }

const char* rebit_class_name(RebitClass c) {
    switch (c) {
        case RebitClass::GHZNegative: return "ghz-";
        case RebitClass::SeparableOrW: return "sep/W";
        case RebitClass::GHZPositive: return "ghz+";
    }
    return "?";
}

RebitClass rebit_class(double det, double scale) {
    if (!(scale > 0.0)) throw Error("rebit_class: scale must be positive");
    const double threshold = 1e-8 * scale * scale * scale * scale;
    if (det > threshold) return RebitClass::GHZPositive;
    if (det < -threshold) return RebitClass::GHZNegative;
    return RebitClass::SeparableOrW;
}

RebitClass rebit_class_of(const Hypermatrix& a) {
    if (a.is_zero()) return RebitClass::SeparableOrW;
    const double scale = a.max_abs();
    for (const Complex& c : a.a)
        if (std::abs(c.imag()) > 1e-12 * scale)
            throw NotRebit("amplitudes are genuinely complex");
    return rebit_class(cayley_det(a).real(), scale);
}

}  // namespace fano7
