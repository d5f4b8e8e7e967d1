#include "fano7/group.hpp"

#include <cmath>
#include <sstream>

#include "fano7/catalog.hpp"
#include "fano7/cayley.hpp"
#include "fano7/errors.hpp"
#include "fano7/rng.hpp"

namespace fano7 {

SL2Tuple SL2Tuple::after(const SL2Tuple& other) const {
    SL2Tuple out;
    for (int i = 0; i < 7; ++i) out.g[static_cast<size_t>(i)] = g[static_cast<size_t>(i)] * other.g[static_cast<size_t>(i)];
    return out;
}

SL2 random_sl2(std::uint64_t seed, double spread) {
    if (!(spread > 0.0)) throw Error("random_sl2: spread must be positive");
    auto rng = rng_for(seed, 0);
    for (int attempt = 0; attempt < 100; ++attempt) {
        SL2 m{random_complex(rng, spread), random_complex(rng, spread),
              random_complex(rng, spread), random_complex(rng, spread)};
        const Complex d = m.det();
        if (std::abs(d) < 1e-6 * spread * spread) continue;  // near-singular, redraw
        const Complex root = std::sqrt(d);
        m.m00 /= root;
        m.m01 /= root;
        m.m10 /= root;
        m.m11 /= root;
        return m;
    }
    throw Degenerate("random_sl2: 100 near-singular draws in a row");
}

SL2Tuple random_sl2_tuple(std::uint64_t seed, double spread) {
    SL2Tuple t;
    for (int i = 0; i < 7; ++i) t.g[static_cast<size_t>(i)] = random_sl2(mix_seed(seed) + static_cast<std::uint64_t>(i), spread);
    return t;
}

FanoAutomorphism FanoAutomorphism::identity() {
    FanoAutomorphism s;
    for (int i = 0; i < 7; ++i) s.map[static_cast<size_t>(i)] = qubit(i);
    return s;
}

FanoAutomorphism FanoAutomorphism::shift() {
    FanoAutomorphism s;
    for (int i = 0; i < 7; ++i) s.map[static_cast<size_t>(i)] = qubit(i + 1);
    return s;
}

FanoAutomorphism FanoAutomorphism::doubling() {
    FanoAutomorphism s;
    for (int i = 0; i < 7; ++i) s.map[static_cast<size_t>(i)] = qubit(2 * i);
    return s;
}

FanoAutomorphism FanoAutomorphism::then(const FanoAutomorphism& second) const {
    FanoAutomorphism out;
    for (int i = 0; i < 7; ++i) out.map[static_cast<size_t>(i)] = second(map[static_cast<size_t>(i)]);
    return out;
}

FanoAutomorphism FanoAutomorphism::from_map(const std::array<Qubit, 7>& m) {
    bool seen[7] = {};
    for (Qubit q : m) {
        if (seen[id(q)]) throw NotAutomorphism("point map is not a permutation");
        seen[id(q)] = true;
    }
    FanoAutomorphism s;
    s.map = m;
    for (const Line& l : canonical_lines()) {
        // image of the line must be a canonical line as a set
        bool found = false;
        for (const Line& c : canonical_lines()) {
            int hits = 0;
            for (Qubit p : l.pts)
                if (c.contains(s(p))) ++hits;
            if (hits == 3) {
                found = true;
                break;
            }
        }
        if (!found) throw NotAutomorphism("map breaks line " + l.name());
    }
    return s;
}

SevenQubitState act(const SevenQubitState& psi, const SL2Tuple& g) {
    SevenQubitState out = psi;
    for (const Line& l : canonical_lines()) {
        Hypermatrix h = out[l.index];
        for (int ax = 0; ax < 3; ++ax) h = apply_sl2(h, g[l.pts[static_cast<size_t>(ax)]], ax);
        out[l.index] = h;
    }
    return out;
}

SevenQubitState relabel(const SevenQubitState& psi, const FanoAutomorphism& sigma) {
    SevenQubitState out;
    for (const Line& l : canonical_lines()) {
        const Qubit i0 = sigma(l.pts[0]), i1 = sigma(l.pts[1]), i2 = sigma(l.pts[2]);
        const Line& img = line_through(i0, i1);
        if (!img.contains(i2)) throw NotAutomorphism("map breaks line " + l.name());
        // axis m of the source block lands on the image line's axis of
        // sigma(point m)
        std::array<int, 3> perm{};
        perm[0] = img.axis_of(i0);
        perm[1] = img.axis_of(i1);
        perm[2] = img.axis_of(i2);
        out[img.index] = triality_permute(psi[l.index], perm);
    }
    return out;
}

InvarianceReport invariance_suite(std::uint64_t seed, int samples, double tol) {
    if (samples < 1) throw Error("invariance_suite: samples must be >= 1");
    const TermCatalog& cat = standard_catalog();
    InvarianceReport rep;
    rep.samples = samples;

    const FanoAutomorphism shift = FanoAutomorphism::shift();
    const FanoAutomorphism dbl = FanoAutomorphism::doubling();

    for (int s = 0; s < samples; ++s) {
        auto rng = rng_for(seed, static_cast<std::uint64_t>(s));
        SevenQubitState psi;
        for (auto& h : psi.blocks) h = random_hypermatrix(rng);
        const Complex i4 = cat.evaluate(psi);
        const double scale_in = psi.max_abs();

        // group action
        const SL2Tuple g = random_sl2_tuple(rng(), 1.0);
        const SevenQubitState moved = act(psi, g);
        const double scale = std::max(scale_in, moved.max_abs());
        const double denom = std::pow(scale, 4);
        const double res_g = std::abs(cat.evaluate(moved) - i4) / denom;

        // per-line hyperdeterminant invariance under the induced [SL(2)]^3
        double res_det = 0.0;
        for (const Line& l : canonical_lines()) {
            const double block_scale =
                std::max({psi[l.index].max_abs(), moved[l.index].max_abs(), 1e-30});
            res_det = std::max(res_det, std::abs(cayley_det(moved[l.index]) -
                                                 cayley_det(psi[l.index])) /
                                            std::pow(block_scale, 4));
        }

        // relabeling: random word in shift and doubling
        FanoAutomorphism sigma = FanoAutomorphism::identity();
        const int a = static_cast<int>(rng() % 7), b = static_cast<int>(rng() % 3);
        for (int i = 0; i < a; ++i) sigma = sigma.then(shift);
        for (int i = 0; i < b; ++i) sigma = sigma.then(dbl);
        const double res_s =
            std::abs(cat.evaluate(relabel(psi, sigma)) - i4) / std::pow(scale_in, 4);

        const double worst = std::max({res_g, res_det, res_s});
        {
            std::ostringstream line;
            line.precision(3);
            line << "sample=" << s << " sl2_residual=" << res_g << " det_residual=" << res_det
                 << " relabel_residual=" << res_s;
            rep.checks.push_back(line.str());
        }
        rep.max_residual = std::max(rep.max_residual, worst);
        if (worst > tol) {
            std::ostringstream msg;
            msg << "invariance violated at sample " << s << " (seed " << seed
                << "): residual " << worst << " > tol " << tol;
            throw InvarianceViolated(msg.str());
        }
    }
    rep.pass = true;
    return rep;
}

}  // namespace fano7
