#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "fano7/catalog.hpp"
#include "fano7/cayley.hpp"
#include "fano7/charges.hpp"
#include "fano7/errors.hpp"
#include "fano7/normalform.hpp"
#include "fano7/rng.hpp"
#include "fano7/subsectors.hpp"
#include "test_util.hpp"

using namespace fano7;

namespace {

CanonicalCharges random_charges(std::uint64_t seed) {
    auto rng = rng_for(seed, 0);
    CanonicalCharges c;
    c.x12 = uniform_pm(rng, 1.0);
    c.x34 = uniform_pm(rng, 1.0);
    c.x56 = uniform_pm(rng, 1.0);
    c.x78 = uniform_pm(rng, 1.0);
    c.y12 = uniform_pm(rng, 1.0);
    c.y34 = uniform_pm(rng, 1.0);
    c.y56 = uniform_pm(rng, 1.0);
    c.y78 = uniform_pm(rng, 1.0);
    return c;
}

}  // namespace

TEST_CASE("catalog structure") {
    const TermCatalog& cat = standard_catalog();
    CHECK(cat.terms().size() == 35);
    int quartic = 0, cross = 0, loop = 0;
    for (const QuarticTerm& t : cat.terms()) {
        switch (t.cls) {
            case TermClass::Quartic: ++quartic; break;
            case TermClass::Cross: ++cross; break;
            case TermClass::Loop: ++loop; break;
        }
    }
    CHECK(quartic == 7);
    CHECK(cross == 21);
    CHECK(loop == 7);

    // coefficient magnitudes in ratio 1 : 2 : 8
    const CalibrationRecord& rec = cat.record();
    CHECK(std::abs(rec.cross) == doctest::Approx(2.0 * std::abs(rec.quartic)));
    CHECK(std::abs(rec.loop) == doctest::Approx(8.0 * std::abs(rec.quartic)));

    // the loop term omitting G uses {ABD, BCE, CDF, EFA}
    for (const QuarticTerm& t : cat.terms()) {
        if (t.cls != TermClass::Loop) continue;
        bool omits_g = true;
        for (int li : t.lines)
            if (line(li).contains(Qubit::G)) omits_g = false;
        if (omits_g) CHECK(t.line_ids() == "ABD,BCE,CDF,EFA");
    }

    // every cross pair shares exactly one point; spot check ABD/FGB -> B
    for (const QuarticTerm& t : cat.terms()) {
        if (t.cls != TermClass::Cross) continue;
        const Line& a = line(t.lines[0]);
        const Line& b = line(t.lines[2]);
        int shared = 0;
        Qubit pt = Qubit::A;
        for (int p = 0; p < 7; ++p)
            if (a.contains(qubit(p)) && b.contains(qubit(p))) {
                ++shared;
                pt = qubit(p);
            }
        CHECK(shared == 1);
        if (a.name() == "ABD" && b.name() == "FGB") CHECK(pt == Qubit::B);
    }
}

TEST_CASE("restricted to a single line the catalog equals -Det") {
    // 1000 random single-line states on each of the 7 lines
    for (int li = 0; li < 7; ++li) {
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            auto rng = rng_for(0x11e5ULL ^ static_cast<std::uint64_t>(li), static_cast<std::uint64_t>(trial));
            SevenQubitState psi;
            psi[li] = random_hypermatrix(rng);
            const double denom = std::pow(psi[li].max_abs(), 4);
            worst = std::max(worst, std::abs(i4_fano(psi) + cayley_det(psi[li])) / denom);
        }
        CAPTURE(li);
        CHECK(worst <= 1e-11);
    }
}

TEST_CASE("i4 fixtures") {
    SUBCASE("GHZ on ABD gives -1/4 and tangle 1") {
        const SevenQubitState psi = testutil::single_line_state(0, testutil::ghz_tensor());
        CHECK(std::abs(i4_fano(psi) - Complex{-0.25, 0.0}) < 1e-15);
        CHECK(tangle7(psi) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("zero state gives 0") {
        CHECK(i4_fano(SevenQubitState{}) == Complex{0.0, 0.0});
        CHECK(tangle7(SevenQubitState{}) == 0.0);
    }
    SUBCASE("W on a line gives 0") {
        const SevenQubitState psi = testutil::single_line_state(2, testutil::w_tensor());
        CHECK(std::abs(i4_fano(psi)) < 1e-15);
        CHECK(tangle7(psi) < 1e-14);
    }
    SUBCASE("three lines through A equals the N=4 oracle") {
        auto rng = rng_for(405, 0);
        SevenQubitState psi;
        for (int li : lines_through(Qubit::A)) psi[li] = random_hypermatrix(rng);
        const N4State s = n4_from_state(psi, Qubit::A);
        const double denom = std::pow(psi.max_abs(), 4);
        CHECK(std::abs(i4_fano(psi) - i4_n4(s)) <= 1e-10 * denom);
    }
}

TEST_CASE("basis loop states reach tangle 1") {
    // Four basis tensors on the lines omitting G, each label taking index
    // 0 on its earlier line and 1 on its later one; the only surviving
    // catalog term is the loop, with unit epsilon weight. Amplitude 1/2
    // per line normalizes the 56-vector, so 4|I4| = 4 * (1/2)^4 = 1/4*4.
    SevenQubitState psi;
    auto set_basis = [&](int li, int iA, int iB, int iC) {
        Hypermatrix h;
        h.at(iA, iB, iC) = 0.5;
        psi[li] = h;
    };
    set_basis(0, 0, 0, 0);  // ABD: A=0, B=0, D=0
    set_basis(1, 1, 0, 0);  // BCE: B=1, C=0, E=0
    set_basis(2, 1, 1, 0);  // CDF: C=1, D=1, F=0
    set_basis(4, 1, 1, 1);  // EFA: E=1, F=1, A=1
    CHECK(state_norm(psi) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(std::abs(i4_fano(psi)) - 0.25) < 1e-14);
    CHECK(tangle7(psi) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("calibration re-derivation matches the frozen record") {
    const CalibrationRecord rec = calibrate_signs(20240601, 2000);
    const CalibrationRecord& frozen = standard_catalog().record();
    CHECK(rec.quartic == doctest::Approx(frozen.quartic).epsilon(1e-12));
    CHECK(rec.cross == doctest::Approx(frozen.cross).epsilon(1e-12));
    CHECK(rec.loop == doctest::Approx(frozen.loop).epsilon(1e-12));
    CHECK(rec.cross_oracle_residual <= 1e-10);
    CHECK(rec.measure_bound_max <= 1.0 + 1e-6);
}

TEST_CASE("calibration record round-trips through the text format") {
    const CalibrationRecord rec = standard_catalog().record();
    std::ostringstream out;
    save_calibration(rec, out);
    // one line per term: `class line-ids coefficient`
    int lines_count = 0;
    for (char c : out.str())
        if (c == '\n') ++lines_count;
    CHECK(lines_count == 35);
    std::istringstream in(out.str());
    const CalibrationRecord back = load_calibration(in);
    CHECK(back.quartic == rec.quartic);
    CHECK(back.cross == rec.cross);
    CHECK(back.loop == rec.loop);
}

TEST_CASE("missing calibration file") {
    CHECK_THROWS_AS(load_calibration_file("/nonexistent/calibration.txt"), CalibrationMissing);
}

TEST_CASE("shipped calibration file matches the frozen constants") {
    const CalibrationRecord disk = load_calibration_file("data/calibration.txt");
    const CalibrationRecord& frozen = standard_catalog().record();
    CHECK(disk.quartic == frozen.quartic);
    CHECK(disk.cross == frozen.cross);
    CHECK(disk.loop == frozen.loop);
}

TEST_CASE("canonical-basis invariant") {
    SUBCASE("all x = 1, y = 0 gives -4 on both routes") {
        CanonicalCharges c;
        c.x12 = c.x34 = c.x56 = c.x78 = 1.0;
        CHECK(i4_canonical(c) == doctest::Approx(-4.0).epsilon(1e-15));
        const Hypermatrix a = charges_to_hypermatrix(c);
        CHECK(std::abs(cayley_det(a) - Complex{4.0, 0.0}) < 1e-15);
        SevenQubitState psi;
        psi[0] = a;
        CHECK(std::abs(i4_fano(psi) - Complex{-4.0, 0.0}) < 1e-12);
    }
    SUBCASE("trace-square term alone") {
        CanonicalCharges c;
        c.x12 = c.y12 = 1.0;
        CHECK(i4_canonical(c) == doctest::Approx(-1.0).epsilon(1e-15));
    }
    SUBCASE("zero charges") {
        CHECK(i4_canonical(CanonicalCharges{}) == 0.0);
    }
    SUBCASE("matches the catalog through the dictionary on 1000 random draws") {
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const CanonicalCharges c = random_charges(static_cast<std::uint64_t>(trial) + 7000);
            SevenQubitState psi;
            psi[0] = charges_to_hypermatrix(c);
            const double denom = std::max(std::pow(psi.max_abs(), 4), 1e-30);
            worst = std::max(worst, std::abs(i4_fano(psi).real() - i4_canonical(c)) / denom);
        }
        CHECK(worst <= 1e-11);
    }
}

TEST_CASE("charge dictionary round trips") {
    SUBCASE("lambdas and back") {
        for (int trial = 0; trial < 100; ++trial) {
            const CanonicalCharges c = random_charges(static_cast<std::uint64_t>(trial) + 31);
            const CanonicalCharges back = charges_from_lambdas(lambdas(c));
            CHECK(back.x12 == c.x12);
            CHECK(back.y78 == c.y78);
        }
    }
    SUBCASE("hypermatrix and back") {
        for (int trial = 0; trial < 100; ++trial) {
            const CanonicalCharges c = random_charges(static_cast<std::uint64_t>(trial) + 77);
            const CanonicalCharges back = charges_from_hypermatrix(charges_to_hypermatrix(c));
            CHECK(back.x12 == c.x12);
            CHECK(back.x34 == c.x34);
            CHECK(back.x56 == c.x56);
            CHECK(back.x78 == c.x78);
            CHECK(back.y12 == c.y12);
            CHECK(back.y34 == c.y34);
            CHECK(back.y56 == c.y56);
            CHECK(back.y78 == c.y78);
        }
    }
    SUBCASE("black-hole charges and back") {
        for (int trial = 0; trial < 100; ++trial) {
            const CanonicalCharges c = random_charges(static_cast<std::uint64_t>(trial) + 99);
            const CanonicalCharges back = from_black_hole(to_black_hole(c));
            CHECK(back.x12 == c.x12);
            CHECK(back.y34 == c.y34);
        }
    }
    SUBCASE("a111 = 1 alone maps to q0 = -1") {
        Hypermatrix a;
        a.at(1, 1, 1) = 1.0;
        const BlackHoleCharges b = to_black_hole(charges_from_hypermatrix(a));
        CHECK(b.q0 == -1.0);
        CHECK(b.q1 == 0.0);
        CHECK(b.q2 == 0.0);
        CHECK(b.q3 == 0.0);
        CHECK(b.p0 == 0.0);
        CHECK(b.p1 == 0.0);
        CHECK(b.p2 == 0.0);
        CHECK(b.p3 == 0.0);
    }
}

TEST_CASE("eigenvalue form") {
    SUBCASE("fixtures") {
        CHECK(i4_eigen({{3, 1, 1, 1}, 0.0}) == doctest::Approx(48.0).epsilon(1e-14));
        CHECK(i4_eigen({{3, 1, 1, 1}, std::numbers::pi}) == doctest::Approx(0.0));
        CHECK(std::abs(i4_eigen({{3, 1, 1, 1}, std::numbers::pi})) < 1e-12);
        CHECK(std::abs(i4_eigen({{1, 1, 1, 1}, 0.0})) < 1e-15);
    }
    SUBCASE("both printed forms agree on 10^4 random inputs") {
        // i4_eigen itself throws FormMismatch past 1e-12 relative, so a
        // clean sweep is the assertion
        for (int trial = 0; trial < 10000; ++trial) {
            auto rng = rng_for(0xe16e, static_cast<std::uint64_t>(trial));
            NormalForm nf;
            for (auto& r : nf.rho) r = std::abs(uniform_pm(rng, 2.0));
            nf.phi = uniform_pm(rng, std::numbers::pi);
            CHECK_NOTHROW(i4_eigen(nf));
        }
    }
    SUBCASE("phi = 0 reduces to the lambda product") {
        for (int trial = 0; trial < 1000; ++trial) {
            auto rng = rng_for(0x1a3b, static_cast<std::uint64_t>(trial));
            NormalForm nf;
            for (auto& r : nf.rho) r = std::abs(uniform_pm(rng, 2.0));
            nf.phi = 0.0;
            const auto l = normal_form_lambdas(nf);
            const double prod = l[0] * l[1] * l[2] * l[3];
            double scale = 0.0;
            for (double r : nf.rho) scale = std::max(scale, r);
            CHECK(std::abs(prod - i4_eigen(nf)) <= 1e-12 * std::max(1.0, std::pow(scale, 4)));
        }
    }
}

TEST_CASE("normal form lambdas") {
    const auto l1 = normal_form_lambdas({{1, 1, 1, 1}, 0.0});
    CHECK(l1[0] == 4.0);
    CHECK(l1[1] == 0.0);
    CHECK(l1[2] == 0.0);
    CHECK(l1[3] == 0.0);

    const auto l2 = normal_form_lambdas({{3, 1, 1, 1}, 0.0});
    CHECK(l2[0] == 6.0);
    CHECK(l2[1] == 2.0);
    CHECK(l2[2] == 2.0);
    CHECK(l2[3] == 2.0);

    const auto l3 = normal_form_lambdas({{0, 0, 0, 0}, 0.0});
    for (double v : l3) CHECK(v == 0.0);

    // ordering invariant under rho permutations
    for (int trial = 0; trial < 200; ++trial) {
        auto rng = rng_for(0xdeadULL, static_cast<std::uint64_t>(trial));
        NormalForm nf;
        for (auto& r : nf.rho) r = std::abs(uniform_pm(rng, 1.0));
        const auto l = normal_form_lambdas(nf);
        CHECK(l[0] >= l[1]);
        CHECK(l[1] >= l[2]);
        CHECK(l[2] >= std::abs(l[3]));
    }
}

TEST_CASE("classification") {
    SUBCASE("large fixtures") {
        CHECK(classify(48.0, 3.0).kind == HoleKind::LargeBPS);
        CHECK(classify(-0.25, 1.0 / std::sqrt(2.0)).kind == HoleKind::LargeNonBPS);
        CHECK(classify(i4_eigen({{1, 1, 1, 1}, std::numbers::pi}), 1.0).kind ==
              HoleKind::LargeNonBPS);
    }
    SUBCASE("small fixtures with BPS fractions") {
        const NormalForm half{{1, 1, 1, 1}, 0.0};
        const auto c1 = classify(i4_eigen(half), 1.0, half);
        CHECK(c1.kind == HoleKind::Small);
        CHECK(c1.bps == BPSFraction::Half);

        const NormalForm quarter{{1, 1, 0, 0}, 0.0};
        const auto c2 = classify(i4_eigen(quarter), 1.0, quarter);
        CHECK(c2.kind == HoleKind::Small);
        CHECK(c2.bps == BPSFraction::Quarter);

        const NormalForm eighth{{2, 1, 1, 0}, 0.0};
        const auto c3 = classify(i4_eigen(eighth), 2.0, eighth);
        CHECK(c3.kind == HoleKind::Small);
        CHECK(c3.bps == BPSFraction::Eighth);
    }
    SUBCASE("nonzero phase leaves the fraction undetermined") {
        const NormalForm nf{{1, 1, 0, 0}, 0.3};
        const auto c = classify(i4_eigen(nf), 1.0, nf);
        CHECK(c.kind == HoleKind::Small);
        CHECK(c.bps == BPSFraction::Undetermined);
    }
    SUBCASE("scale invariance of the large classes") {
        auto rng = rng_for(0xabc, 0);
        for (int trial = 0; trial < 100; ++trial) {
            const double i4 = uniform_pm(rng, 10.0);
            if (std::abs(i4) < 1e-3) continue;
            const double s = 1.0 + std::abs(uniform_pm(rng, 4.0));
            CHECK(classify(i4, 1.0).kind == classify(i4 * std::pow(s, 4), s).kind);
        }
    }
}

TEST_CASE("entropy") {
    CHECK(entropy(48.0) == doctest::Approx(std::numbers::pi * std::sqrt(48.0)).epsilon(1e-12));
    CHECK(entropy(-0.25) == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
    CHECK(entropy(0.0) == 0.0);
}

TEST_CASE("rebit classes") {
    CHECK(rebit_class(-0.25, 0.5) == RebitClass::GHZNegative);
    CHECK(rebit_class(0.0, 1.0 / std::sqrt(3.0)) == RebitClass::SeparableOrW);
    CHECK(rebit_class(0.25, 0.5) == RebitClass::GHZPositive);

    CHECK(rebit_class_of(testutil::ghz_negative_tensor()) == RebitClass::GHZNegative);
    CHECK(rebit_class_of(testutil::w_tensor()) == RebitClass::SeparableOrW);
    CHECK(rebit_class_of(testutil::ghz_positive_flat_tensor()) == RebitClass::GHZPositive);
    CHECK(rebit_class_of(testutil::ghz_tensor()) == RebitClass::GHZPositive);
    CHECK(rebit_class_of(Hypermatrix{}) == RebitClass::SeparableOrW);

    Hypermatrix complex_amp;
    complex_amp.at(0, 0, 0) = Complex{0.5, 0.5};
    CHECK_THROWS_AS(rebit_class_of(complex_amp), NotRebit);
}

TEST_CASE("sampled measure bound with the GHZ extremum") {
    double max_measure = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        auto rng = rng_for(0x7a, static_cast<std::uint64_t>(trial));
        SevenQubitState psi;
        for (auto& h : psi.blocks) h = random_hypermatrix(rng);
        psi = normalize(psi);
        max_measure = std::max(max_measure, tangle7(psi));
    }
    CHECK(max_measure <= 1.0 + 1e-6);
    const double ghz = tangle7(testutil::single_line_state(0, testutil::ghz_tensor()));
    CHECK(ghz == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ghz >= max_measure - 1e-9);
}

TEST_CASE("the probe state separates the loop-sign hypotheses") {
    const SevenQubitState probe = loop_sign_probe_state();
    CHECK(state_norm(probe) == doctest::Approx(1.0).epsilon(1e-14));
    // the calibrated catalog respects the measure bound here
    CHECK(tangle7(probe) <= 1.0 + 1e-6);
    // the negated loop sign blows through it
    CalibrationRecord negated = standard_catalog().record();
    negated.loop = -negated.loop;
    const TermCatalog wrong(negated);
    CHECK(4.0 * std::abs(wrong.evaluate(probe)) > 1.3);
    // and the calibration run records the separation
    const CalibrationRecord rec = calibrate_signs(7, 200);
    CHECK(rec.loop_sign_note.find("pinned") != std::string::npos);
}

TEST_CASE("negating one cross coefficient breaks the N=4 oracle") {
    const TermCatalog& cat = standard_catalog();
    for (int k = 0; k < 21; ++k) {
        const TermCatalog mutated = cat.with_cross_negated(k);
        // apex = the point shared by the mutated pair, so both lines land
        // in the three-line sector
        const QuarticTerm& t = mutated.terms()[static_cast<size_t>(7 + k)];
        const Line& a = line(t.lines[0]);
        const Line& b = line(t.lines[2]);
        Qubit apex = Qubit::A;
        for (int p = 0; p < 7; ++p)
            if (a.contains(qubit(p)) && b.contains(qubit(p))) apex = qubit(p);

        auto rng = rng_for(0x3141, static_cast<std::uint64_t>(k));
        N4State s;
        s.apex = apex;
        for (auto& h : s.blocks) h = random_hypermatrix(rng);
        const SevenQubitState psi = embed(s);
        const double denom = std::pow(psi.max_abs(), 4);
        const double residual = std::abs(mutated.evaluate(psi) - i4_n4(s)) / denom;
        CAPTURE(k);
        CHECK(residual > 1e-6);
    }
}
