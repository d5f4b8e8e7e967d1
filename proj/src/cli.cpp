#include "fano7/cli.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fano7/catalog.hpp"
#include "fano7/cayley.hpp"
#include "fano7/charges.hpp"
#include "fano7/errors.hpp"
#include "fano7/group.hpp"
#include "fano7/normalform.hpp"
#include "fano7/rng.hpp"
#include "fano7/statefile.hpp"
#include "fano7/subsectors.hpp"

namespace fano7 {

namespace {

std::string num17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string cnum(const Complex& c) { return num17(c.real()) + "," + num17(c.imag()); }

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, delim)) out.push_back(tok);
    return out;
}

NormalForm parse_rho_phi(const std::string& rho_csv, double phi) {
    const auto parts = split(rho_csv, ',');
    if (parts.size() != 4) throw Error("--rho expects four comma-separated values");
    NormalForm nf;
    for (int i = 0; i < 4; ++i) {
        size_t pos = 0;
        nf.rho[static_cast<size_t>(i)] = std::stod(parts[static_cast<size_t>(i)], &pos);
        if (pos != parts[static_cast<size_t>(i)].size()) throw Error("bad --rho value: " + parts[static_cast<size_t>(i)]);
        if (nf.rho[static_cast<size_t>(i)] < 0.0) throw Error("--rho moduli must be non-negative");
    }
    nf.phi = phi;
    return nf;
}

int cmd_det(const std::string& path, const std::string& line_name, std::ostream& out,
            std::ostream& err) {
    const int idx = line_index_by_name(line_name);
    if (idx < 0) {
        err << "unknown line name: " << line_name << "\n";
        return 1;
    }
    const SevenQubitState psi = load_state_file(path);
    const Hypermatrix& a = psi[idx];
    out << "det=" << cnum(cayley_det(a)) << " tangle3=" << num17(tangle3(a));
    try {
        const char* cls = rebit_class_name(rebit_class_of(a));
        out << " class=" << cls;
    } catch (const NotRebit&) {
        // genuinely complex amplitudes: the class is omitted
    }
    out << "\n";
    return 0;
}

int cmd_i4(const std::string& path, std::ostream& out) {
    const SevenQubitState psi = load_state_file(path);
    const Complex v = i4_fano(psi);
    out << "i4=" << cnum(v) << " tangle7=" << num17(4.0 * std::abs(v)) << "\n";
    return 0;
}

int cmd_classify_file(const std::string& path, double zero_tol, std::ostream& out,
                      std::ostream& err) {
    const SevenQubitState psi = load_state_file(path);
    const Complex v = i4_fano(psi);
    const double scale = std::max(psi.max_abs(), 1.0e-300);
    const double threshold = zero_tol * std::pow(scale, 4);
    if (std::abs(v.imag()) > threshold) {
        err << "ImagTooLarge: I4 has imaginary part " << num17(v.imag())
            << " beyond threshold " << num17(threshold) << "; classification applies to "
            << "real (charge/rebit) states\n";
        return 1;
    }
    const Classification c = classify(v.real(), scale > 0.0 ? scale : 1.0, std::nullopt, zero_tol);
    out << "i4=" << cnum(v) << " kind=" << kind_name(c.kind);
    if (c.kind == HoleKind::Small) out << " bps=" << bps_name(c.bps);
    out << " zero_tol=" << num17(zero_tol) << "\n";
    return 0;
}

int cmd_classify_rho(const NormalForm& nf, double zero_tol, std::ostream& out) {
    const double v = i4_eigen(nf);
    double scale = 0.0;
    for (double r : nf.rho) scale = std::max(scale, r);
    if (scale == 0.0) scale = 1.0;
    const Classification c = classify(v, scale, nf, zero_tol);
    out << "i4=" << num17(v) << " kind=" << kind_name(c.kind);
    if (c.kind == HoleKind::Small) out << " bps=" << bps_name(c.bps);
    out << " zero_tol=" << num17(zero_tol) << "\n";
    return 0;
}

int cmd_entropy(const std::optional<std::string>& path, const std::optional<NormalForm>& nf,
                std::ostream& out) {
    double i4 = 0.0;
    if (path) {
        i4 = std::abs(i4_fano(load_state_file(*path)));
    } else {
        i4 = i4_eigen(*nf);
    }
    out << "S=" << num17(entropy(i4)) << "\n";
    return 0;
}

int cmd_random(const std::string& lines_csv, std::uint64_t seed, bool do_normalize,
               std::ostream& out, std::ostream& err) {
    SevenQubitState psi;
    auto rng = rng_for(seed, 0);
    for (const std::string& name : split(lines_csv, ',')) {
        const int idx = line_index_by_name(name);
        if (idx < 0) {
            err << "unknown line name: " << name << "\n";
            return 1;
        }
        psi[idx] = random_hypermatrix(rng);
    }
    if (do_normalize) psi = normalize(psi);
    out << serialize_state(psi);
    return 0;
}

// ------------------------------------------------------------------
// check suites

int suite_fano(std::ostream& out) {
    const IncidenceReport rep = incidence_report();
    out << "check=line-pairs-share-one-point pairs=" << rep.line_pairs << " status=pass\n";
    out << "check=point-on-three-lines status=pass\n";
    out << "check=point-absent-from-four status=pass\n";
    out << "check=point-pairs-absent-from-two status=pass\n";
    out << "check=triples collinear=" << rep.collinear_triples
        << " noncollinear=" << rep.noncollinear_triples << " status=pass\n";
    out << "note: " << rep.note << "\n";
    return 0;
}

int suite_octonion(std::ostream& out) {
    validate_octonion_table();
    int cyclic = 0, antisym = 0;
    for (const Line& l : canonical_lines()) {
        for (int i = 0; i < 3; ++i) {
            const Qubit x = l.pts[static_cast<size_t>(i)], y = l.pts[static_cast<size_t>((i + 1) % 3)],
                        z = l.pts[static_cast<size_t>((i + 2) % 3)];
            const SignedQubit prod = octonion_product(x, y);
            if (prod.q != z || prod.sign != +1) {
                out << "check=cyclic-relation line=" << l.name() << " status=fail\n";
                return 2;
            }
            ++cyclic;
        }
    }
    for (int x = 0; x < 7; ++x)
        for (int y = x + 1; y < 7; ++y) {
            const SignedQubit xy = octonion_product(qubit(x), qubit(y));
            const SignedQubit yx = octonion_product(qubit(y), qubit(x));
            if (xy.q != yx.q || xy.sign != -yx.sign) {
                out << "check=antisymmetry status=fail\n";
                return 2;
            }
            ++antisym;
        }
    out << "check=cyclic-relations count=" << cyclic << " status=pass\n";
    out << "check=antisymmetry pairs=" << antisym << " status=pass\n";
    return 0;
}

int suite_invariance(std::uint64_t seed, int samples, double tol, std::ostream& out) {
    try {
        const InvarianceReport rep = invariance_suite(seed, samples, tol);
        for (const std::string& line : rep.checks) out << line << "\n";
        out << "max_residual=" << num17(rep.max_residual) << " status=pass\n";
        return 0;
    } catch (const InvarianceViolated& e) {
        out << e.what() << "\n";
        out << "status=fail\n";
        return 2;
    }
}

int suite_oracles(std::uint64_t seed, int samples, std::ostream& out) {
    int rc = 0;
    const TermCatalog& cat = standard_catalog();

    // single-line identity per line
    for (const Line& l : canonical_lines()) {
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            auto rng = rng_for(seed ^ 0x51ULL, static_cast<std::uint64_t>(l.index * 131071 + s));
            SevenQubitState psi;
            psi[l.index] = random_hypermatrix(rng);
            const double denom = std::pow(psi[l.index].max_abs(), 4);
            worst = std::max(worst,
                             std::abs(cat.evaluate(psi) + cayley_det(psi[l.index])) / denom);
        }
        const bool ok = worst <= 1e-11;
        out << "check=single-line:" << l.name() << " residual=" << num17(worst)
            << " status=" << (ok ? "pass" : "fail") << "\n";
        if (!ok) rc = 2;
    }

    // N=4 oracle per apex
    for (int apex = 0; apex < 7; ++apex) {
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            auto rng = rng_for(seed ^ 0x44ULL, static_cast<std::uint64_t>(apex * 131071 + s));
            N4State st;
            st.apex = qubit(apex);
            for (auto& h : st.blocks) h = random_hypermatrix(rng);
            const SevenQubitState psi = embed(st);
            const double denom = std::pow(psi.max_abs(), 4);
            worst = std::max(worst, std::abs(cat.evaluate(psi) - i4_n4(st)) / denom);
        }
        const bool ok = worst <= 1e-10;
        out << "check=n4-oracle:" << qubit_char(qubit(apex)) << " residual=" << num17(worst)
            << " status=" << (ok ? "pass" : "fail") << "\n";
        if (!ok) rc = 2;
    }

    // canonical-basis dictionary
    {
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            auto rng = rng_for(seed ^ 0xcaULL, static_cast<std::uint64_t>(s));
            CanonicalCharges c;
            c.x12 = uniform_pm(rng, 1.0);
            c.x34 = uniform_pm(rng, 1.0);
            c.x56 = uniform_pm(rng, 1.0);
            c.x78 = uniform_pm(rng, 1.0);
            c.y12 = uniform_pm(rng, 1.0);
            c.y34 = uniform_pm(rng, 1.0);
            c.y56 = uniform_pm(rng, 1.0);
            c.y78 = uniform_pm(rng, 1.0);
            SevenQubitState psi;
            psi[0] = charges_to_hypermatrix(c);
            const double denom = std::max(std::pow(psi.max_abs(), 4), 1e-30);
            worst = std::max(worst,
                             std::abs(cat.evaluate(psi).real() - i4_canonical(c)) / denom);
        }
        const bool ok = worst <= 1e-11;
        out << "check=canonical-dictionary residual=" << num17(worst)
            << " status=" << (ok ? "pass" : "fail") << "\n";
        if (!ok) rc = 2;
    }

    // full calibration rerun
    try {
        const CalibrationRecord rec = calibrate_signs(seed, std::max(samples, 100));
        out << "check=calibration cross=" << num17(rec.cross) << " loop=" << num17(rec.loop)
            << " oracle_residual=" << num17(rec.cross_oracle_residual)
            << " measure_bound_max=" << num17(rec.measure_bound_max) << " status=pass\n";
    } catch (const CalibrationFailed& e) {
        out << "check=calibration status=fail (" << e.what() << ")\n";
        rc = 2;
    }
    return rc;
}

int suite_counts(std::ostream& out) {
    const QutritCounts c = qutrit_embedding_counts();
    for (size_t i = 0; i < c.rows.size(); ++i) {
        out << (i ? "," : "") << c.rows[i].multiplicity;
    }
    out << " total " << c.total_dimension << "\n";
    out << "check=lines-in-k3-stratum status=" << (c.lines_in_k3_stratum ? "pass" : "fail")
        << "\n";
    const bool counts_ok = c.total_dimension == 2187;
    out << "check=total-dimension status=" << (counts_ok ? "pass" : "fail") << "\n";
    return (c.lines_in_k3_stratum && counts_ok) ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tripartite entanglement of seven qubits on the Fano plane: "
                 "hyperdeterminants, the Cartan quartic invariant, classification"};
    app.require_subcommand(1);

    // det
    std::string det_file, det_line = "ABD";
    auto* det = app.add_subcommand("det", "Hyperdeterminant and 3-tangle of one line");
    det->add_option("file", det_file, "state file")->required();
    det->add_option("--line", det_line, "line name (default ABD)");

    // i4
    std::string i4_file;
    auto* i4cmd = app.add_subcommand("i4", "Quartic invariant and 7-qubit tangle");
    i4cmd->add_option("file", i4_file, "state file")->required();

    // classify
    std::string cls_file, cls_rho;
    double cls_phi = 0.0, cls_zero_tol = 1e-8;
    auto* cls = app.add_subcommand("classify", "Large/small classification");
    cls->add_option("file", cls_file, "state file");
    cls->add_option("--rho", cls_rho, "four moduli r1,r2,r3,r4");
    cls->add_option("--phi", cls_phi, "residual phase (radians)");
    cls->add_option("--zero-tol", cls_zero_tol, "zero threshold, relative to scale^4");

    // entropy
    std::string ent_file, ent_rho;
    double ent_phi = 0.0;
    auto* ent = app.add_subcommand("entropy", "Horizon entropy pi*sqrt|I4|");
    ent->add_option("file", ent_file, "state file");
    ent->add_option("--rho", ent_rho, "four moduli r1,r2,r3,r4");
    ent->add_option("--phi", ent_phi, "residual phase (radians)");

    // check
    std::string suite;
    std::uint64_t seed = 42;
    int samples = 100;
    double tol = 1e-9;
    auto* chk = app.add_subcommand("check", "Verification suites");
    chk->add_option("--suite", suite, "fano|octonion|invariance|oracles|counts")->required();
    chk->add_option("--seed", seed, "random seed");
    chk->add_option("--samples", samples, "sample count");
    chk->add_option("--tol", tol, "residual tolerance");

    // random
    std::string rnd_lines;
    std::uint64_t rnd_seed = 0;
    bool rnd_norm = false;
    auto* rnd = app.add_subcommand("random", "Deterministic random state file");
    rnd->add_option("--lines", rnd_lines, "comma-separated line names")->required();
    rnd->add_option("--seed", rnd_seed, "random seed");
    rnd->add_flag("--normalize", rnd_norm, "scale to unit norm");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (det->parsed()) return cmd_det(det_file, det_line, out, err);
        if (i4cmd->parsed()) return cmd_i4(i4_file, out);
        if (cls->parsed()) {
            const bool has_file = !cls_file.empty(), has_rho = !cls_rho.empty();
            if (has_file == has_rho) {
                err << "classify: give exactly one of <file> or --rho\n";
                return 1;
            }
            if (has_file) return cmd_classify_file(cls_file, cls_zero_tol, out, err);
            return cmd_classify_rho(parse_rho_phi(cls_rho, cls_phi), cls_zero_tol, out);
        }
        if (ent->parsed()) {
            const bool has_file = !ent_file.empty(), has_rho = !ent_rho.empty();
            if (has_file == has_rho) {
                err << "entropy: give exactly one of <file> or --rho\n";
                return 1;
            }
            if (has_file) return cmd_entropy(ent_file, std::nullopt, out);
            return cmd_entropy(std::nullopt, parse_rho_phi(ent_rho, ent_phi), out);
        }
        if (chk->parsed()) {
            if (suite == "fano") return suite_fano(out);
            if (suite == "octonion") return suite_octonion(out);
            if (suite == "invariance") return suite_invariance(seed, samples, tol, out);
            if (suite == "oracles") return suite_oracles(seed, samples, out);
            if (suite == "counts") return suite_counts(out);
            err << "unknown suite: " << suite << "\n";
            return 1;
        }
        if (rnd->parsed()) return cmd_random(rnd_lines, rnd_seed, rnd_norm, out, err);
    } catch (const StructureBroken& e) {
        err << "structure check failed: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace fano7
