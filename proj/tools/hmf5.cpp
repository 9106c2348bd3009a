// Command-line front end: expand series, verify ring relations, reduce
// points of H^2, decompose forms over the generator ring.

#include "hmf/eisenstein.hpp"
#include "hmf/qexp.hpp"
#include "hmf/reduction.hpp"
#include "hmf/serialize.hpp"
#include "hmf/structure.hpp"
#include "hmf/theta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using nlohmann::json;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;
constexpr int kExitIterationCap = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

int check_bound(int bound) {
    if (bound < 1 || bound > 24) {
        std::cerr << "error: --bound must lie in [1, 24]\n";
        return kExitUsage;
    }
    return 0;
}

json qexp_to_json(const hmf::QExp& f) {
    json arr = json::array();
    for (int n = 0; n <= f.bound; ++n) arr.push_back(hmf::rat_str(f.coeff(n)));
    return json{{"schema", hmf::kSchemaVersion},
                {"weight", f.weight},
                {"q_bound", f.bound},
                {"coeffs", arr}};
}

std::string qexp_to_csv(const hmf::QExp& f) {
    std::string out = "n,num,den\n";
    for (int n = 0; n <= f.bound; ++n) {
        out += std::to_string(n) + ',' + numerator(f.coeff(n)).str() + ',' +
               denominator(f.coeff(n)).str() + '\n';
    }
    return out;
}

int cmd_expand(const std::string& form, int bound, const std::string& format,
               const std::string& out_path) {
    if (int rc = check_bound(bound)) return rc;
    std::optional<hmf::HilbertSeries> hs;
    std::optional<hmf::QExp> qs;
    if (form == "phi2") hs = hmf::phi2(bound);
    else if (form == "chi5") hs = hmf::chi5_theta(bound);
    else if (form == "chi6") hs = hmf::chi6(bound);
    else if (form == "chi_tilde") hs = hmf::chi_tilde(bound);
    else if (form == "E6norm") hs = hmf::eisenstein_series(6, bound);
    else if (form == "elliptic:E2") qs = hmf::e2_q(bound);
    else if (form == "elliptic:E4") qs = hmf::eisenstein_q(4, bound);
    else if (form == "elliptic:E6") qs = hmf::eisenstein_q(6, bound);
    else if (form == "elliptic:Delta") qs = hmf::delta_q(bound);
    else {
        std::cerr << "error: unknown form '" << form << "'\n";
        return kExitUsage;
    }
    if (format == "json") {
        json doc = hs ? hmf::series_to_json(*hs) : qexp_to_json(*qs);
        emit(doc.dump(2) + "\n", out_path);
    } else if (format == "csv") {
        emit(hs ? hmf::series_to_csv(*hs) : qexp_to_csv(*qs), out_path);
    } else {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }
    return 0;
}

int verify_elliptic_system(int bound) {
    int qb = 10 * bound;
    hmf::QExp e2 = hmf::e2_q(qb), e4 = hmf::eisenstein_q(4, qb), e6 = hmf::eisenstein_q(6, qb);
    auto fix = [](hmf::QExp f, int w) { f.weight = w; return f; };
    hmf::QExp r1 = fix(hmf::d_operator(e2), 4) - fix(e2 * e2 - e4, 4).scaled(hmf::Rat(1, 12));
    hmf::QExp r2 = fix(hmf::d_operator(e4), 6) - fix(e2 * e4 - e6, 6).scaled(hmf::Rat(1, 3));
    hmf::QExp r3 = fix(hmf::d_operator(e6), 8) - fix(e2 * e6 - e4 * e4, 8).scaled(hmf::Rat(1, 2));
    bool ok = r1.is_zero() && r2.is_zero() && r3.is_zero();
    std::cout << (ok ? "OK" : "FAIL") << " systeme_elliptic (to q^" << qb << ")\n";
    return ok ? 0 : kExitVerifyFail;
}

int report_residual(const std::string& name, const hmf::HilbertSeries& residual) {
    if (residual.is_zero()) {
        std::cout << "OK " << name << " (to trace " << residual.bound << ")\n";
        return 0;
    }
    const auto& [nu, c] = *residual.coeffs.begin();
    std::cout << "FAIL " << name << ": first nonzero residual at (a=" << nu.a
              << ", b=" << nu.b << "): " << c.str() << "\n";
    return kExitVerifyFail;
}

int cmd_verify(const std::string& relation, int bound) {
    if (int rc = check_bound(bound)) return rc;
    int min_bound = (relation == "klein") ? 8 : 6;
    if (relation != "systeme_elliptic" && bound < min_bound) {
        std::cerr << "warning: bound raised to " << min_bound << " for " << relation << "\n";
        bound = min_bound;
    }
    if (relation == "systeme_elliptic") return verify_elliptic_system(bound);
    if (relation == "systeme2") {
        int rc = report_residual("systeme2_2",
                                 hmf::verify_relation(hmf::RelationName::Systeme2_2, bound));
        int rc2 = report_residual("systeme2_3",
                                  hmf::verify_relation(hmf::RelationName::Systeme2_3, bound));
        return rc ? rc : rc2;
    }
    if (relation == "deri2")
        return report_residual("deri2", hmf::verify_relation(hmf::RelationName::Deri2, bound));
    if (relation == "equadiff")
        return report_residual("equadiff",
                               hmf::verify_relation(hmf::RelationName::Equadiff, bound));
    if (relation == "t_identity")
        return report_residual("t_identity",
                               hmf::verify_relation(hmf::RelationName::TIdentity, bound));
    if (relation == "theta_cross_check") {
        hmf::HilbertSeries c5 = hmf::chi5_theta(bound);
        return report_residual("theta_cross_check",
                               c5 * c5 - hmf::chi5_squared_deri2(bound));
    }
    if (relation == "klein") {
        hmf::HilbertSeries p = hmf::phi2(bound), c5 = hmf::chi5_theta(bound),
                           c6 = hmf::chi6(bound), ct = hmf::chi_tilde(bound);
        hmf::HilbertSeries c5s = c5 * c5, c6s = c6 * c6;
        hmf::HilbertSeries rhs =
            (c5s * c5s * c5s).scaled(hmf::QuadElem(50000L)) -
            (p * p * c6 * c5s * c5s).scaled(hmf::QuadElem(1000L)) +
            (p * p * p * p * p * c5s * c5s) -
            (p * p * p * p * c6s * c5s).scaled(hmf::QuadElem(2L)) +
            (p * c6s * c6 * c5s).scaled(hmf::QuadElem(1800L)) + (p * p * p * c6s * c6s) -
            (c6s * c6s * c6).scaled(hmf::QuadElem(864L));
        return report_residual("klein", ct * ct - rhs.scaled(hmf::QuadElem(hmf::Rat(49, 5))));
    }
    std::cerr << "error: unknown relation '" << relation << "'\n";
    return kExitUsage;
}

std::complex<double> parse_complex(std::string s) {
    std::erase(s, '(');
    std::erase(s, ')');
    std::erase(s, ' ');
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    // split at the last +/- that is not an exponent sign or the leading sign
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto part = [](const std::string& t) -> double {
        if (t == "" || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return std::stod(t);
    };
    if (s.back() == 'i' || s.back() == 'I') {
        std::string im = s.substr(split == std::string::npos ? 0 : split);
        im.pop_back();
        double re = split == std::string::npos ? 0.0 : std::stod(s.substr(0, split));
        return {re, part(im)};
    }
    if (split != std::string::npos)
        throw std::invalid_argument("malformed complex literal: " + s);
    return {std::stod(s), 0.0};
}

int cmd_reduce(const std::string& z1s, const std::string& z2s, const std::string& out_path) {
    hmf::PointH2 p;
    try {
        p.z1 = parse_complex(z1s);
        p.z2 = parse_complex(z2s);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!p.in_upper_half()) {
        std::cerr << "error: point must have positive imaginary parts\n";
        return kExitUsage;
    }
    hmf::ReduceResult r;
    try {
        r = hmf::reduce_to_G(p);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIterationCap;
    }
    json doc{{"gamma", {r.gamma.a.str(), r.gamma.b.str(), r.gamma.c.str(), r.gamma.d.str()}},
             {"point",
              {{"z1", {r.point.z1.real(), r.point.z1.imag()}},
               {"z2", {r.point.z2.real(), r.point.z2.imag()}}}},
             {"iterations", r.iterations},
             {"im_product", r.point.z1.imag() * r.point.z2.imag()}};
    emit(doc.dump(2) + "\n", out_path);
    return 0;
}

json poly_to_json(const hmf::IsobaricPoly& p) {
    json terms = json::array();
    for (const auto& t : p.terms)
        terms.push_back({{"exponents", t.exponents},
                         {"coeff", {hmf::rat_str(t.coeff.x), hmf::rat_str(t.coeff.y)}}});
    return json{{"weight", p.weight}, {"generators", p.generator_names}, {"terms", terms}};
}

int cmd_decompose(const std::string& path, const std::string& basis,
                  const std::string& out_path) {
    json doc;
    hmf::HilbertSeries s;
    try {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot open input file: " + path);
        f >> doc;
        s = hmf::series_from_json(doc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        hmf::IsobaricPoly poly;
        if (basis == "parallel_full") {
            poly = hmf::decompose_any(s);
        } else if (basis == "symmetric_even") {
            poly = hmf::decompose_symmetric_even(s);
        } else if (basis == "elliptic") {
            hmf::QExp diag = s.restrict_diagonal();
            hmf::EllipticDecomposition d = hmf::isobaric_decompose_elliptic(diag);
            if (!d.ok) throw std::domain_error("not in the ring");
            poly.generator_names = {"E4", "E6"};
            poly.generator_weights = {4, 6};
            poly.weight = diag.weight;
            for (const auto& t : d.terms)
                poly.terms.push_back({{t.e4_exp, t.e6_exp}, hmf::QuadElem(t.coeff)});
        } else {
            std::cerr << "error: unknown basis '" << basis << "'\n";
            return kExitUsage;
        }
        emit(poly_to_json(poly).dump(2) + "\n", out_path);
        return 0;
    } catch (const std::domain_error& e) {
        std::cerr << "not in the ring: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert modular forms for Q(sqrt5): exact expansions and reduction"};
    app.require_subcommand(1);

    int bound = 6;
    std::string format = "json", out_path, form, relation, z1s, z2s, in_path,
                basis = "parallel_full";

    auto* expand = app.add_subcommand("expand", "print a series expansion");
    expand->add_option("form", form,
                       "phi2|chi5|chi6|chi_tilde|E6norm|elliptic:{E2,E4,E6,Delta}")
        ->required();
    expand->add_option("--bound", bound, "trace bound (1..24)");
    expand->add_option("--format", format, "json|csv");
    expand->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "verify a ring relation");
    verify->add_option("relation", relation,
                       "systeme_elliptic|systeme2|deri2|equadiff|klein|t_identity|"
                       "theta_cross_check")
        ->required();
    verify->add_option("--bound", bound, "trace bound (1..24)");

    auto* reduce = app.add_subcommand("reduce", "reduce a point of H^2");
    reduce->add_option("z1", z1s, "first coordinate, e.g. 0.3+0.2i")->required();
    reduce->add_option("z2", z2s, "second coordinate")->required();
    reduce->add_option("--out", out_path, "output path (default stdout)");

    auto* decompose = app.add_subcommand("decompose", "decompose a series document");
    decompose->add_option("input", in_path, "JSON series document")->required();
    decompose->add_option("--basis", basis, "parallel_full|symmetric_even|elliptic");
    decompose->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (expand->parsed()) return cmd_expand(form, bound, format, out_path);
        if (verify->parsed()) return cmd_verify(relation, bound);
        if (reduce->parsed()) return cmd_reduce(z1s, z2s, out_path);
        if (decompose->parsed()) return cmd_decompose(in_path, basis, out_path);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
