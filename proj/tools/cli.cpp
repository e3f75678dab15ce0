#include "cli.hpp"

#include <CLI11.hpp>

#include "hpgforge/io.hpp"
#include "hpgforge/isogeny.hpp"
#include "hpgforge/numeric.hpp"
#include "hpgforge/ramification.hpp"
#include "hpgforge/selftest.hpp"

namespace hpgforge::cli {

namespace {

Family parse_family(const std::string& s) {
    if (s == "e1") return Family::E1;
    if (s == "e2") return Family::E2;
    if (s == "e3") return Family::E3;
    throw std::invalid_argument("unknown family (want e1|e2|e3): " + s);
}

Ring parse_ring(const std::string& s) {
    if (s == "gauss") return Ring::Gauss;
    if (s == "eisenstein") return Ring::Eisenstein;
    throw std::invalid_argument("unknown ring (want gauss|eisenstein): " + s);
}

CurveId family_curve(Family f) {
    switch (f) {
        case Family::E1: return CurveId::E1;
        case Family::E2: return CurveId::E2;
        case Family::E3: return CurveId::E3;
    }
    throw std::logic_error("family_curve: unreachable");
}

std::string text_render(const Transformation& t) {
    std::ostringstream os;
    os << "2F1" << t.source << "(z) = theta(z) * 2F1" << t.target << "(phi(z))\n";
    os << "  phi(z)   = " << t.phi << "\n";
    os << "  theta(z) = ";
    if (t.theta.terms.empty()) os << "1";
    for (size_t k = 0; k < t.theta.terms.size(); ++k) {
        if (k) os << " * ";
        os << "[" << t.theta.terms[k].base << "]^(" << rat_to_string(t.theta.terms[k].exp)
           << ")";
    }
    os << "\n";
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact hypergeometric self-transformations from CM isogenies"};
    app.require_subcommand(1);

    std::string family_s = "e1", element_s = "1", format_s = "text", ring_s = "gauss";
    long max_norm = 25, degree = 1, points = 10, prec = 30;
    double tol = 1e-20;

    auto* gen = app.add_subcommand("gen", "generate a transformation for one lattice element");
    gen->add_option("--family", family_s, "e1|e2|e3")->required();
    gen->add_option("--element", element_s, "lattice element, e.g. \"2+1i\" or \"2-1w\"")
        ->required();
    gen->add_option("--format", format_s, "json|latex|text");

    auto* verify = app.add_subcommand("verify", "exact triple checks up to a norm bound");
    verify->add_option("--family", family_s, "e1|e2|e3")->required();
    verify->add_option("--max-norm", max_norm, "largest norm(u) to check");

    auto* oracle = app.add_subcommand("oracle-check",
                                      "triple pullback vs isogeny pullback equality");
    oracle->add_option("--family", family_s, "e1|e2|e3")->required();
    oracle->add_option("--max-norm", max_norm, "largest norm(u) to check");

    auto* numeric = app.add_subcommand("numeric-check", "high-precision identity check");
    numeric->add_option("--family", family_s, "e1|e2|e3")->required();
    numeric->add_option("--element", element_s, "lattice element")->required();
    numeric->add_option("--prec", prec, "working precision, decimal digits");
    numeric->add_option("--points", points, "number of sample points");
    numeric->add_option("--tol", tol, "pass threshold on the max relative error");

    auto* norms = app.add_subcommand("norms", "list canonical elements of one norm");
    norms->add_option("--degree", degree, "the norm d")->required();
    norms->add_option("--ring", ring_s, "gauss|eisenstein")->required();

    auto* ram = app.add_subcommand("ramify", "branching pattern and covering-table row");
    ram->add_option("--family", family_s, "e1|e2|e3")->required();
    ram->add_option("--element", element_s, "lattice element")->required();

    app.add_subcommand("selftest", "run the full acceptance suite");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            const Family f = parse_family(family_s);
            const RingElement u = parse_ring_element(element_s, family_ring(f));
            const Triple t = triple_for_element(f, u);
            const Transformation tr = to_transformation(t);
            if (format_s == "json")
                out << transformation_to_json(tr, &t).dump(2) << "\n";
            else if (format_s == "latex")
                out << transformation_to_latex(tr) << "\n";
            else
                out << t << "\n" << text_render(tr);
            return 0;
        }
        if (verify->parsed()) {
            const Family f = parse_family(family_s);
            TripleCache cache;
            long count = 0;
            for (const auto& u : canonical_elements_up_to_norm(family_ring(f), max_norm)) {
                const Triple t = generate(f, u, cache);
                if (!verify_triple(t)) {
                    err << "FAIL: triple for u=" << u << " is invalid\n";
                    return 1;
                }
                if (BigInt(to_transformation(t).phi.degree()) != norm(u)) {
                    err << "FAIL: degree law violated at u=" << u << "\n";
                    return 1;
                }
                ++count;
            }
            out << "ok: " << count << " triples of norm <= " << max_norm
                << " verified exactly\n";
            return 0;
        }
        if (oracle->parsed()) {
            const Family f = parse_family(family_s);
            const CurveId c = family_curve(f);
            TripleCache cache;
            IsogenyCache icache;
            long count = 0;
            for (const auto& u : canonical_elements_up_to_norm(family_ring(f), max_norm)) {
                if (!(oracle_pullback(c, u, icache) ==
                      to_transformation(generate(f, u, cache)).phi)) {
                    err << "FAIL: oracle disagrees at u=" << u << "\n";
                    return 1;
                }
                ++count;
            }
            out << "ok: " << count << " pullback maps agree with the isogeny oracle\n";
            return 0;
        }
        if (numeric->parsed()) {
            const Family f = parse_family(family_s);
            const RingElement u = parse_ring_element(element_s, family_ring(f));
            const Transformation tr = to_transformation(triple_for_element(f, u));
            const auto pts = branch_safe_points(tr, static_cast<int>(points), prec);
            const HpReal e = verify_identity(tr, pts, prec);
            const double ed = e.to_double();
            out << "max relative error " << e.to_string(3) << " at " << pts.size()
                << " points (prec " << prec << ")\n";
            if (ed < tol) {
                out << "pass (tol " << tol << ")\n";
                return 0;
            }
            out << "fail (tol " << tol << ")\n";
            return 1;
        }
        if (norms->parsed()) {
            const Ring r = parse_ring(ring_s);
            const auto v = elements_of_norm(BigInt(degree), r);
            if (v.empty()) {
                out << "(empty) -- no transformation of degree " << degree << "\n";
                return 0;
            }
            for (const auto& u : v) out << to_string(u) << "\n";
            return 0;
        }
        if (ram->parsed()) {
            const Family f = parse_family(family_s);
            const RingElement u = parse_ring_element(element_s, family_ring(f));
            const Transformation tr = to_transformation(triple_for_element(f, u));
            const RamificationPattern p = ramify(tr.phi);
            out << "degree " << p.degree << ": " << pattern_to_string(p) << "\n";
            out << "distinct points above {0,1,inf}: " << distinct_point_count(p) << " (= d+2: "
                << (distinct_point_count(p) == p.degree + 2 ? "yes" : "NO") << ")\n";
            const ExpTriple ex = side_exponents(family_side(f));
            if (auto row = match_table1(p, ex, ex))
                out << "covering-table row " << *row << " for " << family_side(f) << " -> "
                    << family_side(f) << "\n";
            else
                out << "no covering-table row matches\n";
            return 0;
        }
        // selftest
        const auto results = selftest::run_all(out);
        return selftest::all_passed(results) ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hpgforge::cli
