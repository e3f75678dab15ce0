#include "hpgforge/selftest.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "hpgforge/isogeny.hpp"
#include "hpgforge/monodromy.hpp"
#include "hpgforge/numeric.hpp"
#include "hpgforge/ramification.hpp"

namespace hpgforge::selftest {

namespace {

using Coef = std::pair<long, long>;

Poly mk(Ring r, const std::vector<Coef>& cs) {
    std::vector<FieldElement> v;
    for (const auto& [re, im] : cs) v.emplace_back(r, re, im);
    return Poly(r, std::move(v));
}

Poly gp(const std::vector<Coef>& cs) { return mk(Ring::Gauss, cs); }
Poly ep(const std::vector<Coef>& cs) { return mk(Ring::Eisenstein, cs); }

RingElement gi(long a, long b) { return RingElement(Ring::Gauss, a, b); }
RingElement ei(long a, long b) { return RingElement(Ring::Eisenstein, a, b); }

struct PrintedTriple {
    Family family;
    RingElement u;
    Poly P, Q, R;
};

std::vector<PrintedTriple> printed_triples() {
    std::vector<PrintedTriple> v;
    v.push_back({Family::E1, gi(2, 1), gp({{2, 1}, {0, -1}}), gp({{1, 0}, {-1, 2}}),
                 gp({{1, 0}, {2, -8}, {1, 0}})});
    v.push_back({Family::E1, gi(2, 2), gp({{2, 2}}) * gp({{1, 0}, {1, 0}}),
                 gp({{1, 0}, {-6, 0}, {1, 0}}),
                 gp({{1, 0}, {20, 0}, {-26, 0}, {20, 0}, {1, 0}})});
    v.push_back({Family::E1, gi(3, 0), gp({{3, 0}, {-6, 0}, {-1, 0}}),
                 gp({{1, 0}, {6, 0}, {-3, 0}}),
                 gp({{1, 0}, {-28, 0}, {6, 0}, {-28, 0}, {1, 0}})});
    v.push_back({Family::E2, ei(2, -1), ep({{2, -1}, {4, 4}}),
                 ep({{1, 0}, {-44, -48}, {16, 48}}),
                 ep({{1, 0}, {96, 108}, {48, -432}, {-64, 0}})});
    v.push_back({Family::E2, ei(2, -2), ep({{2, -2}}) * ep({{1, 0}, {8, 0}}),
                 ep({{1, 0}, {-4, 0}}) * ep({{1, 0}, {-228, 0}, {48, 0}, {-64, 0}}),
                 ep({{1, 0}, {-20, 0}, {-8, 0}}) *
                     ep({{1, 0}, {536, 0}, {-1344, 0}, {2048, 0}, {-512, 0}})});
    return v;
}

RadicalFactor theta_terms(std::vector<RadicalTerm> ts) {
    RadicalFactor f;
    for (auto& t : ts) f.terms.push_back(std::move(t));
    return f;
}

struct PrintedTransformation {
    Family family;
    RingElement u;
    Transformation t;
};

std::vector<PrintedTransformation> printed_transformations() {
    std::vector<PrintedTransformation> v;
    const Poly zg = Poly::z(Ring::Gauss), cg = Poly::one_minus_z(Ring::Gauss);
    const Poly ze = Poly::z(Ring::Eisenstein), ce = Poly::one_minus_z(Ring::Eisenstein);

    auto push = [&](Family fam, const RingElement& u, RationalMap phi, RadicalFactor th) {
        Transformation t;
        t.source = t.target = family_side(fam);
        t.phi = std::move(phi);
        t.theta = std::move(th);
        t.u = u;
        v.push_back({fam, u, std::move(t)});
    };

    // E1, 1+i:  -4z/(z-1)^2, (1-z)^(-1/2)
    push(Family::E1, gi(1, 1), RationalMap(gp({{0, 0}, {-4, 0}}), pow(gp({{-1, 0}, {1, 0}}), 2)),
         theta_terms({{RationalMap(cg), make_rat(-1, 2)}}));
    // E1, 2: 16z(z-1)^2/(z+1)^4, sqrt(1-z)/(1+z)
    push(Family::E1, gi(2, 0),
         RationalMap(gp({{16, 0}}) * zg * pow(gp({{-1, 0}, {1, 0}}), 2),
                     pow(gp({{1, 0}, {1, 0}}), 4)),
         theta_terms({{RationalMap(Poly::constant(Ring::Gauss, 1), gp({{1, 0}, {1, 0}})),
                       BigRat(1)},
                      {RationalMap(cg), make_rat(1, 2)}}));
    // E1, 1+2i: z(z-1-2i)^4/((1+2i)z-1)^4, (1-z/(1+2i))/(1-(1+2i)z)
    push(Family::E1, gi(1, 2),
         RationalMap(zg * pow(gp({{-1, -2}, {1, 0}}), 4), pow(gp({{-1, 0}, {1, 2}}), 4)),
         theta_terms({{RationalMap(gp({{1, 2}, {-1, 0}}) ,
                                   gp({{1, 2}}) * gp({{1, 0}, {-1, -2}})),
                       BigRat(1)}}));
    // E2, 1-w: 27z/(4z-1)^3, (1-4z)^(-1/2)
    push(Family::E2, ei(1, -1),
         RationalMap(ep({{27, 0}}) * ze, pow(ep({{-1, 0}, {4, 0}}), 3)),
         theta_terms({{RationalMap(ep({{1, 0}, {-4, 0}})), make_rat(-1, 2)}}));
    // E2, 2: 64z(1-z)^3/(8z+1)^3, ((1-z)/(1+8z))^(1/2)
    push(Family::E2, ei(2, 0),
         RationalMap(ep({{64, 0}}) * ze * pow(ce, 3), pow(ep({{1, 0}, {8, 0}}), 3)),
         theta_terms({{RationalMap(ce, ep({{1, 0}, {8, 0}})), make_rat(1, 2)}}));
    // E2, 3: -729 z (4z-1)^6 / (64z^3-48z^2-96z-1)^3, (1-4z)/sqrt(1+96z+48z^2-64z^3)
    push(Family::E2, ei(3, 0),
         RationalMap(ep({{-729, 0}}) * ze * pow(ep({{-1, 0}, {4, 0}}), 6),
                     pow(ep({{-1, 0}, {-96, 0}, {-48, 0}, {64, 0}}), 3)),
         theta_terms({{RationalMap(ep({{1, 0}, {-4, 0}})), BigRat(1)},
                      {RationalMap(ep({{1, 0}, {96, 0}, {48, 0}, {-64, 0}})), make_rat(-1, 2)}}));
    // E2, 3w+1: z(4z-3w-1)^6 / ((48w+16)z^2-(44+48w)z+1)^3,
    //           (1-4z/(3w+1)) / sqrt(1-(44+48w)z+(48w+16)z^2)
    push(Family::E2, ei(1, 3),
         RationalMap(ze * pow(ep({{-1, -3}, {4, 0}}), 6),
                     pow(ep({{1, 0}, {-44, -48}, {16, 48}}), 3)),
         theta_terms({{RationalMap(ep({{1, 3}, {-4, 0}}), ep({{1, 3}})), BigRat(1)},
                      {RationalMap(ep({{1, 0}, {-44, -48}, {16, 48}})), make_rat(-1, 2)}}));
    // E3, 1-w: 3(2w+1) z(z-1)/(z+w)^3, (1-z)^(1/3)/(1+w^2 z)
    push(Family::E3, ei(1, -1),
         RationalMap(ep({{3, 6}}) * ze * ep({{-1, 0}, {1, 0}}), pow(ep({{0, 1}, {1, 0}}), 3)),
         theta_terms({{RationalMap(Poly::constant(Ring::Eisenstein, 1),
                                   ep({{1, 0}, {-1, -1}})),
                       BigRat(1)},
                      {RationalMap(ce), make_rat(1, 3)}}));
    // E3, 3: 27 z(1-z)(z^2-z+1)^3/(1+3z-6z^2+z^3)^3,
    //        (1-z+z^2)(1-z)^(1/3)/(1+3z-6z^2+z^3)
    // (the classical table prints z(z-1) here; that sign fails the identity
    // numerically while this one passes at 1e-25 -- see README, Known discrepancies)
    push(Family::E3, ei(3, 0),
         RationalMap(ep({{-27, 0}}) * ze * ep({{-1, 0}, {1, 0}}) *
                         pow(ep({{1, 0}, {-1, 0}, {1, 0}}), 3),
                     pow(ep({{1, 0}, {3, 0}, {-6, 0}, {1, 0}}), 3)),
         theta_terms({{RationalMap(ep({{1, 0}, {-1, 0}, {1, 0}}),
                                   ep({{1, 0}, {3, 0}, {-6, 0}, {1, 0}})),
                       BigRat(1)},
                      {RationalMap(ce), make_rat(1, 3)}}));
    // E3, 3+w: z (z^2+(3w+2)z-3w-2)^3 / (1+(3w+2)z-(3w+2)z^2)^3,
    //          (1-z-z^2/(3w+2)) / (1+(3w+2)z-(3w+2)z^2)
    push(Family::E3, ei(3, 1),
         RationalMap(ze * pow(ep({{-2, -3}, {2, 3}, {1, 0}}), 3),
                     pow(ep({{1, 0}, {2, 3}, {-2, -3}}), 3)),
         theta_terms({{RationalMap(ep({{2, 3}, {-2, -3}, {-1, 0}}), ep({{2, 3}}) *
                                       ep({{1, 0}, {2, 3}, {-2, -3}})),
                       BigRat(1)}}));
    return v;
}

struct Runner {
    std::ostream& out;
    std::vector<Result> results;

    void run(int id, const std::string& name, const std::function<std::string()>& body) {
        Result r;
        r.id = id;
        r.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.note = body();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.note = e.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.seconds = std::chrono::duration<double>(t1 - t0).count();
        out << (r.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << id << "] " << name << "  ("
            << std::fixed << std::setprecision(2) << r.seconds << "s)";
        if (!r.note.empty()) out << "  -- " << r.note;
        out << "\n" << std::flush;
        results.push_back(std::move(r));
    }
};

void expect(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

double err_to_double(const HpReal& e) { return e.to_double(); }

std::vector<Transformation> numeric_suite_transformations(TripleCache& cache) {
    std::vector<Transformation> ts;
    for (Family f : {Family::E1, Family::E2, Family::E3}) {
        for (const auto& u : canonical_elements_up_to_norm(family_ring(f), 25))
            ts.push_back(to_transformation(generate(f, u, cache)));
    }
    ts.push_back(quadratic_cross(CrossKind::E3_TO_E2));
    ts.push_back(quadratic_cross(CrossKind::HYPER_TO_E2));
    // three compositions through the fixed quadratics
    const Transformation q3 = quadratic_cross(CrossKind::E3_TO_E2);
    const Transformation qh = quadratic_cross(CrossKind::HYPER_TO_E2);
    const Transformation e2_two = to_transformation(generate(Family::E2, ei(2, 0), cache));
    const Transformation e2_three = to_transformation(generate(Family::E2, ei(1, -1), cache));
    ts.push_back(compose_transformations(e2_two, q3));
    ts.push_back(compose_transformations(e2_three, q3));
    ts.push_back(compose_transformations(e2_two, qh));
    return ts;
}

}  // namespace

std::vector<Result> run_all(std::ostream& out) {
    Runner R{out, {}};
    TripleCache cache;

    R.run(1, "tabulated triple reproduction", [&] {
        for (const auto& pt : printed_triples()) {
            const Triple t = triple_for_element(pt.family, pt.u);
            expect(t.P == pt.P && t.Q == pt.Q && t.R == pt.R,
                   "triple mismatch for u=" + to_string(pt.u));
            expect(verify_triple(t), "generated triple failed verification");
        }
        return "5 printed triples coefficient-exact";
    });

    R.run(2, "tabulated transformation reproduction", [&] {
        for (const auto& pt : printed_transformations()) {
            const Triple t = triple_for_element(pt.family, pt.u);
            const Transformation got = to_transformation(t);
            expect(got.phi == pt.t.phi, "phi mismatch for u=" + to_string(pt.u));
            expect(radical_equal(got.theta, pt.t.theta),
                   "theta mismatch for u=" + to_string(pt.u));
        }
        return "10 printed transformations reproduced (map and radical factor)";
    });

    R.run(3, "exact closure, norm <= 50", [&] {
        long count = 0;
        for (Family f : {Family::E1, Family::E2, Family::E3}) {
            for (const auto& u : canonical_elements_up_to_norm(family_ring(f), 50)) {
                const Triple t = generate(f, u, cache);
                expect(verify_triple(t), "closure failed at u=" + to_string(u));
                const Transformation tr = to_transformation(t);
                expect(BigInt(tr.phi.degree()) == norm(u), "degree law failed");
                ++count;
            }
        }
        std::ostringstream os;
        os << count << " triples verified exactly, degree(phi) = norm(u) throughout";
        return os.str();
    });

    R.run(4, "oracle equivalence, norm <= 25", [&] {
        IsogenyCache icache;
        long count = 0;
        for (CurveId c : {CurveId::E1, CurveId::E2, CurveId::E3}) {
            const Family f = curve_family(c);
            for (const auto& u : canonical_elements_up_to_norm(curve_ring(c), 25)) {
                const RationalMap lhs = oracle_pullback(c, u, icache);
                const RationalMap rhs = to_transformation(generate(f, u, cache)).phi;
                expect(lhs == rhs, "oracle mismatch at u=" + to_string(u));
                ++count;
            }
        }
        std::ostringstream os;
        os << count << " pullback maps equal on both routes";
        return os.str();
    });

    R.run(5, "numeric identity suite (prec 30, tol 1e-20)", [&] {
        const long prec = 30;
        double worst = 0;
        long count = 0;
        for (const auto& t : numeric_suite_transformations(cache)) {
            const auto pts = branch_safe_points(t, 10, prec);
            const double e = err_to_double(verify_identity(t, pts, prec));
            worst = std::max(worst, e);
            expect(e < 1e-20, "numeric identity error too large");
            ++count;
        }
        // supplemental: the composed degree-8 map satisfies the two-ring identity shape
        const Transformation comp = compose_transformations(
            to_transformation(generate(Family::E2, ei(2, 0), cache)),
            quadratic_cross(CrossKind::E3_TO_E2));
        expect(cross_identity_map_level(comp.phi), "composed map failed the 6n+2 identity");
        std::ostringstream os;
        os << count << " identities verified, max rel error " << std::scientific
           << std::setprecision(2) << worst;
        return os.str();
    });

    R.run(6, "connection constants (tol 1e-20)", [&] {
        const long prec = 30;
        const std::vector<BigRat> xs = {make_rat(2, 5), make_rat(1, 2), make_rat(3, 5),
                                        make_rat(7, 10), make_rat(4, 5)};
        const std::vector<BigRat> zs = {make_rat(1, 10), make_rat(3, 10), make_rat(1, 2),
                                        make_rat(7, 10), make_rat(9, 10)};
        const double e1 = err_to_double(verify_connection(ConnectionCase::SPEC_144, xs, prec));
        const double e2 = err_to_double(verify_connection(ConnectionCase::SPEC_126, zs, prec));
        const double e3 = err_to_double(verify_connection(ConnectionCase::SPEC_333, zs, prec));
        expect(e1 < 1e-20, "Gamma(1/4)^2/(2 sqrt(2 pi)) identity failed");
        expect(e2 < 1e-20, "3 Gamma(1/3)^3/(2^(7/3) pi) identity failed");
        expect(e3 < 1e-20, "Gamma(1/3)^3/(2 sqrt(3) pi) identity failed");
        std::ostringstream os;
        os << std::scientific << std::setprecision(2) << "errors " << e1 << ", " << e2 << ", "
           << e3;
        return os.str();
    });

    R.run(7, "monodromy and periods (exact)", [&] {
        const Ring g = Ring::Gauss, e = Ring::Eisenstein;
        // F4: sigma0^2 sigma1 F4 = F4 + C4; sigma0 sigma1 sigma0 F4 = F4 + i C4
        const auto w1 = monodromy_word(MonodromyCase::F4, "001");
        const auto w2 = monodromy_word(MonodromyCase::F4, "010");
        expect(w1 == AffineMonodromy{field_one(g), FieldElement(g, 2)},
               "sigma0^2 sigma1 is not F + 2K (= F4 + C4)");
        expect(w2 == AffineMonodromy{field_one(g), FieldElement(g, 0, 2)},
               "sigma0 sigma1 sigma0 is not F + 2iK (= F4 + i C4)");
        // Pochhammer: shift (1 - e^{2 pi i a})(1 - e^{2 pi i b}) = 2(1-i) -> (1-i) C4
        const auto pch = pochhammer(MonodromyCase::F4);
        expect(pch == AffineMonodromy{field_one(g), FieldElement(g, 2, -2)},
               "Pochhammer shift is not (1-i) C4");
        // E2 periods in integral units: (2/3) K6 and (2/3) zeta6 K6,
        // with K6 = 3 Gamma(1/3)^3/(2^(4/3) pi), i.e. the pair
        // Gamma(1/3)^3/(2^(1/3) pi) and (w+1) times it.
        const auto rep6 = monodromy_group(MonodromyCase::F6);
        expect(rep6.period_words.at(0).second == FieldElement(e, make_rat(2, 3), BigRat(0)),
               "E2 first period is not (2/3) K6");
        expect(rep6.period_words.at(1).second ==
                   FieldElement(e, make_rat(2, 3), make_rat(2, 3)),
               "E2 second period is not (2/3)(w+1) K6");
        {  // numeric bridge K6 = 3 Gamma(1/3)^3 / (2^(4/3) pi) via reflection+duplication
            const long prec = 30;
            const mpfr_prec_t bits = digits_to_bits(prec + 15);
            const HpReal k6 = gamma_rat(make_rat(1, 6), prec) * gamma_rat(make_rat(1, 2), prec) /
                              gamma_rat(make_rat(2, 3), prec);
            const HpReal g13 = gamma_rat(make_rat(1, 3), prec);
            const HpReal want = HpReal::from_long(3, bits) * g13 * g13 * g13 /
                                (HpReal::from_long(2, bits) * root(HpReal::from_long(2, bits), 3) *
                                 HpReal::pi(bits));
            expect(err_to_double(abs(k6 - want) / want) < 1e-25, "K6 Gamma identity failed");
        }
        // E3 periods: the computed exact pair is (1/3)(2w+1) K3 and (1/3)(w-1) K3
        // (K3 = sqrt(3) Gamma(1/3)^3/(2 pi)), i.e. i Gamma(1/3)^3/(2 pi) times {1, w+1}.
        // The listed values are i Gamma(1/3)^3/pi times {1, w+1}: exactly twice
        // the translation the affine monodromy yields, so this sub-check fails.
        const auto rep3 = monodromy_group(MonodromyCase::F3);
        const FieldElement got1 = rep3.period_words.at(0).second;
        const FieldElement got2 = rep3.period_words.at(1).second;
        expect(got1 == FieldElement(e, make_rat(1, 3), make_rat(2, 3)),
               "E3 first translation is not (1/3)(2w+1) K3");
        expect(got2 == FieldElement(e, make_rat(-1, 3), make_rat(1, 3)),
               "E3 second translation is not (1/3)(w-1) K3");
        // ratio matches the listed pair
        expect(got2 / got1 == FieldElement(e, 1, 1), "E3 period ratio is not w+1");
        // literal listed magnitude: requires (2/3)(2w+1) K3
        const FieldElement listed1(e, make_rat(2, 3), make_rat(4, 3));
        if (!(got1 == listed1))
            throw std::runtime_error(
                "E3 period pair is half the listed i*Gamma(1/3)^3/pi * {1, w+1}: derived "
                "translations are i*Gamma(1/3)^3/(2 pi) * {1, w+1} (see README, Known "
                "discrepancies)");
        return std::string("all exact period identities hold");
    });

    R.run(8, "nonexistence (degree 21; cross degrees 6n+4)", [&] {
        expect(elements_of_norm(BigInt(21), Ring::Gauss).empty(),
               "degree 21 should admit no Gaussian element");
        for (long n = 0; 6 * n + 4 <= 40; ++n) {
            const long d = 3 * n + 2;
            expect(elements_of_norm(BigInt(d), Ring::Eisenstein).empty(),
                   "norm 3n+2 should be empty over Z[w]");
        }
        return "no degree-21 map; no cross map of degree 6n+4 up to 40";
    });

    R.run(9, "ramification vs covering table, norm <= 25", [&] {
        long count = 0;
        for (Family f : {Family::E1, Family::E2, Family::E3}) {
            const ExpTriple ex = side_exponents(family_side(f));
            for (const auto& u : canonical_elements_up_to_norm(family_ring(f), 25)) {
                const Transformation t = to_transformation(generate(f, u, cache));
                const RamificationPattern p = ramify(t.phi);
                expect(distinct_point_count(p) == p.degree + 2,
                       "Hurwitz count failed at u=" + to_string(u));
                expect(match_table1(p, ex, ex).has_value(),
                       "no covering-table row matches u=" + to_string(u));
                ++count;
            }
        }
        std::ostringstream os;
        os << count << " maps matched a unique table row with d+2 points";
        return os.str();
    });

    R.run(10, "quadrature cross-check (tol 1e-10)", [&] {
        const long prec = 25;
        double worst = 0;
        for (Family f : {Family::E1, Family::E2, Family::E3}) {
            for (long num : {1L, 3L, 5L, 7L, 9L}) {
                const BigRat z = make_rat(num, 10);
                const HpReal quad = elliptic_quadrature(f, z, prec);
                const HpReal series = elliptic_series_side(f, z, prec);
                const double e = err_to_double(abs(quad - series) / abs(series));
                worst = std::max(worst, e);
                expect(e < 1e-10, "quadrature/series mismatch");
            }
        }
        std::ostringstream os;
        os << "15 integrals agree, max rel error " << std::scientific << std::setprecision(2)
           << worst;
        return os.str();
    });

    int passed = 0;
    for (const auto& r : R.results) passed += r.pass ? 1 : 0;
    out << passed << "/" << R.results.size() << " acceptance checks passed\n";
    return R.results;
}

bool all_passed(const std::vector<Result>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

}  // namespace hpgforge::selftest
