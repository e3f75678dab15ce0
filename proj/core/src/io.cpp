#include "hpgforge/io.hpp"

#include <sstream>

namespace hpgforge {

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (long k = 0; k <= p.degree(); ++k) {
        const FieldElement& c = p.coeff(k);
        arr.push_back(Json{{"re", rat_to_string(c.a)}, {"im", rat_to_string(c.b)}});
    }
    return arr;
}

Poly poly_from_json(const Json& j, Ring r) {
    std::vector<FieldElement> c;
    for (const auto& e : j)
        c.emplace_back(r, rat_from_string(e.at("re").get<std::string>()),
                       rat_from_string(e.at("im").get<std::string>()));
    return Poly(r, std::move(c));
}

Json map_to_json(const RationalMap& f) {
    return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RationalMap map_from_json(const Json& j, Ring r) {
    return RationalMap(poly_from_json(j.at("num"), r), poly_from_json(j.at("den"), r));
}

Json theta_to_json(const RadicalFactor& t) {
    Json arr = Json::array();
    for (const auto& term : t.terms)
        arr.push_back(Json{{"base", map_to_json(term.base)}, {"exp", rat_to_string(term.exp)}});
    return arr;
}

RadicalFactor theta_from_json(const Json& j, Ring r) {
    RadicalFactor t;
    for (const auto& e : j)
        t.terms.push_back(
            {map_from_json(e.at("base"), r), rat_from_string(e.at("exp").get<std::string>())});
    return t;
}

namespace {

std::string side_tag(FuncSide s) {
    switch (s) {
        case FuncSide::F144: return "e1";
        case FuncSide::F126: return "e2";
        case FuncSide::F333: return "e3";
        case FuncSide::FHyp: return "hyp";
    }
    throw std::logic_error("side_tag: unreachable");
}

FuncSide side_from_tag(const std::string& s) {
    if (s == "e1") return FuncSide::F144;
    if (s == "e2") return FuncSide::F126;
    if (s == "e3") return FuncSide::F333;
    if (s == "hyp") return FuncSide::FHyp;
    throw std::invalid_argument("unknown side tag: " + s);
}

Ring side_ring(FuncSide s) { return s == FuncSide::F144 ? Ring::Gauss : Ring::Eisenstein; }

Json exponents_json(const ExpTriple& e) {
    return Json::array({rat_to_string(e.at0), rat_to_string(e.at1), rat_to_string(e.atInf)});
}

}  // namespace

std::string exponents_to_string(const ExpTriple& e) {
    std::ostringstream os;
    os << "(" << rat_to_string(e.at0) << "," << rat_to_string(e.at1) << ","
       << rat_to_string(e.atInf) << ")";
    return os.str();
}

Json transformation_to_json(const Transformation& t, const Triple* triple) {
    Json j;
    j["schema"] = "hpgforge-1";
    j["family"] = side_tag(t.source);
    j["u"] = t.u ? to_string(*t.u) : "";
    j["degree"] = t.phi.degree();
    j["phi"] = map_to_json(t.phi);
    j["theta"] = theta_to_json(t.theta);
    j["source_exponents"] = exponents_json(side_exponents(t.source));
    j["target_exponents"] = exponents_json(side_exponents(t.target));
    j["target_family"] = side_tag(t.target);
    if (triple) {
        j["triple"] = Json{{"P", poly_to_json(triple->P)},
                           {"Q", poly_to_json(triple->Q)},
                           {"R", poly_to_json(triple->R)}};
    }
    return j;
}

ParsedTransformation transformation_from_json(const Json& j) {
    if (j.at("schema").get<std::string>() != "hpgforge-1")
        throw std::invalid_argument("unsupported schema");
    ParsedTransformation out;
    Transformation& t = out.transformation;
    t.source = side_from_tag(j.at("family").get<std::string>());
    t.target = side_from_tag(j.at("target_family").get<std::string>());
    const Ring r = side_ring(t.source);
    const std::string ustr = j.at("u").get<std::string>();
    if (!ustr.empty()) t.u = parse_ring_element(ustr, r);
    t.phi = map_from_json(j.at("phi"), r);
    t.theta = theta_from_json(j.at("theta"), r);
    if (j.contains("triple") && t.u) {
        Triple tr;
        tr.u = *t.u;
        switch (t.source) {
            case FuncSide::F144: tr.family = Family::E1; break;
            case FuncSide::F126: tr.family = Family::E2; break;
            case FuncSide::F333: tr.family = Family::E3; break;
            default: throw std::invalid_argument("triple block on a cross transformation");
        }
        tr.cls = class_of(tr.family, norm(tr.u));
        if (tr.family == Family::E3) tr.form = e3_form_of(tr.u);
        tr.P = poly_from_json(j.at("triple").at("P"), r);
        tr.Q = poly_from_json(j.at("triple").at("Q"), r);
        tr.R = poly_from_json(j.at("triple").at("R"), r);
        out.triple = tr;
    }
    return out;
}

// --- LaTeX ---------------------------------------------------------------

namespace {

std::string rat_latex(const BigRat& q) {
    if (is_integer(q)) return q.get_str();
    return "\\tfrac{" + BigInt(q.get_num()).get_str() + "}{" + BigInt(q.get_den()).get_str() + "}";
}

std::string coeff_latex(const FieldElement& c) {
    const std::string sym = c.ring == Ring::Gauss ? "i" : "\\omega";
    if (c.b == 0) return rat_latex(c.a);
    std::ostringstream os;
    const bool both = c.a != 0;
    if (both) os << "(" << rat_latex(c.a);
    if (c.b > 0 && both) os << "+";
    if (c.b == -1) os << "-";
    else if (!(c.b == 1)) os << rat_latex(c.b);
    os << sym;
    if (both) os << ")";
    return os.str();
}

std::string hpg_latex(const HpgParams& p, const std::string& arg) {
    std::ostringstream os;
    os << "{}_2F_1\\!\\left({" << rat_latex(p.a) << ",\\," << rat_latex(p.b) << "\\atop "
       << rat_latex(p.c) << "}\\,\\middle|\\;" << arg << "\\right)";
    return os.str();
}

// scale so that den(0) = 1 when possible, matching the usual layout
std::pair<Poly, Poly> display_pair(const RationalMap& f) {
    Poly num = f.num(), den = f.den();
    const FieldElement d0 = den.at_zero();
    if (!d0.is_zero() && !d0.is_one()) {
        num = inverse(d0) * num;
        den = inverse(d0) * den;
    }
    return {num, den};
}

}  // namespace

std::string poly_to_latex(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = 0; k <= p.degree(); ++k) {
        const FieldElement c = p.coeff(k);
        if (c.is_zero()) continue;
        std::string cs = coeff_latex(c);
        if (!first && cs[0] != '-') os << "+";
        if (k == 0) {
            os << cs;
        } else {
            if (cs == "1") cs.clear();
            else if (cs == "-1") cs = "-";
            else if (!cs.empty() && cs.back() != ')') cs += "\\,";
            os << cs << var;
            if (k > 1) os << "^{" << k << "}";
        }
        first = false;
    }
    return os.str();
}

std::string transformation_to_latex(const Transformation& t) {
    const HpgParams ps = side_params(t.source), pt = side_params(t.target);
    std::ostringstream os;
    os << hpg_latex(ps, "z") << " = ";
    for (const auto& term : t.theta.terms) {
        os << "\\left(";
        if (term.base.den().degree() == 0 && term.base.den().at_zero().is_one())
            os << poly_to_latex(term.base.num());
        else
            os << "\\frac{" << poly_to_latex(term.base.num()) << "}{"
               << poly_to_latex(term.base.den()) << "}";
        os << "\\right)";
        if (!(term.exp == 1)) os << "^{" << rat_latex(term.exp) << "}";
    }
    const auto [pn, pd] = display_pair(t.phi);
    os << "\\;" << hpg_latex(pt, "\\frac{" + poly_to_latex(pn) + "}{" + poly_to_latex(pd) + "}");
    return os.str();
}

}  // namespace hpgforge
