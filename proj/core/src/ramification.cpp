#include "hpgforge/ramification.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hpgforge {

namespace {

// Multiplicities of the roots of p, as points (a squarefree factor of
// degree k contributes k points of its multiplicity).
void add_factor_points(std::vector<long>& fiber, const Poly& p) {
    if (p.is_zero()) throw std::logic_error("ramify: zero polynomial in fiber");
    if (p.degree() == 0) return;
    for (const auto& [f, m] : squarefree_multiplicities(p))
        for (long j = 0; j < f.degree(); ++j) fiber.push_back(m);
}

void sort_desc(std::vector<long>& v) { std::sort(v.begin(), v.end(), std::greater<long>()); }

}  // namespace

RamificationPattern ramify(const RationalMap& phi) {
    if (phi.is_constant()) throw std::domain_error("ramify: constant map");
    RamificationPattern out;
    out.degree = phi.degree();
    const long dn = phi.num().degree(), dd = phi.den().degree();

    add_factor_points(out.over0, phi.num());
    if (dn < dd) out.over0.push_back(dd - dn);  // phi(inf) = 0

    add_factor_points(out.overInf, phi.den());
    if (dn > dd) out.overInf.push_back(dn - dd);  // phi(inf) = inf

    const Poly w = phi.num() - phi.den();
    if (w.is_zero()) throw std::domain_error("ramify: map identically 1");
    add_factor_points(out.over1, w);
    if (dn == dd && w.degree() < out.degree)
        out.over1.push_back(out.degree - w.degree());  // phi(inf) = 1

    sort_desc(out.over0);
    sort_desc(out.over1);
    sort_desc(out.overInf);

    auto sum = [](const std::vector<long>& v) {
        return std::accumulate(v.begin(), v.end(), 0L);
    };
    if (sum(out.over0) != out.degree || sum(out.over1) != out.degree ||
        sum(out.overInf) != out.degree)
        throw std::logic_error("ramify: fiber multiplicities do not sum to the degree");
    return out;
}

long distinct_point_count(const RamificationPattern& p) {
    return static_cast<long>(p.over0.size() + p.over1.size() + p.overInf.size());
}

namespace {

struct TableRow {
    int id;
    FuncSide below, above;
    long mod, res;  // degree = mod*n + res
    // multiset patterns at the above-points (0, 1, inf) for parameter n
    std::vector<long> (*at0)(long);
    std::vector<long> (*at1)(long);
    std::vector<long> (*atInf)(long);
};

std::vector<long> rep(long count, long order, std::initializer_list<long> extra = {}) {
    std::vector<long> v;
    for (long j = 0; j < count; ++j) v.push_back(order);
    for (long e : extra) v.push_back(e);
    std::sort(v.begin(), v.end(), std::greater<long>());
    return v;
}

const TableRow kTable[] = {
    // 144 -> 144
    {1, FuncSide::F144, FuncSide::F144, 4, 0,
     [](long n) { return rep(n - 1, 4, {2, 1, 1}); },
     [](long n) { return rep(2 * n, 2); },
     [](long n) { return rep(n, 4); }},
    {2, FuncSide::F144, FuncSide::F144, 4, 1,
     [](long n) { return rep(n, 4, {1}); },
     [](long n) { return rep(2 * n, 2, {1}); },
     [](long n) { return rep(n, 4, {1}); }},
    {3, FuncSide::F144, FuncSide::F144, 4, 2,
     [](long n) { return rep(n, 4, {1, 1}); },
     [](long n) { return rep(2 * n + 1, 2); },
     [](long n) { return rep(n, 4, {2}); }},
    // 126 -> 126
    {4, FuncSide::F126, FuncSide::F126, 6, 0,
     [](long n) { return rep(n - 1, 6, {3, 2, 1}); },
     [](long n) { return rep(3 * n, 2); },
     [](long n) { return rep(2 * n, 3); }},
    {5, FuncSide::F126, FuncSide::F126, 6, 1,
     [](long n) { return rep(n, 6, {1}); },
     [](long n) { return rep(3 * n, 2, {1}); },
     [](long n) { return rep(2 * n, 3, {1}); }},
    {6, FuncSide::F126, FuncSide::F126, 6, 3,
     [](long n) { return rep(n, 6, {2, 1}); },
     [](long n) { return rep(3 * n + 1, 2, {1}); },
     [](long n) { return rep(2 * n + 1, 3); }},
    {7, FuncSide::F126, FuncSide::F126, 6, 4,
     [](long n) { return rep(n, 6, {3, 1}); },
     [](long n) { return rep(3 * n + 2, 2); },
     [](long n) { return rep(2 * n + 1, 3, {1}); }},
    // 333 below, 126 above
    {8, FuncSide::F333, FuncSide::F126, 6, 0,
     [](long n) { return rep(n - 1, 6, {2, 2, 2}); },
     [](long n) { return rep(3 * n, 2); },
     [](long n) { return rep(2 * n, 3); }},
    {9, FuncSide::F333, FuncSide::F126, 6, 0,
     [](long n) { return rep(n, 6); },
     [](long n) { return rep(3 * n, 2); },
     [](long n) { return rep(2 * n - 1, 3, {1, 1, 1}); }},
    {10, FuncSide::F333, FuncSide::F126, 6, 2,
     [](long n) { return rep(n, 6, {2}); },
     [](long n) { return rep(3 * n + 1, 2); },
     [](long n) { return rep(2 * n, 3, {1, 1}); }},
    {11, FuncSide::F333, FuncSide::F126, 6, 4,
     [](long n) { return rep(n, 6, {2, 2}); },
     [](long n) { return rep(3 * n + 2, 2); },
     [](long n) { return rep(2 * n + 1, 3, {1}); }},
    // (2/3,1/6,1/6) below, 126 above
    {12, FuncSide::FHyp, FuncSide::F126, 6, 0,
     [](long n) { return rep(n - 1, 6, {4, 1, 1}); },
     [](long n) { return rep(3 * n, 2); },
     [](long n) { return rep(2 * n, 3); }},
    {13, FuncSide::FHyp, FuncSide::F126, 6, 2,
     [](long n) { return rep(n, 6, {1, 1}); },
     [](long n) { return rep(3 * n + 1, 2); },
     [](long n) { return rep(2 * n, 3, {2}); }},
    // 333 -> 333
    {14, FuncSide::F333, FuncSide::F333, 3, 0,
     [](long n) { return rep(n - 1, 3, {1, 1, 1}); },
     [](long n) { return rep(n, 3); },
     [](long n) { return rep(n, 3); }},
    {15, FuncSide::F333, FuncSide::F333, 3, 1,
     [](long n) { return rep(n, 3, {1}); },
     [](long n) { return rep(n, 3, {1}); },
     [](long n) { return rep(n, 3, {1}); }},
};

std::optional<FuncSide> side_from_exponents(const ExpTriple& e) {
    for (FuncSide s : {FuncSide::F144, FuncSide::F126, FuncSide::F333, FuncSide::FHyp})
        if (side_exponents(s) == e) return s;
    return std::nullopt;
}

bool multiset_eq(std::vector<long> a, std::vector<long> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

std::optional<int> match_table1(const RamificationPattern& p, const ExpTriple& source,
                                const ExpTriple& target) {
    const auto below = side_from_exponents(source);
    const auto above = side_from_exponents(target);
    if (!below || !above) return std::nullopt;
    const ExpTriple te = side_exponents(*above);
    const BigRat texp[3] = {te.at0, te.at1, te.atInf};
    const std::vector<long>* fibers[3] = {&p.over0, &p.over1, &p.overInf};

    std::optional<int> hit;
    for (const TableRow& row : kTable) {
        if (row.below != *below || row.above != *above) continue;
        if ((p.degree - row.res) % row.mod != 0) continue;
        const long n = (p.degree - row.res) / row.mod;
        if (n < 0 || p.degree <= 0) continue;
        std::vector<long> want[3] = {row.at0(n), row.at1(n), row.atInf(n)};
        // negative rep() counts produce short vectors; reject by sum check
        auto vsum = [](const std::vector<long>& v) {
            long s = 0;
            for (long x : v) s += x;
            return s;
        };
        if (vsum(want[0]) != p.degree || vsum(want[1]) != p.degree ||
            vsum(want[2]) != p.degree)
            continue;
        // try position assignments that respect the exponent labels
        int perm[3] = {0, 1, 2};
        std::sort(perm, perm + 3);
        bool matched = false;
        do {
            bool label_ok = true;
            for (int k = 0; k < 3; ++k)
                if (!(texp[perm[k]] == texp[k])) label_ok = false;
            if (!label_ok) continue;
            bool eq = true;
            for (int k = 0; k < 3; ++k)
                if (!multiset_eq(*fibers[k], want[perm[k]])) eq = false;
            if (eq) {
                matched = true;
                break;
            }
        } while (std::next_permutation(perm, perm + 3));
        if (matched) {
            if (hit && *hit != row.id) return std::nullopt;  // ambiguous
            hit = row.id;
        }
    }
    return hit;
}

std::string pattern_to_string(const RamificationPattern& p) {
    auto one = [](const std::vector<long>& v) {
        std::ostringstream os;
        bool first = true;
        size_t i = 0;
        while (i < v.size()) {
            size_t j = i;
            while (j < v.size() && v[j] == v[i]) ++j;
            if (!first) os << "+";
            os << (j - i) << "*" << v[i];
            first = false;
            i = j;
        }
        if (first) os << "-";
        return os.str();
    };
    return one(p.over0) + " = " + one(p.over1) + " = " + one(p.overInf);
}

}  // namespace hpgforge
