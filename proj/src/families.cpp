#include "gsrs/families.hpp"

#include "gsrs/cutout.hpp"
#include "gsrs/region.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <stdexcept>

namespace gsrs {

namespace {

// ---------------------------------------------------------------------------
// Generator calculus

enum class Gen { Alpha, Beta, Gamma, Delta, Eps, Zeta, Eta, Theta, Iota, Kappa, Lambda, Mu, Nu, Xi, Rho, Sigma, Tau };

const std::map<std::string, Gen>& generator_names() {
    static const std::map<std::string, Gen> names{
        {"alpha", Gen::Alpha}, {"beta", Gen::Beta},     {"gamma", Gen::Gamma}, {"delta", Gen::Delta},
        {"eps", Gen::Eps},     {"zeta", Gen::Zeta},     {"eta", Gen::Eta},     {"theta", Gen::Theta},
        {"iota", Gen::Iota},   {"kappa", Gen::Kappa},   {"lambda", Gen::Lambda}, {"mu", Gen::Mu},
        {"nu", Gen::Nu},       {"xi", Gen::Xi},         {"rho", Gen::Rho},     {"sigma", Gen::Sigma},
        {"tau", Gen::Tau}};
    return names;
}

QComplex generate(Gen g, const Rational& n, const Rational& m, const Rational& k, const Rational& a,
                  const Rational& b) {
    const Rational n43 = 4 * n / 3;
    switch (g) {
        case Gen::Alpha: return {n + a, -3 * m + b};
        case Gen::Beta: return {n + m + a, b};
        case Gen::Gamma: return {n + m - k + a, 3 * k + b};
        case Gen::Delta: return {n + 3 * m + k + a, -n + 3 * k + b};
        case Gen::Eps: return {n + 3 * m - k + a, 3 * k + b};
        case Gen::Zeta: return {n + 3 * m - 3 * k + a, n + 3 * k + b};
        case Gen::Eta: return {n + k + a, -3 * m + 3 * k + b};
        case Gen::Theta: return {n - k + a, 3 * m + k + b};
        case Gen::Iota: return {n + 3 * k + a, -n - 3 * m + 3 * k + b};
        case Gen::Kappa: return {n - 3 * k + a, n + 3 * m + k + b};
        case Gen::Lambda: return {n43 + 3 * m + a, b};
        case Gen::Mu: return {n43 + 3 * m - k + a, 3 * k + b};
        case Gen::Nu: return {3 * m + a, n + b};
        case Gen::Xi: return {3 * m + k + a, -n + k + b};
        case Gen::Rho: return {3 * m - 3 * k + a, n + k + b};
        case Gen::Sigma: return {3 * k + a, -n - m + k + b};
        case Gen::Tau: return {3 * k + a, -n43 - 3 * m + k + b};
    }
    return {};
}

struct Term {
    bool negate = false;
    Gen gen = Gen::Alpha;
    Rational a;
    Rational b;
};

struct Group {
    enum class Index { Once, Gamma, Sigma, Theta } index = Index::Once;
    long shift = 0;
    enum class When { Always, MZero, MNonzero } when = When::Always;
    std::vector<Term> terms;
};

// Groups are separated by ';'. A group is an optional condition "if m=0:" or
// "if m!=0:", an optional index set "G(a):", "S(a):" or "T(a):" and a list of
// signed terms such as "-rho(-7,2)".
std::vector<Group> parse_groups(const std::string& text) {
    std::vector<Group> groups;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::logic_error("family definition: " + why + " near '" + text.substr(pos, 20) + "'");
    };
    auto skip = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    };
    auto number = [&] {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-' ||
                                     text[pos] == '/')) {
            ++pos;
        }
        return parse_rational(text.substr(start, pos - start));
    };
    while (true) {
        skip();
        if (pos >= text.size()) break;
        Group g;
        if (text.compare(pos, 7, "if m=0:") == 0) {
            g.when = Group::When::MZero;
            pos += 7;
        } else if (text.compare(pos, 8, "if m!=0:") == 0) {
            g.when = Group::When::MNonzero;
            pos += 8;
        }
        skip();
        if (pos + 1 < text.size() && text[pos + 1] == '(' && (text[pos] == 'G' || text[pos] == 'S' || text[pos] == 'T')) {
            g.index = text[pos] == 'G' ? Group::Index::Gamma : text[pos] == 'S' ? Group::Index::Sigma : Group::Index::Theta;
            pos += 2;
            Rational s = number();
            if (s.get_den() != 1) fail("index shift must be an integer");
            g.shift = s.get_num().get_si();
            expect(')');
            expect(':');
        }
        while (true) {
            skip();
            if (pos >= text.size() || text[pos] == ';') break;
            Term t;
            if (text[pos] == '-') {
                t.negate = true;
                ++pos;
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
            auto it = generator_names().find(text.substr(start, pos - start));
            if (it == generator_names().end()) fail("unknown generator");
            t.gen = it->second;
            expect('(');
            t.a = number();
            expect(',');
            t.b = number();
            expect(')');
            g.terms.push_back(std::move(t));
        }
        if (g.terms.empty()) fail("empty group");
        groups.push_back(std::move(g));
        if (pos < text.size()) ++pos;  // ';'
    }
    return groups;
}

// Definitions in printed order. C_19 has one block per residue of n mod 3.
const char* const kDefinitions[] = {
    "",
    // C_1
    "-beta(0,0); T(1): gamma(1,-1) -gamma(0,0); S(5): theta(0,3) -theta(1,-3); T(2): rho(7,-2) -rho(-5,2);"
    "T(1): -sigma(1,1) sigma(1,0); S(5): -xi(-3,0) xi(4,1); T(1): -eta(2,6) eta(-1,-4)",
    // C_2
    "T(1): -gamma(-1,1) gamma(1,1); S(6): -theta(0,-4) theta(0,5); T(2): -rho(-7,2) rho(6,-1);"
    "T(1): sigma(-1,-1) -sigma(0,1); S(6): xi(4,0) -xi(-4,0); T(2): eta(-2,-8) -eta(2,7); beta(1,1)",
    // C_3
    "T(1): -gamma(-1,3) gamma(1,-1); S(4): -theta(0,-2) theta(0,3); if m=0: -nu(-2,1) nu(2,0);"
    "if m!=0: -nu(-2,1) nu(2,0) -nu(0,0) nu(-1,1); T(-1): -rho(0,0) rho(-1,1); T(1): sigma(-3,-1) -sigma(2,1);"
    "S(4): xi(2,0) -xi(-2,0); if m=0: alpha(-1,-3) -alpha(1,2);"
    "if m!=0: alpha(-1,-3) -alpha(1,2) alpha(0,-1) -alpha(0,0); T(-1): eta(0,-1) -eta(0,0); beta(0,-1)",
    // C_4
    "T(1): -gamma(-1,2) gamma(1,0); S(5): -theta(0,-3) theta(0,4); -nu(-3,1) nu(3,0);"
    "T(1): -rho(-4,1) rho(3,0); T(1): sigma(-1,-1) -sigma(0,1); S(6): xi(4,0) -xi(-4,0); alpha(-1,-5) -alpha(1,4);"
    "T(1): eta(-1,-6) -eta(1,5); beta(1,0)",
    // C_5
    "T(1): -gamma(-1,3) gamma(1,-1); S(2): -theta(0,-1) theta(0,2); T(0): -rho(-3,1) rho(2,0);"
    "T(1): sigma(-3,-1) -sigma(2,1); S(2): xi(1,0) -xi(-1,0); T(0): eta(-1,-4) -eta(1,3); beta(0,-1)",
    // C_6
    "T(1): -gamma(-1,2) gamma(1,0); S(3): -theta(0,-2) theta(0,3); T(1): -rho(-4,1) rho(3,0);"
    "T(1): sigma(-1,-1) -sigma(0,1); S(4): xi(3,0) -xi(-3,0); T(1): eta(-1,-6) -eta(1,5); beta(1,0)",
    // C_7
    "-beta(0,1); T(1): gamma(1,-2) -gamma(0,1); S(3): theta(0,2) -theta(1,-2); T(1): rho(5,-1) -rho(-3,1);"
    "T(1): -sigma(2,1) sigma(0,0); S(3): -xi(-2,0) xi(3,1); T(0): -eta(1,4) eta(0,-2)",
    // C_8
    "T(1): -gamma(-1,2) gamma(1,0); S(4): -theta(0,-3) theta(0,4); T(1): -rho(-5,1) rho(4,0);"
    "T(1): sigma(-2,-1) -sigma(1,1); S(4): xi(3,0) -xi(-3,0); T(1): eta(-1,-6) -eta(1,5); beta(1,0)",
    // C_9
    "-beta(0,0); T(0): gamma(1,-1) -gamma(0,0); S(3): theta(1,1) -theta(0,-1); nu(3,-1) -nu(-1,1);"
    "T(1): rho(4,-1) -rho(-2,1); T(0): -sigma(1,1) sigma(1,0); S(3): -xi(-1,1) xi(2,0); -alpha(1,2) alpha(0,-1);"
    "T(0): -eta(1,3) eta(0,-1)",
    // C_10
    "T(1): -gamma(-1,1) gamma(1,1); S(5): -theta(0,-3) theta(0,4); -nu(-3,1) nu(3,0);"
    "T(1): -rho(-4,1) rho(3,0); T(1): sigma(-1,-1) -sigma(0,1); S(5): xi(3,0) -xi(-3,0); alpha(-1,-4) -alpha(1,3);"
    "T(1): eta(-1,-5) -eta(1,4); beta(1,1)",
    // C_11
    "-beta(0,-2); T(0): gamma(1,1) -gamma(0,-2); S(4): theta(1,2) -theta(0,-2); nu(4,-1) -nu(-2,1);"
    "T(1): rho(5,-1) -rho(-3,1); T(1): -sigma(2,1) sigma(0,0); S(3): -xi(-2,0) xi(3,1); T(1): -eta(1,4) eta(0,-2)",
    // C_12
    "T(1): -gamma(-1,1) gamma(1,1); S(5): -theta(0,-3) theta(0,4); -nu(-3,1) nu(3,0);"
    "T(1): -rho(-4,1) rho(3,0); T(1): sigma(-1,-1) -sigma(0,1); S(6): xi(4,0) -xi(-4,0);"
    "T(2): eta(-2,-8) -eta(2,7); beta(1,1)",
    // C_13
    "T(1): -gamma(-1,3) gamma(1,-1); S(3): -theta(0,-1) theta(0,2); -nu(-1,1) nu(1,0);"
    "T(0): -rho(-2,1) rho(1,0); T(0): sigma(-2,-1) -sigma(1,1); S(1): xi(0,-1) -xi(0,1);"
    "T(0): eta(-1,-4) -eta(1,3); beta(0,-1)",
    // C_14
    "T(1): -gamma(-1,2) gamma(1,0); S(4): -theta(0,-3) theta(0,4); T(1): -rho(-5,1) rho(4,0);"
    "T(1): sigma(-2,-2) -sigma(1,2); S(5): xi(3,-1) -xi(-3,1); alpha(-1,-5) -alpha(1,4);"
    "T(1): eta(-1,-6) -eta(1,5); beta(1,0)",
    // C_15
    "T(1): -gamma(-1,2) gamma(1,0); S(5): -theta(0,-3) theta(0,4); -nu(-3,1) nu(3,0);"
    "T(1): -rho(-4,1) rho(3,0); T(1): sigma(-1,-1) -sigma(0,1); S(4): xi(3,0) -xi(-3,0);"
    "T(1): eta(-1,-6) -eta(1,5); beta(1,0)",
    // C_16
    "T(1): -gamma(-1,3) gamma(1,-1); S(2): -theta(0,-1) theta(0,2); T(0): -rho(-3,1) rho(2,0);"
    "T(1): sigma(-3,-1) -sigma(2,1); S(4): xi(2,0) -xi(-2,0); alpha(-1,-3) -alpha(1,2) alpha(0,-1) -alpha(0,0);"
    "T(-1): eta(0,-1) -eta(0,0); beta(0,-1)",
    // C_17
    "T(0): -gamma(-1,1) gamma(1,1); S(2): -theta(-1,-1) theta(1,2); T(1): -rho(-4,1) rho(3,0);"
    "T(1): sigma(-1,-1) -sigma(0,1); S(5): xi(3,0) -xi(-3,0); alpha(-1,-4) -alpha(1,3);"
    "T(1): eta(-1,-5) -eta(1,4); beta(1,1)",
    // C_18
    "T(1): -gamma(-1,3) gamma(1,-1); S(4): -theta(0,-2) theta(0,3); T(1): -rho(-5,2) rho(4,-1);"
    "T(1): sigma(-2,-1) -sigma(1,1); S(4): xi(2,0) -xi(-2,0); alpha(-1,-3) -alpha(1,2);"
    "T(0): eta(-1,-4) -eta(1,3); beta(0,-1)",
};

const char* const kFamily19[] = {
    // n = 0 mod 3
    "G(-3): -mu(0,1) mu(0,1); T(0): -zeta(-3,4) zeta(2,-2); G(0): -kappa(-3,2) kappa(2,-1);"
    "G(0): tau(-3,0) -tau(2,0); T(0): iota(-3,-2) -iota(2,1); G(0): delta(-1,-2) -delta(1,1); lambda(0,1)",
    // n = 1 mod 3
    "G(-1): -eps(0,1) mu(2/3,1); T(0): -zeta(-2,2) zeta(1,0); G(-1): -kappa(-2,0) kappa(1,1);"
    "G(-1): tau(-3,-5/3) -tau(-2,-5/3); T(1): iota(-4,-4) -iota(3,3); G(-1): delta(0,-1) -delta(0,0);"
    "lambda(2/3,1)",
    // n = 2 mod 3
    "G(1): -mu(7/3,-3) mu(7/3,-1); T(0): -zeta(-3,2) zeta(2,0); G(1): -kappa(-3,0) kappa(2,1);"
    "G(-2): tau(-2,-7/3) -tau(-1,-7/3); T(1): iota(-4,-5) -iota(3,4); G(-2): delta(1,-2) -delta(-1,1);"
    "lambda(4/3,-1)",
};

const std::vector<GaussianInt>& explicit_cycle(long n) {
    using V = std::vector<GaussianInt>;
    static const std::array<V, 14> cycles{
        V{{-2, 0}, {2, 2}, {0, -2}, {-1, 2}, {2, 0}, {-1, -1}, {0, 2}, {2, -1}},
        V{{-3, 0}, {3, 2}, {-1, -2}, {1, 3}, {1, -3}, {-2, 3}, {3, -1}},
        V{{-4, 0}, {4, 2}, {-3, -3}, {2, 4}, {0, -4}, {-1, 4}, {3, -3}, {-3, 2}, {4, -1}},
        V{{-3, 0}, {3, 3}, {0, -4}, {-2, 3}, {4, 0}, {-2, -2}, {0, 3}, {3, -2}},
        V{{-3, 0}, {3, 3}, {0, -4}, {-2, 3}, {4, 0}, {-2, -2}, {1, 3}, {2, -2}, {-2, 1}, {3, 1}, {-1, -2},
          {0, 3}, {3, -2}},
        V{{-3, -1}, {3, 3}, {-1, -3}, {0, 4}, {2, -3}, {-3, 2}, {4, 0}},
        V{{-4, -2}, {3, 4}, {0, -4}, {-1, 4}, {3, -3}, {-4, 2}, {5, 0}},
        V{{-5, -1}, {5, 3}, {-3, -4}, {2, 5}, {0, -5}, {-1, 5}, {3, -4}, {-4, 3}, {5, -1}, {-5, 0}, {5, 2},
          {-4, -3}, {3, 5}, {-1, -5}, {0, 6}, {2, -5}, {-3, 5}, {5, -3}, {-5, 2}, {6, 0}},
        V{{-5, 0}, {5, 2}, {-4, -3}, {3, 5}, {-1, -5}, {0, 5}, {2, -4}, {-3, 4}, {5, -2}, {-5, 1}, {5, 1},
          {-4, -2}, {4, 4}, {-2, -4}, {1, 5}, {1, -5}, {-2, 5}, {4, -4}, {-4, 3}, {5, -1}},
        V{{-15, -5}, {13, 10}, {-9, -13}, {5, 15}, {0, -15}, {-4, 15}, {9, -12}, {-12, 9}, {15, -4}, {-15, 0},
          {15, 5}, {-12, -9}, {9, 13}, {-4, -15}, {0, 16}, {5, -15}, {-9, 13}, {13, -9}, {-15, 5}, {16, 0}},
        V{{-4, 0}, {4, 2}, {-3, -2}, {3, 3}, {-2, -3}, {2, 4}, {0, -4}, {-1, 4}, {3, -3}, {-3, 2}, {4, -1}},
        V{{-7, 0}, {7, 2},  {-6, -3}, {6, 5},  {-4, -5}, {3, 6},   {-1, -6}, {0, 7},  {2, -6}, {-3, 6},
          {5, -5}, {-5, 4}, {6, -2},  {-6, 1}, {7, 1},   {-6, -2}, {6, 4},   {-5, -5}, {4, 6}, {-2, -6},
          {1, 7},  {1, -7}, {-2, 7},  {4, -6}, {-5, 6},  {6, -4},  {-6, 3},  {7, -1}},
        V{{-7, -1}, {7, 3}, {-6, -4}, {6, 6}, {-4, -6}, {3, 7}, {-1, -7}, {0, 8}, {2, -7}, {-3, 7}, {5, -6},
          {-6, 5}, {7, -3}, {-7, 2}, {8, 0}},
        V{{-10, 0}, {10, 2}, {-9, -3}, {9, 5},   {-7, -6}, {6, 8},   {-4, -8}, {3, 9},  {-1, -9},
          {0, 10},  {2, -9}, {-3, 9}, {5, -8},   {-6, 7},  {8, -5},  {-8, 4},  {9, -2}, {-9, 1},
          {10, 1},  {-9, -2}, {9, 4}, {-8, -5},  {7, 7},   {-5, -8}, {4, 9},   {-2, -9}, {1, 10},
          {1, -10}, {-2, 10}, {4, -9}, {-5, 9},  {7, -7},  {-8, 6},  {9, -4},  {-9, 3}, {10, -1}},
    };
    return cycles.at(static_cast<std::size_t>(n - 1));
}

std::string apply_errata(int residue, std::string text) {
    for (const auto& e : generator_errata()) {
        if (e.residue != residue) continue;
        auto at = text.find(e.printed);
        if (at == std::string::npos) throw std::logic_error("erratum does not match: " + e.printed);
        text.replace(at, e.printed.size(), e.corrected);
    }
    return text;
}

const std::vector<Group>& definition(int family, long n, bool literal) {
    static const auto parsed = [] {
        std::array<std::vector<std::vector<Group>>, 2> out;
        for (int lit = 0; lit < 2; ++lit) {
            for (int f = 0; f < 19; ++f) {
                out[lit].push_back(f == 0 ? std::vector<Group>{} : parse_groups(kDefinitions[f]));
            }
            for (int r = 0; r < 3; ++r) {
                out[lit].push_back(parse_groups(lit ? std::string(kFamily19[r]) : apply_errata(r, kFamily19[r])));
            }
        }
        return out;
    }();
    const auto& table = parsed[literal ? 1 : 0];
    if (family == 19) return table.at(static_cast<std::size_t>(19 + ((n % 3) + 3) % 3));
    return table.at(static_cast<std::size_t>(family));
}

// ---------------------------------------------------------------------------
// Range predicates. Rational bounds are compared exactly.

bool in(const Rational& lo, long m, const Rational& hi) { return lo <= m && Rational(m) <= hi; }
bool is(long m, const Rational& v) { return Rational(m) == v; }
Rational frac(long p, long q) { return make_rational(p, q); }

}  // namespace

std::string to_string(const FamilyInstance& inst) {
    if (inst.family == 0) return "C_0(" + std::to_string(inst.n) + ")";
    return "C_" + std::to_string(inst.family) + "(" + std::to_string(inst.n) + "," + std::to_string(inst.m) + ")";
}

bool is_valid(const FamilyInstance& inst) {
    const long n = inst.n;
    const long m = inst.m;
    switch (inst.family) {
        case 0: return n >= 1 && n <= 14 && m == 0;
        case 1: return n >= 2 && in(-1, m, frac(n - 5, 3));
        case 2: return n >= 3 && in(-1, m, frac(n - 6, 3));
        case 3: return n >= 5 && in(0, m, frac(n - 5, 3));
        case 4: return n >= 6 && in(0, m, frac(n - 6, 3));
        case 5: return n >= 2 && in(0, m, frac(n - 2, 3));
        case 6: return n >= 4 && in(0, m, frac(n - 4, 3));
        case 7: return n >= 5 && in(0, m, frac(n - 5, 5));
        case 8: return n >= 1 && (m == -1 || in(0, m, frac(n - 8, 5)) || is(m, frac(n - 4, 3)));
        case 9: return n >= 4 && in(frac(n - 4, 5), m, frac(n - 4, 3));
        case 10: return n >= 5 && in(frac(n - 6, 5), m, frac(n - 5, 3));
        case 11: return n >= 4 && in(frac(n - 5, 5), m, frac(n - 4, 3));
        case 12: return n >= 6 && in(frac(n - 7, 5), m, frac(n - 6, 3));
        case 13: return n >= 3 && in(frac(n - 3, 5), m, frac(n - 3, 3));
        case 14: return n >= 2 && in(frac(n - 7, 5), m, frac(n - 5, 3));
        case 15: return n >= 4 && (in(frac(n - 7, 5), m, frac(n - 6, 3)) || is(m, frac(n - 4, 3)));
        case 16: return n >= 7 && in(frac(n - 4, 5), m, frac(n - 4, 3));
        case 17: return n >= 5 && in(frac(n - 5, 5), m, frac(n - 5, 3));
        case 18: return n >= 8 && in(frac(n - 4, 5), m, frac(n - 5, 3));
        case 19:
            // (n - c/2) * 2/9 = (2n - c)/9
            switch (((n % 3) + 3) % 3) {
                case 0: return n >= 3 && (m == 0 || in(1, m, frac(2 * n - 3, 9)));
                case 1: return n >= 1 && (m == 0 || in(1, m, frac(2 * n - 5, 9)));
                default: return n >= 5 && (m == 0 || in(1, m, frac(2 * n - 7, 9)));
            }
        default: return false;
    }
}

std::vector<FamilyInstance> valid_instances(int family, long n) {
    std::vector<FamilyInstance> out;
    if (family == 0) {
        if (is_valid({0, n, 0})) out.push_back({0, n, 0});
        return out;
    }
    for (long m = -1; m <= n; ++m) {
        if (is_valid({family, n, m})) out.push_back({family, n, m});
    }
    return out;
}

const std::vector<Erratum>& generator_errata() {
    // Negated terms whose offsets are fractional are printed with the sign of
    // the offset flipped, and the first term of the n = 1 (mod 3) block names
    // epsilon where mu is meant. Read literally these give non-integral
    // coordinates (or, for the epsilon term, no cycle at all).
    static const std::vector<Erratum> errata{
        {1, "-eps(0,1)", "-mu(-2/3,1)"},
        {1, "-tau(-2,-5/3)", "-tau(2,5/3)"},
        {2, "-mu(7/3,-3)", "-mu(-7/3,3)"},
        {2, "-tau(-1,-7/3)", "-tau(1,7/3)"},
    };
    return errata;
}

Cycle expand_generators(const FamilyInstance& inst, bool literal) {
    if (!is_valid(inst)) throw std::invalid_argument("invalid instance " + to_string(inst));
    if (inst.family == 0) return Cycle(explicit_cycle(inst.n));
    const Rational n(inst.n);
    const Rational m(inst.m);
    std::vector<GaussianInt> out;
    for (const Group& g : definition(inst.family, inst.n, literal)) {
        if (g.when == Group::When::MZero && inst.m != 0) continue;
        if (g.when == Group::When::MNonzero && inst.m == 0) continue;
        Rational count = 1;
        switch (g.index) {
            case Group::Index::Once: break;
            case Group::Index::Gamma: count = (n + g.shift) / 3; break;
            case Group::Index::Sigma: count = n - 3 * m - g.shift; break;
            case Group::Index::Theta: count = m + g.shift; break;
        }
        if (count.get_den() != 1) throw std::invalid_argument("fractional index set in " + to_string(inst));
        for (long k = 1; k <= count.get_num().get_si(); ++k) {
            for (const Term& t : g.terms) {
                // A leading minus negates the generator before the offset (a, b) is added.
                const Rational kk(g.index == Group::Index::Once ? 0 : k);
                QComplex z = t.negate ? -generate(t.gen, n, m, kk, 0, 0) + QComplex{t.a, t.b}
                                      : generate(t.gen, n, m, kk, t.a, t.b);
                if (z.re.get_den() != 1 || z.im.get_den() != 1) {
                    throw std::domain_error("non-integral coordinate in " + to_string(inst));
                }
                out.emplace_back(z.re.get_num(), z.im.get_num());
            }
        }
    }
    if (out.empty()) throw std::invalid_argument("empty expansion for " + to_string(inst));
    return Cycle(std::move(out));
}

namespace {

// ---------------------------------------------------------------------------
// Printed cutout markup: vertices alternate with edges, the last edge closes
// the outline. o() is an overlined (belonging) vertex, v() a plain one,
// s() a solid edge and d() a dotted edge.

class Outline {
public:
    Outline& v(QComplex p) { return vertex(std::move(p), false); }
    Outline& o(QComplex p) { return vertex(std::move(p), true); }
    Outline& s() { return edge(true); }
    Outline& d() { return edge(false); }

    // At the ends of some parameter ranges two printed vertices coincide; the
    // zero-length edge between them is dropped.
    Cell build() const {
        if (pts_.size() > 1 && solid_.size() != pts_.size()) throw std::logic_error("outline not closed");
        std::vector<QComplex> pts = pts_;
        std::vector<bool> solid = solid_;
        std::vector<bool> member = member_;
        for (std::size_t k = 0; pts.size() > 1 && k < pts.size();) {
            std::size_t next = (k + 1) % pts.size();
            if (!(pts[k] == pts[next])) {
                ++k;
                continue;
            }
            if (member[k] != member[next]) throw std::logic_error("coincident vertices with different markup");
            pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(next));
            member.erase(member.begin() + static_cast<std::ptrdiff_t>(next));
            solid.erase(solid.begin() + static_cast<std::ptrdiff_t>(k));
            if (next == 0) k = 0;
        }
        if (pts.size() == 1) solid.clear();
        return Cell::from_polygon(std::move(pts), std::move(solid), std::move(member));
    }

private:
    Outline& vertex(QComplex p, bool member) {
        if (solid_.size() != pts_.size()) throw std::logic_error("two vertices without an edge");
        pts_.push_back(std::move(p));
        member_.push_back(member);
        return *this;
    }
    Outline& edge(bool solid) {
        if (solid_.size() + 1 != pts_.size()) throw std::logic_error("edge without a vertex");
        solid_.push_back(solid);
        return *this;
    }

    std::vector<QComplex> pts_;
    std::vector<bool> solid_;
    std::vector<bool> member_;
};

QComplex P(const Rational& x, const Rational& y) { return {x, y}; }
QComplex P(long a, long b, long c, long d) { return {make_rational(a, b), make_rational(c, d)}; }
// (1 - k/D, Y/D)
QComplex om(const Rational& k, const Rational& D, const Rational& Y) { return {1 - k / D, Y / D}; }

std::optional<Cell> catalog_c0(long n) {
    Outline o;
    switch (n) {
        case 1: o.o(P(2, 3, 2, 3)); break;
        case 2: o.v(P(12, 13, 5, 13)).d().v(P(6, 7, 3, 7)).s().o(P(7, 8, 3, 8)).s().v(P(10, 11, 4, 11)).d(); break;
        case 3: o.v(P(1, 1, 1, 3)).s().o(P(13, 14, 2, 7)).s().o(P(17, 18, 5, 18)).s(); break;
        case 4: o.v(P(3, 4, 3, 4)).s().v(P(2, 3, 2, 3)).s(); break;
        case 5: o.v(P(3, 4, 2, 3)).d().v(P(3, 4, 3, 4)).d().v(P(2, 3, 2, 3)).d(); break;
        case 6: o.v(P(14, 15, 2, 5)).d().v(P(5, 6, 1, 2)).d().v(P(6, 7, 3, 7)).s().o(P(12, 13, 5, 13)).s(); break;
        case 7: o.v(P(23, 25, 11, 25)).d().v(P(10, 11, 5, 11)).s().o(P(8, 9, 4, 9)).s().v(P(19, 21, 3, 7)).d(); break;
        case 8: o.v(P(1, 1, 1, 3)).d().v(P(14, 15, 1, 3)).d().v(P(16, 17, 5, 17)).d().v(P(24, 25, 7, 25)).s(); break;
        case 9: o.v(P(16, 17, 5, 17)).s().v(P(15, 16, 5, 16)).s(); break;
        case 10: o.o(P(15, 16, 5, 16)); break;
        case 11: o.v(P(17, 18, 5, 18)).s().v(P(14, 15, 4, 15)).s(); break;
        case 12: o.v(P(48, 49, 9, 49)).d().v(P(36, 37, 7, 37)).s().o(P(37, 38, 7, 38)).s().v(P(43, 44, 2, 11)).d(); break;
        case 13: o.v(P(65, 66, 2, 11)).d().v(P(35, 36, 7, 36)).d().v(P(36, 37, 7, 37)).s().o(P(60, 61, 11, 61)).s(); break;
        case 14: o.v(P(87, 88, 2, 11)).d().v(P(51, 52, 5, 26)).s().o(P(57, 58, 5, 29)).s(); break;
        default: return std::nullopt;
    }
    return o.build();
}

std::optional<Cell> catalog(const FamilyInstance& inst) {
    const long ni = inst.n;
    const long mi = inst.m;
    const Rational n(ni);
    const Rational m(mi);
    const Rational n2 = n * n;
    const Rational nm = n * m;
    Outline o;
    auto done = [&] { return std::optional<Cell>(o.build()); };
    switch (inst.family) {
        case 0:
            return catalog_c0(ni);
        case 1:
            if (ni == 2 && mi == -1) {
                o.v(P(1, 1, 1, 1)).s().v(P(0, 1, 1, 1)).s().v(P(1, 2, 1, 2)).d();
                return done();
            }
            if (ni == 3 && mi == -1) {
                o.v(P(1, 1, 1, 2)).s().v(P(3, 4, 1, 2)).s().v(P(4, 5, 2, 5)).d();
                return done();
            }
            if (ni >= 4 && mi == -1) {
                o.v(P(1, 1 / (n - 1))).s().o(om(1, n2 - 2 * n + 1, n - 1)).s().v(om(1, n2 - 2 * n + 2, n - 1)).d();
                return done();
            }
            if (ni == 5 && mi == 0) {
                o.v(P(1, 1, 1, 4)).s().v(P(24, 25, 7, 25)).d().v(P(18, 19, 5, 19)).s().o(P(21, 22, 5, 22)).s();
                return done();
            }
            if (ni >= 9 && in(0, mi, (n - 9) / 5)) {
                o.v(P(1, 1 / (n - 1))).s().o(om(1, n2 - n + nm - 4 * m - 3, n + m)).s()
                    .o(om(1, n2 - n + nm + 2 * m + 2, n + m)).s();
                return done();
            }
            if (ni >= 6 && in((n - 8) / 5, mi, (n - 5) / 5)) {
                o.v(P(1, 1 / (n - 1))).s().v(om(1, 8 * n + 6 * nm - 9 * m - 11, 6 * m + 8)).d()
                    .v(om(1, n2 - 2 * n + nm + m + 5, n + m)).s().o(om(1, n2 - n + nm + 2 * m + 2, n + m)).s();
                return done();
            }
            if (ni >= 9 && in((n - 4) / 5, mi, (n - 6) / 3)) {
                o.v(P(1, 1 / (n - 1))).s().v(om(1, 8 * n + 6 * nm - 9 * m - 11, 6 * m + 8)).d()
                    .v(om(1, n2 - 2 * n + nm + m + 5, n + m)).s().v(om(1, n2 + nm - 3 * m - 2, n + m)).d()
                    .v(om(1, 4 * n + 6 * nm - 3 * m - 2, 6 * m + 4)).s();
                return done();
            }
            if (ni >= 8 && is(mi, (n - 5) / 3)) {
                o.v(P(1, 1 / (n - 1))).s().v(om(1, 2 * n2 - 6 * n + 5, 2 * n - 3)).d()
                    .v(om(3, 4 * n2 - 10 * n + 7, 4 * n - 5)).s().v(om(3, 4 * n2 - 8 * n + 9, 4 * n - 5)).d()
                    .v(om(1, 2 * n2 - 7 * n + 3, 2 * n - 6)).s();
                return done();
            }
            return std::nullopt;
        case 2:
            if (ni == 3 && mi == -1) {
                o.v(P(7, 8, 5, 8)).d().v(P(5, 6, 2, 3)).s().v(P(2, 3, 2, 3)).d().v(P(4, 5, 2, 5)).d();
                return done();
            }
            if (ni == 4 && mi == -1) {
                o.v(P(1, 1, 1, 3)).d().v(P(12, 13, 5, 13)).d().v(P(8, 9, 1, 3)).d().v(P(9, 10, 3, 10)).d();
                return done();
            }
            if (ni >= 7 && in(-1, mi, (n - 12) / 5)) {
                o.v(P(1, 1 / (n - 1))).d().v(om(1, n2 - n + nm - 4 * m - 5, n + m)).d()
                    .v(om(1, n2 - n + nm + 2 * m + 4, n + m)).d();
                return done();
            }
            if (ni >= 5 && in((n - 11) / 5, mi, (n - 8) / 5)) {
                o.v(P(1, 1 / (n - 1))).d().v(om(1, 12 * n + 6 * nm - 9 * m - 17, 6 * m + 12)).s()
                    .v(om(1, n2 - 2 * n + nm + m + 7, n + m)).d().v(om(1, n2 - n + nm + 2 * m + 4, n + m)).d();
                return done();
            }
            if (ni >= 11 && in((n - 7) / 5, mi, (n - 8) / 3)) {
                o.v(P(1, 1 / (n - 1))).d().v(om(1, 12 * n + 6 * nm - 9 * m - 17, 6 * m + 12)).s()
                    .v(om(1, n2 - 2 * n + nm + m + 7, n + m)).d().v(om(1, n2 + nm - 3 * m - 4, n + m)).s()
                    .v(om(1, 8 * n + 6 * nm - 3 * m - 4, 6 * m + 8)).d();
                return done();
            }
            if (ni >= 7 && is(mi, (n - 7) / 3)) {
                o.v(P(1, 1 / (n - 1))).d().v(om(1, 2 * n2 - 6 * n + 5, 2 * n - 3)).d()
                    .v(om(3, 4 * n2 - 12 * n + 11, 4 * n - 7)).d().v(om(3, 4 * n2 - 10 * n + 9, 4 * n - 7)).s()
                    .v(om(1, 2 * n2 - 7 * n + 3, 2 * n - 6)).d();
                return done();
            }
            if (ni >= 6 && is(mi, (n - 6) / 3)) {
                o.v(om(1, 2 * n2 - 4 * n + 2, 2 * n - 1)).d().v(om(3, 4 * n2 - 13 * n + 9, 4 * n - 6)).d()
                    .v(om(3, 4 * n2 - 11 * n + 12, 4 * n - 6)).d();
                return done();
            }
            return std::nullopt;
        case 3:
            if (ni >= 5 && in(0, mi, (n - 5) / 5)) {
                o.v(P(1, 1 / (n - 1))).d().v(om(1, n2 - n + nm + 2 * m + 2, n + m)).s()
                    .o(om(1, n2 - n + nm + 2 * m + 3, n + m)).s();
                return done();
            }
            if (ni >= 8 && in((n - 4) / 5, mi, (n - 5) / 3)) {
                o.v(P(1, 1 / (n - 1))).d().v(om(1, 4 * n + 6 * nm - 3 * m - 2, 6 * m + 4)).s()
                    .o(om(1, 5 * n + 6 * nm - 3 * m - 2, 6 * m + 5)).s();
                return done();
            }
            return std::nullopt;
        case 4:
            if (ni >= 8 && in(0, mi, (n - 8) / 5)) {
                o.v(P(1, 1 / (n - 1))).s().v(om(1, n2 - n + nm + 2 * m + 4, n + m)).d()
                    .v(om(1, n2 - n + nm + 2 * m + 5, n + m)).d();
                return done();
            }
            if (ni >= 6 && in((n - 7) / 5, mi, (n - 6) / 3)) {
                o.v(P(1, 1 / (n - 1))).s().v(om(1, 7 * n + 6 * nm - 3 * m - 3, 6 * m + 7)).d()
                    .v(om(1, 8 * n + 6 * nm - 3 * m - 3, 6 * m + 8)).d();
                return done();
            }
            return std::nullopt;
        case 5:
            if (ni >= 2 && ni <= 3 && mi == 0) {
                o.v(P(1, 1 / n)).s().o(om(1, n2 + n - 1, n + 1)).s().v(om(1, n2, n)).d();
                return done();
            }
            if (ni >= 4 && mi == 0) {
                o.v(P(1, 1 / n)).s().o(om(1, n2 - 1, n)).s().v(om(1, n2, n)).d();
                return done();
            }
            if (ni >= 9 && in(1, mi, (n - 4) / 5)) {
                o.v(P(1, 1 / n)).s().o(om(1, n2 + nm - 3 * m - 1, n + m)).s().v(om(1, n2 + nm - 3 * m, n + m)).d();
                return done();
            }
            if (ni >= 6 && in((n - 3) / 5, mi, (n - 3) / 3)) {
                o.v(P(1, 1 / n)).s().o(om(1, 4 * n + 6 * nm - 3 * m - 1, 6 * m + 4)).s()
                    .v(om(1, 3 * n + 6 * nm - 3 * m, 6 * m + 3)).d();
                return done();
            }
            if (ni >= 5 && is(mi, (n - 2) / 3)) {
                o.v(P(1, 1 / n)).s().o(om(1, 2 * n2 - 2 * n + 1, 2 * n - 1)).s()
                    .v(om(1, 2 * n2 - 3 * n + 2, 2 * n - 2)).d();
                return done();
            }
            return std::nullopt;
        case 6:
            if (ni >= 7 && in(0, mi, (n - 7) / 5)) {
                o.v(P(1, 1 / n)).d().v(om(1, n2 + nm - 3 * m - 3, n + m)).d().v(om(1, n2 + nm - 3 * m - 2, n + m)).s();
                return done();
            }
            if (ni >= 5 && in((n - 6) / 5, mi, (n - 5) / 3)) {
                o.v(P(1, 1 / n)).d().v(om(1, 7 * n + 6 * nm - 3 * m - 3, 6 * m + 7)).d()
                    .v(om(1, 6 * n + 6 * nm - 3 * m - 2, 6 * m + 6)).s();
                return done();
            }
            if (ni >= 4 && is(mi, (n - 4) / 3)) {
                o.v(P(1, 1 / n)).d().v(om(1, 2 * n2 - 2 * n + 1, 2 * n - 1)).s()
                    .o(om(1, 2 * n2 - 3 * n + 2, 2 * n - 2)).s();
                return done();
            }
            return std::nullopt;
        case 7:
            if (ni >= 9 && in(0, mi, (n - 9) / 11)) {
                o.v(om(1, n2 + nm - 3 * m - 1, n + m)).s().v(om(1, n2 - n + nm + 2 * m + 3, n + m)).d()
                    .v(om(2, n2 - n + nm + 5 * m + 6, n + m)).s().v(om(2, n2 + nm - 6 * m - 2, n + m)).d();
                return done();
            }
            if (ni >= 5 && in((n - 8) / 11, mi, (n - 5) / 5)) {
                o.v(om(1, n2 + nm - 3 * m - 1, n + m)).s().v(om(1, n2 - n + nm + 2 * m + 3, n + m)).d()
                    .v(om(1, 4 * n + 6 * nm - 3 * m - 1, 6 * m + 4)).d();
                return done();
            }
            return std::nullopt;
        case 8:
            if (ni == 1 && mi == -1) {
                o.v(P(0, 1, 0, 1)).d().v(P(0, 1, 1, 1)).d().v(P(-1, 1, 1, 1)).s().o(P(-1, 1, 0, 1)).s();
                return done();
            }
            if (ni == 2 && mi == -1) {
                o.v(P(3, 4, 1, 2)).d().v(P(2, 3, 2, 3)).d().v(P(1, 2, 1, 2)).s();
                return done();
            }
            if (ni == 3 && mi == -1) {
                o.v(P(8, 9, 1, 3)).d().v(P(7, 8, 3, 8)).s().v(P(5, 6, 1, 3)).s();
                return done();
            }
            if (ni >= 4 && mi == -1) {
                o.v(P(1 - 1 / n2, 1 / n)).d().v(om(1, n2 - n + 2, n)).s().v(om(1, n2 - 2 * n + 3, n - 1)).d()
                    .v(om(1, n2 - n, n - 1)).s();
                return done();
            }
            if (ni >= 16 && in(0, mi, (n - 16) / 11)) {
                o.v(om(1, n2 + n + nm - 3 * m - 3, n + m + 1)).d().v(om(1, n2 + nm + 2 * m + 4, n + m + 1)).s()
                    .v(om(2, n2 - n + nm + 5 * m + 10, n + m)).d().v(om(2, n2 + nm - 6 * m - 6, n + m)).s();
                return done();
            }
            if (ni >= 8 && in((n - 15) / 11, mi, (n - 8) / 5)) {
                o.v(om(1, n2 + n + nm - 3 * m - 3, n + m + 1)).d().v(om(1, n2 + nm + 2 * m + 4, n + m + 1)).s()
                    .o(om(1, 8 * n + 6 * nm - 3 * m - 3, 6 * m + 8)).s();
                return done();
            }
            if (ni >= 4 && is(mi, (n - 4) / 3)) {
                o.v(om(3, 4 * n2 - 4 * n + 3, 4 * n - 1)).d().v(om(3, 4 * n2 - 6 * n + 2, 4 * n - 1)).s()
                    .o(om(2, 2 * n2 - 3 * n + 2, 2 * n - 1)).s();
                return done();
            }
            return std::nullopt;
        case 9:
            if (ni >= 4 && is(mi, (n - 4) / 5)) {
                o.v(om(5, 6 * n2 - 7 * n + 7, 6 * n - 4)).d().v(om(5, 6 * n2 - 2 * n + 2, 6 * n + 1)).d()
                    .v(om(5, 6 * n2 - 7 * n + 2, 6 * n - 4)).s();
                return done();
            }
            if (ni >= 7 && in((n - 3) / 5, mi, (n - 4) / 3)) {
                o.v(om(1, 4 * n + 6 * nm - 3 * m - 1, 6 * m + 4)).d().v(om(1, 5 * n + 6 * nm - 3 * m - 2, 6 * m + 5)).d()
                    .v(om(1, 4 * n + 6 * nm - 3 * m - 2, 6 * m + 4)).s().o(om(1, 3 * n + 6 * nm - 3 * m - 1, 6 * m + 3)).s();
                return done();
            }
            return std::nullopt;
        case 10:
            if (ni >= 6 && is(mi, (n - 6) / 5)) {
                o.v(om(5, 6 * n2 - 9 * n + 8, 6 * n - 6)).s().o(om(5, 6 * n2 - 4 * n + 3, 6 * n - 1)).s()
                    .v(om(5, 6 * n2 - 9 * n + 3, 6 * n - 6)).d();
                return done();
            }
            if (ni >= 5 && in((n - 5) / 5, mi, (n - 5) / 3)) {
                o.v(om(1, 6 * n + 6 * nm - 3 * m - 2, 6 * m + 6)).s().o(om(1, 7 * n + 6 * nm - 3 * m - 3, 6 * m + 7)).s()
                    .v(om(1, 6 * n + 6 * nm - 3 * m - 3, 6 * m + 6)).d().v(om(1, 5 * n + 6 * nm - 3 * m - 2, 6 * m + 5)).d();
                return done();
            }
            return std::nullopt;
        case 11:
            if (ni >= 5 && is(mi, (n - 5) / 5)) {
                o.v(om(5, 6 * n2 - 8 * n + 10, 6 * n - 5)).d().v(om(5, 6 * n2 - 3 * n + 5, 6 * n)).s()
                    .v(om(5, 6 * n2 - 8 * n + 5, 6 * n - 5)).d();
                return done();
            }
            if (ni >= 4 && in((n - 4) / 5, mi, (n - 4) / 3)) {
                o.v(om(1, 5 * n + 6 * nm - 3 * m - 1, 6 * m + 5)).d().v(om(1, 6 * n + 6 * nm - 3 * m - 2, 6 * m + 6)).s()
                    .v(om(1, 5 * n + 6 * nm - 3 * m - 2, 6 * m + 5)).d().v(om(1, 4 * n + 6 * nm - 3 * m - 1, 6 * m + 4)).d();
                return done();
            }
            return std::nullopt;
        case 12:
            if (ni >= 7 && is(mi, (n - 7) / 5)) {
                o.v(om(5, 6 * n2 - 10 * n + 6, 6 * n - 7)).d().v(om(5, 6 * n2 - 5 * n + 1, 6 * n - 2)).d()
                    .v(om(5, 6 * n2 - 10 * n + 1, 6 * n - 7)).d();
                return done();
            }
            if (ni >= 6 && in((n - 6) / 5, mi, (n - 6) / 3)) {
                o.v(om(1, 7 * n + 6 * nm - 3 * m - 3, 6 * m + 7)).d().v(om(1, 8 * n + 6 * nm - 3 * m - 4, 6 * m + 8)).d()
                    .v(om(1, 7 * n + 6 * nm - 3 * m - 4, 6 * m + 7)).d().v(om(1, 6 * n + 6 * nm - 3 * m - 3, 6 * m + 6)).d();
                return done();
            }
            return std::nullopt;
        case 13:
            if (ni >= 3 && is(mi, (n - 3) / 5)) {
                o.v(om(5, 6 * n2 - 6 * n + 9, 6 * n - 3)).d().v(om(5, 6 * n2 - n + 4, 6 * n + 2)).d()
                    .v(om(5, 6 * n2 - 6 * n + 4, 6 * n - 3)).s();
                return done();
            }
            if (ni >= 6 && in((n - 2) / 5, mi, (n - 3) / 3)) {
                o.v(om(1, 3 * n + 6 * nm - 3 * m, 6 * m + 3)).d().v(om(1, 4 * n + 6 * nm - 3 * m - 1, 6 * m + 4)).d()
                    .v(om(1, 3 * n + 6 * nm - 3 * m - 1, 6 * m + 3)).d().v(om(1, 2 * n + 6 * nm - 3 * m, 6 * m + 2)).d();
                return done();
            }
            return std::nullopt;
        case 14:
            if (ni == 2 && mi == -1) {
                o.o(P(3, 4, 1, 2)).s().v(P(4, 5, 3, 5)).d().v(P(2, 3, 2, 3)).s();
                return done();
            }
            if (ni >= 6 && in((n - 7) / 5, mi, (n - 6) / 3)) {
                o.o(om(1, 8 * n + 6 * nm - 3 * m - 3, 6 * m + 8)).s().v(om(1, 9 * n + 6 * nm - 3 * m - 4, 6 * m + 9)).s();
                return done();
            }
            if (ni >= 5 && is(mi, (n - 5) / 3)) {
                Rational D = 2 * n2 - 2 * n + 1;
                o.o(om(1, 2 * n2 - 3 * n + 2, 2 * n - 2)).s().v(P((2 * n2 - 2 * n) / D, (2 * n - 1) / D)).d()
                    .v(om(1, 2 * n2 - 3 * n + 1, 2 * n - 2)).d().v(om(1, 2 * n2 - 4 * n + 2, 2 * n - 3)).s();
                return done();
            }
            return std::nullopt;
        case 15:
            if (ni >= 6 && in((n - 7) / 5, mi, (n - 6) / 3)) {
                o.v(om(1, 8 * n + 6 * nm - 3 * m - 3, 6 * m + 8)).s().v(om(1, 7 * n + 6 * nm - 3 * m - 3, 6 * m + 7)).s();
                return done();
            }
            if (ni >= 4 && is(mi, (n - 4) / 3)) {
                o.v(P(1, 1 / n)).d().v(om(1, 2 * n2 - 2 * n + 1, 2 * n - 1)).s().o(om(1, 2 * n2 - 3 * n + 2, 2 * n - 2)).s();
                return done();
            }
            return std::nullopt;
        case 16:
            if (ni >= 7 && in((n - 4) / 5, mi, (n - 4) / 3)) {
                o.v(om(1, 5 * n + 6 * nm - 3 * m - 2, 6 * m + 5)).s().v(om(1, 4 * n + 6 * nm - 3 * m - 1, 6 * m + 4)).s();
                return done();
            }
            return std::nullopt;
        case 17:
            if (ni >= 5 && in((n - 5) / 5, mi, (n - 5) / 3)) {
                o.o(om(1, 6 * n + 6 * nm - 3 * m - 2, 6 * m + 6));
                return done();
            }
            return std::nullopt;
        case 18:
            if (ni >= 8 && in((n - 4) / 5, mi, (n - 5) / 3)) {
                o.o(om(1, 4 * n + 6 * nm - 3 * m - 2, 6 * m + 4));
                return done();
            }
            return std::nullopt;
        case 19: {
            const long r = ((ni % 3) + 3) % 3;
            if (ni == 1 && mi == 0) {
                o.o(P(1, 2, 3, 4)).s().v(P(1, 2, 1, 1)).s().o(P(2, 5, 4, 5)).s();
                return done();
            }
            if (ni >= 3 && r == 0 && mi == 0) {
                o.v(om(1, 2 * n2 - 3 * n + 2, 2 * n - 2)).s().o(om(1, 2 * n2 - 2 * n + 1, 2 * n - 1)).s()
                    .v(om(3, 4 * n2 - 6 * n + 3, 4 * n - 3)).d().v(om(3, 4 * n2 - 6 * n + 6, 4 * n - 3)).d();
                return done();
            }
            if (ni >= 9 && r == 0 && in(1, mi, (2 * n - 6) / 9)) {
                o.v(om(3, 4 * n2 - 4 * n + 9 * nm + 3, 4 * n + 9 * m - 3)).s()
                    .o(om(1, 2 * n2 - 2 * n + 6 * nm - 3 * m + 1, 2 * n + 6 * m - 1)).s()
                    .v(om(3, 4 * n2 - 6 * n + 9 * nm - 9 * m + 3, 4 * n + 9 * m - 3)).d();
                return done();
            }
            if (ni >= 4 && r == 1 && in(0, mi, (2 * n - 8) / 9)) {
                o.v(om(3, 4 * n2 - 2 * n + 9 * nm + 4, 4 * n + 9 * m - 1)).s()
                    .o(om(1, 2 * n2 + 6 * nm - 3 * m, 2 * n + 6 * m + 1)).s()
                    .v(om(3, 4 * n2 - 4 * n + 9 * nm - 9 * m, 4 * n + 9 * m - 1)).d();
                return done();
            }
            if (ni >= 5 && r == 2 && in(0, mi, (2 * n - 10) / 9)) {
                o.o(om(3, 4 * n2 + 3 * n + 9 * nm + 2, 4 * n + 9 * m + 4)).s()
                    .o(om(1, 2 * n2 + 2 * n + 6 * nm - 3 * m - 1, 2 * n + 6 * m + 3)).s()
                    .o(om(3, 4 * n2 + n + 9 * nm - 9 * m - 3, 4 * n + 9 * m + 4)).s();
                return done();
            }
            if (ni >= 6 && is(mi, (2 * n - 3) / 9)) {
                o.v(om(3, 6 * n2 - 7 * n + 3, 6 * n - 6)).s().o(om(3, 10 * n2 - 14 * n + 6, 10 * n - 9)).s()
                    .v(om(3, 10 * n2 - 20 * n + 6, 10 * n - 15)).d().v(om(2, 4 * n2 - 6 * n + 1, 4 * n - 4)).d();
                return done();
            }
            if (ni >= 7 && is(mi, (2 * n - 5) / 9)) {
                o.v(om(3, 6 * n2 - 7 * n + 4, 6 * n - 6)).s().o(om(3, 10 * n2 - 15 * n + 8, 10 * n - 10)).s()
                    .v(om(1, 2 * n2 - 3 * n + 2, 2 * n - 2)).d();
                return done();
            }
            if (ni >= 8 && is(mi, (2 * n - 7) / 9)) {
                o.o(om(3, 6 * n2 - 4 * n + 2, 6 * n - 3)).s().v(om(3, 10 * n2 - 10 * n + 4, 10 * n - 5)).d()
                    .v(om(1, 2 * n2 - 2 * n + 1, 2 * n - 1)).s();
                return done();
            }
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

}  // namespace

std::optional<Cell> expected_cutout(const FamilyInstance& inst) {
    if (!is_valid(inst)) return std::nullopt;
    return catalog(inst);
}

bool in_selection_table(const FamilyInstance& inst) {
    const long n = inst.n;
    const long m = inst.m;
    switch (inst.family) {
        case 0: return n >= 1 && n <= 14 && m == 0;
        case 1: return n >= 2 && in(-1, m, frac(n - 5, 3));
        case 2: return n >= 4 && in(-1, m, frac(n - 7, 3));
        case 3: return n >= 5 && in(0, m, frac(n - 5, 3));
        case 4: return n >= 7 && in(0, m, frac(n - 7, 3));
        case 5: return n >= 2 && in(0, m, frac(n - 2, 3));
        case 6: return n >= 4 && in(0, m, frac(n - 4, 3));
        case 7: return n >= 5 && in(0, m, frac(n - 5, 5));
        case 8: return n >= 3 && in(-1, m, frac(n - 8, 5));
        case 9: return n >= 4 && in(frac(n - 4, 5), m, frac(n - 4, 3));
        case 10: return n >= 5 && in(frac(n - 6, 5), m, frac(n - 5, 3));
        case 11: return n >= 4 && in(frac(n - 5, 5), m, frac(n - 4, 3));
        case 12: return n >= 6 && in(frac(n - 7, 5), m, frac(n - 6, 3));
        case 13: return n >= 3 && in(frac(n - 3, 5), m, frac(n - 3, 3));
        case 14: return n >= 6 && in(frac(n - 7, 5), m, frac(n - 6, 3));
        case 15: return n >= 6 && in(frac(n - 7, 5), m, frac(n - 6, 3));
        case 16: return n >= 7 && in(frac(n - 4, 5), m, frac(n - 4, 3));
        case 17: return n >= 5 && in(frac(n - 5, 5), m, frac(n - 5, 3));
        case 18: return n >= 8 && in(frac(n - 4, 5), m, frac(n - 5, 3));
        case 19: {
            long r = ((n % 3) + 3) % 3;
            return n >= 4 && in(frac(1 - r, 2), m, frac(2 * n - 2 * r - 5, 9));
        }
        default: return false;
    }
}

std::vector<FamilyInstance> selection(long n, const std::vector<int>& omit) {
    if (n < 7) throw std::invalid_argument("regular sectors start at n = 7");
    const Cell window = sector_window(n);
    std::vector<FamilyInstance> out;
    for (int f = 1; f < kFamilyCount; ++f) {
        if (std::find(omit.begin(), omit.end(), f) != omit.end()) continue;
        for (long k = n - 2; k <= n + 2; ++k) {
            for (long m = -1; m <= k; ++m) {
                FamilyInstance inst{f, k, m};
                if (!in_selection_table(inst) || !is_valid(inst)) continue;
                // row n is kept whole; neighbouring rows only where they reach the window
                if (k == n || !intersect(cycle_polygon(expand_generators(inst)), window).empty()) out.push_back(inst);
            }
        }
    }
    return out;
}

std::vector<FamilyInstance> prefix_selection(long max_n) {
    std::vector<FamilyInstance> out;
    for (long n = 1; n <= 14; ++n) out.push_back({0, n, 0});
    out.push_back({8, 2, -1});
    out.push_back({2, 3, -1});
    out.push_back({19, 3, 0});
    out.push_back({4, 6, 0});
    out.push_back({8, 1, -1});
    for (int f = 1; f < kFamilyCount; ++f) {
        for (long n = 1; n <= max_n; ++n) {
            for (long m = -1; m <= n; ++m) {
                FamilyInstance inst{f, n, m};
                if (!in_selection_table(inst) || !is_valid(inst)) continue;
                if (std::find(out.begin(), out.end(), inst) == out.end()) out.push_back(inst);
            }
        }
    }
    return out;
}

}  // namespace gsrs
