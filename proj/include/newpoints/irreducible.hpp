#pragma once

// Irreducibility certification with honest three-tier verdicts.
//
// Over the rationals, full factorization is out of proportion for this
// library, so certificates carry their strength explicitly:
//   PROVED  - Eisenstein at some prime, or the intersection of mod-p
//             factor-degree patterns (distinct-degree factorization at up to
//             ten primes of good reduction) admits no proper factor degree;
//   LIKELY  - squarefree and no disproof found within budget;
//   FAILED  - an explicit factor is exhibited (rational root, repeated
//             factor, or degree < 1 degeneracy).
// Over finite fields irreducibility is decidable, so verdicts there are
// always PROVED or FAILED.

#include <cstdint>
#include <string>
#include <vector>

#include "fq.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "ratfunc.hpp"
#include "util.hpp"

namespace newpoints {

enum class IrredStatus { PROVED, LIKELY, FAILED };

inline std::string irred_status_text(IrredStatus s) {
    switch (s) {
        case IrredStatus::PROVED: return "PROVED";
        case IrredStatus::LIKELY: return "LIKELY";
        case IrredStatus::FAILED: return "FAILED";
    }
    return "?";
}

inline IrredStatus irred_status_from_text(const std::string& s) {
    if (s == "PROVED") return IrredStatus::PROVED;
    if (s == "LIKELY") return IrredStatus::LIKELY;
    if (s == "FAILED") return IrredStatus::FAILED;
    throw domain_error("unknown irreducibility status: " + s);
}

struct IrredCertificate {
    IrredStatus status;
    std::string witness;  // human-readable justification
};

// Primitive integer form of a rational polynomial: clear denominators, then
// divide by the content. Little-endian, same degree.
inline std::vector<Int> primitive_int_coeffs(const Poly<Rat>& f) {
    if (f.is_zero()) throw domain_error("primitive form of zero polynomial");
    Int den_lcm(1);
    for (int i = 0; i <= f.degree(); ++i) {
        Int d = f.coeff(static_cast<std::size_t>(i)).den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<Int> c;
    Int content(0);
    for (int i = 0; i <= f.degree(); ++i) {
        Rat v = f.coeff(static_cast<std::size_t>(i)) * Rat(den_lcm);
        c.push_back(v.num());  // denominator is 1 by construction
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), c.back().get_mpz_t());
        content = g;
    }
    if (content > 1)
        for (auto& v : c) v /= content;
    return c;
}

struct RootSearch {
    std::vector<Rat> roots;
    bool complete;  // false when the divisor-enumeration budget ran out
};

// Rational roots by the p/q divisor criterion, with a work budget. When the
// budget runs out the search reports complete = false rather than guessing.
inline RootSearch rational_roots(const Poly<Rat>& f) {
    RootSearch out{{}, true};
    if (f.degree() < 1) return out;
    std::vector<Int> c = primitive_int_coeffs(f);
    std::size_t d = c.size() - 1;

    // strip x^k | f : zero is a root
    std::size_t low = 0;
    while (low < d && c[low] == 0) ++low;
    if (low > 0) out.roots.push_back(Rat(0));
    if (low == d) return out;

    auto num_divs = divisors_with_budget(c[low], 2000);
    auto den_divs = divisors_with_budget(c[d], 500);
    if (!num_divs || !den_divs || num_divs->size() * den_divs->size() > 60000) {
        out.complete = false;
        if (!num_divs || !den_divs) return out;
    }
    std::size_t tried = 0;
    for (const Int& q : *den_divs) {
        for (const Int& p : *num_divs) {
            if (++tried > 60000) { out.complete = false; return out; }
            Int g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                Rat cand(sign > 0 ? p : Int(-p), q);
                if (is_zero(eval(f, cand))) out.roots.push_back(cand);
            }
        }
    }
    return out;
}

namespace detail {

// Achievable sums of a multiset of factor degrees (knapsack bitset).
inline std::vector<bool> degree_subset_sums(const std::vector<std::pair<int, int>>& ddf,
                                            int d) {
    std::vector<bool> dp(static_cast<std::size_t>(d) + 1, false);
    dp[0] = true;
    for (auto& [deg, count] : ddf)
        for (int rep = 0; rep < count; ++rep)
            for (int s = d - deg; s >= 0; --s)
                if (dp[static_cast<std::size_t>(s)]) dp[static_cast<std::size_t>(s + deg)] = true;
    return dp;
}

}  // namespace detail

inline IrredCertificate certify_irreducible(const Poly<Rat>& f) {
    int d = f.degree();
    if (d < 1) return {IrredStatus::FAILED, "degree below 1"};
    if (d == 1) return {IrredStatus::PROVED, "linear"};

    std::vector<Int> c = primitive_int_coeffs(f);
    if (c[0] == 0) return {IrredStatus::FAILED, "factor x (zero constant term)"};

    // repeated factor => reducible in characteristic zero
    Poly<Rat> g = gcd(f, derivative(f));
    if (g.degree() > 0)
        return {IrredStatus::FAILED, "repeated factor " + poly_text(g)};

    // rational root => linear factor
    RootSearch rs = rational_roots(f);
    if (!rs.roots.empty())
        return {IrredStatus::FAILED, "rational root " + rs.roots[0].str()};

    // Eisenstein at small primes and at prime factors of the constant term
    std::vector<Int> primes;
    for (std::uint64_t p = 2; p < 100; ++p)
        if (is_prime_u64(p)) primes.push_back(Int(static_cast<unsigned long>(p)));
    if (auto fac = factor_with_budget(c[0]))
        for (auto& [p, e] : *fac) {
            (void)e;
            if (p >= 100) primes.push_back(p);
        }
    for (const Int& p : primes) {
        if (mpz_divisible_p(c.back().get_mpz_t(), p.get_mpz_t())) continue;
        bool all = true;
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (!mpz_divisible_p(c[i].get_mpz_t(), p.get_mpz_t())) { all = false; break; }
        if (!all) continue;
        Int p2 = p * p;
        if (mpz_divisible_p(c[0].get_mpz_t(), p2.get_mpz_t())) continue;
        return {IrredStatus::PROVED, "eisenstein at " + p.get_str()};
    }

    // Mod-p factor-degree patterns at up to 10 primes of good reduction.
    std::vector<bool> achievable(static_cast<std::size_t>(d) + 1, true);
    std::string used;
    int good = 0;
    for (std::uint64_t p = 2; p < 2000 && good < 10; ++p) {
        if (!is_prime_u64(p)) continue;
        if (mpz_divisible_ui_p(c.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        Fp proto(0, p);
        std::vector<Fp> cp;
        cp.reserve(c.size());
        for (const Int& v : c) {
            Int r = v % static_cast<unsigned long>(p);
            if (r < 0) r += static_cast<unsigned long>(p);
            cp.emplace_back(r.get_ui(), p);
        }
        Poly<Fp> fp(std::move(cp), proto);
        if (fp.degree() != d || !is_separable(fp)) continue;  // bad reduction
        ++good;
        auto sums = detail::degree_subset_sums(ddf_degrees(fp), d);
        for (int s = 0; s <= d; ++s)
            if (!sums[static_cast<std::size_t>(s)]) achievable[static_cast<std::size_t>(s)] = false;
        if (!used.empty()) used += ",";
        used += std::to_string(p);
        bool proper = false;
        for (int s = 1; s < d; ++s)
            if (achievable[static_cast<std::size_t>(s)]) { proper = true; break; }
        if (!proper)
            return {IrredStatus::PROVED, "mod-p factor degree patterns at p in {" + used + "}"};
    }

    return {IrredStatus::LIKELY,
            rs.complete ? "squarefree, no factor found"
                        : "squarefree, no factor found (root search budget hit)"};
}

// Rabin irreducibility over any finite coefficient field of size q.
template <class K>
bool is_irreducible_finite(const Poly<K>& f, const Int& q) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    Poly<K> x = Poly<K>::x_power(f.proto(), 1);
    Int qn(1);
    for (int i = 0; i < n; ++i) qn *= q;
    if (poly_powmod(x, qn, f) != x % f) return false;
    std::vector<int> prime_divs;
    int m = n;
    for (int p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            if (prime_divs.empty() || prime_divs.back() != p) prime_divs.push_back(p);
            m /= p;
        }
    if (m > 1) prime_divs.push_back(m);
    for (int p : prime_divs) {
        Int qk(1);
        for (int i = 0; i < n / p; ++i) qk *= q;
        Poly<K> h = poly_powmod(x, qk, f) - x;
        if (gcd(h, f).degree() != 0) return false;
    }
    return true;
}

inline IrredCertificate certify_irreducible(const Poly<Fp>& f) {
    if (f.degree() < 1) return {IrredStatus::FAILED, "degree below 1"};
    if (is_irreducible_fp(f)) return {IrredStatus::PROVED, "irreducible over the prime field"};
    return {IrredStatus::FAILED, "reducible over the prime field"};
}

inline IrredCertificate certify_irreducible(const Poly<ExtElt<Fp>>& f) {
    if (f.degree() < 1) return {IrredStatus::FAILED, "degree below 1"};
    Int q = field_size(f.proto().ring());
    if (is_irreducible_finite(f, q))
        return {IrredStatus::PROVED, "irreducible over the finite field"};
    return {IrredStatus::FAILED, "reducible over the finite field"};
}

// Over a rational function field we do not carry a factorization engine;
// verdicts are honest about that.
inline IrredCertificate certify_irreducible(const Poly<RFElt<Fp>>& f) {
    if (f.degree() < 1) return {IrredStatus::FAILED, "degree below 1"};
    if (f.degree() == 1) return {IrredStatus::PROVED, "linear"};
    if (is_zero(f.coeff(0))) return {IrredStatus::FAILED, "factor x (zero constant term)"};
    if (!is_separable(f)) {
        Poly<RFElt<Fp>> g = gcd(f, derivative(f));
        if (g.degree() > 0 && g.degree() < f.degree())
            return {IrredStatus::FAILED, "repeated factor of degree " + std::to_string(g.degree())};
        return {IrredStatus::LIKELY, "inseparable (derivative vanishes); not analyzed further"};
    }
    return {IrredStatus::LIKELY, "squarefree; no factorization engine over this field"};
}

}  // namespace newpoints
