#pragma once

// Finite fields F_{p^n} built as F_p[g]/(m) with a certified irreducible
// modulus, plus the splitting utilities the rest of the library leans on:
// distinct-degree factorization and brute-force root finding.

#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "ext.hpp"
#include "fp.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace newpoints {

using FqRing = std::shared_ptr<const ExtRing<Fp>>;
using FqElt = ExtElt<Fp>;

// Rabin test: f of degree n over F_p is irreducible iff x^{p^n} = x mod f
// and x^{p^{n/q}} - x is coprime to f for every prime q | n.
inline bool is_irreducible_fp(const Poly<Fp>& f) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    std::uint64_t p = char_of(f.proto());
    Poly<Fp> x = Poly<Fp>::x_power(f.proto(), 1);
    Int pn(1);
    for (int i = 0; i < n; ++i) pn *= static_cast<unsigned long>(p);
    if (poly_powmod(x, pn, f) != x % f) return false;
    std::vector<int> prime_divs;
    int m = n;
    for (int q = 2; q * q <= m; ++q)
        while (m % q == 0) {
            if (prime_divs.empty() || prime_divs.back() != q) prime_divs.push_back(q);
            m /= q;
        }
    if (m > 1) prime_divs.push_back(m);
    for (int q : prime_divs) {
        Int pk(1);
        for (int i = 0; i < n / q; ++i) pk *= static_cast<unsigned long>(p);
        Poly<Fp> h = poly_powmod(x, pk, f) - x;
        if (gcd(h, f).degree() != 0) return false;
    }
    return true;
}

// Least monic irreducible of degree n, ordering candidates by the tuple of
// coefficients from x^{n-1} down to the constant term.
inline Poly<Fp> least_irreducible_modulus(std::uint64_t p, unsigned n) {
    if (n == 0) throw domain_error("extension degree must be positive");
    Fp proto(0, p);
    Int count(1);
    for (unsigned i = 0; i < n; ++i) count *= static_cast<unsigned long>(p);
    for (Int k(0); k < count; ++k) {
        std::vector<Fp> c(n + 1, proto);
        c[n] = Fp(1, p);
        Int rem = k;
        for (unsigned i = 0; i < n; ++i) {
            Int digit = rem % static_cast<unsigned long>(p);
            c[i] = Fp(digit.get_ui(), p);
            rem /= static_cast<unsigned long>(p);
        }
        Poly<Fp> f(std::move(c), proto);
        if (is_irreducible_fp(f)) return f;
    }
    throw domain_error("no irreducible polynomial found");
}

inline FqRing make_fq(std::uint64_t p, unsigned n,
                      std::optional<Poly<Fp>> modulus = std::nullopt,
                      std::string gen_name = "g") {
    if (!is_prime_u64(p)) throw domain_error("field characteristic must be prime");
    Poly<Fp> m = modulus ? *modulus : least_irreducible_modulus(p, n);
    if (m.degree() != static_cast<int>(n))
        throw domain_error("modulus degree does not match extension degree");
    if (!is_irreducible_fp(m)) throw domain_error("modulus is not irreducible");
    return ExtRing<Fp>::make(std::move(m), std::move(gen_name));
}

inline Int field_size(const FqRing& ring) {
    Int q(1);
    std::uint64_t p = char_of(ring->base_proto());
    for (int i = 0; i < ring->dim(); ++i) q *= static_cast<unsigned long>(p);
    return q;
}

// Enumerates all q elements; refuses fields too large to walk.
template <class K>
std::vector<ExtElt<K>> all_field_elements(const std::shared_ptr<const ExtRing<K>>& ring,
                                          std::size_t cap = (1u << 21)) {
    std::vector<K> base;
    if constexpr (std::is_same_v<K, Fp>) {
        std::uint64_t p = char_of(ring->base_proto());
        if (p > cap) throw domain_error("field too large to enumerate");
        base.reserve(p);
        for (std::uint64_t v = 0; v < p; ++v) base.emplace_back(v, p);
    } else {
        base = all_field_elements(ring->base_proto().ring(), cap);
    }
    std::size_t d = static_cast<std::size_t>(ring->dim());
    double total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= static_cast<double>(base.size());
        if (total > static_cast<double>(cap)) throw domain_error("field too large to enumerate");
    }
    std::vector<ExtElt<K>> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        std::vector<K> coeffs;
        coeffs.reserve(d);
        for (std::size_t i = 0; i < d; ++i) coeffs.push_back(base[idx[i]]);
        out.push_back(ring->element(Poly<K>(std::move(coeffs), ring->base_proto())));
        std::size_t j = 0;
        while (j < d && ++idx[j] == base.size()) idx[j++] = 0;
        if (j == d) break;
    }
    return out;
}

// Distinct-degree factorization of a squarefree polynomial over F_p:
// returns (d, number of irreducible factors of degree d) pairs.
inline std::vector<std::pair<int, int>> ddf_degrees(Poly<Fp> f) {
    if (f.degree() < 1) return {};
    std::uint64_t p = char_of(f.proto());
    f = monic(f);
    std::vector<std::pair<int, int>> out;
    Poly<Fp> x = Poly<Fp>::x_power(f.proto(), 1);
    Poly<Fp> h = x % f;
    int i = 1;
    while (f.degree() >= 2 * i) {
        h = poly_powmod(h, Int(static_cast<unsigned long>(p)), f);
        Poly<Fp> g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(i, g.degree() / i);
            f = f / g;
            h = h % f;
        }
        ++i;
    }
    if (f.degree() > 0) out.emplace_back(f.degree(), 1);
    return out;
}

inline int irreducible_factor_count_fp(const Poly<Fp>& f) {
    int n = 0;
    for (auto& [d, k] : ddf_degrees(f)) {
        (void)d;
        n += k;
    }
    return n;
}

// Roots of f in a small finite field, by exhaustive evaluation.
template <class K>
std::vector<ExtElt<K>> brute_roots(const Poly<ExtElt<K>>& f,
                                   const std::shared_ptr<const ExtRing<K>>& ring) {
    std::vector<ExtElt<K>> roots;
    for (auto& a : all_field_elements(ring))
        if (is_zero(eval(f, a))) roots.push_back(a);
    return roots;
}

inline std::vector<Fp> brute_roots_fp(const Poly<Fp>& f) {
    std::uint64_t p = char_of(f.proto());
    if (p > (1u << 21)) throw domain_error("prime too large for exhaustive roots");
    std::vector<Fp> roots;
    for (std::uint64_t v = 0; v < p; ++v) {
        Fp a(v, p);
        if (is_zero(eval(f, a))) roots.push_back(a);
    }
    return roots;
}

// Size of the finite field an element lives in (towers flatten to p^dim).
template <class K>
Int elt_field_size(const ExtElt<K>& a) {
    if constexpr (!std::is_same_v<flat_base_t<ExtElt<K>>, Fp>) {
        (void)a;
        throw domain_error("field size is only defined over finite fields");
    } else {
        Int q(1);
        std::uint64_t p = char_of(a);
        std::size_t k = flat_dim(a);
        for (std::size_t i = 0; i < k; ++i) q *= static_cast<unsigned long>(p);
        return q;
    }
}

// Absolute trace down to the two-element field; only defined in
// characteristic 2, where it decides solvability of y^2 + y = c.
inline int trace_to_f2(const Fp& a) {
    if (a.modulus() != 2) throw domain_error("trace to GF(2) needs characteristic 2");
    return static_cast<int>(a.value());
}
// Declared so generic characteristic-2 code paths compile over the rationals;
// they are unreachable there and fail loudly if hit.
inline int trace_to_f2(const Rat&) {
    throw domain_error("trace to GF(2) needs characteristic 2");
}
template <class K>
int trace_to_f2(const ExtElt<K>& a) {
    if (char_of(a) != 2) throw domain_error("trace to GF(2) needs characteristic 2");
    std::size_t k = flat_dim(a);
    ExtElt<K> c = a, acc = a;
    for (std::size_t i = 1; i < k; ++i) {
        c = c * c;
        acc = acc + c;
    }
    if (is_zero(acc)) return 0;
    if (is_one(acc)) return 1;
    throw domain_error("trace landed outside GF(2)");
}

// Square root in a finite field (any tower over a prime field):
// characteristic 2 uses the inverse Frobenius, odd characteristic uses
// the Euler criterion followed by Tonelli-Shanks.
template <class K>
std::optional<ExtElt<K>> sqrt_exact(const ExtElt<K>& a) {
    if constexpr (!std::is_same_v<flat_base_t<ExtElt<K>>, Fp>) {
        (void)a;
        throw domain_error("square roots are unsupported over this field");
    } else {
    if (is_zero(a)) return a;
    std::uint64_t p = char_of(a);
    Int q = elt_field_size(a);
    if (p == 2) return elt_pow(a, q / 2);
    if (!is_one(elt_pow(a, (q - 1) / 2))) return std::nullopt;
    if (q % 4 == 3) return elt_pow(a, (q + 1) / 4);

    // find a non-square by a deterministic scan
    ExtElt<K> minus_one = zero_like(a) - one_like(a);
    std::optional<ExtElt<K>> nonsquare;
    ExtElt<K> g = a.ring()->gen();
    for (std::uint64_t k = 0; k < 256 && !nonsquare; ++k) {
        ExtElt<K> cand = g + from_int_like(a, static_cast<std::int64_t>(k));
        if (!is_zero(cand) && elt_pow(cand, (q - 1) / 2) == minus_one) nonsquare = cand;
    }
    if (!nonsquare) {
        for (auto& cand : all_field_elements(a.ring())) {
            if (!is_zero(cand) && elt_pow(cand, (q - 1) / 2) == minus_one) {
                nonsquare = cand;
                break;
            }
        }
    }
    if (!nonsquare) throw domain_error("no non-square found in odd finite field");

    Int s = q - 1;
    int e = 0;
    while (s % 2 == 0) { s /= 2; ++e; }
    ExtElt<K> z = elt_pow(*nonsquare, s);
    ExtElt<K> x = elt_pow(a, (s + 1) / 2);
    ExtElt<K> b = elt_pow(a, s);
    int r = e;
    while (!is_one(b)) {
        int m = 0;
        ExtElt<K> t = b;
        while (!is_one(t)) { t = t * t; ++m; }
        if (m == r) return std::nullopt;  // unreachable after Euler check
        ExtElt<K> zz = z;
        for (int i = 0; i < r - m - 1; ++i) zz = zz * zz;
        x = x * zz;
        z = zz * zz;
        b = b * z;
        r = m;
    }
    return x;
    }
}

// Square predicates, cheaper than extracting a root.
inline bool is_square_in(const Rat& a) { return sqrt_exact(a).has_value(); }
inline bool is_square_in(const Fp& a) { return is_zero(a) || legendre(a) == 1; }
template <class K>
bool is_square_in(const ExtElt<K>& a) {
    if constexpr (!std::is_same_v<flat_base_t<ExtElt<K>>, Fp>) {
        (void)a;
        throw domain_error("square test is undecided over this field");
    } else {
        if (is_zero(a) || char_of(a) == 2) return true;
        Int q = elt_field_size(a);
        return is_one(elt_pow(a, (q - 1) / 2));
    }
}

// Reduction of a rational number modulo p, defined when the denominator is
// invertible. Reduction arguments of this kind are exact: a property that is
// a nonvanishing polynomial condition in the coefficients (separability,
// smoothness, a point not being the group origin) holds in characteristic 0
// as soon as it holds for one good reduction.
inline std::optional<Fp> fp_of_rat(const Rat& a, std::uint64_t p) {
    Int pp(static_cast<unsigned long>(p));
    Int dr = a.den() % pp;
    if (dr == 0) return std::nullopt;
    Int nr = a.num() % pp;
    if (nr < 0) nr += pp;
    Fp num(nr.get_ui(), p);
    Fp den(dr.get_ui(), p);
    return num * inv(den);
}

inline std::optional<Poly<Fp>> fp_poly_of_rat(const Poly<Rat>& f, std::uint64_t p) {
    std::vector<Fp> c;
    for (int i = 0; i <= f.degree(); ++i) {
        auto v = fp_of_rat(f.coeff(static_cast<std::size_t>(i)), p);
        if (!v) return std::nullopt;
        c.push_back(*v);
    }
    return Poly<Fp>(std::move(c), Fp(0, p));
}

}  // namespace newpoints
