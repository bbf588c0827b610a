#pragma once
// Weierstrass models for Jacobians of smooth plane cubics via the two
// classical Aronhold invariants: the polynomial invariants S (degree 4) and
// T (degree 6) in the ten coefficients of a ternary cubic form, each unique
// up to scale (the invariant ring of ternary cubics is generated by them;
// see Salmon, "Higher Plane Curves", or Artin-Rodriguez-Villegas-Tate,
// "On the Jacobians of plane cubics").
//
// Rather than transcribing the large classical expressions, the invariants
// are derived at first use by exact linear algebra. A coefficient polynomial
// is an SL3-invariant precisely when it is isobaric (equal total weight in
// each variable's exponents) and is annihilated by the infinitesimal
// substitution operators coming from x(d/dy), y(d/dx), y(d/dz), z(d/dy);
// those kernels are one-dimensional in degrees 4 and 6.
//
// Normalization: on Weierstrass-shaped cubics F0 = y^2 z - x^3 - A xz^2 -
// B z^3 the isobaric structure forces S(F0) = const * A and T(F0) = const *
// B. Dividing by those constants pins the scale so that
//     jacobian_of_cubic(F) :  y^2 = x^3 + S(F) x + T(F)
// reproduces the curve itself on that slice. Since S and T transform with
// the even determinant weights 4 and 6 under linear substitutions, the model
// changes by an honest Weierstrass rescaling (u^4, u^6) under any linear
// change of coordinates of the cubic, so the recipe is well defined on
// isomorphism classes and gives a Weierstrass model of the Jacobian in
// characteristic not 2 or 3.

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cubic.hpp"
#include "rational.hpp"
#include "util.hpp"
#include "wcurve.hpp"

namespace newpoints {

// Lifts an arbitrary-precision integer into any element type through its
// prototype, by Horner evaluation over int64 digits.
template <class K>
K from_int_value(const K& proto, const Int& v) {
    const std::int64_t base = 1000000000000000000LL;  // 10^18
    bool neg = v < 0;
    Int a = neg ? Int(-v) : v;
    std::vector<std::int64_t> digits;
    if (a == 0) digits.push_back(0);
    while (a != 0) {
        Int d = a % base;
        digits.push_back(static_cast<std::int64_t>(d.get_si()));
        a /= base;
    }
    K acc = zero_like(proto);
    K scale = from_int_like(proto, base);
    for (std::size_t t = digits.size(); t-- > 0;)
        acc = acc * scale + from_int_like(proto, digits[t]);
    return neg ? -acc : acc;
}

namespace detail {

struct CubicSlot {
    int i, j, k;  // exponents of x, y, z; i + j + k = 3
};

inline const std::array<CubicSlot, 10>& cubic_slots() {
    static const std::array<CubicSlot, 10> slots = [] {
        std::array<CubicSlot, 10> s{};
        int t = 0;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) s[static_cast<std::size_t>(t++)] = {i, j, 3 - i - j};
        return s;
    }();
    return slots;
}

inline int cubic_slot_index(int i, int j) {
    const auto& slots = cubic_slots();
    for (int t = 0; t < 10; ++t)
        if (slots[static_cast<std::size_t>(t)].i == i && slots[static_cast<std::size_t>(t)].j == j)
            return t;
    throw domain_error("no such cubic coefficient slot");
}

struct InvariantTerm {
    std::array<std::uint8_t, 10> e;  // exponent of each coefficient slot
    Int c;
};

// One infinitesimal substitution u (d/dv): it sends the coefficient of the
// monomial at `src` into the one at `dst` with the stated multiplier.
struct SubstOp {
    int src, dst;
    int mult;
};

inline std::vector<std::vector<SubstOp>> cubic_subst_operators() {
    const auto& slots = cubic_slots();
    auto build = [&](int di, int dj, int dk, auto weight) {
        std::vector<SubstOp> ops;
        for (int t = 0; t < 10; ++t) {
            const auto& s = slots[static_cast<std::size_t>(t)];
            int w = weight(s);
            if (w == 0) continue;
            int ni = s.i + di, nj = s.j + dj, nk = s.k + dk;
            if (ni < 0 || nj < 0 || nk < 0) continue;
            ops.push_back({t, cubic_slot_index(ni, nj), w});
        }
        return ops;
    };
    std::vector<std::vector<SubstOp>> all;
    // x (d/dy): c_{ijk} feeds c_{i+1, j-1, k} with multiplier j
    all.push_back(build(+1, -1, 0, [](const CubicSlot& s) { return s.j; }));
    // y (d/dx)
    all.push_back(build(-1, +1, 0, [](const CubicSlot& s) { return s.i; }));
    // y (d/dz)
    all.push_back(build(0, +1, -1, [](const CubicSlot& s) { return s.k; }));
    // z (d/dy)
    all.push_back(build(0, -1, +1, [](const CubicSlot& s) { return s.j; }));
    return all;
}

// All degree-n exponent vectors over the 10 slots whose multidegree in
// (x, y, z) is (n, n, n) -- the isobaric candidates for a weight-n invariant.
inline std::vector<std::array<std::uint8_t, 10>> isobaric_monomials(int n) {
    const auto& slots = cubic_slots();
    std::vector<std::array<std::uint8_t, 10>> out;
    std::array<std::uint8_t, 10> cur{};
    auto rec = [&](auto&& self, int slot, int left, int wx, int wy) -> void {
        if (slot == 10) {
            if (left == 0 && wx == n && wy == n) out.push_back(cur);
            return;
        }
        const auto& s = slots[static_cast<std::size_t>(slot)];
        for (int e = 0; e <= left; ++e) {
            int nwx = wx + e * s.i, nwy = wy + e * s.j;
            if (nwx > n || nwy > n) break;
            cur[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(e);
            self(self, slot + 1, left - e, nwx, nwy);
        }
        cur[static_cast<std::size_t>(slot)] = 0;
    };
    rec(rec, 0, n, 0, 0);
    return out;
}

// Kernel of the four substitution operators on the isobaric degree-n
// monomials, as a primitive integer vector. Throws unless one-dimensional.
inline std::vector<InvariantTerm> derive_cubic_invariant(int n) {
    auto basis = isobaric_monomials(n);
    std::size_t C = basis.size();
    if (C == 0) throw domain_error("no isobaric monomials in this degree");

    std::map<std::array<std::uint8_t, 10>, std::size_t> row_of;
    std::vector<std::map<std::size_t, Int>> rows;  // sparse rows over the columns
    auto ops = cubic_subst_operators();
    for (const auto& op_list : ops) {
        std::map<std::array<std::uint8_t, 10>, std::size_t> local;
        for (std::size_t col = 0; col < C; ++col) {
            for (const auto& op : op_list) {
                auto d = static_cast<std::size_t>(op.dst);
                if (basis[col][d] == 0) continue;
                auto img = basis[col];
                int mult = op.mult * img[d];
                img[d] -= 1;
                img[static_cast<std::size_t>(op.src)] += 1;
                // rows are scoped per operator: images from different
                // operators must vanish independently
                auto key = img;
                auto it = local.find(key);
                std::size_t r;
                if (it == local.end()) {
                    r = rows.size();
                    local.emplace(key, r);
                    rows.emplace_back();
                } else {
                    r = it->second;
                }
                rows[r][col] += mult;
            }
        }
        (void)row_of;
    }

    // dense exact elimination over the rationals
    std::size_t R = rows.size();
    std::vector<std::vector<Rat>> M(R, std::vector<Rat>(C, Rat(0)));
    for (std::size_t r = 0; r < R; ++r)
        for (const auto& [c, v] : rows[r])
            if (v != 0) M[r][c] = Rat(v, Int(1));

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t sel = rank;
        while (sel < R && is_zero(M[sel][col])) ++sel;
        if (sel == R) continue;
        std::swap(M[sel], M[rank]);
        Rat pinv = inv(M[rank][col]);
        for (std::size_t c = col; c < C; ++c) M[rank][c] = M[rank][c] * pinv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == rank || is_zero(M[r][col])) continue;
            Rat f = M[r][col];
            for (std::size_t c = col; c < C; ++c) M[r][c] = M[r][c] - f * M[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (C - rank != 1)
        throw domain_error("invariant kernel is not one-dimensional; derivation failed");

    std::vector<bool> is_pivot(C, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < C && is_pivot[free_col]) ++free_col;

    std::vector<Rat> v(C, Rat(0));
    v[free_col] = Rat(1);
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -M[r][free_col];

    Int den(1);
    for (const auto& q : v) den = den / gcd(den, q.den()) * q.den();
    std::vector<Int> w(C);
    Int content(0);
    for (std::size_t c = 0; c < C; ++c) {
        w[c] = v[c].num() * (den / v[c].den());
        content = gcd(content, w[c]);
    }
    if (content == 0) throw domain_error("invariant kernel vector vanished");
    std::size_t lead = 0;
    while (lead < C && w[lead] == 0) ++lead;
    if (w[lead] < 0) content = -content;
    std::vector<InvariantTerm> terms;
    for (std::size_t c = 0; c < C; ++c)
        if (w[c] != 0) terms.push_back({basis[c], w[c] / content});
    return terms;
}

inline Int eval_invariant_int(const std::vector<InvariantTerm>& terms,
                              const std::array<Int, 10>& slot_values) {
    Int acc(0);
    for (const auto& t : terms) {
        Int prod = t.c;
        for (std::size_t s = 0; s < 10; ++s)
            for (int e = 0; e < t.e[s]; ++e) prod *= slot_values[s];
        acc += prod;
    }
    return acc;
}

struct AronholdTables {
    std::vector<InvariantTerm> S, T;
    Int s_den, t_den;  // slice normalizers: S/s_den and T/t_den return (A, B)

    static const AronholdTables& get() {
        static const AronholdTables tables = [] {
            AronholdTables t;
            t.S = derive_cubic_invariant(4);
            t.T = derive_cubic_invariant(6);
            // Weierstrass slice y^2 z - x^3 - A xz^2 - B z^3
            auto slice = [](const Int& A, const Int& B) {
                std::array<Int, 10> v;
                v.fill(Int(0));
                v[static_cast<std::size_t>(cubic_slot_index(0, 2))] = 1;   // y^2 z
                v[static_cast<std::size_t>(cubic_slot_index(3, 0))] = -1;  // x^3
                v[static_cast<std::size_t>(cubic_slot_index(1, 0))] = -A;  // x z^2
                v[static_cast<std::size_t>(cubic_slot_index(0, 0))] = -B;  // z^3
                return v;
            };
            t.s_den = eval_invariant_int(t.S, slice(Int(1), Int(0)));
            t.t_den = eval_invariant_int(t.T, slice(Int(0), Int(1)));
            if (t.s_den == 0 || t.t_den == 0)
                throw domain_error("invariant normalization failed on the Weierstrass slice");
            if (eval_invariant_int(t.S, slice(Int(0), Int(1))) != 0 ||
                eval_invariant_int(t.T, slice(Int(1), Int(0))) != 0)
                throw domain_error("invariants mix A and B on the Weierstrass slice");
            return t;
        }();
        return tables;
    }
};

template <class K>
K eval_invariant(const std::vector<InvariantTerm>& terms, const Int& den,
                 const TernaryForm<K>& C) {
    const K proto = zero_like(C.proto());
    const auto& slots = cubic_slots();
    std::array<K, 10> val{proto, proto, proto, proto, proto, proto, proto, proto, proto, proto};
    for (int t = 0; t < 10; ++t)
        val[static_cast<std::size_t>(t)] =
            C.at(slots[static_cast<std::size_t>(t)].i, slots[static_cast<std::size_t>(t)].j);
    K acc = proto;
    for (const auto& term : terms) {
        K prod = from_int_value(proto, term.c);
        for (std::size_t s = 0; s < 10; ++s)
            for (int e = 0; e < term.e[s]; ++e) prod = prod * val[s];
        acc = acc + prod;
    }
    K d = from_int_value(proto, den);
    if (is_zero(d)) throw domain_error("invariant normalizer vanishes in this characteristic");
    return acc * inv(d);
}

}  // namespace detail

// The normalized degree-4 and degree-6 invariants (S, T) of a ternary cubic,
// scaled so that the Weierstrass-shaped cubic y^2 z - x^3 - A xz^2 - B z^3
// returns exactly (A, B).
template <class K>
std::pair<K, K> aronhold_invariants(const TernaryForm<K>& C) {
    if (C.degree() != 3) throw domain_error("Aronhold invariants need a ternary cubic");
    const auto& tab = detail::AronholdTables::get();
    return {detail::eval_invariant(tab.S, tab.s_den, C),
            detail::eval_invariant(tab.T, tab.t_den, C)};
}

// A Weierstrass model y^2 = x^3 + Sx + T of the Jacobian of the smooth plane
// cubic C, away from characteristics 2 and 3. The returned curve is singular
// exactly when C is singular; callers wanting the discriminant can apply
// curve_disc.
template <class K>
WeierstrassCurve<K> jacobian_of_cubic(const TernaryForm<K>& C) {
    std::uint64_t p = char_of(C.proto());
    if (p == 2 || p == 3)
        throw domain_error("the invariant-theoretic Jacobian needs characteristic away from 2 and 3");
    auto [S, T] = aronhold_invariants(C);
    return WeierstrassCurve<K>::short_form(S, T);
}

template <class K>
WeierstrassCurve<K> jacobian_of_cubic(const PlaneCubic<K>& C) {
    return jacobian_of_cubic(C.form);
}

}  // namespace newpoints
