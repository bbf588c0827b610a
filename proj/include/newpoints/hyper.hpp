#pragma once

// Hyperelliptic-type models y^2 + Q(x) y = R(x) over an exact field, with a
// certified-smooth projective closure.
//
// The closure lives in the weighted projective plane P(1, w, 1) where the
// weight w = max(deg Q, ceil(deg R / 2)) is the weight of y. The constructor
// certifies smoothness of both charts (affine and the X = 1/x chart around
// infinity); for such models the genus is w - 1 and the count of rational
// points on the line at infinity is decided exactly. Models failing either
// certificate are rejected with a domain_error rather than silently carrying
// a wrong genus.

#include <algorithm>
#include <string>

#include "decompose.hpp"
#include "fq.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "util.hpp"

namespace newpoints {

// Square test over a rational function field. Odd characteristic reduces to
// the unit part plus exact half-degree square completions of the monic
// numerator and denominator; characteristic 2 uses the even-exponent
// criterion (coefficients in a perfect field are automatically squares).
template <class K>
bool is_square_in(const RFElt<K>& a) {
    if (is_zero(a)) return true;
    std::uint64_t p = char_of(a);
    auto monic_poly_square = [&](Poly<K> f) -> bool {
        if (f.degree() % 2 != 0) return false;
        if (f.degree() == 0) return true;
        if (p == 2) {
            for (int i = 0; i <= f.degree(); ++i)
                if (i % 2 == 1 && !is_zero(f.coeff(static_cast<std::size_t>(i))))
                    return false;
            return true;
        }
        return approx_sqrt(f).ell.is_zero();
    };
    K unit = a.num().lc() * inv(a.den().lc());
    if (!is_square_in(unit)) return false;
    return monic_poly_square(inv(a.num().lc()) * a.num()) &&
           monic_poly_square(inv(a.den().lc()) * a.den());
}

// No trace map to GF(2) exists over a rational function field; declared so
// generic characteristic-2 code paths fail loudly instead of miscounting.
template <class K>
int trace_to_f2(const RFElt<K>&) {
    throw domain_error("trace to GF(2) is unavailable over a rational function field");
}

// Exact square root in a rational function field, when one exists.
template <class K>
std::optional<RFElt<K>> sqrt_exact(const RFElt<K>& a) {
    if (is_zero(a)) return a;
    std::uint64_t p = char_of(a);
    auto monic_root = [&](const Poly<K>& f) -> std::optional<Poly<K>> {
        if (f.degree() % 2 != 0) return std::nullopt;
        if (p == 2) {
            std::vector<K> half(static_cast<std::size_t>(f.degree() / 2) + 1,
                                zero_like(f.proto()));
            for (int i = 0; i <= f.degree(); ++i) {
                const K& c = f.coeff(static_cast<std::size_t>(i));
                if (i % 2 == 1) {
                    if (!is_zero(c)) return std::nullopt;
                    continue;
                }
                auto r = sqrt_exact(c);
                if (!r) return std::nullopt;
                half[static_cast<std::size_t>(i / 2)] = *r;
            }
            return Poly<K>(std::move(half), f.proto());
        }
        auto sc = approx_sqrt(f);
        if (!sc.ell.is_zero()) return std::nullopt;
        return sc.h;
    };
    K unit = a.num().lc() * inv(a.den().lc());
    auto su = sqrt_exact(unit);
    if (!su) return std::nullopt;
    auto rn = monic_root(inv(a.num().lc()) * a.num());
    auto rd = monic_root(inv(a.den().lc()) * a.den());
    if (!rn || !rd) return std::nullopt;
    return RFElt<K>(*su * *rn) / RFElt<K>(*rd);
}

template <class K>
struct HyperellipticModel {
    Poly<K> Q;
    Poly<K> R;
    int weight = 1;              // y-weight w of the closure in P(1, w, 1)
    int genus = 0;               // equals weight - 1 once both charts are certified
    int points_at_infinity = 0;  // rational points of the closure with X = 0
    std::string note;
};

namespace detail {
template <class K>
K cof(const Poly<K>& f, int j) {
    if (j < 0 || j > f.degree()) return zero_like(f.proto());
    return f.coeff(static_cast<std::size_t>(j));
}
}  // namespace detail

// Builds the model and certifies its closure smooth, or throws.
//
// Odd/zero characteristic: substitute y -> y - Q/2, giving y^2 = f with
// f = R + Q^2/4. The affine chart is smooth iff f is separable; the infinity
// chart is smooth at X = 0 iff deg f is 2w or 2w-1.
//
// Characteristic 2: a singular affine point needs Q(x) = 0, y^2 + Qy = R and
// Q'(x) y = R'(x); substituting the unique square root y of R(x) turns the
// last condition into Q'^2 R = R'^2, so the chart is smooth iff
// gcd(Q, Q'^2 R - R'^2) is constant. On the infinity chart write
// a = coeff of x^w in Q, b = coeff of x^{w-1} in Q, c = coeff of x^{2w} in R,
// d = coeff of x^{2w-1} in R; the X = 0 points are singular iff a = 0 and
// b^2 c = d^2.
template <class K>
HyperellipticModel<K> make_hyperelliptic(Poly<K> Q, Poly<K> R, std::string note = "") {
    const K proto = R.proto();
    std::uint64_t p = char_of(proto);
    int w = std::max(Q.degree(), (R.degree() + 1) / 2);
    if (w < 1) throw domain_error("model must involve x");

    if (p == 2) {
        if (Q.is_zero())
            throw domain_error("characteristic 2 needs a nonzero cross term for separability");
        Poly<K> G = derivative(Q) * derivative(Q) * R - derivative(R) * derivative(R);
        if (gcd(Q, G).degree() != 0) throw domain_error("affine chart is singular");
        K a = detail::cof(Q, w);
        K b = detail::cof(Q, w - 1);
        K c = detail::cof(R, 2 * w);
        K d = detail::cof(R, 2 * w - 1);
        if (is_zero(a) && b * b * c == d * d)
            throw domain_error("closure is singular at infinity");
        int cnt;
        if (!is_zero(a)) {
            // branches solve Y^2 + Y = c/a^2; both exist iff that Artin-Schreier
            // equation splits, which for c = 0 it always does
            if (is_zero(c))
                cnt = 2;
            else
                cnt = trace_to_f2(c * inv(a * a)) == 0 ? 2 : 0;
        } else {
            // single branch, present iff c has a square root in the field
            cnt = is_square_in(c) ? 1 : 0;
        }
        return {std::move(Q), std::move(R), w, w - 1, cnt, std::move(note)};
    }

    K quarter = inv(from_int_like(proto, 4));
    Poly<K> f = R + quarter * (Q * Q);
    if (f.degree() != 2 * w && f.degree() != 2 * w - 1)
        throw domain_error("closure is singular at infinity");
    if (!is_separable(f)) throw domain_error("affine chart is singular");
    int cnt = (f.degree() == 2 * w - 1) ? 1 : (is_square_in(f.lc()) ? 2 : 0);
    return {std::move(Q), std::move(R), w, w - 1, cnt, std::move(note)};
}

// Convenience for y^2 = f models.
template <class K>
HyperellipticModel<K> make_even_model(const Poly<K>& f, std::string note = "") {
    return make_hyperelliptic(Poly<K>(f.proto()), f, std::move(note));
}

// The completed-square right side R + Q^2/4 (odd/zero characteristic only).
template <class K>
Poly<K> completed_square_rhs(const HyperellipticModel<K>& M) {
    if (char_of(M.R.proto()) == 2)
        throw domain_error("square completion is unavailable in characteristic 2");
    K quarter = inv(from_int_like(M.R.proto(), 4));
    return M.R + quarter * (M.Q * M.Q);
}

template <class K>
bool on_model(const HyperellipticModel<K>& M, const K& x0, const K& y0) {
    return is_zero(y0 * y0 + eval(M.Q, x0) * y0 - eval(M.R, x0));
}

}  // namespace newpoints
