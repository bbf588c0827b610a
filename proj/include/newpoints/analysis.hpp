#pragma once

// Certification layer for points on curves over towers of extensions.
//
// Given a point with coordinates in an iterated extension of the curve's base
// field, `newness_certificate` produces an exact, re-checkable record: the
// minimal polynomial of the x-coordinate over the flat base, its
// separability, an irreducibility certificate, whether the point satisfies
// the curve equation, whether the y-coordinate lies in the subring generated
// by the x-coordinate, and the degree of the residue field generated by both
// coordinates (estimated from below by the degrees of x + lambda*y for a
// seeded sample of lambda, which is sharp for all but finitely many lambda).
// A point is "new" for a target degree d exactly when it is on the curve,
// generates a residue field of degree d, and the minimal polynomial did not
// fail its irreducibility check.
//
// `compose_new_point` adds two points living in linearly disjoint extensions
// inside the elliptic-curve group and certifies that the sum generates the
// compositum; zero divisors met along the way signal that the extensions
// were not linearly disjoint. `two_torsion_descent` constructs quadratic
// points whose trace lands on the rational 2-torsion point (0, 0) of
// y^2 = x(x^2 + a2 x + a4), and checks the 2-isogeny link between that curve
// and its quotient by (0, 0) at the level of j-invariants using the
// classical modular equation of level 2.

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic.hpp"
#include "ext.hpp"
#include "fq.hpp"
#include "hyper.hpp"
#include "irreducible.hpp"
#include "jinv.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "util.hpp"
#include "wcurve.hpp"

namespace newpoints {

namespace detail {

// Embed a base-field scalar into an iterated extension, using `sample` only
// to reach the right ring. The recursion stops at the level whose element
// type matches K, so K may be the flat base or any intermediate level.
template <class T, class K>
T lift_scalar(const T& sample, const K& v) {
    if constexpr (std::is_same_v<T, K>) {
        (void)sample;
        return v;
    } else {
        auto ring = sample.ring();
        return ring->from_base(lift_scalar(ring->base_proto(), v));
    }
}

// Solve sum_j c_j * cols[j] = target over the field F by Gaussian
// elimination; only consistency matters, not the solution itself.
template <class F>
bool in_span(const std::vector<std::vector<F>>& cols, const std::vector<F>& target) {
    const std::size_t n = target.size();
    const std::size_t m = cols.size();
    std::vector<std::vector<F>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].reserve(m + 1);
        for (std::size_t j = 0; j < m; ++j) rows[i].push_back(cols[j][i]);
        rows[i].push_back(target[i]);
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && is_zero(rows[piv][c])) ++piv;
        if (piv == n) continue;
        std::swap(rows[piv], rows[r]);
        F ip = inv(rows[r][c]);
        for (std::size_t j = c; j <= m; ++j) rows[r][j] = rows[r][j] * ip;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || is_zero(rows[i][c])) continue;
            F f = rows[i][c];
            for (std::size_t j = c; j <= m; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        ++r;
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool allz = true;
        for (std::size_t j = 0; j < m; ++j)
            if (!is_zero(rows[i][j])) {
                allz = false;
                break;
            }
        if (allz && !is_zero(rows[i][m])) return false;
    }
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Point certificates

template <class T>
struct NewPointCertificate {
    using Flat = flat_base_t<T>;
    Poly<Flat> chi_x;             // minimal polynomial of the x-coordinate over the flat base
    int degree = 0;               // deg chi_x
    bool squarefree = false;      // chi_x separable (automatic for a minimal polynomial)
    IrredCertificate irreducibility{IrredStatus::FAILED, ""};
    bool on_curve = false;        // coordinates satisfy the curve equation
    bool special = false;         // y lies in the subring generated by x over the base
    int residue_degree = 0;       // degree of the field generated by x and y
    int target_degree = 0;        // the degree the point was requested to have
    std::vector<std::int64_t> lambdas;  // sampled multipliers for x + lambda*y
    std::vector<std::string> notes;

    NewPointCertificate() : chi_x(Flat{}) {}
    explicit NewPointCertificate(const Flat& proto) : chi_x(proto) {}

    bool is_new() const {
        return on_curve && residue_degree == target_degree &&
               irreducibility.status != IrredStatus::FAILED;
    }
};

namespace detail {

// The degree of the residue field generated by x and y, bounded below by the
// degrees of x, y, and x + lambda*y for five seeded lambda. Equality with
// [K(x, y) : K] holds for every lambda outside a finite exceptional set, so
// the maximum over the sample is the true degree except with vanishing
// probability; the certificate records the lambdas used so the computation
// can be replayed.
template <class T>
int residue_degree_of_pair(const T& x, const T& y, std::vector<std::int64_t>& lambdas_used) {
    int best = tower_element_degree(x);
    int dy = tower_element_degree(y);
    if (dy > best) best = dy;
    const int full = static_cast<int>(flat_dim(x));
    SplitMix64 rng(0x5eedc0de1234ULL);
    for (int i = 0; i < 5; ++i) {
        std::int64_t lam = static_cast<std::int64_t>(rng.below(96)) + 1;
        lambdas_used.push_back(lam);
        if (best == full) continue;  // cannot grow past the tower dimension
        T z = x + from_int_like(x, lam) * y;
        int dz = tower_element_degree(z);
        if (dz > best) best = dz;
    }
    return best;
}

template <class T>
NewPointCertificate<T> certify_pair(const T& x, const T& y, bool oncurve, int target_degree) {
    NewPointCertificate<T> cert(flat_proto(x));
    cert.on_curve = oncurve;
    cert.target_degree = target_degree;
    cert.chi_x = min_poly_flat(x);
    cert.degree = cert.chi_x.degree();
    cert.squarefree = is_separable(cert.chi_x);
    cert.irreducibility = certify_irreducible(cert.chi_x);
    cert.residue_degree = residue_degree_of_pair(x, y, cert.lambdas);

    // special point: y expressible as a polynomial in x over the base field,
    // i.e. the y-coordinate lies in the span of 1, x, ..., x^(deg-1).
    using F = flat_base_t<T>;
    std::vector<std::vector<F>> cols;
    T p = one_like(x);
    for (int i = 0; i < cert.degree; ++i) {
        std::vector<F> col;
        flat_coords(p, col);
        cols.push_back(std::move(col));
        p = p * x;
    }
    std::vector<F> target;
    flat_coords(y, target);
    cert.special = in_span(cols, target);
    return cert;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Curve-equation checks for coordinates in an extension of the base field

template <class K, class T>
bool verify_on_curve(const HyperellipticModel<K>& model, const T& x, const T& y) {
    auto lift = [&](const K& v) { return detail::lift_scalar(x, v); };
    T lhs = y * y + eval_lifted(model.Q, x, lift) * y;
    return is_zero(lhs - eval_lifted(model.R, x, lift));
}

template <class K, class T>
bool verify_on_curve(const WeierstrassCurve<K>& e, const T& x, const T& y) {
    auto lift = [&](const K& v) { return detail::lift_scalar(x, v); };
    WeierstrassCurve<T> el{lift(e.a1), lift(e.a2), lift(e.a3), lift(e.a4), lift(e.a6)};
    return on_curve(el, ECPoint<T>{false, x, y});
}

template <class K, class T>
bool verify_on_curve(const TernaryForm<K>& f, const T& x, const T& y) {
    auto lift = [&](const K& v) { return detail::lift_scalar(x, v); };
    return is_zero(f.eval_lifted(x, y, one_like(x), lift));
}

template <class K, class T>
bool verify_on_curve(const PlaneCubic<K>& c, const T& x, const T& y) {
    return verify_on_curve(c.form, x, y);
}

template <class K, class T>
NewPointCertificate<T> newness_certificate(const HyperellipticModel<K>& m, const T& x, const T& y,
                                           int target_degree) {
    return detail::certify_pair(x, y, verify_on_curve(m, x, y), target_degree);
}

template <class K, class T>
NewPointCertificate<T> newness_certificate(const WeierstrassCurve<K>& e, const T& x, const T& y,
                                           int target_degree) {
    return detail::certify_pair(x, y, verify_on_curve(e, x, y), target_degree);
}

template <class K, class T>
NewPointCertificate<T> newness_certificate(const TernaryForm<K>& f, const T& x, const T& y,
                                           int target_degree) {
    return detail::certify_pair(x, y, verify_on_curve(f, x, y), target_degree);
}

template <class K, class T>
NewPointCertificate<T> newness_certificate(const PlaneCubic<K>& c, const T& x, const T& y,
                                           int target_degree) {
    return detail::certify_pair(x, y, verify_on_curve(c.form, x, y), target_degree);
}

// ---------------------------------------------------------------------------
// Weierstrass model of y^2 = quartic with a designated base point

template <class T>
GenusOneModel<T> quartic_to_weierstrass(const Poly<T>& f, const QuarticBase<T>& base) {
    return GenusOneModel<T>(f, base);
}

template <class T>
GenusOneModel<T> quartic_to_weierstrass(const Poly<T>& f) {
    return GenusOneModel<T>(f, QuarticBase<T>::none(f.proto()));
}

// ---------------------------------------------------------------------------
// Point-order bound check

struct OrderBoundCheck {
    std::optional<int> order;  // set when the point has finite order <= bound
    int bound = 0;
    bool exceeds() const { return !order.has_value(); }
};

template <class T>
OrderBoundCheck order_bound_check(const WeierstrassCurve<T>& e, const ECPoint<T>& p, int bound) {
    return OrderBoundCheck{order_of_point_up_to(e, p, bound), bound};
}

// ---------------------------------------------------------------------------
// Classical modular equation of level 2: two j-invariants are related by a
// 2-isogeny exactly when Phi_2 vanishes on the pair.

template <class K>
K modular_equation_level2(const K& x, const K& y) {
    auto c = [&](std::int64_t n) { return from_int_like(x, n); };
    K s = x + y;
    K p = x * y;
    // x^3 + y^3 = s^3 - 3 p s, x^2 y + x y^2 = p s, x^2 + y^2 = s^2 - 2 p.
    return s * s * s - c(3) * p * s - p * p + c(1488) * p * s -
           c(162000) * (s * s - c(2) * p) + c(40773375) * p + c(8748000000LL) * s -
           c(157464000000000LL);
}

// ---------------------------------------------------------------------------
// Composition of points from linearly disjoint extensions

template <class K>
struct ComposeInput {
    Poly<K> modulus;  // monic minimal polynomial of the extension generator
    Poly<K> x_rep;    // x-coordinate as a residue modulo `modulus`
    Poly<K> y_rep;    // y-coordinate likewise
};

template <class K>
struct ComposedNewPoint {
    using T1 = ExtElt<K>;
    using T2 = ExtElt<ExtElt<K>>;
    std::shared_ptr<const ExtRing<T1>> tower;  // (K[a]/m1)[b]/m2
    ECPoint<T2> point;                         // P + Q in the compositum
    NewPointCertificate<T2> certificate;
    std::string torsion_status;  // "trivial", "violated(k=..)", or "unchecked(..)"
    bool torsion_hypothesis_ok = false;
    std::vector<int> unchecked_orders;
};

namespace detail {

// Does the curve have a K-rational point of order dividing k (k > 1)? Exact
// root search is available over the rationals only; callers over other bases
// receive "unchecked". For odd k the x-coordinates are the rational roots of
// the reduced division polynomial and the point is rational iff the quadratic
// in y has square discriminant; for k = 2 a rational root of the two-torsion
// cubic already yields a rational point since y = -(a1 x + a3)/2.
inline bool has_rational_torsion_of_order_dividing(const WeierstrassCurve<Rat>& e, int k) {
    if (k == 2) {
        auto rs = rational_roots(two_torsion_poly(e));
        return !rs.roots.empty();
    }
    Poly<Rat> psi = division_poly_x(e, k);
    auto rs = rational_roots(psi);
    for (const Rat& x0 : rs.roots) {
        Rat a = e.a1 * x0 + e.a3;
        Rat f = x0 * x0 * x0 + e.a2 * x0 * x0 + e.a4 * x0 + e.a6;
        if (is_square_in(a * a + Rat(4) * f)) return true;
    }
    if (k % 2 == 0 && has_rational_torsion_of_order_dividing(e, 2)) return true;
    return false;
}

}  // namespace detail

// Add a point defined over K[a]/(m1) to one defined over K[b]/(m2) inside
// the compositum (K[a]/m1)[b]/m2 and certify the sum. Throws zero_divisor_error
// if the compositum fails to be a field (the extensions were not linearly
// disjoint) and domain_error if an input is not on the curve or the sum is
// the point at infinity. The hypothesis that the curve has no K-rational
// torsion of order dividing gcd(deg m1, deg m2) is checked by exact root
// search where possible (base field Q, orders up to min(bound, 12)); a
// violation is recorded as a warning in the result, not an error.
template <class K>
ComposedNewPoint<K> compose_new_point(const WeierstrassCurve<K>& e, const ComposeInput<K>& first,
                                      const ComposeInput<K>& second, int torsion_check_bound = 12) {
    using T1 = ExtElt<K>;
    using T2 = ExtElt<ExtElt<K>>;
    auto r1 = ExtRing<K>::make(first.modulus, "a");
    auto l1 = [&](const K& v) { return r1->from_base(v); };
    Poly<T1> m2l = lift_poly(second.modulus, r1->zero(), l1);
    auto r2 = ExtRing<T1>::make(m2l, "b");
    auto l2 = [&](const K& v) { return r2->from_base(r1->from_base(v)); };

    T2 xp = r2->from_base(r1->element(first.x_rep));
    T2 yp = r2->from_base(r1->element(first.y_rep));
    T2 xq = eval_lifted(second.x_rep, r2->gen(), l2);
    T2 yq = eval_lifted(second.y_rep, r2->gen(), l2);

    WeierstrassCurve<T2> el{l2(e.a1), l2(e.a2), l2(e.a3), l2(e.a4), l2(e.a6)};
    ECPoint<T2> p{false, xp, yp};
    ECPoint<T2> q{false, xq, yq};
    if (!on_curve(el, p)) throw domain_error("compose_new_point: first point is not on the curve");
    if (!on_curve(el, q)) throw domain_error("compose_new_point: second point is not on the curve");

    // Torsion hypothesis for the common degree e = gcd(deg m1, deg m2).
    const int common = std::gcd(first.modulus.degree(), second.modulus.degree());
    bool violated = false;
    int violated_k = 0;
    std::vector<int> unchecked;
    for (int k = 2; k <= common; ++k) {
        if (common % k != 0) continue;
        if (k > torsion_check_bound || k > 12) {
            unchecked.push_back(k);
            continue;
        }
        if constexpr (std::is_same_v<K, Rat>) {
            if (detail::has_rational_torsion_of_order_dividing(e, k)) {
                violated = true;
                violated_k = k;
                break;
            }
        } else {
            unchecked.push_back(k);
        }
    }
    std::string status;
    bool hypothesis_ok = false;
    if (violated) {
        status = "violated(k=" + std::to_string(violated_k) + ")";
    } else if (!unchecked.empty()) {
        status = "unchecked(k=";
        for (std::size_t i = 0; i < unchecked.size(); ++i) {
            if (i) status += ",";
            status += std::to_string(unchecked[i]);
        }
        status += ")";
    } else {
        status = "trivial";
        hypothesis_ok = true;
    }

    ECPoint<T2> sum = ec_add(el, p, q);
    if (sum.infinity)
        throw domain_error("compose_new_point: the sum is the point at infinity");

    const int target = first.modulus.degree() * second.modulus.degree();
    auto cert = newness_certificate(e, sum.x, sum.y, target);
    cert.notes.push_back("torsion hypothesis: " + status);
    return ComposedNewPoint<K>{r2, sum, std::move(cert), status, hypothesis_ok,
                               std::move(unchecked)};
}

// ---------------------------------------------------------------------------
// Quadratic points with trace on the rational 2-torsion point

// For the curve E: y^2 = x(x^2 + a2 x + a4) with its rational 2-torsion point
// T = (0, 0), a parameter d with d*(d^2 - 2 a2 d + a2^2 - 4 a4) a nonzero
// rational square yields the quadratic point P = (alpha, sqrt(d) * alpha)
// where alpha is a root of X^2 + (a2 - d) X + a4; then P - sigma(P) = T for
// the conjugation sigma of Q(sqrt(d)). The degenerate choice d = 0 instead
// takes alpha a root of X^2 + a2 X + a4 over Q(sqrt(a2^2 - 4 a4)) and the
// 2-torsion point P = (alpha, 0). The quotient of E by T is the curve
// E': y^2 = x(x^2 - 2 a2 x + a2^2 - 4 a4); the two are 2-isogenous, which is
// checked at the level of j-invariants via the modular equation of level 2.
struct TwoTorsionDescent {
    bool applicable = false;
    std::string reason;  // set when not applicable
    WeierstrassCurve<Rat> curve{};
    WeierstrassCurve<Rat> quotient{};
    Rat d;
    Poly<Rat> field_modulus{Rat(0)};  // minimal polynomial of the adjoined square root
    Poly<Rat> x_rep{Rat(0)};          // coordinates of P in Q[r]/(field_modulus)
    Poly<Rat> y_rep{Rat(0)};
    bool point_on_curve = false;
    bool difference_is_two_torsion = false;  // P - sigma(P) == (0, 0)
    bool isogeny_j_link = false;             // Phi_2(j(E), j(E')) == 0
};

inline TwoTorsionDescent two_torsion_descent(const Rat& a2, const Rat& a4, const Rat& d) {
    if (is_zero(a4))
        throw domain_error("two_torsion_descent: y^2 = x(x^2 + a2 x + a4) is singular for a4 = 0");
    const Rat dq = a2 * a2 - Rat(4) * a4;
    if (is_zero(dq))
        throw domain_error(
            "two_torsion_descent: y^2 = x(x^2 + a2 x + a4) is singular for a2^2 - 4 a4 = 0");

    TwoTorsionDescent res;
    res.curve = WeierstrassCurve<Rat>{Rat(0), a2, Rat(0), a4, Rat(0)};
    res.quotient = WeierstrassCurve<Rat>{Rat(0), Rat(-2) * a2, Rat(0), dq, Rat(0)};
    res.d = d;
    res.isogeny_j_link =
        is_zero(modular_equation_level2(curve_j(res.curve), curve_j(res.quotient)));

    const Rat half(1, 2);
    if (is_zero(d)) {
        // P = (alpha, 0) with alpha a root of X^2 + a2 X + a4, over Q(sqrt(dq)).
        res.field_modulus = Poly<Rat>({Rat(-1) * dq, Rat(0), Rat(1)}, Rat(0));
        res.x_rep = Poly<Rat>({Rat(-1) * a2 * half, half}, Rat(0));
        res.y_rep = Poly<Rat>::constant(Rat(0));
    } else {
        const Rat big = d * d - Rat(2) * a2 * d + dq;  // (a2 - d)^2 - 4 a4
        if (is_zero(big)) {
            res.reason = "descent quadratic has a repeated root for this d";
            return res;
        }
        auto s = sqrt_exact(d * big);
        if (!s) {
            res.reason = "d*(d^2 - 2 a2 d + a2^2 - 4 a4) is not a rational square";
            return res;
        }
        res.field_modulus = Poly<Rat>({Rat(-1) * d, Rat(0), Rat(1)}, Rat(0));
        const Rat c0 = (d - a2) * half;
        const Rat c1 = *s / (Rat(2) * d);
        res.x_rep = Poly<Rat>({c0, c1}, Rat(0));
        // y = r * alpha with r^2 = d.
        res.y_rep = Poly<Rat>({c1 * d, c0}, Rat(0));
    }

    auto ring = ExtRing<Rat>::make(res.field_modulus, "r");
    auto lift = [&](const Rat& v) { return ring->from_base(v); };
    WeierstrassCurve<ExtElt<Rat>> ea{lift(Rat(0)), lift(a2), lift(Rat(0)), lift(a4), lift(Rat(0))};
    ECPoint<ExtElt<Rat>> p{false, ring->element(res.x_rep), ring->element(res.y_rep)};
    res.point_on_curve = on_curve(ea, p);

    auto conj = [&](const Poly<Rat>& rep) {
        return ring->element(Poly<Rat>({rep.coeff(0), Rat(-1) * rep.coeff(1)}, Rat(0)));
    };
    ECPoint<ExtElt<Rat>> ps{false, conj(res.x_rep), conj(res.y_rep)};
    try {
        ECPoint<ExtElt<Rat>> diff = ec_sub(ea, p, ps);
        res.difference_is_two_torsion =
            !diff.infinity && is_zero(diff.x) && is_zero(diff.y);
    } catch (const zero_divisor_error&) {
        res.reason = "arithmetic in the quadratic algebra met a zero divisor";
        return res;
    }
    res.applicable = true;
    return res;
}

}  // namespace newpoints
