#pragma once

// Elliptic curves in long Weierstrass form with exact chord-and-tangent
// arithmetic, division polynomials, and the reduction of genus-1 quartic
// models y^2 = f(x) to short Weierstrass form y^2 = x^3 - 27I x - 27J.

#include <map>
#include <optional>
#include <utility>

#include "jinv.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "util.hpp"

namespace newpoints {

template <class T>
struct WeierstrassCurve {
    T a1, a2, a3, a4, a6;  // y^2 + a1*xy + a3*y = x^3 + a2*x^2 + a4*x + a6

    static WeierstrassCurve short_form(const T& A, const T& B) {
        T z = zero_like(A);
        return {z, z, z, A, B};
    }
};

template <class T>
struct ECPoint {
    bool infinity;
    T x, y;

    static ECPoint at_infinity(const T& proto) {
        return {true, zero_like(proto), zero_like(proto)};
    }
    static ECPoint affine(T px, T py) { return {false, std::move(px), std::move(py)}; }

    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const ECPoint& a, const ECPoint& b) { return !(a == b); }
};

template <class T>
struct CurveBInvariants {
    T b2, b4, b6, b8;
};

template <class T>
CurveBInvariants<T> b_invariants(const WeierstrassCurve<T>& e) {
    auto n = [&](std::int64_t k) { return from_int_like(e.a1, k); };
    T b2 = e.a1 * e.a1 + n(4) * e.a2;
    T b4 = n(2) * e.a4 + e.a1 * e.a3;
    T b6 = e.a3 * e.a3 + n(4) * e.a6;
    T b8 = e.a1 * e.a1 * e.a6 + n(4) * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 +
           e.a2 * e.a3 * e.a3 - e.a4 * e.a4;
    return {b2, b4, b6, b8};
}

template <class T>
T curve_disc(const WeierstrassCurve<T>& e) {
    auto [b2, b4, b6, b8] = b_invariants(e);
    auto n = [&](std::int64_t k) { return from_int_like(e.a1, k); };
    return -b2 * b2 * b8 - n(8) * b4 * b4 * b4 - n(27) * b6 * b6 + n(9) * b2 * b4 * b6;
}

template <class T>
T curve_j(const WeierstrassCurve<T>& e) {
    auto [b2, b4, b6, b8] = b_invariants(e);
    (void)b6;
    (void)b8;
    T c4 = b2 * b2 - from_int_like(e.a1, 24) * b4;
    T d = curve_disc(e);
    if (is_zero(d)) throw domain_error("curve is singular, no j-invariant");
    return c4 * c4 * c4 * inv(d);
}

template <class T>
bool on_curve(const WeierstrassCurve<T>& e, const ECPoint<T>& p) {
    if (p.infinity) return true;
    T lhs = p.y * p.y + e.a1 * p.x * p.y + e.a3 * p.y;
    T rhs = p.x * p.x * p.x + e.a2 * p.x * p.x + e.a4 * p.x + e.a6;
    return lhs == rhs;
}

template <class T>
ECPoint<T> ec_neg(const WeierstrassCurve<T>& e, const ECPoint<T>& p) {
    if (p.infinity) return p;
    return ECPoint<T>::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

template <class T>
ECPoint<T> ec_add(const WeierstrassCurve<T>& e, const ECPoint<T>& p, const ECPoint<T>& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    auto n = [&](std::int64_t k) { return from_int_like(e.a1, k); };
    T lambda = zero_like(e.a1);
    if (p.x == q.x) {
        if (q.y == -p.y - e.a1 * p.x - e.a3) return ECPoint<T>::at_infinity(e.a1);
        T num = n(3) * p.x * p.x + n(2) * e.a2 * p.x + e.a4 - e.a1 * p.y;
        T den = n(2) * p.y + e.a1 * p.x + e.a3;
        lambda = num * inv(den);
    } else {
        lambda = (q.y - p.y) * inv(q.x - p.x);
    }
    T nu = p.y - lambda * p.x;
    T x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
    T y3 = -(lambda + e.a1) * x3 - nu - e.a3;
    return ECPoint<T>::affine(x3, y3);
}

template <class T>
ECPoint<T> ec_sub(const WeierstrassCurve<T>& e, const ECPoint<T>& p, const ECPoint<T>& q) {
    return ec_add(e, p, ec_neg(e, q));
}

template <class T>
ECPoint<T> ec_mul(const WeierstrassCurve<T>& e, std::int64_t k, ECPoint<T> p) {
    if (k < 0) {
        k = -k;
        p = ec_neg(e, p);
    }
    ECPoint<T> acc = ECPoint<T>::at_infinity(e.a1);
    while (k) {
        if (k & 1) acc = ec_add(e, acc, p);
        p = ec_add(e, p, p);
        k >>= 1;
    }
    return acc;
}

// Smallest k in [1, max_k] with k*P = O, if any. May throw
// zero_divisor_error when run inside an etale algebra.
template <class T>
std::optional<int> order_of_point_up_to(const WeierstrassCurve<T>& e, const ECPoint<T>& p,
                                        int max_k) {
    ECPoint<T> acc = p;
    for (int k = 1; k <= max_k; ++k) {
        if (acc.infinity) return k;
        acc = ec_add(e, acc, p);
    }
    return std::nullopt;
}

// x-coordinates of the nontrivial 2-torsion satisfy 4x^3 + b2 x^2 + 2 b4 x + b6.
template <class T>
Poly<T> two_torsion_poly(const WeierstrassCurve<T>& e) {
    auto [b2, b4, b6, b8] = b_invariants(e);
    (void)b8;
    auto n = [&](std::int64_t k) { return from_int_like(e.a1, k); };
    return Poly<T>(std::vector<T>{b6, n(2) * b4, b2, n(4)}, e.a1);
}

// Reduced division polynomials in x alone: psi_k for odd k, psi_k / psi_2
// for even k, with y^2 eliminated through 4x^3 + b2 x^2 + 2 b4 x + b6.
template <class T>
Poly<T> division_poly_x(const WeierstrassCurve<T>& e, int k) {
    if (k < 1) throw domain_error("division polynomial index must be positive");
    auto [b2, b4, b6, b8] = b_invariants(e);
    auto n = [&](std::int64_t v) { return from_int_like(e.a1, v); };
    const T proto = zero_like(e.a1);
    Poly<T> W(std::vector<T>{b6, n(2) * b4, b2, n(4)}, proto);

    std::map<int, Poly<T>> f;
    f.emplace(0, Poly<T>(proto));
    f.emplace(1, Poly<T>::constant(one_like(proto)));
    f.emplace(2, Poly<T>::constant(one_like(proto)));
    f.emplace(3, Poly<T>(std::vector<T>{b8, n(3) * b6, n(3) * b4, b2, n(3)}, proto));
    f.emplace(4, Poly<T>(std::vector<T>{b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, n(10) * b8,
                                        n(10) * b6, n(5) * b4, b2, n(2)},
                         proto));
    std::function<const Poly<T>&(int)> get = [&](int i) -> const Poly<T>& {
        auto it = f.find(i);
        if (it != f.end()) return it->second;
        Poly<T> val(proto);
        if (i % 2) {
            int m = (i - 1) / 2;
            Poly<T> lhs = get(m + 2) * get(m) * get(m) * get(m);
            Poly<T> rhs = get(m - 1) * get(m + 1) * get(m + 1) * get(m + 1);
            val = (m % 2 == 0) ? lhs * W * W - rhs : lhs - rhs * W * W;
        } else {
            int m = i / 2;
            val = get(m) * (get(m + 2) * get(m - 1) * get(m - 1) -
                            get(m - 2) * get(m + 1) * get(m + 1));
        }
        return f.emplace(i, std::move(val)).first->second;
    };
    return get(k);
}

// ---- genus-1 quartic models ----------------------------------------------

// Where the distinguished rational point of y^2 = f(x) lives.
template <class T>
struct QuarticBase {
    enum Kind { NONE, AFFINE, INFINITY_BRANCH } kind;
    T u0, w0;   // AFFINE: the point (u0, w0)
    T lc_sqrt;  // INFINITY_BRANCH: square root of the leading coefficient

    static QuarticBase none(const T& proto) {
        return {NONE, zero_like(proto), zero_like(proto), zero_like(proto)};
    }
    static QuarticBase affine(const T& u0, const T& w0) {
        return {AFFINE, u0, w0, zero_like(u0)};
    }
    static QuarticBase infinity_branch(const T& lc_sqrt) {
        return {INFINITY_BRANCH, zero_like(lc_sqrt), zero_like(lc_sqrt), lc_sqrt};
    }
};

// Bundle of a short Weierstrass curve together with the birational map from
// the quartic model it came from. The target is always
// y^2 = x^3 - 27 I(f) x - 27 J(f) in the invariants of the input.
template <class T>
class GenusOneModel {
  public:
    GenusOneModel(Poly<T> f, QuarticBase<T> base) : f_(std::move(f)), base_(base) {
        std::uint64_t ch = char_of(f_.proto());
        if (ch == 2 || ch == 3)
            throw domain_error("quartic reduction needs characteristic 0 or >= 5");
        if (f_.degree() < 3 || f_.degree() > 4)
            throw domain_error("quartic reduction needs degree 3 or 4");
        if (!is_separable(f_)) throw domain_error("quartic model is singular");
        auto [I, J, disc] = quartic_invariants(f_);
        (void)disc;
        T m27 = from_int_like(f_.proto(), -27);
        curve_ = WeierstrassCurve<T>::short_form(m27 * I, m27 * J);

        if (f_.degree() == 3) {
            mode_ = CUBIC;
            c_ = f_;
            return;
        }
        if (base_.kind == QuarticBase<T>::AFFINE) {
            if (eval(f_, base_.u0) != base_.w0 * base_.w0)
                throw domain_error("base point is not on the quartic model");
            Poly<T> g = translate(f_, base_.u0);
            if (is_zero(base_.w0)) {
                mode_ = QUARTIC_ROOT;
                c_ = reverse4(g);  // degree drops to 3 since g(0) = 0
                return;
            }
            mode_ = QUARTIC_GENERIC;
            setup_eta(reverse4(g), base_.w0);
            return;
        }
        if (base_.kind == QuarticBase<T>::INFINITY_BRANCH) {
            if (base_.lc_sqrt * base_.lc_sqrt != f_.lc())
                throw domain_error("leading coefficient square root is wrong");
            mode_ = QUARTIC_INFINITY;
            setup_eta(f_, base_.lc_sqrt);
            return;
        }
        throw domain_error("degree-4 model needs a rational base point");
    }

    const WeierstrassCurve<T>& curve() const { return curve_; }
    const Poly<T>& quartic() const { return f_; }

    // Image of the distinguished base point (the group origin corresponds
    // to its conjugate over x, or to the cubic's point at infinity).
    ECPoint<T> base_image() const {
        switch (mode_) {
            case CUBIC:
            case QUARTIC_ROOT:
                return ECPoint<T>::at_infinity(f_.proto());
            default: {
                T eta_inf = -cA_.coeff(0) * inv(cA_.coeff(1));
                return descale(cubic_map(eta_inf, -eval(cB_, eta_inf)));
            }
        }
    }

    // Image of an affine point (u, w) of y^2 = f(u).
    ECPoint<T> map_affine(const T& u, const T& w) const {
        if (eval(f_, u) != w * w) throw domain_error("point is not on the quartic model");
        switch (mode_) {
            case CUBIC:
                return cubic_map(u, w);
            case QUARTIC_ROOT: {
                T ubar = u - base_.u0;
                if (is_zero(ubar)) return ECPoint<T>::at_infinity(f_.proto());
                T s = inv(ubar);
                return cubic_map(s, w * s * s);
            }
            case QUARTIC_GENERIC: {
                T ubar = u - base_.u0;
                if (is_zero(ubar)) {
                    if (w == base_.w0) return base_image();
                    return ECPoint<T>::at_infinity(f_.proto());
                }
                T s = inv(ubar);
                return descale(eta_map(s, w * s * s));
            }
            case QUARTIC_INFINITY:
                return descale(eta_map(u, w));
        }
        throw domain_error("unreachable quartic mode");
    }

  private:
    enum Mode { CUBIC, QUARTIC_ROOT, QUARTIC_GENERIC, QUARTIC_INFINITY };

    static Poly<T> reverse4(const Poly<T>& g) {
        std::vector<T> c;
        for (int i = 4; i >= 0; --i) c.push_back(g.coeff(static_cast<std::size_t>(i)));
        return Poly<T>(std::move(c), g.proto());
    }

    // Completing v = p s^2 + q s + eta against the quartic G turns the
    // relation A(eta) s^2 + B(eta) s + C(eta) = 0 into Z^2 = B^2 - 4AC with
    // Z = 2 A s + B, a cubic in eta.
    void setup_eta(const Poly<T>& G, const T& p) {
        p_ = p;
        T q = G.coeff(3) * inv(from_int_like(p, 2) * p);
        q_ = q;
        const T proto = zero_like(p);
        cA_ = Poly<T>(std::vector<T>{q * q - G.coeff(2), from_int_like(p, 2) * p}, proto);
        cB_ = Poly<T>(std::vector<T>{-G.coeff(1), from_int_like(p, 2) * q}, proto);
        Poly<T> cC(std::vector<T>{-G.coeff(0), zero_like(p), one_like(p)}, proto);
        c_ = cB_ * cB_ - from_int_like(p, 4) * cA_ * cC;
    }

    // (eta, Z) with Z^2 = c(eta) lands on the short curve of c via
    // x = 9*lc*eta + 3*c2, y = 27*lc*Z; for the quartic modes c carries
    // invariants 16 I(f), 64 J(f), so halving the coordinates twice and
    // three times returns to the invariants of f itself.
    ECPoint<T> cubic_map(const T& eta, const T& z) const {
        T c3 = c_.coeff(3), c2 = c_.coeff(2);
        auto n = [&](std::int64_t k) { return from_int_like(c3, k); };
        return ECPoint<T>::affine(n(9) * c3 * eta + n(3) * c2, n(27) * c3 * z);
    }

    ECPoint<T> descale(const ECPoint<T>& pt) const {
        if (pt.infinity) return pt;
        T quarter = inv(from_int_like(pt.x, 4));
        return ECPoint<T>::affine(pt.x * quarter, pt.y * quarter * inv(from_int_like(pt.x, 2)));
    }

    ECPoint<T> eta_map(const T& s, const T& v) const {
        T eta = v - p_ * s * s - q_ * s;
        T z = from_int_like(s, 2) * eval(cA_, eta) * s + eval(cB_, eta);
        return cubic_map(eta, z);
    }

    Poly<T> f_;
    QuarticBase<T> base_;
    WeierstrassCurve<T> curve_ =
        WeierstrassCurve<T>::short_form(zero_like(f_.proto()), zero_like(f_.proto()));
    Mode mode_;
    Poly<T> c_ = Poly<T>(T(f_.proto()));
    Poly<T> cA_ = Poly<T>(T(f_.proto()));
    Poly<T> cB_ = Poly<T>(T(f_.proto()));
    T p_ = zero_like(f_.proto());
    T q_ = zero_like(f_.proto());
};

}  // namespace newpoints
