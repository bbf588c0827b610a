#pragma once

// Plane cubic curves with an exact smoothness certificate valid in every
// characteristic, and reduction to a Weierstrass model from a rational point
// away from characteristics 2 and 3.
//
// The certificate works in randomized coordinates: singular points off the
// line y = 0 force a common root of the two elimination resultants
// res_z(C, C_x) and res_z(C, C_y) taken at y = 1, while the line y = 0 is
// checked exactly (including the point (1:0:0)). A constant gcd of the two
// resultants together with a clean y = 0 line therefore proves smoothness;
// a singular point found on the y = 0 line disproves it; anything else
// triggers a change of coordinates and a retry.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fq.hpp"
#include "poly.hpp"
#include "util.hpp"
#include "wcurve.hpp"

namespace newpoints {

// Dense homogeneous form in three variables: the coefficient of
// x^i y^j z^(deg-i-j) lives at index (i, j).
template <class K>
class TernaryForm {
  public:
    TernaryForm(int deg, const K& proto)
        : deg_(deg),
          proto_(zero_like(proto)),
          c_(static_cast<std::size_t>((deg + 1) * (deg + 2) / 2), zero_like(proto)) {
        if (deg < 0) throw domain_error("form degree must be nonnegative");
    }

    int degree() const { return deg_; }
    const K& proto() const { return proto_; }

    K& at(int i, int j) { return c_[pos(i, j)]; }
    const K& at(int i, int j) const { return c_[pos(i, j)]; }

    bool is_zero_form() const {
        for (const auto& v : c_)
            if (!is_zero(v)) return false;
        return true;
    }

    template <class E, class Lift>
    E eval_lifted(const E& x, const E& y, const E& z, Lift&& lift) const {
        E acc = zero_like(x);
        for (int i = 0; i <= deg_; ++i)
            for (int j = 0; i + j <= deg_; ++j) {
                const K& cv = at(i, j);
                if (is_zero(cv)) continue;
                E term = lift(cv);
                for (int t = 0; t < i; ++t) term = term * x;
                for (int t = 0; t < j; ++t) term = term * y;
                for (int t = 0; t < deg_ - i - j; ++t) term = term * z;
                acc = acc + term;
            }
        return acc;
    }

    K eval(const K& x, const K& y, const K& z) const {
        return eval_lifted(x, y, z, [](const K& v) { return v; });
    }

    // Formal partial derivative with respect to variable 0 = x, 1 = y, 2 = z.
    TernaryForm partial(int var) const {
        if (deg_ == 0) return TernaryForm(0, proto_);
        TernaryForm out(deg_ - 1, proto_);
        for (int i = 0; i <= deg_; ++i)
            for (int j = 0; i + j <= deg_; ++j) {
                int k = deg_ - i - j;
                const K& cv = at(i, j);
                if (is_zero(cv)) continue;
                if (var == 0 && i > 0)
                    out.at(i - 1, j) = out.at(i - 1, j) + from_int_like(proto_, i) * cv;
                if (var == 1 && j > 0)
                    out.at(i, j - 1) = out.at(i, j - 1) + from_int_like(proto_, j) * cv;
                if (var == 2 && k > 0) out.at(i, j) = out.at(i, j) + from_int_like(proto_, k) * cv;
            }
        return out;
    }

    friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
        TernaryForm out(a.deg_ + b.deg_, a.proto_);
        for (int i1 = 0; i1 <= a.deg_; ++i1)
            for (int j1 = 0; i1 + j1 <= a.deg_; ++j1) {
                if (is_zero(a.at(i1, j1))) continue;
                for (int i2 = 0; i2 <= b.deg_; ++i2)
                    for (int j2 = 0; i2 + j2 <= b.deg_; ++j2) {
                        if (is_zero(b.at(i2, j2))) continue;
                        out.at(i1 + i2, j1 + j2) =
                            out.at(i1 + i2, j1 + j2) + a.at(i1, j1) * b.at(i2, j2);
                    }
            }
        return out;
    }

    // Substitution of the variables by the linear forms given by the rows of
    // M: returns the form v -> F(M v).
    TernaryForm subst_linear(const std::array<std::array<K, 3>, 3>& M) const {
        auto linear = [&](int row) {
            TernaryForm L(1, proto_);
            L.at(1, 0) = M[static_cast<std::size_t>(row)][0];
            L.at(0, 1) = M[static_cast<std::size_t>(row)][1];
            L.at(0, 0) = M[static_cast<std::size_t>(row)][2];
            return L;
        };
        TernaryForm Lx = linear(0), Ly = linear(1), Lz = linear(2);
        // precompute powers up to deg
        std::vector<TernaryForm> px{TernaryForm(0, proto_)}, py{TernaryForm(0, proto_)},
            pz{TernaryForm(0, proto_)};
        px[0].at(0, 0) = one_like(proto_);
        py[0].at(0, 0) = one_like(proto_);
        pz[0].at(0, 0) = one_like(proto_);
        for (int t = 1; t <= deg_; ++t) {
            px.push_back(px.back() * Lx);
            py.push_back(py.back() * Ly);
            pz.push_back(pz.back() * Lz);
        }
        TernaryForm out(deg_, proto_);
        for (int i = 0; i <= deg_; ++i)
            for (int j = 0; i + j <= deg_; ++j) {
                const K& cv = at(i, j);
                if (is_zero(cv)) continue;
                TernaryForm term = px[static_cast<std::size_t>(i)] * py[static_cast<std::size_t>(j)] *
                                   pz[static_cast<std::size_t>(deg_ - i - j)];
                for (int a = 0; a <= deg_; ++a)
                    for (int b = 0; a + b <= deg_; ++b)
                        out.at(a, b) = out.at(a, b) + cv * term.at(a, b);
            }
        return out;
    }

    // Coefficient of z^k after substituting y = 1, as a polynomial in x.
    Poly<K> z_coeff_at_y1(int k) const {
        std::vector<K> c(static_cast<std::size_t>(deg_ - k) + 1, zero_like(proto_));
        for (int i = 0; i + k <= deg_; ++i) c[static_cast<std::size_t>(i)] = at(i, deg_ - i - k);
        return Poly<K>(std::move(c), proto_);
    }

    // Restriction to the line y = 0 with z = 1, as a polynomial in x.
    Poly<K> restrict_y0() const {
        std::vector<K> c(static_cast<std::size_t>(deg_) + 1, zero_like(proto_));
        for (int i = 0; i <= deg_; ++i) c[static_cast<std::size_t>(i)] = at(i, 0);
        return Poly<K>(std::move(c), proto_);
    }

  private:
    std::size_t pos(int i, int j) const {
        if (i < 0 || j < 0 || i + j > deg_) throw domain_error("form index out of range");
        int offset = i * (deg_ + 1) - i * (i - 1) / 2;
        return static_cast<std::size_t>(offset + j);
    }

    int deg_;
    K proto_;
    std::vector<K> c_;
};

// Plane cubic, either a generic 10-coefficient ternary form or the named
// shape z^3 + a7 xz^2 + a6 yz^2 + a5 x^2 z + a4 xyz + a3 y^2 z + a2 x^2 y +
// a1 xy^2 + a0 y^3 used by the degree-9 construction (no x^3 term, so
// (1:0:0) lies on the curve).
template <class K>
struct PlaneCubic {
    TernaryForm<K> form;
    std::optional<std::array<K, 8>> named;  // a0..a7 when built from a charpoly

    static PlaneCubic from_form(TernaryForm<K> f) {
        if (f.degree() != 3) throw domain_error("plane cubic needs a degree-3 form");
        return {std::move(f), std::nullopt};
    }

    static PlaneCubic from_named(const std::array<K, 8>& a) {
        TernaryForm<K> f(3, a[0]);
        f.at(0, 0) = one_like(a[0]);  // z^3
        f.at(1, 0) = a[7];            // x z^2
        f.at(0, 1) = a[6];            // y z^2
        f.at(2, 0) = a[5];            // x^2 z
        f.at(1, 1) = a[4];            // x y z
        f.at(0, 2) = a[3];            // y^2 z
        f.at(2, 1) = a[2];            // x^2 y
        f.at(1, 2) = a[1];            // x y^2
        f.at(0, 3) = a[0];            // y^3
        return {std::move(f), a};
    }
};

namespace detail {

template <class K>
K det3(const std::array<std::array<K, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class K>
std::array<std::array<K, 3>, 3> inverse3(const std::array<std::array<K, 3>, 3>& m) {
    K d = det3(m);
    if (is_zero(d)) throw domain_error("matrix is not invertible");
    K di = inv(d);
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return m[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)] *
                   m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] -
               m[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c1)] *
                   m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)];
    };
    std::array<std::array<K, 3>, 3> out = m;  // shape/proto reuse
    int rows[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    // adjugate: out[i][j] = (-1)^{i+j} * minor(j, i)
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = rows[j][0], r1 = rows[j][1];
            int c0 = rows[i][0], c1 = rows[i][1];
            K mv = minor2(r0, r1, c0, c1);
            if ((i + j) % 2 == 1) mv = -mv;
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = di * mv;
        }
    return out;
}

// Determinant of a small matrix of polynomials by cofactor expansion
// (division-free, so it works over any coefficient ring).
template <class K>
Poly<K> det_poly(std::vector<std::vector<Poly<K>>> m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly<K> acc(m[0][0].proto());
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<Poly<K>>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly<K>> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Poly<K> term = m[0][col] * det_poly(std::move(sub));
        acc = (col % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// res_z(A, B) at y = 1 for A of z-degree 3 and B of z-degree 2 with constant
// (x-free) leading z-coefficients, as a Sylvester determinant.
template <class K>
Poly<K> resultant_z_y1(const TernaryForm<K>& A, const TernaryForm<K>& B) {
    std::array<Poly<K>, 4> a{A.z_coeff_at_y1(3), A.z_coeff_at_y1(2), A.z_coeff_at_y1(1),
                             A.z_coeff_at_y1(0)};
    std::array<Poly<K>, 3> b{B.z_coeff_at_y1(2), B.z_coeff_at_y1(1), B.z_coeff_at_y1(0)};
    Poly<K> zero(A.proto());
    std::vector<std::vector<Poly<K>>> m = {
        {a[0], a[1], a[2], a[3], zero},
        {zero, a[0], a[1], a[2], a[3]},
        {b[0], b[1], b[2], zero, zero},
        {zero, b[0], b[1], b[2], zero},
        {zero, zero, b[0], b[1], b[2]},
    };
    return det_poly(std::move(m));
}

}  // namespace detail

// Certifies the cubic smooth (true), exhibits a singular point (false), or
// throws retries_exhausted_error when no coordinate change settles it.
template <class K>
bool cubic_smooth_certified(const TernaryForm<K>& C, std::uint64_t seed = 0,
                            int max_attempts = 40) {
    if (C.degree() != 3) throw domain_error("smoothness certificate needs a cubic");
    if (C.is_zero_form()) return false;
    const K proto = C.proto();
    SplitMix64 rng(seed);

    for (int att = 0; att < max_attempts; ++att) {
        std::array<std::array<K, 3>, 3> M{};
        if (att == 0) {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        i == j ? one_like(proto) : zero_like(proto);
        } else {
            std::uint64_t box = 3 + static_cast<std::uint64_t>(att) / 8;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = from_int_like(
                        proto, static_cast<std::int64_t>(rng.below(2 * box + 1)) -
                                   static_cast<std::int64_t>(box));
            if (is_zero(detail::det3(M))) continue;
        }

        TernaryForm<K> D = C.subst_linear(M);
        TernaryForm<K> Dx = D.partial(0), Dy = D.partial(1), Dz = D.partial(2);

        // Exact check of the line y = 0. A common root of all four
        // restrictions (or total vanishing at (1:0:0)) is a genuine singular
        // point of the transformed — hence the original — cubic.
        {
            Poly<K> rc = D.restrict_y0();
            Poly<K> rx = Dx.restrict_y0();
            Poly<K> ry = Dy.restrict_y0();
            Poly<K> rz = Dz.restrict_y0();
            // the affine part (x : 0 : 1)
            Poly<K> g = gcd(gcd(rc, rx), gcd(ry, rz));
            bool all_zero = rc.is_zero() && rx.is_zero() && ry.is_zero() && rz.is_zero();
            if (all_zero || g.degree() > 0) return false;
            // the point (1 : 0 : 0): x^3 coefficient of D, x^2 of the partials
            if (is_zero(D.at(3, 0)) && is_zero(Dx.at(2, 0)) && is_zero(Dy.at(2, 0)) &&
                is_zero(Dz.at(2, 0)))
                return false;
        }

        // Conservative elimination for y != 0; needs unit leading
        // z-coefficients so the resultants see the full z-fibers.
        if (is_zero(D.at(0, 0)) || is_zero(Dx.at(0, 0)) || is_zero(Dy.at(0, 0))) continue;
        Poly<K> R1 = detail::resultant_z_y1(D, Dx);
        Poly<K> R2 = detail::resultant_z_y1(D, Dy);
        if (R1.is_zero() || R2.is_zero()) continue;
        if (gcd(R1, R2).degree() == 0) return true;
    }
    throw retries_exhausted_error(
        "could not certify the cubic smooth nor exhibit a singular point");
}

// Rational coefficients: try certified reductions first. When every
// coefficient is p-integral, reduction mod p is a ring homomorphism, so the
// discriminant of the reduced cubic is the reduction of the discriminant;
// a smooth reduction therefore certifies smoothness over the rationals.
// A singular or undecided reduction says nothing (the prime may divide the
// discriminant), so those fall through — to further primes, then to the
// exact rational certificate.
inline bool cubic_smooth_certified(const TernaryForm<Rat>& C, std::uint64_t seed = 0,
                                   int max_attempts = 40) {
    if (C.degree() != 3) throw domain_error("smoothness certificate needs a cubic");
    if (C.is_zero_form()) return false;
    constexpr std::uint64_t primes[] = {10007, 10009, 10037, 31013, 31019, 65003};
    for (std::uint64_t p : primes) {
        TernaryForm<Fp> Cp(3, Fp(0, p));
        bool reducible = true;
        for (int i = 0; i <= 3 && reducible; ++i)
            for (int j = 0; i + j <= 3; ++j) {
                auto v = fp_of_rat(C.at(i, j), p);
                if (!v) {
                    reducible = false;
                    break;
                }
                Cp.at(i, j) = *v;
            }
        if (!reducible || Cp.is_zero_form()) continue;
        try {
            if (cubic_smooth_certified<Fp>(Cp, seed, max_attempts)) return true;
        } catch (const retries_exhausted_error&) {
        }
    }
    return cubic_smooth_certified<Rat>(C, seed, max_attempts);
}

template <class K>
bool cubic_smooth_certified(const PlaneCubic<K>& C, std::uint64_t seed = 0,
                            int max_attempts = 40) {
    return cubic_smooth_certified(C.form, seed, max_attempts);
}

// Reduction of a smooth plane cubic with a rational point to a genus-one
// quartic model (and through it a Weierstrass curve), away from
// characteristics 2 and 3: move the point to (0:1:0), write the cubic as
// L(x,z) y^2 + Q(x,z) y + N(x,z) and take the discriminant quartic
// ell(u) = Q(u,1)^2 - 4 L(u,1) N(u,1) of the pencil of lines through the
// point. A curve point maps to (u, w) = (x'/z', 2 L(u) y'/z' + Q(u)).
template <class K>
struct CubicReduction {
    Poly<K> quartic;  // ell(u), degree 3 or 4, separable
    QuarticBase<K> base;
    GenusOneModel<K> model;
    std::array<std::array<K, 3>, 3> to_plane;    // sends (0:1:0) to the base point
    std::array<std::array<K, 3>, 3> from_plane;  // its inverse
    Poly<K> L1;                                  // L(u, 1), degree <= 1
    Poly<K> Q1;                                  // Q(u, 1), degree <= 2
};

template <class K>
CubicReduction<K> cubic_to_weierstrass(const TernaryForm<K>& C, const std::array<K, 3>& pt) {
    std::uint64_t p = char_of(C.proto());
    if (p == 2 || p == 3)
        throw domain_error("cubic reduction needs characteristic away from 2 and 3");
    if (C.degree() != 3) throw domain_error("cubic reduction needs a cubic");
    if (!is_zero(C.eval(pt[0], pt[1], pt[2])))
        throw domain_error("base point does not lie on the cubic");

    int istar = -1;
    for (int i = 2; i >= 0; --i)
        if (!is_zero(pt[static_cast<std::size_t>(i)])) { istar = i; break; }
    if (istar < 0) throw domain_error("base point must be a projective point");

    // N: middle column = pt, remaining columns = standard basis vectors
    std::array<std::array<K, 3>, 3> N{};
    const K z0 = zero_like(C.proto()), o1 = one_like(C.proto());
    for (auto& row : N) row = {z0, z0, z0};
    std::array<int, 2> others{};
    int t = 0;
    for (int i = 0; i < 3; ++i)
        if (i != istar) others[static_cast<std::size_t>(t++)] = i;
    for (int i = 0; i < 3; ++i) N[static_cast<std::size_t>(i)][1] = pt[static_cast<std::size_t>(i)];
    N[static_cast<std::size_t>(others[0])][0] = o1;
    N[static_cast<std::size_t>(others[1])][2] = o1;

    TernaryForm<K> D = C.subst_linear(N);
    if (!is_zero(D.at(0, 3)))
        throw domain_error("base point failed to move onto the curve");  // y^3 coeff

    // D = L(x,z) y^2 + Q(x,z) y + N(x,z)
    Poly<K> L1({D.at(0, 2), D.at(1, 2)}, C.proto());
    Poly<K> Q1({D.at(0, 1), D.at(1, 1), D.at(2, 1)}, C.proto());
    Poly<K> N1({D.at(0, 0), D.at(1, 0), D.at(2, 0), D.at(3, 0)}, C.proto());
    if (L1.is_zero())
        throw domain_error("cubic is singular at the base point");

    Poly<K> four = Poly<K>::constant(from_int_like(C.proto(), 4));
    Poly<K> ell = Q1 * Q1 - four * L1 * N1;
    if (ell.degree() < 3 || ell.degree() > 4 || !is_separable(ell))
        throw domain_error("pencil discriminant is degenerate; cubic is singular");

    QuarticBase<K> base = QuarticBase<K>::none(C.proto());
    if (L1.degree() == 1) {
        K ustar = -L1.coeff(0) * inv(L1.coeff(1));
        base = QuarticBase<K>::affine(ustar, -eval(Q1, ustar));
    } else {
        base = QuarticBase<K>::infinity_branch(-Q1.coeff(2));
    }
    GenusOneModel<K> model(ell, base);
    return {ell, base, std::move(model), N, detail::inverse3(N), L1, Q1};
}

template <class K>
CubicReduction<K> cubic_to_weierstrass(const PlaneCubic<K>& C, const std::array<K, 3>& pt) {
    return cubic_to_weierstrass(C.form, pt);
}

// Sends a projective plane point (over any extension E of K reachable by
// `lift`) to the (u, w) coordinates of the reduction's quartic model.
template <class K, class E, class Lift>
std::pair<E, E> cubic_point_to_quartic(const CubicReduction<K>& red, const E& X, const E& Y,
                                       const E& Z, Lift&& lift) {
    std::array<E, 3> v{zero_like(X), zero_like(X), zero_like(X)};
    std::array<E, 3> in{X, Y, Z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            v[static_cast<std::size_t>(i)] =
                v[static_cast<std::size_t>(i)] +
                lift(red.from_plane[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                    in[static_cast<std::size_t>(j)];
    if (is_zero(v[2]))
        throw domain_error("point lies on the excluded fiber of the reduction");
    E zi = inv(v[2]);
    E u = v[0] * zi;
    E w = from_int_like(u, 2) * eval_lifted(red.L1, u, lift) * (v[1] * zi) +
          eval_lifted(red.Q1, u, lift);
    return {u, w};
}

}  // namespace newpoints
