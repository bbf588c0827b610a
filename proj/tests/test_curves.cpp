#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "newpoints/fp.hpp"
#include "newpoints/fq.hpp"
#include "newpoints/jinv.hpp"
#include "newpoints/poly.hpp"
#include "newpoints/rational.hpp"
#include "newpoints/wcurve.hpp"

using namespace newpoints;

namespace {
Rat Q(std::int64_t n, std::int64_t d = 1) { return Rat(int_from_i64(n), int_from_i64(d)); }
Poly<Rat> qpoly(const std::vector<std::int64_t>& le) { return poly_from_ints(Rat(), le); }

std::vector<ECPoint<Fp>> brute_points(const WeierstrassCurve<Fp>& e, std::uint64_t p) {
    std::vector<ECPoint<Fp>> pts{ECPoint<Fp>::at_infinity(Fp(0, p))};
    for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < p; ++y) {
            auto pt = ECPoint<Fp>::affine(Fp(x, p), Fp(y, p));
            if (on_curve(e, pt)) pts.push_back(pt);
        }
    return pts;
}
}  // namespace

TEST_CASE("quartic invariant oracles") {
    auto [I, J, disc] = quartic_invariants(qpoly({1, 0, 0, 0, 1}));
    REQUIRE(I == Q(12));
    REQUIRE(J == Q(0));
    REQUIRE(disc == Q(256));
    REQUIRE(j_invariant(qpoly({1, 0, 0, 0, 1})) == Q(1728));

    auto inv3 = quartic_invariants(qpoly({1, 1, 0, 1}));
    REQUIRE(inv3.I == Q(-3));
    REQUIRE(inv3.J == Q(-27));
    REQUIRE(inv3.disc == Q(-31));
    REQUIRE(j_invariant(qpoly({1, 1, 0, 1})) == Q(6912, 31));

    REQUIRE(j_invariant(qpoly({1, 0, 0, 1})) == Q(0));       // y^2 = x^3 + 1
    REQUIRE(j_invariant(qpoly({0, 1, 0, 1})) == Q(1728));    // y^2 = x^3 + x
    REQUIRE_THROWS_AS(j_invariant(qpoly({0, 0, 0, 1})), domain_error);
    REQUIRE_THROWS_AS(quartic_invariants(qpoly({1, 1})), domain_error);
}

TEST_CASE("binary quartic discriminant identity, sampled") {
    for (std::int64_t a = 1; a <= 2; ++a)
        for (std::int64_t b = 0; b <= 2; ++b)
            for (std::int64_t c = 0; c <= 2; ++c)
                for (std::int64_t d = 0; d <= 2; ++d)
                    for (std::int64_t e = 0; e <= 2; ++e) {
                        Poly<Rat> f(std::vector<Rat>{Q(e), Q(d), Q(c), Q(b), Q(a)}, Rat());
                        auto [I, J, disc] = quartic_invariants(f);
                        REQUIRE(Q(4) * I * I * I - J * J == Q(27) * disc);
                        REQUIRE(disc == discriminant(f));
                    }
}

TEST_CASE("chord and tangent arithmetic on rational curves") {
    // y^2 = x^3 + 1 has a rational 6-torsion point
    auto e = WeierstrassCurve<Rat>::short_form(Q(0), Q(1));
    auto p = ECPoint<Rat>::affine(Q(2), Q(3));
    REQUIRE(on_curve(e, p));
    REQUIRE(order_of_point_up_to(e, p, 12).value() == 6);
    REQUIRE(ec_mul(e, 2, p) == ECPoint<Rat>::affine(Q(0), Q(1)));
    REQUIRE(ec_mul(e, 3, p) == ECPoint<Rat>::affine(Q(-1), Q(0)));
    REQUIRE(ec_add(e, p, ec_neg(e, p)).infinity);

    // y^2 + y = x^3 - x has trivial small torsion at (0,0)
    WeierstrassCurve<Rat> e37{Q(0), Q(0), Q(1), Q(-1), Q(0)};
    auto g = ECPoint<Rat>::affine(Q(0), Q(0));
    REQUIRE(on_curve(e37, g));
    REQUIRE_FALSE(order_of_point_up_to(e37, g, 12).has_value());
    auto acc = g;
    for (int k = 2; k <= 8; ++k) {
        acc = ec_add(e37, acc, g);
        REQUIRE(on_curve(e37, acc));
        REQUIRE_FALSE(acc.infinity);
    }
    REQUIRE(ec_sub(e37, acc, g) == ec_mul(e37, 7, g));
}

TEST_CASE("group law properties over a small prime field") {
    const std::uint64_t p = 13;
    WeierstrassCurve<Fp> e{Fp(1, p), Fp(0, p), Fp(1, p), Fp(2, p), Fp(3, p)};
    REQUIRE(!is_zero(curve_disc(e)));
    auto pts = brute_points(e, p);
    SplitMix64 rng(11);
    for (int iter = 0; iter < 60; ++iter) {
        auto& a = pts[rng.below(pts.size())];
        auto& b = pts[rng.below(pts.size())];
        auto& c = pts[rng.below(pts.size())];
        REQUIRE(on_curve(e, ec_add(e, a, b)));
        REQUIRE(ec_add(e, a, b) == ec_add(e, b, a));
        REQUIRE(ec_add(e, ec_add(e, a, b), c) == ec_add(e, a, ec_add(e, b, c)));
        REQUIRE(ec_add(e, a, ec_neg(e, a)).infinity);
    }
}

TEST_CASE("division polynomials locate small torsion") {
    // standard short-form oracle: psi_3 = 3x^4 + 6a x^2 + 12b x - a^2
    auto e = WeierstrassCurve<Rat>::short_form(Q(-1), Q(0));
    REQUIRE(division_poly_x(e, 3) == qpoly({-1, 0, -6, 0, 3}));
    REQUIRE(two_torsion_poly(e) == qpoly({0, -4, 0, 4}));

    for (int k = 5; k <= 12; ++k) {
        int expect = k % 2 ? (k * k - 1) / 2 : (k * k - 4) / 2;
        REQUIRE(division_poly_x(e, k).degree() == expect);
    }

    // y^2 + y = x^3 - x^2 carries rational 5-torsion at (0,0) and (1,0)
    WeierstrassCurve<Rat> e5{Q(0), Q(-1), Q(1), Q(0), Q(0)};
    auto t = ECPoint<Rat>::affine(Q(0), Q(0));
    REQUIRE(on_curve(e5, t));
    REQUIRE(order_of_point_up_to(e5, t, 12).value() == 5);
    auto f5 = division_poly_x(e5, 5);
    REQUIRE(is_zero(eval(f5, Q(0))));
    REQUIRE(is_zero(eval(f5, Q(1))));

    // every odd-order point found by exhaustion sits over a root of the
    // matching reduced division polynomial
    const std::uint64_t p = 13;
    int odd_orders_seen = 0;
    for (std::uint64_t a6 = 0; a6 < p; ++a6) {
        WeierstrassCurve<Fp> ef{Fp(1, p), Fp(0, p), Fp(1, p), Fp(2, p), Fp(a6, p)};
        if (is_zero(curve_disc(ef))) continue;
        for (auto& pt : brute_points(ef, p)) {
            if (pt.infinity) continue;
            auto ord = order_of_point_up_to(ef, pt, 12);
            if (!ord.has_value() || *ord % 2 == 0 || *ord == 1) continue;
            REQUIRE(is_zero(eval(division_poly_x(ef, *ord), pt.x)));
            ++odd_orders_seen;
        }
    }
    REQUIRE(odd_orders_seen > 0);
}

TEST_CASE("cubic models map straight onto the invariant curve") {
    Poly<Rat> f = qpoly({1, 1, 0, 1});
    GenusOneModel<Rat> model(f, QuarticBase<Rat>::none(Rat()));
    REQUIRE(model.curve().a4 == Q(81));
    REQUIRE(model.curve().a6 == Q(729));
    auto img = model.map_affine(Q(0), Q(1));
    REQUIRE(img == ECPoint<Rat>::affine(Q(0), Q(27)));
    REQUIRE(on_curve(model.curve(), img));
    REQUIRE(model.base_image().infinity);
    REQUIRE(curve_j(model.curve()) == j_invariant(f));
}

TEST_CASE("quartic model with a nonzero base point") {
    Poly<Rat> f = qpoly({1, 0, 0, 0, 1});
    GenusOneModel<Rat> model(f, QuarticBase<Rat>::affine(Q(0), Q(1)));
    REQUIRE(model.curve().a4 == Q(-324));
    REQUIRE(model.curve().a6 == Q(0));
    auto base = model.base_image();
    REQUIRE(base == ECPoint<Rat>::affine(Q(0), Q(0)));
    REQUIRE(on_curve(model.curve(), base));
    // the conjugate of the base point is the group origin
    REQUIRE(model.map_affine(Q(0), Q(-1)).infinity);
    REQUIRE(model.map_affine(Q(0), Q(1)) == base);
}

TEST_CASE("every rational point of a quartic model maps onto the curve") {
    const std::uint64_t p = 13;
    Fp proto(0, p);
    SplitMix64 rng(3);
    int models_checked = 0;
    while (models_checked < 6) {
        std::vector<Fp> c;
        for (int i = 0; i < 5; ++i) c.emplace_back(rng.below(p), p);
        Poly<Fp> f(std::move(c), proto);
        if (f.degree() != 4 || !is_separable(f)) continue;

        // collect affine points and pick a base among them
        std::vector<std::pair<Fp, Fp>> pts;
        for (std::uint64_t u = 0; u < p; ++u)
            for (std::uint64_t w = 0; w < p; ++w)
                if (eval(f, Fp(u, p)) == Fp(w, p) * Fp(w, p)) pts.emplace_back(Fp(u, p), Fp(w, p));
        if (pts.empty()) continue;

        for (auto& base : {pts.front(), pts.back()}) {
            GenusOneModel<Fp> model(f, QuarticBase<Fp>::affine(base.first, base.second));
            REQUIRE(on_curve(model.curve(), model.base_image()));
            for (auto& [u, w] : pts) {
                auto img = model.map_affine(u, w);
                REQUIRE(on_curve(model.curve(), img));
            }
            REQUIRE(curve_j(model.curve()) == j_invariant(f));
        }
        ++models_checked;
    }
}

TEST_CASE("quartic model anchored at infinity when the top coefficient is square") {
    const std::uint64_t p = 13;
    Fp proto(0, p);
    SplitMix64 rng(9);
    int models_checked = 0;
    while (models_checked < 6) {
        std::vector<Fp> c;
        for (int i = 0; i < 4; ++i) c.emplace_back(rng.below(p), p);
        Fp lc_root(1 + rng.below(p - 1), p);
        c.push_back(lc_root * lc_root);
        Poly<Fp> f(std::move(c), proto);
        if (f.degree() != 4 || !is_separable(f)) continue;

        GenusOneModel<Fp> model(f, QuarticBase<Fp>::infinity_branch(lc_root));
        REQUIRE(on_curve(model.curve(), model.base_image()));
        for (std::uint64_t u = 0; u < p; ++u)
            for (std::uint64_t w = 0; w < p; ++w)
                if (eval(f, Fp(u, p)) == Fp(w, p) * Fp(w, p))
                    REQUIRE(on_curve(model.curve(), model.map_affine(Fp(u, p), Fp(w, p))));
        ++models_checked;
    }
}

TEST_CASE("quartic model with a base point on the x axis") {
    // f(1) = 0 forces the reversal route through a plain cubic
    Poly<Rat> f = qpoly({-1, 1}) * qpoly({3, 1, 0, 1});
    REQUIRE(is_separable(f));
    GenusOneModel<Rat> model(f, QuarticBase<Rat>::affine(Q(1), Q(0)));
    REQUIRE(model.map_affine(Q(1), Q(0)).infinity);
    REQUIRE(model.base_image().infinity);
    auto [I, J, disc] = quartic_invariants(f);
    (void)disc;
    REQUIRE(model.curve().a4 == Q(-27) * I);
    REQUIRE(model.curve().a6 == Q(-27) * J);

    const std::uint64_t p = 17;
    Fp proto(0, p);
    Poly<Fp> fp = poly_from_ints(proto, {-3, 2, -1, 1, 1});
    REQUIRE(eval(fp, Fp(1, p)).value() == 0);
    REQUIRE(is_separable(fp));
    GenusOneModel<Fp> mp(fp, QuarticBase<Fp>::affine(Fp(1, p), Fp(0, p)));
    for (std::uint64_t u = 0; u < p; ++u)
        for (std::uint64_t w = 0; w < p; ++w)
            if (eval(fp, Fp(u, p)) == Fp(w, p) * Fp(w, p))
                REQUIRE(on_curve(mp.curve(), mp.map_affine(Fp(u, p), Fp(w, p))));
}

TEST_CASE("quartic model rejections") {
    REQUIRE_THROWS_AS(GenusOneModel<Rat>(qpoly({1, 2, 1}), QuarticBase<Rat>::none(Rat())),
                      domain_error);
    REQUIRE_THROWS_AS(
        GenusOneModel<Rat>(qpoly({1, 0, 0, 0, 1}), QuarticBase<Rat>::none(Rat())),
        domain_error);  // degree 4 without a base point
    REQUIRE_THROWS_AS(
        GenusOneModel<Rat>(qpoly({1, 0, 0, 0, 1}), QuarticBase<Rat>::affine(Q(1), Q(1))),
        domain_error);  // claimed base point is off the curve
    REQUIRE_THROWS_AS(
        GenusOneModel<Rat>(qpoly({0, 0, 1, 0, 1}), QuarticBase<Rat>::affine(Q(0), Q(0))),
        domain_error);  // x^4 + x^2 is not separable
    Fp p3(0, 3);
    REQUIRE_THROWS_AS(
        GenusOneModel<Fp>(poly_from_ints(p3, {1, 1, 0, 1}), QuarticBase<Fp>::none(p3)),
        domain_error);  // characteristic 3 unsupported
}
