#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "newpoints/analysis.hpp"
#include "newpoints/construct.hpp"
#include "newpoints/ext.hpp"
#include "newpoints/fp.hpp"
#include "newpoints/fq.hpp"
#include "newpoints/jinv.hpp"
#include "newpoints/poly.hpp"
#include "newpoints/rational.hpp"
#include "newpoints/util.hpp"
#include "newpoints/wcurve.hpp"

using namespace newpoints;

namespace {
Rat Q(std::int64_t n, std::int64_t d = 1) { return Rat(int_from_i64(n), int_from_i64(d)); }
Poly<Rat> qpoly(const std::vector<std::int64_t>& le) { return poly_from_ints(Rat(), le); }

// Random curve through two random points: a is determined by the chord
// condition, b by membership of the first point.
template <class T, class Sampler>
bool random_curve_with_points(Sampler samp, WeierstrassCurve<T>& e, ECPoint<T>& p1,
                              ECPoint<T>& p2) {
    T x1 = samp(), y1 = samp(), x2 = samp(), y2 = samp();
    if (is_zero(x1 - x2)) return false;
    T a = (y1 * y1 - y2 * y2 - (x1 * x1 * x1 - x2 * x2 * x2)) / (x1 - x2);
    T b = y1 * y1 - x1 * x1 * x1 - a * x1;
    T z = zero_like(x1);
    e = WeierstrassCurve<T>{z, z, z, a, b};
    p1 = ECPoint<T>::affine(x1, y1);
    p2 = ECPoint<T>::affine(x2, y2);
    return true;
}

template <class T, class Sampler>
void group_law_trials(int trials, Sampler samp) {
    int done = 0;
    int guard = 0;
    while (done < trials) {
        REQUIRE(++guard < 100 * trials);
        WeierstrassCurve<T> e{samp(), samp(), samp(), samp(), samp()};
        ECPoint<T> p1 = ECPoint<T>::at_infinity(samp());
        ECPoint<T> p2 = p1;
        if (!random_curve_with_points(samp, e, p1, p2)) continue;
        REQUIRE(on_curve(e, p1));
        REQUIRE(on_curve(e, p2));
        ECPoint<T> p3 = (done % 2 == 0) ? ec_add(e, p1, p2) : ec_mul(e, 2, p1);

        ECPoint<T> lhs = ec_add(e, ec_add(e, p1, p2), p3);
        ECPoint<T> rhs = ec_add(e, p1, ec_add(e, p2, p3));
        REQUIRE(lhs == rhs);

        ECPoint<T> o = ECPoint<T>::at_infinity(p1.x);
        REQUIRE(ec_add(e, p1, o) == p1);
        REQUIRE(ec_add(e, o, p2) == p2);
        REQUIRE(ec_add(e, p1, ec_neg(e, p1)).infinity);
        ++done;
    }
}

template <class F, class ProtoF, class Sampler>
void j_oracle_trials(const ProtoF& proto, int trials, Sampler samp) {
    int done = 0;
    int guard = 0;
    while (done < trials) {
        REQUIRE(++guard < 100 * trials);
        F a = samp(), b = samp(), c = samp(), d = samp();
        if (is_zero(a)) continue;
        Poly<F> f(std::vector<F>{d, c, b, a}, proto);
        // Depressed monic cubic g = f(x - b/(3a))/a = x^3 + p x + q.
        F shift = zero_like(a) - b / (from_int_like(a, 3) * a);
        Poly<F> g = translate(f * Poly<F>::constant(inv(a)), shift);
        REQUIRE(is_zero(g.coeff(2)));
        F p = g.coeff(1), q = g.coeff(0);
        F den = from_int_like(a, 4) * p * p * p + from_int_like(a, 27) * q * q;
        if (is_zero(den)) continue;  // singular curve; resample
        F jc = from_int_like(a, 6912) * p * p * p / den;
        REQUIRE(j_data(f).j == jc);
        ++done;
    }
}
}  // namespace

TEST_CASE("elliptic group law axioms over extension towers") {
    SplitMix64 rng(2026);

    auto quad = ExtRing<Rat>::make(qpoly({-2, 0, 1}), "r");
    auto cub = ExtRing<Rat>::make(qpoly({-1, -1, 0, 1}), "t");
    auto samp_quad = [&]() {
        std::vector<Rat> cs;
        for (int i = 0; i < 2; ++i) cs.push_back(Q((std::int64_t)rng.below(19) - 9));
        return quad->element(Poly<Rat>(cs, Rat()));
    };
    auto samp_cub = [&]() {
        std::vector<Rat> cs;
        for (int i = 0; i < 3; ++i) cs.push_back(Q((std::int64_t)rng.below(19) - 9));
        return cub->element(Poly<Rat>(cs, Rat()));
    };
    group_law_trials<ExtElt<Rat>>(13, samp_quad);
    group_law_trials<ExtElt<Rat>>(13, samp_cub);

    auto fq2 = make_fq(101, 2);
    auto fq3 = make_fq(101, 3);
    auto samp_fq2 = [&]() {
        std::vector<Fp> cs;
        for (int i = 0; i < 2; ++i) cs.push_back(Fp(rng.below(101), 101));
        return fq2->element(Poly<Fp>(cs, Fp(0, 101)));
    };
    auto samp_fq3 = [&]() {
        std::vector<Fp> cs;
        for (int i = 0; i < 3; ++i) cs.push_back(Fp(rng.below(101), 101));
        return fq3->element(Poly<Fp>(cs, Fp(0, 101)));
    };
    group_law_trials<ExtElt<Fp>>(12, samp_fq2);
    group_law_trials<ExtElt<Fp>>(12, samp_fq3);
}

TEST_CASE("cubic j-invariant agrees with the depressed-cubic formula") {
    SplitMix64 rng(77);
    auto samp_q = [&]() { return Q((std::int64_t)rng.below(41) - 20, 1 + (std::int64_t)rng.below(5)); };
    j_oracle_trials<Rat>(Rat(), 100, samp_q);

    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
        auto samp_p = [&]() { return Fp(rng.below(p), p); };
        j_oracle_trials<Fp>(Fp(0, p), 100, samp_p);
    }
}

TEST_CASE("quartic j-invariant matches the associated Weierstrass model") {
    SplitMix64 rng(31337);
    int done = 0, guard = 0;
    while (done < 50) {
        REQUIRE(++guard < 5000);
        std::vector<Rat> cs;
        for (int i = 0; i < 4; ++i) cs.push_back(Q((std::int64_t)rng.below(21) - 10));
        cs.push_back(Q(1));  // monic, so the curve has two rational branches at infinity
        Poly<Rat> f(cs, Rat());
        auto inv4 = quartic_invariants(f);
        if (is_zero(inv4.disc)) continue;
        auto model = quartic_to_weierstrass(f, QuarticBase<Rat>::infinity_branch(Q(1)));
        REQUIRE(curve_j(model.curve()) == j_data(f).j);
        ++done;
    }
}

TEST_CASE("certificates for constructed extension points") {
    auto spec = ExtensionSpec<Rat>::single(qpoly({-2, 0, 0, 0, 0, 0, 0, 1}));
    auto rep = construct_general(spec, 1);
    REQUIRE(rep.hyper.has_value());
    REQUIRE(!rep.points.empty());
    for (const auto& pt : rep.points) {
        auto ring = ExtRing<Rat>::make(pt.chi, "u");
        auto x = ring->element(pt.x_rep);
        auto y = ring->element(pt.y_rep);
        auto cert = newness_certificate(*rep.hyper, x, y, pt.degree);
        REQUIRE(cert.on_curve);
        REQUIRE(cert.residue_degree == 7);
        REQUIRE(cert.degree == 7);
        REQUIRE(cert.squarefree);
        REQUIRE(cert.irreducibility.status != IrredStatus::FAILED);
        REQUIRE(cert.is_new());
        REQUIRE(cert.lambdas.size() >= 1);
    }
}

TEST_CASE("hyperelliptic and plane-cubic certificates, special and generic points") {
    // y^2 = x^6 + x^2 - 3 has the point (sqrt(3), 3 sqrt(3)): y = 3x is
    // polynomial in x, so the point is special.
    auto model = make_even_model(qpoly({-3, 0, 1, 0, 0, 0, 1}), "sample even model");
    auto r3 = ExtRing<Rat>::make(qpoly({-3, 0, 1}), "r");
    auto x = r3->gen();
    auto y = from_int_like(x, 3) * x;
    auto cert = newness_certificate(model, x, y, 2);
    REQUIRE(cert.on_curve);
    REQUIRE(cert.special);
    REQUIRE(cert.residue_degree == 2);
    REQUIRE(cert.is_new());
    REQUIRE(cert.chi_x == qpoly({-3, 0, 1}));

    // Same model at x = 1: y^2 = -1, so y = i generates Q(i) while x stays
    // rational; the point is new of degree 2 but not special.
    auto ri = ExtRing<Rat>::make(qpoly({1, 0, 1}), "i");
    auto cert2 = newness_certificate(model, ri->one(), ri->gen(), 2);
    REQUIRE(cert2.on_curve);
    REQUIRE(!cert2.special);
    REQUIRE(cert2.degree == 1);  // chi of the x-coordinate alone
    REQUIRE(cert2.residue_degree == 2);
    REQUIRE(cert2.is_new());

    // Fermat cubic x^3 + y^3 + z^3 with the point (-2^(1/3), 1, 1).
    TernaryForm<Rat> fermat(3, Rat());
    fermat.at(3, 0) = Q(1);
    fermat.at(0, 3) = Q(1);
    fermat.at(0, 0) = Q(1);
    auto rc = ExtRing<Rat>::make(qpoly({-2, 0, 0, 1}), "c");
    auto xc = zero_like(rc->gen()) - rc->gen();
    auto cert3 = newness_certificate(fermat, xc, rc->one(), 3);
    REQUIRE(cert3.on_curve);
    REQUIRE(cert3.special);
    REQUIRE(cert3.residue_degree == 3);
    REQUIRE(cert3.irreducibility.status == IrredStatus::PROVED);
    REQUIRE(cert3.is_new());

    // Weierstrass curve y^2 = x^3 + 3 with (sqrt(2), 1 + sqrt(2)).
    WeierstrassCurve<Rat> e{Q(0), Q(0), Q(0), Q(0), Q(3)};
    auto r2 = ExtRing<Rat>::make(qpoly({-2, 0, 1}), "s");
    auto cert4 = newness_certificate(e, r2->gen(), r2->one() + r2->gen(), 2);
    REQUIRE(cert4.on_curve);
    REQUIRE(cert4.special);
    REQUIRE(cert4.is_new());
}

TEST_CASE("composition of quadratic points generates the compositum") {
    // y^2 = x^3 - 9/2 x + 57/16 passes through (sqrt(2), sqrt(2) - 5/4) and
    // (sqrt(3), sqrt(3) - 3/4).
    WeierstrassCurve<Rat> e{Q(0), Q(0), Q(0), Q(-9, 2), Q(57, 16)};
    ComposeInput<Rat> first{qpoly({-2, 0, 1}), qpoly({0, 1}),
                            Poly<Rat>({Q(-5, 4), Q(1)}, Rat())};
    ComposeInput<Rat> second{qpoly({-3, 0, 1}), qpoly({0, 1}),
                             Poly<Rat>({Q(-3, 4), Q(1)}, Rat())};

    auto out = compose_new_point(e, first, second);
    REQUIRE(out.torsion_status == "trivial");
    REQUIRE(out.torsion_hypothesis_ok);
    REQUIRE(out.certificate.on_curve);
    REQUIRE(out.certificate.target_degree == 4);
    REQUIRE(out.certificate.residue_degree == 4);
    // The x-coordinate of the sum happens to land in the quadratic subfield
    // Q(sqrt(6)): x(P+Q) = 9/4 + sqrt(6)/2. The residue degree still reaches 4
    // through the y-coordinate, which is what the certificate measures.
    REQUIRE(out.certificate.degree == 2);
    REQUIRE(out.certificate.chi_x ==
            Poly<Rat>({Q(57, 16), Q(-9, 2), Q(1)}, Rat()));
    REQUIRE(out.certificate.squarefree);
    REQUIRE(out.certificate.irreducibility.status != IrredStatus::FAILED);
    REQUIRE(out.certificate.is_new());

    // Feeding the same quadratic extension twice makes the tower split, and
    // the group law runs into a zero divisor.
    REQUIRE_THROWS_AS(compose_new_point(e, first, first), zero_divisor_error);

    // A point off the curve is rejected outright.
    ComposeInput<Rat> bogus{qpoly({-3, 0, 1}), qpoly({0, 1}), qpoly({0, 1})};
    REQUIRE_THROWS_AS(compose_new_point(e, first, bogus), domain_error);
}

TEST_CASE("three two-torsion points over a cubic tower sum to the identity") {
    // E: y^2 = x^3 - x - 1; the 2-torsion x-coordinates are the roots of the
    // cubic. Adjoin one root t, then a second root s of the residual
    // quadratic; the third root is -(t + s).
    Poly<Rat> cubic = qpoly({-1, -1, 0, 1});
    auto r1 = ExtRing<Rat>::make(cubic, "t");
    auto l1 = [&](const Rat& v) { return r1->from_base(v); };
    Poly<ExtElt<Rat>> cl = lift_poly(cubic, r1->zero(), l1);
    Poly<ExtElt<Rat>> lin({zero_like(r1->gen()) - r1->gen(), r1->one()}, r1->zero());
    auto [quot, rem] = divrem(cl, lin);
    REQUIRE(rem.degree() < 0);
    auto r2 = ExtRing<ExtElt<Rat>>::make(monic(quot), "s");
    using T2 = ExtElt<ExtElt<Rat>>;
    auto l2 = [&](const Rat& v) { return r2->from_base(r1->from_base(v)); };

    WeierstrassCurve<T2> el{l2(Q(0)), l2(Q(0)), l2(Q(0)), l2(Q(-1)), l2(Q(-1))};
    T2 t = r2->from_base(r1->gen());
    T2 s = r2->gen();
    T2 z = r2->zero();
    ECPoint<T2> p1 = ECPoint<T2>::affine(t, z);
    ECPoint<T2> p2 = ECPoint<T2>::affine(s, z);
    REQUIRE(on_curve(el, p1));
    REQUIRE(on_curve(el, p2));

    ECPoint<T2> sum = ec_add(el, p1, p2);
    REQUIRE(!sum.infinity);
    REQUIRE(is_zero(sum.y));
    REQUIRE(sum.x == z - t - s);
    ECPoint<T2> p3 = ECPoint<T2>::affine(z - t - s, z);
    REQUIRE(ec_add(el, sum, p3).infinity);
}

TEST_CASE("two-torsion descent produces quadratic points with two-torsion trace") {
    SECTION("nonzero d") {
        auto res = two_torsion_descent(Q(0), Q(1, 2), Q(2));
        REQUIRE(res.applicable);
        REQUIRE(res.field_modulus == qpoly({-2, 0, 1}));
        REQUIRE(res.x_rep == Poly<Rat>({Q(1), Q(1, 2)}, Rat()));
        REQUIRE(res.y_rep == Poly<Rat>({Q(1), Q(1)}, Rat()));
        REQUIRE(res.point_on_curve);
        REQUIRE(res.difference_is_two_torsion);
        REQUIRE(res.isogeny_j_link);
    }
    SECTION("nonzero square d keeps the algebra split but the identity exact") {
        auto res = two_torsion_descent(Q(1), Q(-1), Q(1));
        REQUIRE(res.applicable);
        REQUIRE(res.point_on_curve);
        REQUIRE(res.difference_is_two_torsion);
        REQUIRE(res.isogeny_j_link);
    }
    SECTION("d = 0 branch over Q(sqrt(a2^2 - 4 a4))") {
        auto res = two_torsion_descent(Q(1), Q(1), Q(0));
        REQUIRE(res.applicable);
        REQUIRE(res.field_modulus == qpoly({3, 0, 1}));
        REQUIRE(res.y_rep == Poly<Rat>::constant(Q(0)));
        REQUIRE(res.point_on_curve);
        REQUIRE(res.difference_is_two_torsion);
        REQUIRE(res.isogeny_j_link);
    }
    SECTION("j = 0 curve links to j = 54000 through the level-2 equation") {
        auto res = two_torsion_descent(Q(-3), Q(3), Q(0));
        REQUIRE(res.applicable);
        REQUIRE(curve_j(res.curve) == Q(0));
        REQUIRE(curve_j(res.quotient) == Q(54000));
        REQUIRE(res.isogeny_j_link);
        REQUIRE(res.difference_is_two_torsion);
    }
    SECTION("criterion failure is reported, not thrown") {
        auto res = two_torsion_descent(Q(0), Q(1), Q(3));
        REQUIRE(!res.applicable);
        REQUIRE(!res.reason.empty());
    }
    SECTION("repeated descent root is rejected") {
        auto res = two_torsion_descent(Q(1), Q(1), Q(3));
        REQUIRE(!res.applicable);
    }
    SECTION("singular inputs throw") {
        REQUIRE_THROWS_AS(two_torsion_descent(Q(1), Q(0), Q(1)), domain_error);
        REQUIRE_THROWS_AS(two_torsion_descent(Q(2), Q(1), Q(1)), domain_error);
    }
}

TEST_CASE("level-2 modular equation sanity") {
    REQUIRE(is_zero(modular_equation_level2(Q(1728), Q(1728))));
    REQUIRE(is_zero(modular_equation_level2(Q(0), Q(54000))));
    REQUIRE(!is_zero(modular_equation_level2(Q(0), Q(54001))));
    SplitMix64 rng(5);
    for (int i = 0; i < 10; ++i) {
        Rat a = Q((std::int64_t)rng.below(2000) - 1000);
        Rat b = Q((std::int64_t)rng.below(2000) - 1000);
        REQUIRE(modular_equation_level2(a, b) == modular_equation_level2(b, a));
    }
}

TEST_CASE("order bound check") {
    // y^2 + y = x^3 - x^2 has (0, 0) of order 5.
    WeierstrassCurve<Rat> e5{Q(0), Q(-1), Q(1), Q(0), Q(0)};
    auto pt = ECPoint<Rat>::affine(Q(0), Q(0));
    REQUIRE(on_curve(e5, pt));
    auto chk = order_bound_check(e5, pt, 12);
    REQUIRE(chk.order.has_value());
    REQUIRE(*chk.order == 5);
    REQUIRE(!chk.exceeds());
    auto chk3 = order_bound_check(e5, pt, 3);
    REQUIRE(chk3.exceeds());

    // y^2 = x^3 - 2 has the non-torsion point (3, 5).
    WeierstrassCurve<Rat> e{Q(0), Q(0), Q(0), Q(0), Q(-2)};
    auto p2 = ECPoint<Rat>::affine(Q(3), Q(5));
    REQUIRE(on_curve(e, p2));
    REQUIRE(order_bound_check(e, p2, 12).exceeds());
}

TEST_CASE("composition torsion warnings") {
    // y^2 = x^3 - x has full rational 2-torsion; composing points from two
    // quadratic extensions reports the violated hypothesis but still adds.
    WeierstrassCurve<Rat> e{Q(0), Q(0), Q(0), Q(-1), Q(0)};
    // Over Q(sqrt(2)): x = 1 + r gives x^3 - x = 6 + 4r = (2 + r)^2.
    auto r2 = ExtRing<Rat>::make(qpoly({-2, 0, 1}), "r");
    {
        auto x = r2->one() + r2->gen();
        auto y = from_int_like(x, 2) + r2->gen();
        REQUIRE(y * y == x * x * x - x);
    }
    ComposeInput<Rat> first{qpoly({-2, 0, 1}), qpoly({1, 1}), qpoly({2, 1})};
    // Over Q(sqrt(5)): x = 2 + s gives x^3 - x = 36 + 16s = (4 + 2s)^2.
    auto r5 = ExtRing<Rat>::make(qpoly({-5, 0, 1}), "s");
    {
        auto x = from_int_like(r5->gen(), 2) + r5->gen();
        auto y = from_int_like(x, 4) + from_int_like(x, 2) * r5->gen();
        REQUIRE(y * y == x * x * x - x);
    }
    ComposeInput<Rat> second{qpoly({-5, 0, 1}), qpoly({2, 1}), qpoly({4, 2})};

    auto out = compose_new_point(e, first, second);
    REQUIRE(out.torsion_status == "violated(k=2)");
    REQUIRE(!out.torsion_hypothesis_ok);
    REQUIRE(out.certificate.on_curve);
    REQUIRE(out.certificate.residue_degree == 4);
}
