#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "newpoints/construct.hpp"
#include "newpoints/cubic.hpp"
#include "newpoints/fp.hpp"
#include "newpoints/fq.hpp"
#include "newpoints/hyper.hpp"
#include "newpoints/irreducible.hpp"
#include "newpoints/jinv.hpp"
#include "newpoints/poly.hpp"
#include "newpoints/ratfunc.hpp"
#include "newpoints/rational.hpp"
#include "newpoints/sample.hpp"

using namespace newpoints;

namespace {
Rat Q(std::int64_t n, std::int64_t d = 1) { return Rat(int_from_i64(n), int_from_i64(d)); }
Poly<Rat> qpoly(const std::vector<std::int64_t>& le) { return poly_from_ints(Rat(), le); }
Poly<Fp> fppoly(std::uint64_t p, const std::vector<std::int64_t>& le) {
    return poly_from_ints(Fp(0, p), le);
}
}  // namespace

// ---------------------------------------------------------------------------
// Irreducibility certificates

TEST_CASE("rational root search finds all candidate roots") {
    // 6x^2 - 5x + 1 = (2x - 1)(3x - 1)
    auto f = qpoly({1, -5, 6});
    auto rs = rational_roots(f);
    REQUIRE(rs.complete);
    REQUIRE(rs.roots.size() == 2);
    std::set<std::string> got;
    for (const auto& r : rs.roots) got.insert(to_text(r));
    REQUIRE(got.count("1/2") == 1);
    REQUIRE(got.count("1/3") == 1);
}

TEST_CASE("irreducibility over the rationals") {
    // Eisenstein at 2
    REQUIRE(certify_irreducible(qpoly({-2, 0, 0, 1})).status == IrredStatus::PROVED);
    // linear factors
    REQUIRE(certify_irreducible(qpoly({-1, 0, 1})).status == IrredStatus::FAILED);
    // repeated factor
    REQUIRE(certify_irreducible(qpoly({1, 2, 1})).status == IrredStatus::FAILED);
    // irreducible mod 2 (degree pattern rules out proper factors)
    REQUIRE(certify_irreducible(qpoly({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})).status ==
            IrredStatus::PROVED);
    // x^4 + 1 is irreducible but splits modulo every prime: at best LIKELY
    auto c = certify_irreducible(qpoly({1, 0, 0, 0, 1}));
    REQUIRE(c.status != IrredStatus::FAILED);
    // (x^2 + x + 1)(x^2 - x + 1) has no rational roots; must not be PROVED
    REQUIRE(certify_irreducible(qpoly({1, 0, 1, 0, 1})).status != IrredStatus::PROVED);
    // degree one is always irreducible
    REQUIRE(certify_irreducible(qpoly({7, 2})).status == IrredStatus::PROVED);
}

TEST_CASE("irreducibility over prime fields is decided exactly") {
    REQUIRE(certify_irreducible(fppoly(5, {1, 0, 1})).status == IrredStatus::FAILED);
    REQUIRE(certify_irreducible(fppoly(3, {1, 0, 1})).status == IrredStatus::PROVED);
    REQUIRE(certify_irreducible(fppoly(2, {1, 1, 0, 0, 1})).status == IrredStatus::PROVED);
    REQUIRE(is_irreducible_finite(fppoly(2, {1, 1, 0, 0, 1}), Int(2)));
    REQUIRE(!is_irreducible_finite(fppoly(2, {1, 0, 0, 0, 1}), Int(2)));  // (x+1)^4
}

// ---------------------------------------------------------------------------
// Hyperelliptic-type models

TEST_CASE("odd-degree models have one point at infinity") {
    auto M = make_even_model(qpoly({1, 0, 0, 0, 0, 1}));  // y^2 = x^5 + 1
    REQUIRE(M.genus == 2);
    REQUIRE(M.points_at_infinity == 1);
    REQUIRE(M.weight == 3);
}

TEST_CASE("even-degree models count infinity by the leading coefficient") {
    auto M = make_even_model(qpoly({1, 1, 0, 0, 0, 0, 1}));  // y^2 = x^6 + x + 1
    REQUIRE(M.genus == 2);
    REQUIRE(M.points_at_infinity == 2);
    auto M3 = make_even_model(qpoly({1, 1, 0, 0, 0, 0, 3}));  // y^2 = 3x^6 + x + 1
    REQUIRE(M3.genus == 2);
    REQUIRE(M3.points_at_infinity == 0);
}

TEST_CASE("inseparable right-hand sides are rejected") {
    REQUIRE_THROWS_AS(make_even_model(qpoly({0, 0, 0, 0, 1})), domain_error);  // y^2 = x^4
}

TEST_CASE("characteristic-2 models certify both charts") {
    auto one2 = fppoly(2, {1});
    // y^2 + y = x^5: genus 2, one point at infinity
    auto M = make_hyperelliptic(one2, fppoly(2, {0, 0, 0, 0, 0, 1}));
    REQUIRE(M.genus == 2);
    REQUIRE(M.points_at_infinity == 1);
    // y^2 + xy = x^3 + 1: an ordinary elliptic curve
    auto E = make_hyperelliptic(fppoly(2, {0, 1}), fppoly(2, {1, 0, 0, 1}));
    REQUIRE(E.genus == 1);
    REQUIRE(E.points_at_infinity == 1);
    // y^2 + y = x^4 + x^2 splits as two components; the closure is singular
    REQUIRE_THROWS_AS(make_hyperelliptic(one2, fppoly(2, {0, 0, 1, 0, 1})), domain_error);
    // a vanishing cross term cannot be separable in characteristic 2
    REQUIRE_THROWS_AS(make_hyperelliptic(Poly<Fp>(Fp(0, 2)), fppoly(2, {1, 1, 0, 1})),
                      domain_error);
}

TEST_CASE("characteristic-2 models over a rational function field") {
    RFElt<Fp> t = rf_var(Fp(0, 2));
    Poly<RFElt<Fp>> Qp = Poly<RFElt<Fp>>::constant(one_like(t));
    // y^2 + y = x^7 + t over GF(2)(t): genus 3, one point at infinity
    Poly<RFElt<Fp>> R =
        Poly<RFElt<Fp>>::x_power(zero_like(t), 7) + Poly<RFElt<Fp>>::constant(t);
    auto M = make_hyperelliptic(Qp, R);
    REQUIRE(M.genus == 3);
    REQUIRE(M.points_at_infinity == 1);
}

TEST_CASE("squares in a rational function field") {
    RFElt<Fp> t = rf_var(Fp(0, 5));
    REQUIRE(is_square_in(t * t));
    REQUIRE(!is_square_in(t));
    REQUIRE(is_square_in(from_int_like(t, 4) * t * t));
    REQUIRE(!is_square_in(from_int_like(t, 2) * t * t));  // 2 is not a square mod 5
    auto r = sqrt_exact(t * t * from_int_like(t, 4));
    REQUIRE(r);
    REQUIRE(*r * *r == t * t * from_int_like(t, 4));
}

// ---------------------------------------------------------------------------
// Plane cubics

TEST_CASE("smoothness certificate separates smooth from singular cubics") {
    // x^3 + y^3 + z^3 is smooth away from characteristic 3
    TernaryForm<Rat> fermat(3, Q(0));
    fermat.at(3, 0) = Q(1);
    fermat.at(0, 3) = Q(1);
    fermat.at(0, 0) = Q(1);
    REQUIRE(cubic_smooth_certified(fermat, 1));
    // y^2 z = x^3 has a cusp at (0 : 0 : 1)
    TernaryForm<Rat> cusp(3, Q(0));
    cusp.at(0, 2) = Q(1);   // y^2 z
    cusp.at(3, 0) = Q(-1);  // -x^3
    REQUIRE(!cubic_smooth_certified(cusp, 1));
    // y^2 z = x^3 + x^2 z has a node at (0 : 0 : 1)
    TernaryForm<Rat> node(3, Q(0));
    node.at(0, 2) = Q(1);
    node.at(3, 0) = Q(-1);
    node.at(2, 0) = Q(-1);
    REQUIRE(!cubic_smooth_certified(node, 1));
}

TEST_CASE("cubic reduction recovers classical j-invariants") {
    // y^2 z = x^3 - x z^2 has j = 1728
    TernaryForm<Rat> C(3, Q(0));
    C.at(0, 2) = Q(-1);  // -y^2 z
    C.at(3, 0) = Q(1);   // x^3
    C.at(1, 0) = Q(-1);  // -x z^2
    auto red = cubic_to_weierstrass(C, {Q(0), Q(1), Q(0)});
    REQUIRE(j_invariant(red.quartic) == Q(1728));
    // x^3 + y^3 + z^3 has j = 0
    TernaryForm<Rat> F(3, Q(0));
    F.at(3, 0) = Q(1);
    F.at(0, 3) = Q(1);
    F.at(0, 0) = Q(1);
    auto redf = cubic_to_weierstrass(F, {Q(1), Q(-1), Q(0)});
    REQUIRE(j_invariant(redf.quartic) == Q(0));
}

// ---------------------------------------------------------------------------
// Deterministic sampling

TEST_CASE("sampling is deterministic in the seed") {
    SampleBudget b1(42), b2(42);
    for (int i = 0; i < 20; ++i)
        REQUIRE(sample_element(Q(0), b1.rng(), b1.box()) ==
                sample_element(Q(0), b2.rng(), b2.box()));
    auto f1 = sample_monic_poly(Fp(0, 101), 5, b1.rng(), 50);
    auto f2 = sample_monic_poly(Fp(0, 101), 5, b2.rng(), 50);
    REQUIRE(f1 == f2);
    REQUIRE(f1.degree() == 5);
    REQUIRE(is_one(f1.lc()));
}

TEST_CASE("the retry budget eventually throws") {
    SampleBudget b(0, 5);
    REQUIRE_THROWS_AS(
        [&] {
            for (int i = 0; i < 10; ++i) b.note_failure("forced");
        }(),
        retries_exhausted_error);
}

// ---------------------------------------------------------------------------
// Constructors

TEST_CASE("general constructor: a degree-7 extension carries a genus-1 curve") {
    auto spec = ExtensionSpec<Rat>::single(qpoly({-2, 0, 0, 0, 0, 0, 0, 1}));  // x^7 - 2
    auto rep = construct_general(spec, 0);
    REQUIRE(rep.method == "general");
    REQUIRE(rep.genus_expected == 1);
    REQUIRE(rep.book_q == 1);
    REQUIRE(rep.book_j == 3);
    REQUIRE(rep.hyper);
    REQUIRE(rep.hyper->genus == 1);
    REQUIRE(rep.points.size() == 1);
    REQUIRE(rep.points.front().degree == 7);
    REQUIRE(rep.extra_rational_points.size() == 1);  // odd degree: (0, h(0))
    REQUIRE(rep.h);
    REQUIRE(rep.order_bound);
    REQUIRE(rep.order_bound->checked);

    // determinism: the same seed reproduces the same data
    auto rep2 = construct_general(spec, 0);
    REQUIRE(rep2.m == rep.m);
    REQUIRE(rep2.points.front().chi == rep.points.front().chi);
    REQUIRE(rep2.retries == rep.retries);

    // a different seed gives a different family member (almost surely)
    auto rep3 = construct_general(spec, 1);
    REQUIRE(rep3.m != rep.m);
}

TEST_CASE("general constructor accepts split input: eight rational points") {
    auto spec = ExtensionSpec<Rat>::single(qpoly({-5, 1}), 8);  // eight copies of x - 5
    auto rep = construct_general(spec, 0);
    REQUIRE(rep.genus_expected == 1);
    REQUIRE(rep.points.size() == 8);
    for (const auto& pt : rep.points) REQUIRE(pt.degree == 1);
    REQUIRE(rep.m.degree() == 8);
}

TEST_CASE("elementary constructor walks the cube root of 2 to y^2 = 4x^3 + 1") {
    auto rep = construct_elementary(qpoly({-2, 0, 0, 1}), 2, 0);
    REQUIRE(rep.method == "elementary");
    REQUIRE(rep.genus_expected == 1);
    REQUIRE(rep.hyper);
    // the completed curve is y^2 = 4x^3 + 1 with the point (cbrt 2, 3)
    REQUIRE(rep.hyper->R == qpoly({1, 0, 0, 4}));
    REQUIRE(rep.points.size() == 1);
    REQUIRE(rep.points.front().y_rep == qpoly({3}));
    REQUIRE(rep.order_bound);
    REQUIRE(rep.order_bound->checked);
}

TEST_CASE("power-map constructor composes a cubic unit with x^3") {
    auto rep = construct_kummer(qpoly({-1, -1, 0, 1}), 3, 0);  // x^3 - x - 1, k = 3
    REQUIRE(rep.method == "kummer");
    REQUIRE(rep.genus_expected == 1);
    REQUIRE(rep.hyper);
    // first attempt uses gamma = 1: ell = x + 1/4, curve y^2 = x^3 + 1/4
    REQUIRE(!rep.gamma);
    REQUIRE(rep.hyper->R == Poly<Rat>(std::vector<Rat>{Q(1, 4), Q(0), Q(0), Q(1)}, Q(0)));
    REQUIRE(rep.points.size() == 1);
    REQUIRE(rep.points.front().degree == 9);
    REQUIRE(rep.points.front().chi == qpoly({-1, 0, 0, -1, 0, 0, 0, 0, 0, 1}));  // x^9 - x^3 - 1
    REQUIRE(rep.extra_rational_points.size() == 1);
    REQUIRE(rep.order_bound);
}

TEST_CASE("baseline constructor reaches any genus above the threshold") {
    auto spec = ExtensionSpec<Fp>::single(fppoly(2, {1, 1, 0, 0, 1}));  // x^4 + x + 1 over GF(2)
    auto rep = construct_baseline(spec, 2, 0);
    REQUIRE(rep.method == "baseline");
    REQUIRE(rep.genus_expected == 2);
    REQUIRE(rep.hyper);
    REQUIRE(rep.hyper->genus == 2);
    REQUIRE(rep.cofactor);
    REQUIRE(rep.cofactor->degree() == 1);
    REQUIRE(rep.points.size() == 1);
    REQUIRE(rep.points.front().degree == 4);
    // genus too small for the degree
    REQUIRE_THROWS_AS(construct_baseline(spec, 1, 0), domain_error);
}

TEST_CASE("trace-zero constructor works over the rationals") {
    auto spec = ExtensionSpec<Rat>::single(qpoly({-1, -1, 0, 0, 0, 0, 0, 0, 0, 1}));  // x^9 - x - 1
    auto rep = construct_tracezero(spec, 0);
    REQUIRE(rep.method == "trace-zero");
    REQUIRE(rep.genus_expected == 2);
    REQUIRE(rep.hyper);
    REQUIRE(rep.hyper->points_at_infinity == 2);
    REQUIRE(rep.points.size() == 1);
    REQUIRE(rep.points.front().degree == 9);
    REQUIRE(rep.extra_rational_points.size() == 1);  // odd degree: (0, 0)
    // the trace of the sampled generator really is zero
    REQUIRE(is_zero(rep.m.coeff(8)));
}

TEST_CASE("trace-zero constructor works over GF(2)(t)") {
    RFElt<Fp> t = rf_var(Fp(0, 2));
    const RFElt<Fp> z = zero_like(t), o = one_like(t);
    // x^7 + x + t over GF(2)(t)
    std::vector<RFElt<Fp>> c{t, o, z, z, z, z, z, o};
    auto spec = ExtensionSpec<RFElt<Fp>>::single(Poly<RFElt<Fp>>(c, z));
    auto rep = construct_tracezero(spec, 0);
    REQUIRE(rep.genus_expected == 1);
    REQUIRE(rep.hyper);
    REQUIRE(rep.hyper->points_at_infinity == 2);
    REQUIRE(rep.points.front().degree == 7);
}

TEST_CASE("plane-cubic constructor handles a degree-9 extension") {
    auto spec = ExtensionSpec<Rat>::single(qpoly({-1, -1, 0, 0, 0, 0, 0, 0, 0, 1}));  // x^9 - x - 1
    auto rep = construct_cubic9(spec, 0);
    REQUIRE(rep.method == "cubic9");
    REQUIRE(rep.genus_expected == 1);
    REQUIRE(rep.cubic);
    REQUIRE(rep.points.size() == 1);
    REQUIRE(rep.points.front().degree == 9);
    REQUIRE(rep.order_bound);  // characteristic 0: the reduction ran
}

TEST_CASE("automatic dispatch covers the degree table") {
    // degree 2, no genus requested: four copies, total degree 8, genus 1
    auto rep2 = construct_auto(qpoly({-2, 0, 1}), std::nullopt, 0);
    REQUIRE(rep2.genus_expected == 1);
    REQUIRE(rep2.points.size() >= 4);
    // degree 3 at genus 2: padded square completion
    auto rep3 = construct_auto(qpoly({-2, 0, 0, 1}), 2, 0);
    REQUIRE(rep3.genus_expected == 2);
    REQUIRE(rep3.method == "general");
    // degree 12 at genus 1 is out of range for every recipe
    std::vector<std::int64_t> c12(13, 0);
    c12[0] = -1;
    c12[1] = -1;
    c12[12] = 1;
    REQUIRE_THROWS_AS(construct_auto(qpoly(c12), 1, 0), domain_error);
    // characteristic 2 without a requested genus goes to the trace-zero family;
    // degree 2 over GF(2) needs five distinct unit residues to pad and there is
    // only one, so the dispatcher refuses up front
    REQUIRE_THROWS_AS(construct_auto(fppoly(2, {1, 1, 1}), std::nullopt, 0), domain_error);
    // a degree-7 extension of GF(2) needs no padding and goes through
    auto repf2 = construct_auto(fppoly(2, {1, 1, 0, 0, 0, 0, 0, 1}), std::nullopt, 0);
    REQUIRE(repf2.method == "trace-zero");
    REQUIRE(repf2.genus_expected == 1);
    REQUIRE(repf2.hyper);
    REQUIRE(repf2.hyper->points_at_infinity == 2);
    REQUIRE(repf2.points.front().degree == 7);
}

TEST_CASE("constructed curves vary with the seed: distinct j-invariants") {
    auto spec = ExtensionSpec<Rat>::single(qpoly({-2, 0, 0, 0, 0, 0, 0, 1}));  // x^7 - 2
    std::set<std::string> js;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto rep = construct_general(spec, seed);
        auto rhs = completed_square_rhs(*rep.hyper);
        js.insert(to_text(j_invariant(rhs)));
    }
    REQUIRE(js.size() >= 3);
}
