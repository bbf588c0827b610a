#pragma once

// Constructors for curves carrying certified points over prescribed field
// extensions.
//
// Input is a list of extensions of the base field K, each given by a monic
// separable minimal polynomial together with a multiplicity. Every
// constructor returns a ConstructionReport: an explicit curve model, one
// reported point per requested copy (with coordinates written in K[u]/(chi)
// for an explicitly recorded modulus chi), the bookkeeping that proves the
// genus, and a deterministic record of the random seed and retry count. All
// reported points are re-verified against the curve equation by exact
// arithmetic before the report is returned.
//
// Methods:
//   construct_general   - square completion of the product of characteristic
//                         polynomials of sampled generators (char != 2).
//   construct_elementary- single extension, shifting by powers of x and an
//                         optional constant perturbation (char != 2).
//   construct_kummer    - composes a unit generator with a power map x^k,
//                         rescaling the generator by k-th powers (char != 2).
//   construct_baseline  - y^2 (+ y) = m(x) f(x) with a sampled cofactor; any
//                         characteristic, any genus >= floor(d/2).
//   construct_tracezero - trace-zero generators give models y^2 + Q y = R
//                         with two points at infinity; works in char 2.
//   construct_cubic9    - degree-9 data on a smooth plane cubic through the
//                         rational point (1:0:0).
//   construct_auto      - dispatch by degree/genus/characteristic.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cubic.hpp"
#include "decompose.hpp"
#include "ext.hpp"
#include "fq.hpp"
#include "hyper.hpp"
#include "poly.hpp"
#include "sample.hpp"
#include "util.hpp"
#include "wcurve.hpp"

namespace newpoints {

// ---------------------------------------------------------------------------
// Extension specifications

template <class K>
struct ExtensionEntry {
    Poly<K> min_poly;      // monic, separable, degree >= 1
    int multiplicity = 1;  // number of independent copies requested
};

template <class K>
struct ExtensionSpec {
    std::vector<ExtensionEntry<K>> entries;

    static ExtensionSpec single(Poly<K> mp, int mult = 1) {
        ExtensionSpec s;
        s.entries.push_back({std::move(mp), mult});
        return s;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& e : entries) d += e.min_poly.degree() * e.multiplicity;
        return d;
    }

    void validate() const {
        if (entries.empty()) throw domain_error("extension list must not be empty");
        for (const auto& e : entries) {
            if (e.min_poly.degree() < 1)
                throw domain_error("extension minimal polynomial must have degree >= 1");
            if (!is_one(e.min_poly.lc()))
                throw domain_error("extension minimal polynomial must be monic");
            if (!is_separable(e.min_poly))
                throw domain_error("extension minimal polynomial must be separable");
            if (e.multiplicity < 1) throw domain_error("extension multiplicity must be >= 1");
        }
    }
};

// Genus bookkeeping for the square-completion family: writing d = 4q + j with
// 0 <= j <= 3, the constructed curve has genus q when j = 3 and q - 1
// otherwise.
inline int genus_from_degree_table(int d) {
    int q = d / 4, j = d - 4 * q;
    return j == 3 ? q : q - 1;
}

// ---------------------------------------------------------------------------
// Report types

template <class K>
struct ReportedPoint {
    Poly<K> chi;    // modulus: the point lives in K[u]/(chi)
    Poly<K> x_rep;  // x-coordinate as a polynomial in the class of u
    Poly<K> y_rep;  // y-coordinate likewise
    int degree = 0; // deg chi
    std::string label;
};

struct OrderBoundResult {
    int bound = 0;                     // orders searched: 1..bound
    std::optional<int> torsion_order;  // set if the point has such an order
    std::string note;
    bool checked = false;
};

template <class K>
struct ConstructionReport {
    std::string method;
    std::optional<HyperellipticModel<K>> hyper;  // model y^2 + Q y = R, if hyperelliptic-type
    std::optional<PlaneCubic<K>> cubic;          // plane cubic model, if cubic
    Poly<K> m;                                   // product of the generator minimal polynomials
    std::optional<Poly<K>> h;                    // square-completion witness, when one is used
    std::optional<Poly<K>> cofactor;             // sampled cofactor (baseline method)
    std::optional<Poly<K>> gamma;                // rescaling witness (power-map method)
    std::vector<ReportedPoint<K>> points;
    std::vector<std::pair<K, K>> extra_rational_points;
    int genus_expected = 0;
    int book_q = 0, book_j = 0;  // d = 4q + j bookkeeping where applicable
    std::uint64_t seed = 0;
    int retries = 0;
    std::optional<OrderBoundResult> order_bound;
    std::vector<std::string> notes;

    explicit ConstructionReport(const K& proto) : m(proto) {}
};

// ---------------------------------------------------------------------------
// Generator sampling

namespace detail {

template <class K>
struct GeneratorSet {
    std::vector<std::shared_ptr<const ExtRing<K>>> rings;  // one per copy
    std::vector<ExtElt<K>> betas;                          // sampled generator per copy
    std::vector<Poly<K>> chis;                             // char poly of each beta
    Poly<K> m;                                             // product of the chis, separable

    explicit GeneratorSet(const K& proto) : m(proto) {}
};

// Samples one generator per requested copy. A sample beta is accepted when
// its characteristic polynomial chi is separable (so beta generates the
// algebra) and, if require_unit, chi(0) != 0. With trace_zero set, the last
// copy is shifted by a multiple of a basis power with nonzero trace so the
// traces sum to zero. The product of all chis must be separable (the betas
// are pairwise non-conjugate); otherwise everything is resampled.
template <class K>
GeneratorSet<K> sample_generators(const ExtensionSpec<K>& spec, SampleBudget& budget,
                                  bool require_unit, bool trace_zero) {
    spec.validate();
    const K proto = zero_like(spec.entries.front().min_poly.proto());

    if constexpr (std::is_same_v<K, Fp>) {
        // Distinct residues are scarce over a small prime field: each
        // degree-1 copy consumes one (a unit one when units are required),
        // so demand beyond the supply can never give a separable product.
        std::uint64_t linear_copies = 0;
        for (const auto& e : spec.entries)
            if (e.min_poly.degree() == 1)
                linear_copies += static_cast<std::uint64_t>(e.multiplicity);
        std::uint64_t supply = proto.modulus() - (require_unit ? 1u : 0u);
        if (linear_copies > supply)
            throw domain_error(
                "not enough distinct residues for the degree-1 extensions; use the "
                "finite-field census search");
    }

    std::vector<std::shared_ptr<const ExtRing<K>>> entry_rings;
    entry_rings.reserve(spec.entries.size());
    for (const auto& e : spec.entries) entry_rings.push_back(ExtRing<K>::make(e.min_poly, "a"));

    auto chi_ok = [&](const Poly<K>& chi) {
        return is_separable(chi) && (!require_unit || !is_zero(chi.coeff(0)));
    };

    for (;;) {
        GeneratorSet<K> out(proto);
        for (std::size_t ei = 0; ei < spec.entries.size(); ++ei) {
            for (int copy = 0; copy < spec.entries[ei].multiplicity; ++copy) {
                const auto& ring = entry_rings[ei];
                for (;;) {
                    ExtElt<K> beta = sample_element(ring->zero(), budget.rng(), budget.box());
                    Poly<K> chi = char_poly(beta);
                    if (!chi_ok(chi)) {
                        budget.note_failure("generator candidate rejected");
                        continue;
                    }
                    out.rings.push_back(ring);
                    out.betas.push_back(std::move(beta));
                    out.chis.push_back(std::move(chi));
                    break;
                }
            }
        }

        if (trace_zero) {
            K s = zero_like(proto);
            for (const auto& b : out.betas) s = s + trace(b);
            if (!is_zero(s)) {
                const auto& ring = out.rings.back();
                ExtElt<K> g = ring->gen();
                ExtElt<K> pw = ring->one();
                bool adjusted = false;
                for (int j = 0; j < ring->dim(); ++j) {
                    K tau = trace(pw);
                    if (!is_zero(tau)) {
                        ExtElt<K> beta2 = out.betas.back() - ring->from_base(s * inv(tau)) * pw;
                        Poly<K> chi2 = char_poly(beta2);
                        if (chi_ok(chi2)) {
                            out.betas.back() = std::move(beta2);
                            out.chis.back() = std::move(chi2);
                            adjusted = true;
                        }
                        break;  // only the first usable power; otherwise resample
                    }
                    pw = pw * g;
                }
                if (!adjusted) {
                    budget.note_failure("trace adjustment rejected");
                    continue;
                }
            }
        }

        Poly<K> m = Poly<K>::constant(one_like(proto));
        for (const auto& chi : out.chis) m = m * chi;
        if (!is_separable(m)) {
            budget.note_failure("generator product not separable");
            continue;
        }
        out.m = std::move(m);
        return out;
    }
}

// Lifts a quartic base point through a coefficient embedding.
template <class E, class K, class Lift>
QuarticBase<E> lift_base(const QuarticBase<K>& b, const E& proto, Lift&& lift) {
    using QB = QuarticBase<E>;
    switch (b.kind) {
        case QuarticBase<K>::Kind::AFFINE:
            return QB::affine(lift(b.u0), lift(b.w0));
        case QuarticBase<K>::Kind::INFINITY_BRANCH:
            return QB::infinity_branch(lift(b.lc_sqrt));
        default:
            return QB::none(proto);
    }
}

// For a genus-one model y^2 = ell(x) with a base point and a reported point
// over K[u]/(chi), maps the point to a short Weierstrass curve and searches
// for a torsion order up to `bound`. The computation runs inside K[u]/(chi);
// if chi splits and a zero divisor is hit, the check is reported as skipped
// rather than failed.
template <class K>
OrderBoundResult order_bound_with_base(const Poly<K>& ell, const QuarticBase<K>& base,
                                       const ReportedPoint<K>& pt, int bound) {
    OrderBoundResult res;
    res.bound = bound;
    try {
        auto ring = ExtRing<K>::make(pt.chi, "u");
        auto lift = [&](const K& v) { return ring->from_base(v); };
        Poly<ExtElt<K>> ellL = lift_poly(ell, ring->zero(), lift);
        GenusOneModel<ExtElt<K>> model(ellL, lift_base(base, ring->zero(), lift));
        ECPoint<ExtElt<K>> P = model.map_affine(ring->element(pt.x_rep), ring->element(pt.y_rep));
        res.torsion_order = order_of_point_up_to(model.curve(), P, bound);
        res.checked = true;
        res.note = res.torsion_order ? "the point is torsion of the recorded order"
                                     : "no torsion order up to the bound";
    } catch (const zero_divisor_error&) {
        res.note = "skipped: the coordinate algebra split during the computation";
    }
    return res;
}

// Rational coefficients: the scan runs through certified reductions first.
// Pick a prime p > 3 where the quartic, the modulus chi, the point, and the
// base data all reduce with degrees preserved and both reductions separable.
// Then the model has good reduction at every place over p (its Weierstrass
// discriminant is 16 * 27^4 times the quartic discriminant), reduction of
// points is a group homomorphism componentwise on Q[u]/(chi), and k P = O
// over the rationals forces k Pbar = Obar mod p. So "no order up to the
// bound mod p" is an exact certificate. A candidate order found mod p, or a
// degenerate reduction at every prime, falls back to the exact rational scan.
inline OrderBoundResult order_bound_with_base(const Poly<Rat>& ell, const QuarticBase<Rat>& base,
                                              const ReportedPoint<Rat>& pt, int bound) {
    constexpr std::uint64_t primes[] = {10007, 10009, 10037, 31013, 31019, 65003};
    for (std::uint64_t p : primes) {
        auto ellp = fp_poly_of_rat(ell, p);
        auto chip = fp_poly_of_rat(pt.chi, p);
        auto xp = fp_poly_of_rat(pt.x_rep, p);
        auto yp = fp_poly_of_rat(pt.y_rep, p);
        if (!ellp || !chip || !xp || !yp) continue;
        if (ellp->degree() != ell.degree() || chip->degree() != pt.chi.degree()) continue;
        if (!is_separable(*ellp) || !is_separable(*chip)) continue;
        QuarticBase<Fp> basep = QuarticBase<Fp>::none(Fp(0, p));
        if (base.kind == QuarticBase<Rat>::Kind::AFFINE) {
            auto u0 = fp_of_rat(base.u0, p);
            auto w0 = fp_of_rat(base.w0, p);
            if (!u0 || !w0) continue;
            basep = QuarticBase<Fp>::affine(*u0, *w0);
        } else if (base.kind == QuarticBase<Rat>::Kind::INFINITY_BRANCH) {
            auto r = fp_of_rat(base.lc_sqrt, p);
            if (!r) continue;
            basep = QuarticBase<Fp>::infinity_branch(*r);
        }
        try {
            auto ring = ExtRing<Fp>::make(*chip, "u");
            auto lift = [&](const Fp& v) { return ring->from_base(v); };
            Poly<ExtElt<Fp>> ellL = lift_poly(*ellp, ring->zero(), lift);
            GenusOneModel<ExtElt<Fp>> model(ellL, lift_base(basep, ring->zero(), lift));
            ECPoint<ExtElt<Fp>> P =
                model.map_affine(ring->element(*xp), ring->element(*yp));
            auto k = order_of_point_up_to(model.curve(), P, bound);
            if (!k) {
                OrderBoundResult res;
                res.bound = bound;
                res.checked = true;
                res.note = "no torsion order up to the bound (certified by reduction)";
                return res;
            }
            break;  // a candidate order appeared: confirm it exactly below
        } catch (const zero_divisor_error&) {
            continue;  // the reduced algebra split under the arithmetic
        } catch (const domain_error&) {
            continue;  // the reduced model degenerated
        }
    }
    return order_bound_with_base<Rat>(ell, base, pt, bound);
}

// Convenience wrapper constructing the base point of a degree-4 model from a
// supplied affine point, or from a square leading coefficient; the check is
// skipped when neither is available.
template <class K>
OrderBoundResult order_bound_on_quartic(const Poly<K>& ell,
                                        const std::optional<std::pair<K, K>>& rational_affine,
                                        const ReportedPoint<K>& pt, int bound) {
    OrderBoundResult res;
    res.bound = bound;
    if (bound < 1) {
        res.note = "skipped: bound not positive";
        return res;
    }
    QuarticBase<K> base = QuarticBase<K>::none(ell.proto());
    if (ell.degree() == 4) {
        if (rational_affine) {
            base = QuarticBase<K>::affine(rational_affine->first, rational_affine->second);
        } else if (auto r = sqrt_exact(ell.lc())) {
            base = QuarticBase<K>::infinity_branch(*r);
        } else {
            res.note = "skipped: no rational base point on the degree-4 model";
            return res;
        }
    }
    return order_bound_with_base(ell, base, pt, bound);
}

// Re-verifies every reported point by exact arithmetic in K[u]/(chi).
template <class K, class Residual>
void verify_points(const std::vector<ReportedPoint<K>>& pts, Residual&& residual) {
    for (const auto& pt : pts) {
        auto ring = ExtRing<K>::make(pt.chi, "u");
        ExtElt<K> X = ring->element(pt.x_rep);
        ExtElt<K> Y = ring->element(pt.y_rep);
        if (!is_zero(residual(ring, X, Y)))
            throw domain_error("internal check failed: a reported point is off the curve");
        if (pt.degree != pt.chi.degree())
            throw domain_error("internal check failed: reported degree mismatch");
    }
}

template <class K>
void verify_on_hyper(const HyperellipticModel<K>& M, const std::vector<ReportedPoint<K>>& pts,
                     const std::vector<std::pair<K, K>>& rational) {
    verify_points(pts, [&](const std::shared_ptr<const ExtRing<K>>& ring, const ExtElt<K>& X,
                           const ExtElt<K>& Y) {
        auto lift = [&](const K& v) { return ring->from_base(v); };
        return Y * Y + eval_lifted(M.Q, X, lift) * Y - eval_lifted(M.R, X, lift);
    });
    for (const auto& pr : rational)
        if (!on_model(M, pr.first, pr.second))
            throw domain_error("internal check failed: a rational point is off the curve");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// General square-completion constructor (char != 2, total degree >= 7)

template <class K>
ConstructionReport<K> construct_general(const ExtensionSpec<K>& spec, std::uint64_t seed,
                                        int order_bound = 12, int max_retries = 10000) {
    spec.validate();
    const K proto = zero_like(spec.entries.front().min_poly.proto());
    if (char_of(proto) == 2)
        throw domain_error(
            "square completion needs characteristic != 2; use the trace-zero constructor");
    if constexpr (std::is_same_v<K, Fp>) {
        if (proto.modulus() == 3)
            throw domain_error("base field too small for rejection sampling; "
                               "use the finite-field census search");
    }
    int d = spec.total_degree();
    if (d < 7)
        throw domain_error("total degree must be at least 7; pad with degree-1 extensions");
    int n = (d - 1) / 2;
    int genus_exp = genus_from_degree_table(d);

    SampleBudget budget(seed, max_retries);
    for (;;) {
        auto gens = detail::sample_generators(spec, budget, /*require_unit=*/false,
                                              /*trace_zero=*/false);
        SquareCompletion<K> sc = (d % 2 == 0) ? approx_sqrt(gens.m) : odd_decompose(gens.m);
        if (sc.ell.degree() != n || !is_separable(sc.ell)) {
            budget.note_failure("square completion degenerate");
            continue;
        }

        ConstructionReport<K> rep(proto);
        rep.method = "general";
        rep.m = gens.m;
        rep.h = sc.h;
        rep.seed = seed;
        rep.book_q = d / 4;
        rep.book_j = d - 4 * rep.book_q;
        rep.genus_expected = genus_exp;
        rep.hyper = make_even_model(sc.ell);
        if (rep.hyper->genus != genus_exp)
            throw domain_error("internal check failed: genus bookkeeping mismatch");

        for (const auto& chi : gens.chis)
            rep.points.push_back({chi, Poly<K>::x_power(proto, 1), sc.h % chi, chi.degree(),
                                  "square-completion point"});
        if (d % 2 == 1)
            rep.extra_rational_points.push_back({zero_like(proto), eval(sc.h, zero_like(proto))});
        rep.retries = budget.attempts();
        rep.notes.push_back("curve: y^2 = " + poly_text(sc.ell, "x"));
        rep.notes.push_back("points at infinity: " +
                            std::to_string(rep.hyper->points_at_infinity));

        detail::verify_on_hyper(*rep.hyper, rep.points, rep.extra_rational_points);

        if (genus_exp == 1) {
            std::optional<std::pair<K, K>> aff;
            if (d % 2 == 1) aff = rep.extra_rational_points.front();
            rep.order_bound =
                detail::order_bound_on_quartic(sc.ell, aff, rep.points.front(), order_bound);
        }
        return rep;
    }
}

// ---------------------------------------------------------------------------
// Elementary single-extension constructor (char != 2)

template <class K>
ConstructionReport<K> construct_elementary(const Poly<K>& min_poly, int n, std::uint64_t seed,
                                           int order_bound = 12) {
    const K proto = zero_like(min_poly.proto());
    if (char_of(proto) == 2)
        throw domain_error("square completion needs characteristic != 2");
    if (min_poly.degree() < 2)
        throw domain_error("a degree-1 extension is trivial; nothing to construct");
    if (!is_one(min_poly.lc())) throw domain_error("minimal polynomial must be monic");
    if (!is_separable(min_poly)) throw domain_error("minimal polynomial must be separable");

    int d = min_poly.degree();
    int start = std::max(n, (d + 1) / 2);
    if (start < 1) start = 1;
    const K two = from_int_like(proto, 2);

    for (int ncur = start; ncur <= start + 4; ++ncur) {
        Poly<K> f = shift_up(min_poly, 2 * ncur - d);
        SquareCompletion<K> sc = approx_sqrt(f);
        if (sc.ell.is_zero()) continue;  // f is a perfect square: no curve from this shift

        auto finish = [&](const Poly<K>& ell, const Poly<K>& y_rep, const std::string& extra_note)
            -> ConstructionReport<K> {
            ConstructionReport<K> rep(proto);
            rep.method = "elementary";
            rep.m = f;
            rep.h = sc.h;
            rep.seed = seed;
            rep.hyper = make_even_model(ell);
            rep.genus_expected = rep.hyper->genus;
            rep.points.push_back({min_poly, Poly<K>::x_power(proto, 1), y_rep % min_poly,
                                  min_poly.degree(), "elementary point"});
            rep.notes.push_back("curve: y^2 = " + poly_text(ell, "x"));
            if (!extra_note.empty()) rep.notes.push_back(extra_note);
            detail::verify_on_hyper(*rep.hyper, rep.points, rep.extra_rational_points);
            if (rep.genus_expected == 1)
                rep.order_bound = detail::order_bound_on_quartic(
                    ell, std::optional<std::pair<K, K>>{}, rep.points.front(), order_bound);
            return rep;
        };

        if (sc.ell.degree() >= 3 && is_separable(sc.ell))
            return finish(sc.ell, sc.h, "");

        if (ncur >= 3) {
            for (int k = 1; k <= 200; ++k) {
                K c = two * from_int_like(proto, k) * from_int_like(proto, k);
                if (is_zero(c)) continue;  // characteristic divides 2k^2
                Poly<K> g = sc.ell + (two * c) * sc.h + Poly<K>::constant(c * c);
                if (g.degree() != ncur || !is_separable(g)) continue;
                return finish(g, sc.h + Poly<K>::constant(c),
                              "perturbation constant: " + to_text(c));
            }
        }
    }
    throw retries_exhausted_error("no admissible square completion in the degree window");
}

// ---------------------------------------------------------------------------
// Power-map constructor: beta a unit generator of degree e, composed with
// x^k. Rescales beta by k-th powers until the square completion of its
// characteristic polynomial is generic (char != 2, char does not divide k).

template <class K>
ConstructionReport<K> construct_kummer(const Poly<K>& m0, int k, std::uint64_t seed,
                                       int order_bound = 12, int max_retries = 10000) {
    const K proto = zero_like(m0.proto());
    std::uint64_t p = char_of(proto);
    if (p == 2) throw domain_error("square completion needs characteristic != 2");
    if (k < 2) throw domain_error("the power-map exponent must be at least 2");
    if (p != 0 && static_cast<std::uint64_t>(k) % p == 0)
        throw domain_error("the characteristic must not divide the power-map exponent");
    if (!is_one(m0.lc())) throw domain_error("minimal polynomial must be monic");
    if (!is_separable(m0)) throw domain_error("minimal polynomial must be separable");
    int e = m0.degree();
    if (e < 3) throw domain_error("the base generator must have degree at least 3");
    if (is_zero(m0.coeff(0)))
        throw domain_error("the base generator must be a unit (nonzero constant term)");
    int d = k * e;
    if (d < 9) throw domain_error("total degree k*e must be at least 9");

    auto ring = ExtRing<K>::make(m0, "b");
    SampleBudget budget(seed, max_retries);
    ExtElt<K> beta = ring->gen();
    std::optional<Poly<K>> gamma_rep;  // first attempt uses gamma = 1

    for (;;) {
        Poly<K> m0p = char_poly(beta);
        if (m0p.degree() == e && is_separable(m0p) && !is_zero(m0p.coeff(0))) {
            Poly<K> F = (e % 2 == 1) ? shift_up(m0p, 1) : m0p;
            SquareCompletion<K> sc = approx_sqrt(F);
            int n = F.degree() / 2 - 1;
            if (sc.ell.degree() == n && is_separable(sc.ell) &&
                !is_zero(sc.ell.coeff(0))) {
                Poly<K> xk = Poly<K>::x_power(proto, static_cast<std::size_t>(k));
                Poly<K> ellk = compose(sc.ell, xk);
                Poly<K> chi = compose(m0p, xk);

                ConstructionReport<K> rep(proto);
                rep.method = "kummer";
                rep.m = m0p;
                rep.h = sc.h;
                rep.gamma = gamma_rep;
                rep.seed = seed;
                rep.retries = budget.attempts();
                rep.hyper = make_even_model(ellk);
                rep.genus_expected = rep.hyper->genus;
                rep.points.push_back({chi, Poly<K>::x_power(proto, 1), compose(sc.h, xk) % chi,
                                      chi.degree(), "power-map point"});
                if (e % 2 == 1)
                    rep.extra_rational_points.push_back(
                        {zero_like(proto), eval(sc.h, zero_like(proto))});
                rep.notes.push_back("curve: y^2 = " + poly_text(ellk, "x"));
                if (sc.ell.degree() == 1)
                    rep.notes.push_back(
                        "degenerate shape y^2 = a x^k + b: members are twists of one another");
                detail::verify_on_hyper(*rep.hyper, rep.points, rep.extra_rational_points);
                if (rep.genus_expected == 1) {
                    std::optional<std::pair<K, K>> aff;
                    if (!rep.extra_rational_points.empty())
                        aff = rep.extra_rational_points.front();
                    rep.order_bound = detail::order_bound_on_quartic(
                        ellk, aff, rep.points.front(), order_bound);
                }
                return rep;
            }
        }
        // rescale: beta := gamma^k * (original generator)
        for (;;) {
            ExtElt<K> g = sample_element(ring->zero(), budget.rng(), budget.box());
            if (is_zero(g)) {
                budget.note_failure("rescale candidate rejected");
                continue;
            }
            beta = ring->gen() * elt_pow(g, Int(k));
            gamma_rep = g.rep();
            budget.note_failure("rescale applied");
            break;
        }
    }
}

// ---------------------------------------------------------------------------
// Baseline constructor: y^2 (+ y in char 2) = m(x) f(x) with a sampled
// separable cofactor f coprime to m. Works in any characteristic, for any
// genus g with 2g + 1 >= d. The reported points have y = 0.

template <class K>
ConstructionReport<K> construct_baseline(const ExtensionSpec<K>& spec, int g, std::uint64_t seed,
                                         int max_retries = 10000) {
    spec.validate();
    const K proto = zero_like(spec.entries.front().min_poly.proto());

    std::vector<Poly<K>> uniq;
    for (const auto& e : spec.entries) {
        bool seen = false;
        for (const auto& u : uniq) seen = seen || u == e.min_poly;
        if (!seen) uniq.push_back(e.min_poly);
    }
    Poly<K> m = Poly<K>::constant(one_like(proto));
    for (const auto& u : uniq) m = m * u;
    if (!is_separable(m))
        throw domain_error("distinct extensions share a common factor");
    int d = m.degree();
    int degf = 2 * g + 1 - d;
    if (degf < 0)
        throw domain_error("genus too small: need 2g + 1 >= total degree after deduplication");

    SampleBudget budget(seed, max_retries);
    for (;;) {
        Poly<K> f = sample_monic_poly(proto, degf, budget.rng(), budget.box());
        if (!is_separable(f) || gcd(f, m).degree() != 0) {
            budget.note_failure("cofactor rejected");
            continue;
        }
        Poly<K> rhs = m * f;
        ConstructionReport<K> rep(proto);
        rep.method = "baseline";
        rep.m = m;
        rep.cofactor = f;
        rep.seed = seed;
        try {
            if (char_of(proto) == 2)
                rep.hyper = make_hyperelliptic(Poly<K>::constant(one_like(proto)), rhs);
            else
                rep.hyper = make_even_model(rhs);
        } catch (const domain_error&) {
            budget.note_failure("model rejected");
            continue;
        }
        if (rep.hyper->genus != g)
            throw domain_error("internal check failed: genus bookkeeping mismatch");
        rep.genus_expected = g;
        rep.retries = budget.attempts();
        for (const auto& u : uniq)
            rep.points.push_back(
                {u, Poly<K>::x_power(proto, 1), Poly<K>(proto), u.degree(), "vanishing point"});
        rep.notes.push_back("curve: y^2 " + std::string(char_of(proto) == 2 ? "+ y " : "") +
                            "= " + poly_text(rhs, "x"));
        detail::verify_on_hyper(*rep.hyper, rep.points, rep.extra_rational_points);
        return rep;
    }
}

// ---------------------------------------------------------------------------
// Trace-zero constructor: generators with zero trace sum give a model
// y^2 + Q(x) y = R(x) whose points (beta, beta^n) are certified directly.
// Works in every characteristic (including 2); genus (d - 5) / 2 rounded
// down, with two rational points at infinity.

template <class K>
ConstructionReport<K> construct_tracezero(const ExtensionSpec<K>& spec, std::uint64_t seed,
                                          int max_retries = 10000) {
    spec.validate();
    const K proto = zero_like(spec.entries.front().min_poly.proto());
    int d = spec.total_degree();
    if (d < 7)
        throw domain_error("total degree must be at least 7; pad with degree-1 extensions");

    SampleBudget budget(seed, max_retries);
    for (;;) {
        auto gens = detail::sample_generators(spec, budget, /*require_unit=*/true,
                                              /*trace_zero=*/true);
        Poly<K> work = (d % 2 == 1) ? shift_up(gens.m, 1) : gens.m;
        int n2 = work.degree();
        int n = n2 / 2;
        if (!is_zero(work.coeff(static_cast<std::size_t>(n2 - 1))))
            throw domain_error("internal check failed: trace-zero coefficient persists");
        if (is_zero(work.coeff(static_cast<std::size_t>(n2 - 2))) ||
            is_zero(work.coeff(static_cast<std::size_t>(n - 1)))) {
            budget.note_failure("degree bookkeeping rejected the sample");
            continue;
        }

        std::vector<K> qc, rc;
        for (int kk = n; kk <= n2 - 2; ++kk)
            qc.push_back(work.coeff(static_cast<std::size_t>(kk)));
        for (int kk = 0; kk <= n - 1; ++kk)
            rc.push_back(-work.coeff(static_cast<std::size_t>(kk)));
        Poly<K> Q(qc, proto), R(rc, proto);

        ConstructionReport<K> rep(proto);
        rep.method = "trace-zero";
        rep.m = gens.m;
        rep.seed = seed;
        try {
            rep.hyper = make_hyperelliptic(Q, R);
        } catch (const domain_error&) {
            budget.note_failure("model rejected");
            continue;
        }
        if (rep.hyper->genus != (d - 5) / 2)
            throw domain_error("internal check failed: genus bookkeeping mismatch");
        if (rep.hyper->points_at_infinity != 2)
            throw domain_error("internal check failed: expected two points at infinity");
        rep.genus_expected = rep.hyper->genus;
        rep.retries = budget.attempts();
        Poly<K> yn = Poly<K>::x_power(proto, static_cast<std::size_t>(n));
        for (const auto& chi : gens.chis)
            rep.points.push_back(
                {chi, Poly<K>::x_power(proto, 1), yn % chi, chi.degree(), "trace-zero point"});
        if (d % 2 == 1)
            rep.extra_rational_points.push_back({zero_like(proto), zero_like(proto)});
        rep.notes.push_back("curve: y^2 + (" + poly_text(Q, "x") + ") y = " + poly_text(R, "x"));
        rep.notes.push_back("points at infinity: 2");
        detail::verify_on_hyper(*rep.hyper, rep.points, rep.extra_rational_points);
        return rep;
    }
}

// ---------------------------------------------------------------------------
// Degree-9 plane cubic constructor: trace-zero unit generators of total
// degree 9 give a smooth plane cubic through (1:0:0) with the points
// (beta^-2 : beta^-3 : 1). Genus 1 in every characteristic.

template <class K>
ConstructionReport<K> construct_cubic9(const ExtensionSpec<K>& spec, std::uint64_t seed,
                                       int order_bound = 12, int max_retries = 10000) {
    spec.validate();
    const K proto = zero_like(spec.entries.front().min_poly.proto());
    if (spec.total_degree() != 9)
        throw domain_error("the plane-cubic constructor needs total degree exactly 9");

    SampleBudget budget(seed, max_retries);
    for (;;) {
        auto gens = detail::sample_generators(spec, budget, /*require_unit=*/true,
                                              /*trace_zero=*/true);
        std::array<K, 8> a{zero_like(proto), zero_like(proto), zero_like(proto),
                           zero_like(proto), zero_like(proto), zero_like(proto),
                           zero_like(proto), zero_like(proto)};
        for (int i = 0; i < 8; ++i) a[static_cast<std::size_t>(i)] =
            gens.m.coeff(static_cast<std::size_t>(i));
        if (!is_zero(gens.m.coeff(8)))
            throw domain_error("internal check failed: trace-zero coefficient persists");
        if (is_zero(a[2]) && is_zero(a[5])) {
            budget.note_failure("cubic would be singular at the rational point");
            continue;
        }
        PlaneCubic<K> cubic = PlaneCubic<K>::from_named(a);
        bool smooth = false;
        try {
            smooth = cubic_smooth_certified(cubic, budget.rng().next());
        } catch (const retries_exhausted_error&) {
            smooth = false;
        }
        if (!smooth) {
            budget.note_failure("smoothness certificate not obtained");
            continue;
        }

        ConstructionReport<K> rep(proto);
        rep.method = "cubic9";
        rep.m = gens.m;
        rep.cubic = cubic;
        rep.seed = seed;
        rep.genus_expected = 1;
        rep.retries = budget.attempts();

        for (const auto& chi : gens.chis) {
            auto ring = ExtRing<K>::make(chi, "u");
            ExtElt<K> u = ring->gen();
            ExtElt<K> u2i = inv(u * u);
            ExtElt<K> u3i = u2i * inv(u);
            rep.points.push_back({chi, u2i.rep(), u3i.rep(), chi.degree(), "plane-cubic point"});
        }
        rep.notes.push_back("cubic passes through the rational point (1 : 0 : 0)");
        detail::verify_points(rep.points,
                              [&](const std::shared_ptr<const ExtRing<K>>& ring,
                                  const ExtElt<K>& X, const ExtElt<K>& Y) {
                                  auto lift = [&](const K& v) { return ring->from_base(v); };
                                  return cubic.form.eval_lifted(X, Y, ring->one(), lift);
                              });

        std::uint64_t p = char_of(proto);
        if (p != 2 && p != 3) {
            CubicReduction<K> red = cubic_to_weierstrass(
                cubic, {one_like(proto), zero_like(proto), zero_like(proto)});
            rep.notes.push_back("reduces to y^2 = " + poly_text(red.quartic, "x"));
            OrderBoundResult ob;
            ob.bound = order_bound;
            try {
                const auto& pt = rep.points.front();
                auto ring = ExtRing<K>::make(pt.chi, "u");
                auto lift = [&](const K& v) { return ring->from_base(v); };
                auto uw = cubic_point_to_quartic(red, ring->element(pt.x_rep),
                                                 ring->element(pt.y_rep), ring->one(), lift);
                ReportedPoint<K> img{pt.chi, uw.first.rep(), uw.second.rep(), pt.chi.degree(),
                                     "quartic image"};
                ob = detail::order_bound_with_base(red.quartic, red.base, img, order_bound);
            } catch (const zero_divisor_error&) {
                ob.note = "skipped: the coordinate algebra split during the computation";
            } catch (const domain_error&) {
                ob.note = "skipped: the point lies on the excluded fiber of the reduction";
            }
            rep.order_bound = ob;
        } else {
            rep.notes.push_back("Weierstrass reduction unavailable in characteristic 2 and 3");
        }
        return rep;
    }
}

// ---------------------------------------------------------------------------
// Automatic dispatch

template <class K>
ConstructionReport<K> construct_auto(const Poly<K>& L, std::optional<int> genus,
                                     std::uint64_t seed, int order_bound = 12,
                                     std::optional<Poly<K>> subfield_hint = std::nullopt,
                                     int max_retries = 10000) {
    const K proto = zero_like(L.proto());
    if (L.degree() < 1) throw domain_error("minimal polynomial must have degree >= 1");
    if (!is_one(L.lc())) throw domain_error("minimal polynomial must be monic");
    if (!is_separable(L)) throw domain_error("minimal polynomial must be separable");
    int d = L.degree();
    std::uint64_t p = char_of(proto);

    auto padded = [&](int mult, int target_degree) {
        ExtensionSpec<K> s = ExtensionSpec<K>::single(L, mult);
        int pad = target_degree - d * mult;
        if (pad > 0) s.entries.push_back({Poly<K>::x_power(proto, 1), pad});
        return s;
    };
    auto note_dispatch = [&](ConstructionReport<K> rep, const std::string& how) {
        rep.notes.push_back("dispatched automatically: " + how);
        return rep;
    };

    if (p == 2) {
        if (!genus) {
            if (d == 9)
                return note_dispatch(
                    construct_cubic9(ExtensionSpec<K>::single(L), seed, order_bound, max_retries),
                    "degree 9 in characteristic 2 goes to the plane cubic");
            int D = std::max(d, 7);
            return note_dispatch(construct_tracezero(padded(1, D), seed, max_retries),
                                 "characteristic 2 goes to the trace-zero family");
        }
        int g = *genus;
        for (int D : {2 * g + 5, 2 * g + 6})
            if (D >= std::max(d, 7))
                return note_dispatch(construct_tracezero(padded(1, D), seed, max_retries),
                                     "trace-zero family padded to total degree " +
                                         std::to_string(D));
        if (2 * g + 1 >= d)
            return note_dispatch(construct_baseline(ExtensionSpec<K>::single(L), g, seed,
                                                    max_retries),
                                 "baseline family at the requested genus");
        throw domain_error("no construction covers this degree/genus pair in characteristic 2");
    }

    if (genus) {
        int g = *genus;
        int lo = std::max(d, 7);
        for (int D : {4 * g + 3, 4 * g + 4, 4 * g + 5, 4 * g + 6})
            if (D >= lo)
                return note_dispatch(
                    construct_general(padded(1, D), seed, order_bound, max_retries),
                    "square-completion family padded to total degree " + std::to_string(D));
        throw domain_error(
            "no construction covers this degree/genus pair; the requested genus is too small");
    }

    if (d == 10 && subfield_hint && subfield_hint->degree() == 5)
        return note_dispatch(construct_kummer(*subfield_hint, 2, seed, order_bound, max_retries),
                             "degree 10 with a degree-5 subfield goes through the power map");

    if (d <= 10) {
        int mult = 1, target = d;
        switch (d) {
            case 1: mult = 8; target = 8; break;
            case 2: mult = 4; target = 8; break;
            case 3: mult = 3; target = 9; break;
            case 4: mult = 2; target = 8; break;
            case 5: mult = 2; target = 10; break;
            case 6: mult = 1; target = 7; break;
            default: mult = 1; target = d; break;  // 7..10
        }
        return note_dispatch(
            construct_general(padded(mult, target), seed, order_bound, max_retries),
            "square-completion family with " + std::to_string(mult) + " copies, total degree " +
                std::to_string(target));
    }

    int g = (d - 6 + 3) / 4;  // smallest genus whose degree window reaches d
    for (int D : {4 * g + 3, 4 * g + 4, 4 * g + 5, 4 * g + 6})
        if (D >= d)
            return note_dispatch(construct_general(padded(1, D), seed, order_bound, max_retries),
                                 "square-completion family at the minimal covering genus " +
                                     std::to_string(g));
    throw domain_error("internal check failed: the degree window missed its target");
}

}  // namespace newpoints
