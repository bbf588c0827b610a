#pragma once

// Exact point bookkeeping for curves y^2 + Q(x) y = R(x) over prime fields:
// point counts over extension fields, the Moebius census of new points (points
// of exact degree d, equivalently closed points of degree d counted with
// their d conjugates), Weil-bound feasibility certificates computed entirely
// in integer arithmetic, brute-force searches for curves carrying a new point
// of prescribed degree, and a parity predictor for new points on quotients of
// Kummer-type curves governed by the splitting of x^ell - 1 modulo p.

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ext.hpp"
#include "fq.hpp"
#include "hyper.hpp"
#include "poly.hpp"
#include "util.hpp"

namespace newpoints {

inline int mobius(int n) {
    if (n < 1) throw domain_error("mobius is defined for positive integers");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

namespace detail {

// The y-values over a given x on y^2 + Q y = R, over the field of x.
// Characteristic 2 solves the Artin-Schreier equation z^2 + z = w through the
// F_2-linear map z -> z^2 + z on flat coordinates.
template <class F>
std::vector<F> fiber_over_x(const Poly<F>& Q, const Poly<F>& R, const F& x) {
    const std::uint64_t p = char_of(x);
    std::vector<F> ys;
    if (p != 2) {
        const F half = inv(from_int_like(x, 2));
        F qx = eval(Q, x);
        F fx = eval(R, x) + qx * qx * half * half;
        auto s = sqrt_exact(fx);
        if (!s) return ys;
        ys.push_back(*s - qx * half);
        if (!is_zero(*s)) ys.push_back(zero_like(x) - *s - qx * half);
        return ys;
    }
    F qx = eval(Q, x);
    F rx = eval(R, x);
    if (is_zero(qx)) {
        auto s = sqrt_exact(rx);  // Frobenius is bijective: always present
        if (s) ys.push_back(*s);
        return ys;
    }
    // y = qx z with z^2 + z = rx / qx^2.
    F w = rx * inv(qx * qx);
    if constexpr (std::is_same_v<F, Fp>) {
        // Over F_2 itself z^2 + z vanishes identically, so solutions exist
        // exactly when w = 0, and then z ranges over {0, 1}.
        if (is_zero(w)) {
            ys.push_back(zero_like(x));
            ys.push_back(qx);
        }
        return ys;
    } else {
    const std::size_t n = flat_dim(x);
    std::vector<F> basis;
    {
        // flat basis elements b with coordinates e_i, realized through the
        // tower: powers of the generator work because flat_coords of gen^i
        // enumerate the standard basis for a single-level tower.
        F g = one_like(x);
        auto ring = x.ring();
        for (std::size_t i = 0; i < n; ++i) {
            basis.push_back(g);
            g = g * ring->gen();
        }
    }
    // Solve sum c_i L(b_i) = w over F_2 with L(z) = z^2 + z.
    std::vector<std::vector<Fp>> cols;
    for (const F& b : basis) {
        std::vector<Fp> col;
        flat_coords(b * b + b, col);
        cols.push_back(std::move(col));
    }
    std::vector<Fp> rhs;
    flat_coords(w, rhs);
    // Gaussian elimination, keeping the solution.
    std::vector<std::vector<Fp>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i].push_back(cols[j][i]);
        rows[i].push_back(rhs[i]);
    }
    std::vector<int> pivot_col(n, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && is_zero(rows[piv][c])) ++piv;
        if (piv == n) continue;
        std::swap(rows[piv], rows[r]);
        Fp ip = inv(rows[r][c]);
        for (std::size_t j = c; j <= n; ++j) rows[r][j] = rows[r][j] * ip;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || is_zero(rows[i][c])) continue;
            Fp f = rows[i][c];
            for (std::size_t j = c; j <= n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_col[r] = static_cast<int>(c);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (!is_zero(rows[i][n])) return ys;  // no solution: trace(w) != 0
    F z = zero_like(x);
    for (std::size_t i = 0; i < r; ++i)
        if (!is_zero(rows[i][n])) z = z + basis[static_cast<std::size_t>(pivot_col[i])];
    ys.push_back(qx * z);
    ys.push_back(qx * (z + one_like(x)));
    return ys;
    }
}

// Affine count plus points at infinity of the weight-w closure, over the
// field of the supplied element list.
template <class F>
Int count_points_lifted(const Poly<F>& Q, const Poly<F>& R, int w, const std::vector<F>& xs) {
    const std::uint64_t p = char_of(Q.proto());
    Int n(0);
    if (p != 2) {
        const F quarter = inv(from_int_like(Q.proto(), 4));
        Poly<F> f = R + Q * Q * Poly<F>::constant(quarter);
        for (const F& x : xs) {
            F v = eval(f, x);
            if (is_zero(v))
                n += 1;
            else if (is_square_in(v))
                n += 2;
        }
        F a = cof(f, 2 * w);
        if (is_zero(a))
            n += 1;
        else if (is_square_in(a))
            n += 2;
        return n;
    }
    for (const F& x : xs) {
        F qx = eval(Q, x);
        if (is_zero(qx)) {
            n += 1;  // y^2 = R(x) has exactly one root
            continue;
        }
        F t = eval(R, x) * inv(qx * qx);
        if (trace_to_f2(t) == 0) n += 2;
    }
    F a = cof(Q, w);
    F b = cof(R, 2 * w);
    if (is_zero(a))
        n += 1;
    else if (trace_to_f2(b * inv(a * a)) == 0)
        n += 2;
    return n;
}

}  // namespace detail

// Number of points of the smooth closure over F_{p^e}. The model must be
// given over a prime field F_p; the closure is the weighted projective one
// recorded by the model (weight w, so infinity contributes by the top
// coefficients at x-degree w and 2w).
inline Int count_points(const HyperellipticModel<Fp>& m, int e, std::size_t cap = (1u << 24)) {
    if (e < 1) throw domain_error("extension degree must be >= 1");
    const std::uint64_t p = char_of(m.Q.proto());
    Int size(1);
    for (int i = 0; i < e; ++i) {
        size *= static_cast<unsigned long>(p);
        if (size > static_cast<unsigned long>(cap))
            throw domain_error("field too large for point counting; raise the cap knowingly");
    }
    if (e == 1) {
        std::vector<Fp> xs;
        xs.reserve(p);
        for (std::uint64_t v = 0; v < p; ++v) xs.emplace_back(v, p);
        return detail::count_points_lifted(m.Q, m.R, m.weight, xs);
    }
    auto ring = make_fq(p, static_cast<unsigned>(e));
    auto lift = [&](const Fp& v) { return ring->from_base(v); };
    Poly<ExtElt<Fp>> ql = lift_poly(m.Q, ring->zero(), lift);
    Poly<ExtElt<Fp>> rl = lift_poly(m.R, ring->zero(), lift);
    auto xs = all_field_elements(ring, cap);
    return detail::count_points_lifted(ql, rl, m.weight, xs);
}

// ---------------------------------------------------------------------------
// Moebius census of points of exact degree d

struct CensusReport {
    std::uint64_t q = 0;  // base field size (prime)
    int d = 0;
    int genus = 0;
    std::vector<std::pair<int, Int>> counts;      // (e, N_e) for each e | d
    Int new_point_count{0};                       // sum_{e | d} mu(d/e) N_e
    Int closed_point_count{0};                    // new_point_count / d
    std::vector<std::pair<int, Int>> weil_slack;  // (e, 4 g^2 q^e - (N_e - q^e - 1)^2)
};

inline CensusReport new_point_census(const HyperellipticModel<Fp>& m, int d,
                                     std::size_t cap = (1u << 24)) {
    if (d < 1) throw domain_error("census degree must be >= 1");
    CensusReport rep;
    rep.q = char_of(m.Q.proto());
    rep.d = d;
    rep.genus = m.genus;
    Int nnew(0);
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        Int ne = count_points(m, e, cap);
        rep.counts.emplace_back(e, ne);
        nnew += Int(mobius(d / e)) * ne;
        Int qe(1);
        for (int i = 0; i < e; ++i) qe *= static_cast<unsigned long>(rep.q);
        Int dev = ne - qe - 1;
        rep.weil_slack.emplace_back(e, Int(4 * m.genus * m.genus) * qe - dev * dev);
    }
    if (nnew < 0) throw domain_error("census internal error: negative new-point count");
    if (nnew % d != 0)
        throw domain_error("census internal error: new-point count not divisible by the degree");
    rep.new_point_count = nnew;
    rep.closed_point_count = nnew / d;
    return rep;
}

// ---------------------------------------------------------------------------
// Exact Weil feasibility: when is every genus-g curve over F_q guaranteed a
// point of exact degree d? Sufficient criterion comparing the Weil lower
// bound for N_d against upper bounds for the maximal proper subfields, kept
// as an exact comparison A > C*sqrt(q) in integers.

enum class WeilFeasibility { GUARANTEED, UNKNOWN };

inline const char* weil_feasibility_text(WeilFeasibility f) {
    return f == WeilFeasibility::GUARANTEED ? "guaranteed" : "unknown";
}

inline WeilFeasibility weil_feasibility(std::uint64_t q, int g, int d) {
    if (q < 2 || g < 0 || d < 1) throw domain_error("weil_feasibility: bad parameters");
    auto qpow = [&](int k) {
        Int r(1);
        for (int i = 0; i < k; ++i) r *= static_cast<unsigned long>(q);
        return r;
    };
    std::vector<int> primes;
    int n = d;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) primes.push_back(n);

    const Int twog = Int(2 * g);
    Int a = qpow(d) + 1;
    Int c(0);
    if (d % 2 == 0)
        a -= twog * qpow(d / 2);
    else
        c += twog * qpow((d - 1) / 2);
    for (int p : primes) {
        int k = d / p;
        a -= qpow(k) + 1;
        if (k % 2 == 0)
            a -= twog * qpow(k / 2);
        else
            c += twog * qpow((k - 1) / 2);
    }

    Int root = sqrt(Int(static_cast<unsigned long>(q)));
    if (root * root == static_cast<unsigned long>(q))
        return a > c * root ? WeilFeasibility::GUARANTEED : WeilFeasibility::UNKNOWN;
    if (a <= 0) return WeilFeasibility::UNKNOWN;
    if (c == 0) return WeilFeasibility::GUARANTEED;
    return a * a > c * c * static_cast<unsigned long>(q) ? WeilFeasibility::GUARANTEED
                                                         : WeilFeasibility::UNKNOWN;
}

// ---------------------------------------------------------------------------
// Search for a curve over F_p with a new point of exact degree d

enum class SearchStrategy { EXHAUSTIVE, RANDOM };

struct CurveSearchResult {
    HyperellipticModel<Fp> model;
    CensusReport census;
    Poly<Fp> field_modulus;  // modulus of the F_{p^d} in which the witness lives
    Poly<Fp> x_rep, y_rep;   // affine witness with lcm(deg x, deg y) = d
    int attempts = 0;        // candidate equations examined
};

namespace detail {

inline Poly<Fp> poly_from_digits(const std::vector<std::uint64_t>& digits, std::uint64_t p) {
    std::vector<Fp> cs;
    cs.reserve(digits.size());
    for (auto v : digits) cs.emplace_back(v, p);
    return Poly<Fp>(cs, Fp(0, p));
}

}  // namespace detail

inline CurveSearchResult search_curve_with_new_point(std::uint64_t p, int g, int d,
                                                     SearchStrategy strategy,
                                                     std::uint64_t seed = 0,
                                                     std::size_t cap = (1u << 20),
                                                     int max_attempts = 200000) {
    if (!is_prime_u64(p)) throw domain_error("the base field size must be prime");
    if (g < 1 || g > 3) throw domain_error("search supports genus 1 to 3");
    if (d < 1) throw domain_error("degree must be >= 1");
    {
        Int size(1);
        for (int i = 0; i < d; ++i) size *= static_cast<unsigned long>(p);
        if (size > static_cast<unsigned long>(cap))
            throw domain_error("q^d exceeds the search cap");
    }
    const int w = g + 1;
    const int rlen = 2 * w + 1;              // R coefficients 0 .. 2g+2
    const int qlen = (p == 2) ? w + 1 : 0;   // Q used only in characteristic 2

    // Candidate streams. Exhaustive: odometer over coefficient vectors,
    // lowest degree first, R before Q. Random: seeded uniform draws.
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> rdig(static_cast<std::size_t>(rlen), 0);
    std::vector<std::uint64_t> qdig(static_cast<std::size_t>(qlen), 0);
    auto advance = [&]() -> bool {
        if (strategy == SearchStrategy::RANDOM) {
            for (auto& v : rdig) v = rng.below(p);
            for (auto& v : qdig) v = rng.below(p);
            return true;
        }
        std::size_t i = 0;
        while (i < rdig.size() && ++rdig[i] == p) rdig[i++] = 0;
        if (i < rdig.size()) return true;
        std::size_t j = 0;
        while (j < qdig.size() && ++qdig[j] == p) qdig[j++] = 0;
        return j < qdig.size();
    };

    FqRing ring = (d > 1) ? make_fq(p, static_cast<unsigned>(d)) : nullptr;

    int attempts = 0;
    while (attempts < max_attempts) {
        ++attempts;
        bool more = advance();
        Poly<Fp> rc = detail::poly_from_digits(rdig, p);
        Poly<Fp> qc = (qlen > 0) ? detail::poly_from_digits(qdig, p)
                                 : Poly<Fp>::constant(Fp(0, p));
        for (;;) {
            int dr = rc.degree();
            if (dr != 2 * g + 1 && dr != 2 * g + 2 && !(p == 2 && dr <= 2 * g + 2)) break;
            HyperellipticModel<Fp> m{qc, rc, 1, 0, 0, ""};
            try {
                m = make_hyperelliptic(qc, rc, "search candidate");
            } catch (const domain_error&) {
                break;
            }
            if (m.genus != g) break;
            CensusReport rep = new_point_census(m, d, cap);
            if (rep.new_point_count <= 0) break;
            // Affine witness: solve for y over each x in F_{p^d}.
            if (d == 1) {
                for (std::uint64_t v = 0; v < p; ++v) {
                    Fp x(v, p);
                    for (const Fp& y : detail::fiber_over_x(m.Q, m.R, x)) {
                        CurveSearchResult res{m,
                                              rep,
                                              Poly<Fp>({Fp(0, p), Fp(1, p)}, Fp(0, p)),
                                              Poly<Fp>::constant(x),
                                              Poly<Fp>::constant(y),
                                              attempts};
                        return res;
                    }
                }
                break;
            }
            auto lift = [&](const Fp& v) { return ring->from_base(v); };
            Poly<ExtElt<Fp>> ql = lift_poly(m.Q, ring->zero(), lift);
            Poly<ExtElt<Fp>> rl = lift_poly(m.R, ring->zero(), lift);
            for (const auto& x : all_field_elements(ring, cap)) {
                int dx = tower_element_degree(x);
                for (const auto& y : detail::fiber_over_x(ql, rl, x)) {
                    if (std::lcm(dx, tower_element_degree(y)) != d) continue;
                    return CurveSearchResult{m,      rep,
                                             ring->modulus(), x.rep(),
                                             y.rep(),         attempts};
                }
            }
            break;
        }
        if (strategy == SearchStrategy::EXHAUSTIVE && !more)
            throw retries_exhausted_error(
                "exhausted the candidate space without finding a new point of the "
                "requested degree");
    }
    throw retries_exhausted_error("curve search hit the attempt limit");
}

// ---------------------------------------------------------------------------
// Parity predictor for new points tied to the splitting of x^ell - 1 mod p

// For an odd prime ell and a prime p with ell not dividing p - 1 (nor equal
// to p), the sign s-dependent product below predicts whether the associated
// quotient construction acquires a new point. f is the multiplicative order
// of p mod ell and s = 1 + (ell - 1)/f counts the irreducible factors of
// x^ell - 1 over F_p.
struct ParityReport {
    int ell = 0;
    std::uint64_t p = 0;
    bool applicable = false;
    std::string reason;  // set when not applicable
    int f = 0;           // multiplicative order of p modulo ell
    int s = 0;           // number of irreducible factors of x^ell - 1 over F_p
    int omega_q = 1;     // sign over the base field: always +1
    int omega_l = 1;     // (-1)^((ell+1)/2) * (-1)^s
    bool predicts_new_point = false;  // omega_l == -1
    std::optional<std::uint64_t> u_form;  // u with p = u^2 + 64, when one exists
};

inline ParityReport neumann_setzer_parity(int ell, std::uint64_t p) {
    ParityReport r;
    r.ell = ell;
    r.p = p;
    if (ell < 3 || ell % 2 == 0 || !is_prime_u64(static_cast<std::uint64_t>(ell)))
        throw domain_error("ell must be an odd prime");
    if (!is_prime_u64(p)) throw domain_error("p must be prime");
    if (static_cast<std::uint64_t>(ell) == p) {
        r.reason = "p equals ell";
        return r;
    }
    if ((p - 1) % static_cast<std::uint64_t>(ell) == 0) {
        r.reason = "ell divides p - 1";
        return r;
    }
    r.applicable = true;
    r.f = static_cast<int>(mult_order_u64(p % static_cast<std::uint64_t>(ell),
                                          static_cast<std::uint64_t>(ell)));
    r.s = 1 + (ell - 1) / r.f;
    r.omega_q = 1;
    r.omega_l = (((ell + 1) / 2 + r.s) % 2 == 0) ? 1 : -1;
    r.predicts_new_point = (r.omega_l == -1);
    for (std::uint64_t u = 0; u * u + 64 <= p; ++u)
        if (u * u + 64 == p) {
            r.u_form = u;
            break;
        }
    return r;
}

}  // namespace newpoints
