#pragma once

// Arbitrary-precision integers and rationals on top of GMP, presented with
// the small uniform surface the rest of the library expects from any field
// element: arithmetic operators plus zero_like/one_like/from_int_like/inv.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "util.hpp"

namespace newpoints {

using Int = mpz_class;

inline Int int_from_i64(std::int64_t v) {
    // mpz_class has no int64 constructor on LP64-free platforms; go via string
    // only when the value does not fit in a long.
    if (v >= static_cast<std::int64_t>(std::numeric_limits<long>::min()) &&
        v <= static_cast<std::int64_t>(std::numeric_limits<long>::max()))
        return Int(static_cast<long>(v));
    return Int(std::to_string(v));
}

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw domain_error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Exact rational numbers; always stored reduced with positive denominator
// (mpq canonical form matches the required invariant).
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    explicit Rat(std::int64_t n) : v_(int_from_i64(n)) {}
    explicit Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }
    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.v_ == 0) throw domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    mpq_class v_;
};

inline Rat zero_like(const Rat&) { return Rat(); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat from_int_like(const Rat&, std::int64_t n) { return Rat(n); }
inline bool is_zero(const Rat& a) { return a.raw() == 0; }
inline bool is_one(const Rat& a) { return a.raw() == 1; }
inline std::uint64_t char_of(const Rat&) { return 0; }
inline Rat inv(const Rat& a) {
    if (is_zero(a)) throw domain_error("inverse of zero");
    return Rat(1) / a;
}
inline std::string to_text(const Rat& a) { return a.str(); }

// Exact square root in Q if one exists.
inline std::optional<Rat> sqrt_exact(const Rat& a) {
    if (a < Rat(0)) return std::nullopt;
    Int n = a.num(), d = a.den();
    if (!is_perfect_square(n) || !is_perfect_square(d)) return std::nullopt;
    return Rat(isqrt_floor(n), isqrt_floor(d));
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw domain_error("cannot parse rational: " + s);
    }
}

// Factoring with a work budget: trial division then a few Pollard rho
// rounds. Returns std::nullopt when the budget runs out, so callers can
// report an honest "unchecked" instead of a wrong answer.
inline bool pollard_rho_u64(std::uint64_t n, std::uint64_t& factor, SplitMix64& rng) {
    if (n % 2 == 0) { factor = 2; return true; }
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::uint64_t x = rng.below(n - 2) + 2, y = x, c = rng.below(n - 1) + 1, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) { factor = d; return true; }
    }
    return false;
}

inline std::optional<std::vector<std::pair<Int, unsigned>>> factor_with_budget(Int n) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    std::vector<std::pair<Int, unsigned>> out;
    auto push = [&out](const Int& p) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1);
        }
    };
    for (std::uint64_t p = 2; p < 100000 && Int(p) * Int(p) <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            push(Int(static_cast<unsigned long>(p)));
            n /= static_cast<unsigned long>(p);
        }
    }
    SplitMix64 rng(0x9e3779b9u);
    std::vector<Int> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (!m.fits_ulong_p()) return std::nullopt;  // beyond the 64-bit rho below
        std::uint64_t mu = m.get_ui();
        if (is_prime_u64(mu)) { push(m); continue; }
        std::uint64_t f = 0;
        if (!pollard_rho_u64(mu, f, rng)) return std::nullopt;
        stack.push_back(Int(static_cast<unsigned long>(f)));
        stack.push_back(Int(static_cast<unsigned long>(mu / f)));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge equal primes that arrived out of order
    std::vector<std::pair<Int, unsigned>> merged;
    for (auto& [p, e] : out) {
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += e;
        else
            merged.emplace_back(p, e);
    }
    return merged;
}

// All positive divisors, capped; nullopt if the factorization budget or the
// divisor cap is exceeded.
inline std::optional<std::vector<Int>> divisors_with_budget(const Int& n, std::size_t cap = 20000) {
    auto fac = factor_with_budget(n);
    if (!fac) return std::nullopt;
    std::vector<Int> divs{Int(1)};
    for (auto& [p, e] : *fac) {
        std::size_t base = divs.size();
        Int pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > cap) return std::nullopt;
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace newpoints
