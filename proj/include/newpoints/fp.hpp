#pragma once

// Prime field arithmetic. Elements carry their modulus so generic code can
// mint constants from any sample value (zero_like / one_like / from_int_like).

#include <cstdint>
#include <optional>
#include <string>

#include "util.hpp"

namespace newpoints {

class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(p ? v % p : v), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    Fp operator-() const { return Fp(v_ ? p_ - v_ : 0, p_); }
    Fp& operator+=(const Fp& o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ += p_ - o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = mulmod_u64(v_, o.v_, p_);
        return *this;
    }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend bool operator==(const Fp& a, const Fp& b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw domain_error("mixed prime moduli");
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline Fp from_int_like(const Fp& a, std::int64_t n) {
    std::uint64_t p = a.modulus();
    std::int64_t r = n % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
}
inline bool is_zero(const Fp& a) { return a.value() == 0; }
inline bool is_one(const Fp& a) { return a.value() == 1; }
inline std::uint64_t char_of(const Fp& a) { return a.modulus(); }
inline Fp inv(const Fp& a) {
    if (is_zero(a)) throw domain_error("inverse of zero");
    return Fp(powmod_u64(a.value(), a.modulus() - 2, a.modulus()), a.modulus());
}
inline Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }
inline std::string to_text(const Fp& a) { return std::to_string(a.value()); }

// Euler criterion; 0 for zero, 1 for squares, -1 for non-squares.
inline int legendre(const Fp& a) {
    if (is_zero(a)) return 0;
    if (a.modulus() == 2) return 1;
    std::uint64_t e = powmod_u64(a.value(), (a.modulus() - 1) / 2, a.modulus());
    return e == 1 ? 1 : -1;
}

// Tonelli-Shanks square root.
inline std::optional<Fp> sqrt_exact(const Fp& a) {
    std::uint64_t p = a.modulus();
    if (is_zero(a)) return a;
    if (p == 2) return a;
    if (legendre(a) != 1) return std::nullopt;
    if (p % 4 == 3) return Fp(powmod_u64(a.value(), (p + 1) / 4, p), p);
    std::uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    std::uint64_t z = 2;
    while (legendre(Fp(z, p)) != -1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = powmod_u64(z, q, p);
    std::uint64_t t = powmod_u64(a.value(), q, p);
    std::uint64_t r = powmod_u64(a.value(), (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulmod_u64(tt, tt, p); ++i; }
        std::uint64_t b = c;
        for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mulmod_u64(b, b, p);
        m = i;
        c = mulmod_u64(b, b, p);
        t = mulmod_u64(t, c, p);
        r = mulmod_u64(r, b, p);
    }
    return Fp(r, p);
}

}  // namespace newpoints
