#pragma once

// Shared plumbing: error types, the seeded PRNG used by every sampling
// routine, and 64-bit modular arithmetic helpers.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace newpoints {

// Raised when an operation is asked to do something outside its domain
// (bad degree, wrong characteristic, malformed input, ...).
class domain_error : public std::runtime_error {
  public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by inversion in a quotient ring K[x]/(m) when the element is a
// zero divisor. Carries a textual rendering of the discovered nontrivial
// factor of the modulus, so callers can report *why* the algebra split.
class zero_divisor_error : public std::runtime_error {
  public:
    explicit zero_divisor_error(std::string factor_text)
        : std::runtime_error("zero divisor; modulus factor: " + factor_text),
          factor(std::move(factor_text)) {}
    std::string factor;
};

// Raised when a randomized search gives up (retry cap reached).
class retries_exhausted_error : public std::runtime_error {
  public:
    explicit retries_exhausted_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Deterministic splitmix64 generator; the sole source of randomness in the
// library. Every randomized routine takes an explicit seed.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0. Rejection-free modulo bias is irrelevant at
    // the sizes used here, but keep it unbiased anyway.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform integer in [-b, b].
    std::int64_t box(std::int64_t b) {
        return static_cast<std::int64_t>(below(static_cast<std::uint64_t>(2 * b + 1))) - b;
    }

  private:
    std::uint64_t state_;
};

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this base set.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { std::uint64_t t = a % b; a = b; b = t; }
    return a;
}

// Multiplicative order of a modulo m (gcd(a, m) = 1 required); plain loop,
// fine for the moduli this library meets.
inline std::uint64_t mult_order_u64(std::uint64_t a, std::uint64_t m) {
    if (m <= 1 || gcd_u64(a % m, m) != 1) throw domain_error("mult_order: arguments not coprime");
    std::uint64_t x = a % m, ord = 1;
    while (x != 1) {
        x = mulmod_u64(x, a, m);
        if (++ord > m) throw domain_error("mult_order: no order found");
    }
    return ord;
}

}  // namespace newpoints
