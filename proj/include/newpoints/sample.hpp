#pragma once

// Deterministic element sampling for the rejection loops of the curve
// constructors. Coordinates are drawn from integer boxes [-B, B]; B starts
// at 3 and doubles every 20 failed attempts, and a whole run aborts with
// retries_exhausted_error after a fixed attempt budget. Everything is a pure
// function of the seed.

#include <cstdint>
#include <vector>

#include "ext.hpp"
#include "fp.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "ratfunc.hpp"
#include "util.hpp"

namespace newpoints {

class SampleBudget {
  public:
    explicit SampleBudget(std::uint64_t seed, int max_attempts = 10000)
        : rng_(seed), max_attempts_(max_attempts) {}

    SplitMix64& rng() { return rng_; }
    std::uint64_t box() const { return box_; }
    int attempts() const { return attempts_; }

    // Registers a failed attempt; widens the box every 20 failures and gives
    // up after the attempt budget.
    void note_failure(const char* what) {
        ++attempts_;
        if (attempts_ >= max_attempts_) throw retries_exhausted_error(what);
        if (attempts_ % 20 == 0 && box_ < (1ull << 20)) box_ *= 2;
    }

  private:
    SplitMix64 rng_;
    std::uint64_t box_ = 3;
    int attempts_ = 0;
    int max_attempts_;
};

inline std::int64_t sample_signed(SplitMix64& rng, std::uint64_t box) {
    return static_cast<std::int64_t>(rng.below(2 * box + 1)) - static_cast<std::int64_t>(box);
}

inline Rat sample_element(const Rat& proto, SplitMix64& rng, std::uint64_t box) {
    return from_int_like(proto, sample_signed(rng, box));
}

inline Fp sample_element(const Fp& proto, SplitMix64& rng, std::uint64_t box) {
    return from_int_like(proto, sample_signed(rng, box));
}

// Rational function field: polynomials in the variable of slowly growing
// degree with coefficients from the base box.
template <class K>
RFElt<K> sample_element(const RFElt<K>& proto, SplitMix64& rng, std::uint64_t box) {
    K base_proto = zero_like(proto.num().proto());
    std::uint64_t deg_cap = 1 + box / 4;
    if (deg_cap > 24) deg_cap = 24;
    std::uint64_t deg = rng.below(deg_cap + 1);
    std::vector<K> c;
    c.reserve(deg + 1);
    for (std::uint64_t i = 0; i <= deg; ++i) c.push_back(sample_element(base_proto, rng, box));
    return RFElt<K>(Poly<K>(std::move(c), base_proto));
}

// Extensions: a random representative polynomial with base-field samples in
// every coordinate.
template <class K>
ExtElt<K> sample_element(const ExtElt<K>& proto, SplitMix64& rng, std::uint64_t box) {
    const auto& ring = proto.ring();
    K base_proto = ring->base_proto();
    std::vector<K> c;
    c.reserve(static_cast<std::size_t>(ring->dim()));
    for (int i = 0; i < ring->dim(); ++i) c.push_back(sample_element(base_proto, rng, box));
    return ring->element(Poly<K>(std::move(c), base_proto));
}

// Monic polynomial of exact degree n with box-sampled lower coefficients.
template <class K>
Poly<K> sample_monic_poly(const K& proto, int n, SplitMix64& rng, std::uint64_t box) {
    if (n < 0) throw domain_error("monic sample needs nonnegative degree");
    std::vector<K> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) c.push_back(sample_element(proto, rng, box));
    c.push_back(one_like(proto));
    return Poly<K>(std::move(c), proto);
}

}  // namespace newpoints
