#pragma once

// Rational function fields K(t) over a finite coefficient field, stored as
// reduced fractions with monic denominator so representations are unique.

#include <cstdint>
#include <string>

#include "poly.hpp"
#include "util.hpp"

namespace newpoints {

template <class K>
class RFElt {
  public:
    explicit RFElt(Poly<K> num)
        : num_(std::move(num)), den_(Poly<K>::constant(one_like(num_.proto()))) {}
    RFElt(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw domain_error("rational function with zero denominator");
        reduce();
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RFElt operator-() const { return RFElt(-num_, den_, nocheck{}); }
    friend RFElt operator+(const RFElt& a, const RFElt& b) {
        return RFElt(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RFElt operator-(const RFElt& a, const RFElt& b) {
        return RFElt(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RFElt operator*(const RFElt& a, const RFElt& b) {
        return RFElt(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RFElt operator/(const RFElt& a, const RFElt& b) {
        if (b.num_.is_zero()) throw domain_error("rational function division by zero");
        return RFElt(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RFElt& a, const RFElt& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RFElt& a, const RFElt& b) { return !(a == b); }

  private:
    struct nocheck {};
    RFElt(Poly<K> num, Poly<K> den, nocheck) : num_(std::move(num)), den_(std::move(den)) {}
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<K>::constant(one_like(den_.proto()));
            return;
        }
        Poly<K> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        if (!is_one(den_.lc())) {
            K u = inv(den_.lc());
            num_ = u * num_;
            den_ = u * den_;
        }
    }
    Poly<K> num_;
    Poly<K> den_;
};

template <class K>
RFElt<K> zero_like(const RFElt<K>& a) {
    return RFElt<K>(Poly<K>(a.num().proto()));
}
template <class K>
RFElt<K> one_like(const RFElt<K>& a) {
    return RFElt<K>(Poly<K>::constant(one_like(a.num().proto())));
}
template <class K>
RFElt<K> from_int_like(const RFElt<K>& a, std::int64_t n) {
    return RFElt<K>(Poly<K>::constant(from_int_like(a.num().proto(), n)));
}
template <class K>
bool is_zero(const RFElt<K>& a) { return a.num().is_zero(); }
template <class K>
bool is_one(const RFElt<K>& a) {
    return a.is_polynomial() && a.num().degree() == 0 && is_one(a.num().coeff(0));
}
template <class K>
std::uint64_t char_of(const RFElt<K>& a) { return char_of(a.num().proto()); }
template <class K>
RFElt<K> inv(const RFElt<K>& a) {
    if (is_zero(a)) throw domain_error("inverse of zero");
    return one_like(a) / a;
}
template <class K>
std::string to_text(const RFElt<K>& a) {
    if (a.is_polynomial()) return poly_text(a.num(), "t");
    return "(" + poly_text(a.num(), "t") + ")/(" + poly_text(a.den(), "t") + ")";
}

template <class K>
RFElt<K> rf_var(const K& proto) {
    return RFElt<K>(Poly<K>::x_power(proto, 1));
}

}  // namespace newpoints
