#pragma once

// Square completion of monic polynomials away from characteristic 2:
// an even-degree monic m is uniquely m = h^2 - ell with h monic of half
// degree and deg ell < deg h; an odd-degree monic m is handled through x*m.

#include "poly.hpp"
#include "util.hpp"

namespace newpoints {

template <class T>
struct SquareCompletion {
    Poly<T> h;
    Poly<T> ell;
};

// Solves the top-down triangular system for the coefficients of h:
// the x^{2k-i} coefficient of h^2 is 2*h_{k-i} plus products of already
// known higher coefficients.
template <class T>
SquareCompletion<T> approx_sqrt(const Poly<T>& m) {
    if (char_of(m.proto()) == 2)
        throw domain_error("square completion is unavailable in characteristic 2");
    if (m.is_zero() || m.degree() % 2 != 0)
        throw domain_error("square completion needs even degree");
    if (!is_one(m.lc())) throw domain_error("square completion needs a monic polynomial");

    int k = m.degree() / 2;
    T half = inv(from_int_like(m.proto(), 2));
    std::vector<T> h(static_cast<std::size_t>(k) + 1, zero_like(m.proto()));
    h[static_cast<std::size_t>(k)] = one_like(m.proto());
    for (int i = 1; i <= k; ++i) {
        T acc = m.coeff(static_cast<std::size_t>(2 * k - i));
        for (int a = k - i + 1; a <= k - 1; ++a) {
            int b = 2 * k - i - a;
            if (b > a) continue;  // count each unordered pair once
            T prod = h[static_cast<std::size_t>(a)] * h[static_cast<std::size_t>(b)];
            acc = (a == b) ? acc - prod : acc - (prod + prod);
        }
        h[static_cast<std::size_t>(k - i)] = acc * half;
    }
    Poly<T> hp(std::move(h), m.proto());
    return {hp, hp * hp - m};
}

// Odd-degree variant: completes x*m instead, so ell(0) = h(0)^2 holds
// automatically.
template <class T>
SquareCompletion<T> odd_decompose(const Poly<T>& m) {
    if (m.is_zero() || m.degree() % 2 != 1)
        throw domain_error("odd square completion needs odd degree");
    return approx_sqrt(shift_up(m, 1));
}

}  // namespace newpoints
