#pragma once

// Invariants I, J of a binary quartic (cubics embed with vanishing top
// coefficient) and the j-invariant 256*I^3/disc of the smooth genus-1 curve
// y^2 = f(x). The discriminant is the standard resultant-based polynomial
// discriminant, which keeps everything valid in characteristic 3; over the
// integers it satisfies 4*I^3 - J^2 = 27*disc (verified in the test suite by
// exhaustive grid evaluation), so away from characteristic 3 the quotient
// (4I^3 - J^2)/27 gives the same j.

#include "poly.hpp"
#include "util.hpp"

namespace newpoints {

template <class T>
struct QuarticInvariants {
    T I;
    T J;
    T disc;
};

template <class T>
QuarticInvariants<T> quartic_invariants(const Poly<T>& f) {
    if (char_of(f.proto()) == 2)
        throw domain_error("quartic invariants need odd or zero characteristic");
    if (f.degree() < 3 || f.degree() > 4)
        throw domain_error("quartic invariants need degree 3 or 4");
    auto cf = [&](int i) { return f.coeff(static_cast<std::size_t>(i)); };
    T a = cf(4), b = cf(3), c = cf(2), d = cf(1), e = cf(0);
    auto n = [&](std::int64_t k) { return from_int_like(f.proto(), k); };
    T I = n(12) * a * e - n(3) * b * d + c * c;
    T J = n(72) * a * c * e + n(9) * b * c * d - n(27) * a * d * d -
          n(27) * b * b * e - n(2) * c * c * c;
    // disc uses the degree-4 convention throughout: a cubic input carries the
    // extra factor lc^2, so 4 I^3 - J^2 = 27 disc holds in both degrees.
    T D = discriminant(f);
    if (f.degree() == 3) D = f.lc() * f.lc() * D;
    return {I, J, D};
}

template <class T>
struct JData {
    T I;
    T J;
    T disc;
    T j;
};

template <class T>
JData<T> j_data(const Poly<T>& f) {
    auto [I, J, disc] = quartic_invariants(f);
    if (is_zero(disc)) throw domain_error("curve is singular, no j-invariant");
    T j = from_int_like(f.proto(), 256) * I * I * I * inv(disc);
    return {I, J, disc, j};
}

template <class T>
T j_invariant(const Poly<T>& f) {
    return j_data(f).j;
}

}  // namespace newpoints
