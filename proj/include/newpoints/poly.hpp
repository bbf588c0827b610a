#pragma once

// Dense univariate polynomials over any coefficient type that provides the
// element surface (operators, zero_like/one_like/from_int_like, inv).
// Coefficients are stored little-endian; the zero polynomial has none.
// Every polynomial carries a prototype coefficient so constants can be
// minted even from the zero polynomial.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "util.hpp"

namespace newpoints {

namespace detail {
// Dispatcher so member functions of Poly can reach the free is_zero
// overloads through argument-dependent lookup.
template <class T>
bool elem_is_zero(const T& v) {
    return is_zero(v);
}
}  // namespace detail

template <class T>
class Poly {
  public:
    explicit Poly(const T& proto) : proto_(zero_like(proto)) {}
    Poly(std::vector<T> coeffs, const T& proto)
        : c_(std::move(coeffs)), proto_(zero_like(proto)) {
        normalize();
    }

    static Poly constant(const T& value) {
        return Poly(std::vector<T>{value}, value);
    }
    static Poly x_power(const T& proto, std::size_t k) {
        std::vector<T> c(k + 1, zero_like(proto));
        c[k] = one_like(proto);
        return Poly(std::move(c), proto);
    }

    const T& proto() const { return proto_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    T coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : zero_like(proto_);
    }
    const T& lc() const {
        if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<T>& coeffs() const { return c_; }

    void set_coeff(std::size_t i, const T& v) {
        if (i >= c_.size()) c_.resize(i + 1, zero_like(proto_));
        c_[i] = v;
        normalize();
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r(a.proto_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), zero_like(a.proto_));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.normalize();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.proto_);
        Poly r(a.proto_);
        r.c_.assign(a.c_.size() + b.c_.size() - 1, zero_like(a.proto_));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        r.normalize();
        return r;
    }
    friend Poly operator*(const T& s, const Poly& a) {
        Poly r(a);
        for (auto& c : r.c_) c = s * c;
        r.normalize();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    void normalize() {
        while (!c_.empty() && detail::elem_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
    T proto_;
};

template <class T>
Poly<T> poly_from_ints(const T& proto, const std::vector<std::int64_t>& little_endian) {
    std::vector<T> c;
    c.reserve(little_endian.size());
    for (auto n : little_endian) c.push_back(from_int_like(proto, n));
    return Poly<T>(std::move(c), proto);
}

template <class T>
T eval(const Poly<T>& f, const T& x) {
    T acc = zero_like(x);
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeff(static_cast<std::size_t>(i));
    return acc;
}

// Horner evaluation into a larger ring; lift maps coefficients upward.
template <class T, class U, class Lift>
U eval_lift(const Poly<T>& f, const U& x, Lift lift) {
    U acc = zero_like(x);
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * x + lift(f.coeff(static_cast<std::size_t>(i)));
    return acc;
}

template <class T>
Poly<T> derivative(const Poly<T>& f) {
    if (f.degree() <= 0) return Poly<T>(f.proto());
    std::vector<T> c;
    c.reserve(static_cast<std::size_t>(f.degree()));
    for (int i = 1; i <= f.degree(); ++i)
        c.push_back(from_int_like(f.proto(), i) * f.coeff(static_cast<std::size_t>(i)));
    return Poly<T>(std::move(c), f.proto());
}

template <class T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    Poly<T> q(a.proto()), r = a;
    T lcb_inv = inv(b.lc());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        T factor = r.lc() * lcb_inv;
        Poly<T> term = factor * Poly<T>::x_power(a.proto(), static_cast<std::size_t>(k));
        q = q + term;
        r = r - term * b;
    }
    return {q, r};
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) { return divrem(a, b).first; }
template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) { return divrem(a, b).second; }

template <class T>
Poly<T> monic(const Poly<T>& f) {
    if (f.is_zero()) return f;
    return inv(f.lc()) * f;
}

template <class T>
Poly<T> gcd(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> f = a, g = b;
    while (!g.is_zero()) {
        Poly<T> r = f % g;
        f = g;
        g = r;
    }
    return monic(f);
}

// Returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> egcd(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r0 = a, r1 = b;
    Poly<T> s0 = Poly<T>::constant(one_like(a.proto())), s1(a.proto());
    Poly<T> t0(a.proto()), t1 = Poly<T>::constant(one_like(a.proto()));
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        r0 = r1; r1 = r2;
        Poly<T> s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        Poly<T> t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (!r0.is_zero()) {
        T u = inv(r0.lc());
        r0 = u * r0; s0 = u * s0; t0 = u * t0;
    }
    return {r0, s0, t0};
}

template <class T>
Poly<T> compose(const Poly<T>& f, const Poly<T>& g) {
    Poly<T> acc(f.proto());
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * g + Poly<T>::constant(f.coeff(static_cast<std::size_t>(i)));
    return acc;
}

// f(x + c)
template <class T>
Poly<T> translate(const Poly<T>& f, const T& c) {
    Poly<T> xpc = Poly<T>::x_power(f.proto(), 1) + Poly<T>::constant(c);
    return compose(f, xpc);
}

// f(s * x)
template <class T>
Poly<T> scale_arg(const Poly<T>& f, const T& s) {
    std::vector<T> c;
    T pw = one_like(f.proto());
    for (int i = 0; i <= f.degree(); ++i) {
        c.push_back(f.coeff(static_cast<std::size_t>(i)) * pw);
        pw = pw * s;
    }
    return Poly<T>(std::move(c), f.proto());
}

// Reciprocal polynomial x^deg * f(1/x).
template <class T>
Poly<T> reverse_poly(const Poly<T>& f) {
    std::vector<T> c(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly<T>(std::move(c), f.proto());
}

template <class T>
Poly<T> shift_up(const Poly<T>& f, std::size_t k) {
    return f * Poly<T>::x_power(f.proto(), k);
}

template <class T>
Poly<T> poly_pow(Poly<T> base, std::uint64_t e) {
    Poly<T> r = Poly<T>::constant(one_like(base.proto()));
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

template <class T>
Poly<T> poly_powmod(Poly<T> base, const Int& e, const Poly<T>& mod) {
    Poly<T> r = Poly<T>::constant(one_like(base.proto()));
    base = base % mod;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % mod;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % mod;
    }
    return r;
}

template <class T>
T elt_pow(T base, const Int& e) {
    if (e < 0) return elt_pow(inv(base), Int(-e));
    T r = one_like(base);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (std::size_t i = bits; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * base;
    }
    return r;
}

// Separability test valid in every characteristic: f is separable exactly
// when gcd(f, f') is constant. A vanishing derivative makes the gcd equal
// to f itself, which is the correct (inseparable) answer.
template <class T>
bool is_separable(const Poly<T>& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return gcd(f, derivative(f)).degree() == 0;
}

// Characteristic-zero squarefree part. In characteristic p the quotient
// f / gcd(f, f') silently drops p-fold factors, so this guards against it.
template <class T>
Poly<T> squarefree_part_char0(const Poly<T>& f) {
    if (char_of(f.proto()) != 0) throw domain_error("squarefree part needs characteristic zero");
    if (f.degree() <= 0) return f;
    return f / gcd(f, derivative(f));
}

// Resultant of two polynomials over a field, by the Euclidean remainder
// sequence with the usual sign and leading-coefficient corrections.
template <class T>
T resultant(Poly<T> f, Poly<T> g) {
    T proto = f.proto();
    if (f.is_zero() || g.is_zero()) return zero_like(proto);
    T acc = one_like(proto);
    while (true) {
        if (g.degree() == 0) {
            T lg = g.lc(), p = one_like(proto);
            for (int i = 0; i < f.degree(); ++i) p = p * lg;
            return acc * p;
        }
        if (f.degree() == 0) {
            T lf = f.lc(), p = one_like(proto);
            for (int i = 0; i < g.degree(); ++i) p = p * lf;
            return acc * p;
        }
        Poly<T> r = f % g;
        if (r.is_zero()) return zero_like(proto);
        // res(f, g) = (-1)^{deg f * deg g} * lc(g)^{deg f - deg r} * res(g, r)
        if ((f.degree() % 2) && (g.degree() % 2)) acc = -acc;
        T lg = g.lc(), p = one_like(proto);
        for (int i = 0; i < f.degree() - r.degree(); ++i) p = p * lg;
        acc = acc * p;
        f = g;
        g = r;
    }
}

template <class T>
T discriminant(const Poly<T>& f) {
    if (f.degree() < 1) throw domain_error("discriminant needs degree >= 1");
    T res = resultant(f, derivative(f));
    T d = res * inv(f.lc());
    int n = f.degree();
    // disc = (-1)^{n(n-1)/2} res(f, f') / lc(f)
    if (((static_cast<std::int64_t>(n) * (n - 1)) / 2) % 2) d = -d;
    return d;
}

template <class T>
Poly<T> interpolate(const std::vector<T>& xs, const std::vector<T>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw domain_error("interpolation needs matching nonempty point lists");
    const T& proto = xs[0];
    Poly<T> acc(proto);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly<T> num = Poly<T>::constant(one_like(proto));
        T den = one_like(proto);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            num = num * (Poly<T>::x_power(proto, 1) - Poly<T>::constant(xs[j]));
            den = den * (xs[i] - xs[j]);
        }
        acc = acc + (ys[i] * inv(den)) * num;
    }
    return acc;
}

// ---- text form ----------------------------------------------------------

namespace detail {
inline bool needs_parens(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        char c = s[i];
        if (c == '+' || c == '-' || c == '/' || c == '*' || c == ' ') return true;
    }
    return !s.empty() && s[0] == '(' ? false : s.find('^') != std::string::npos;
}
}  // namespace detail

template <class T>
std::string poly_text(const Poly<T>& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        T c = f.coeff(static_cast<std::size_t>(i));
        if (is_zero(c)) continue;
        std::string tok = to_text(c);
        bool neg = tok.size() > 1 && tok[0] == '-' && !detail::needs_parens(tok.substr(1));
        if (out.empty()) {
            if (neg) { out += "-"; tok = tok.substr(1); }
        } else {
            if (neg) { out += " - "; tok = tok.substr(1); }
            else out += " + ";
        }
        if (detail::needs_parens(tok)) tok = "(" + tok + ")";
        bool unit = (tok == "1");
        if (i == 0) {
            out += tok;
        } else {
            if (!unit) out += tok + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// Parses sums of terms like "3*x^2", "-x", "(1/2)*x", "7". The coefficient
// parser is supplied by the caller so any base field works.
template <class T, class ElemParser>
Poly<T> parse_poly(const T& proto, const std::string& text, ElemParser parse_elem,
                   const std::string& var = "x") {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    if (s.empty()) throw domain_error("empty polynomial text");

    Poly<T> result(proto);
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) throw domain_error("dangling sign in polynomial text");
        // read one term up to a top-level + or -
        std::size_t start = i;
        int depth = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == '+' || c == '-') && i > start) {
                // '-' directly after '^' or '*' or '(' would be part of a scalar,
                // but exponents are nonnegative and scalars carry signs inside
                // parentheses, so top level +/- always separates terms here.
                break;
            }
            ++i;
        }
        std::string term = s.substr(start, i - start);
        if (term.empty()) throw domain_error("empty term in polynomial text");

        T coeff = one_like(proto);
        std::size_t exp_total = 0;
        std::size_t j = 0;
        while (j < term.size()) {
            std::size_t fstart = j;
            int fdepth = 0;
            while (j < term.size()) {
                char c = term[j];
                if (c == '(') ++fdepth;
                if (c == ')') --fdepth;
                if (fdepth == 0 && c == '*') break;
                ++j;
            }
            std::string factor = term.substr(fstart, j - fstart);
            if (j < term.size()) ++j;  // skip '*'
            if (factor.empty()) throw domain_error("empty factor in polynomial text");
            if (factor.compare(0, var.size(), var) == 0 &&
                (factor.size() == var.size() || factor[var.size()] == '^')) {
                std::size_t e = 1;
                if (factor.size() > var.size()) {
                    std::string es = factor.substr(var.size() + 1);
                    if (es.empty()) throw domain_error("missing exponent in polynomial text");
                    e = 0;
                    for (char c : es) {
                        if (c < '0' || c > '9') throw domain_error("bad exponent: " + es);
                        e = e * 10 + static_cast<std::size_t>(c - '0');
                    }
                }
                exp_total += e;
            } else {
                std::string scalar = factor;
                if (scalar.size() >= 2 && scalar.front() == '(' && scalar.back() == ')')
                    scalar = scalar.substr(1, scalar.size() - 2);
                coeff = coeff * parse_elem(scalar);
            }
        }
        if (sign < 0) coeff = -coeff;
        Poly<T> termp = coeff * Poly<T>::x_power(proto, exp_total);
        result = result + termp;
    }
    return result;
}

// Horner evaluation at a point of a larger coefficient domain, threading the
// coefficients through an embedding `lift: T -> E`.
template <class T, class E, class Lift>
E eval_lifted(const Poly<T>& f, const E& x, Lift&& lift) {
    E acc = zero_like(x);
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * x + lift(f.coeff(static_cast<std::size_t>(i)));
    return acc;
}

// Coefficientwise embedding of a polynomial into a larger domain.
template <class T, class E, class Lift>
Poly<E> lift_poly(const Poly<T>& f, const E& proto, Lift&& lift) {
    std::vector<E> c;
    c.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) c.push_back(lift(f.coeff(static_cast<std::size_t>(i))));
    return Poly<E>(std::move(c), proto);
}

}  // namespace newpoints
