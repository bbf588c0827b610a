#pragma once

// Quotient rings K[x]/(m) with m monic. These serve both as genuine field
// extensions (irreducible m) and as etale algebras (squarefree m); zero
// divisors are only discovered when an inversion fails, and the failure
// carries the discovered factor of the modulus.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "poly.hpp"
#include "util.hpp"

namespace newpoints {

template <class K>
class ExtRing;

template <class K>
class ExtElt {
  public:
    ExtElt(std::shared_ptr<const ExtRing<K>> ring, Poly<K> rep);

    const std::shared_ptr<const ExtRing<K>>& ring() const { return ring_; }
    const Poly<K>& rep() const { return rep_; }

    ExtElt operator-() const { return ExtElt(ring_, -rep_); }
    friend ExtElt operator+(const ExtElt& a, const ExtElt& b) {
        a.check(b);
        return ExtElt(a.ring_, a.rep_ + b.rep_);
    }
    friend ExtElt operator-(const ExtElt& a, const ExtElt& b) {
        a.check(b);
        return ExtElt(a.ring_, a.rep_ - b.rep_);
    }
    friend ExtElt operator*(const ExtElt& a, const ExtElt& b) {
        a.check(b);
        return ExtElt(a.ring_, a.rep_ * b.rep_);
    }
    friend bool operator==(const ExtElt& a, const ExtElt& b) {
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const ExtElt& a, const ExtElt& b) { return !(a == b); }

    void check(const ExtElt& o) const;

  private:
    std::shared_ptr<const ExtRing<K>> ring_;
    Poly<K> rep_;
};

template <class K>
class ExtRing : public std::enable_shared_from_this<ExtRing<K>> {
  public:
    static std::shared_ptr<const ExtRing> make(Poly<K> modulus, std::string gen_name) {
        if (modulus.degree() < 1) throw domain_error("extension modulus must have degree >= 1");
        if (!is_one(modulus.lc())) throw domain_error("extension modulus must be monic");
        return std::shared_ptr<const ExtRing>(
            new ExtRing(std::move(modulus), std::move(gen_name)));
    }

    const Poly<K>& modulus() const { return modulus_; }
    int dim() const { return modulus_.degree(); }
    const std::string& gen_name() const { return gen_name_; }
    const K& base_proto() const { return base_proto_; }

    ExtElt<K> element(Poly<K> rep) const {
        return ExtElt<K>(this->shared_from_this(), std::move(rep));
    }
    ExtElt<K> gen() const { return element(Poly<K>::x_power(base_proto_, 1)); }
    ExtElt<K> from_base(const K& v) const { return element(Poly<K>::constant(v)); }
    ExtElt<K> zero() const { return element(Poly<K>(base_proto_)); }
    ExtElt<K> one() const { return from_base(one_like(base_proto_)); }

  private:
    ExtRing(Poly<K> modulus, std::string gen_name)
        : modulus_(std::move(modulus)),
          gen_name_(std::move(gen_name)),
          base_proto_(zero_like(modulus_.proto())) {}
    Poly<K> modulus_;
    std::string gen_name_;
    K base_proto_;
};

template <class K>
ExtElt<K>::ExtElt(std::shared_ptr<const ExtRing<K>> ring, Poly<K> rep)
    : ring_(std::move(ring)), rep_(std::move(rep)) {
    if (!ring_) throw domain_error("extension element without a ring");
    if (rep_.degree() >= ring_->dim()) rep_ = rep_ % ring_->modulus();
}

template <class K>
void ExtElt<K>::check(const ExtElt& o) const {
    if (ring_ == o.ring_) return;
    if (!ring_ || !o.ring_ || ring_->modulus() != o.ring_->modulus())
        throw domain_error("mixed extension rings");
}

template <class K>
ExtElt<K> zero_like(const ExtElt<K>& a) { return a.ring()->zero(); }
template <class K>
ExtElt<K> one_like(const ExtElt<K>& a) { return a.ring()->one(); }
template <class K>
ExtElt<K> from_int_like(const ExtElt<K>& a, std::int64_t n) {
    return a.ring()->from_base(from_int_like(a.ring()->base_proto(), n));
}
template <class K>
bool is_zero(const ExtElt<K>& a) { return a.rep().is_zero(); }
template <class K>
bool is_one(const ExtElt<K>& a) {
    return a.rep().degree() == 0 && is_one(a.rep().coeff(0));
}
template <class K>
std::uint64_t char_of(const ExtElt<K>& a) { return char_of(a.ring()->base_proto()); }

template <class K>
ExtElt<K> inv(const ExtElt<K>& a) {
    if (is_zero(a)) throw domain_error("inverse of zero");
    auto [g, s, t] = egcd(a.rep(), a.ring()->modulus());
    (void)t;
    if (g.degree() != 0)
        throw zero_divisor_error(poly_text(g, a.ring()->gen_name()));
    return ExtElt<K>(a.ring(), inv(g.coeff(0)) * s);
}

template <class K>
ExtElt<K> operator/(const ExtElt<K>& a, const ExtElt<K>& b) { return a * inv(b); }

template <class K>
std::string to_text(const ExtElt<K>& a) {
    return poly_text(a.rep(), a.ring()->gen_name());
}

// ---- linear algebra over the immediate base -----------------------------

// Multiplication-by-a matrix on the power basis, column-major entries M[i][j]
// = coefficient of gen^i in a * gen^j.
template <class K>
std::vector<std::vector<K>> mult_matrix(const ExtElt<K>& a) {
    int d = a.ring()->dim();
    const K& proto = a.ring()->base_proto();
    std::vector<std::vector<K>> m(static_cast<std::size_t>(d),
                                  std::vector<K>(static_cast<std::size_t>(d), zero_like(proto)));
    ExtElt<K> col = a;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                col.rep().coeff(static_cast<std::size_t>(i));
        if (j + 1 < d) col = col * a.ring()->gen();
    }
    return m;
}

template <class K>
K trace(const ExtElt<K>& a) {
    auto m = mult_matrix(a);
    K t = zero_like(a.ring()->base_proto());
    for (std::size_t i = 0; i < m.size(); ++i) t = t + m[i][i];
    return t;
}

// Characteristic polynomial of a square matrix over a field, by reduction
// to Hessenberg form followed by the expansion recurrence (Cohen,
// "A Course in Computational Algebraic Number Theory", Algorithm 2.2.9).
// Works in every characteristic.
template <class K>
Poly<K> matrix_char_poly(std::vector<std::vector<K>> h, const K& proto) {
    std::size_t n = h.size();
    for (std::size_t col = 0; col + 2 < n; ++col) {
        std::size_t piv = col + 1;
        while (piv < n && is_zero(h[piv][col])) ++piv;
        if (piv == n) continue;
        if (piv != col + 1) {
            std::swap(h[piv], h[col + 1]);
            for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][col + 1]);
        }
        K pinv = inv(h[col + 1][col]);
        for (std::size_t i = col + 2; i < n; ++i) {
            if (is_zero(h[i][col])) continue;
            K u = h[i][col] * pinv;
            for (std::size_t j = 0; j < n; ++j) h[i][j] = h[i][j] - u * h[col + 1][j];
            for (std::size_t r = 0; r < n; ++r) h[r][col + 1] = h[r][col + 1] + u * h[r][i];
        }
    }
    std::vector<Poly<K>> p;
    p.push_back(Poly<K>::constant(one_like(proto)));
    for (std::size_t m = 1; m <= n; ++m) {
        Poly<K> xm = Poly<K>::x_power(proto, 1) - Poly<K>::constant(h[m - 1][m - 1]);
        Poly<K> pm = xm * p[m - 1];
        K run = one_like(proto);
        for (std::size_t i = m - 1; i >= 1; --i) {
            run = run * h[i][i - 1];
            pm = pm - (h[i - 1][m - 1] * run) * p[i - 1];
        }
        p.push_back(pm);
    }
    return p[n];
}

template <class K>
Poly<K> char_poly(const ExtElt<K>& a) {
    return matrix_char_poly(mult_matrix(a), a.ring()->base_proto());
}

template <class K>
K norm(const ExtElt<K>& a) {
    Poly<K> chi = char_poly(a);
    K c0 = chi.coeff(0);
    return a.ring()->dim() % 2 ? -c0 : c0;
}

// ---- flattening a tower to its bottom field -----------------------------

template <class T>
struct flat_base {
    using type = T;
};
template <class K>
struct flat_base<ExtElt<K>> {
    using type = typename flat_base<K>::type;
};
template <class T>
using flat_base_t = typename flat_base<T>::type;

template <class T>
std::size_t flat_dim(const T&) {
    return 1;
}
template <class K>
std::size_t flat_dim(const ExtElt<K>& a) {
    return static_cast<std::size_t>(a.ring()->dim()) * flat_dim(a.ring()->base_proto());
}

template <class T>
void flat_coords(const T& a, std::vector<T>& out) {
    out.push_back(a);
}
template <class K>
void flat_coords(const ExtElt<K>& a, std::vector<flat_base_t<ExtElt<K>>>& out) {
    int d = a.ring()->dim();
    for (int i = 0; i < d; ++i) flat_coords(a.rep().coeff(static_cast<std::size_t>(i)), out);
}

template <class T>
flat_base_t<T> flat_proto(const T& a) {
    std::vector<flat_base_t<T>> v;
    flat_coords(a, v);
    return zero_like(v[0]);
}

// Minimal polynomial over the bottom field of the tower, found as the first
// linear dependency among the powers of a. This route stays correct in
// characteristic p where derivative-based squarefree tricks break down.
template <class T>
Poly<flat_base_t<T>> min_poly_flat(const T& a) {
    using B = flat_base_t<T>;
    B bproto = flat_proto(a);
    std::size_t dim = flat_dim(a);

    std::vector<std::size_t> pivots;
    std::vector<std::vector<B>> rows;
    std::vector<std::vector<B>> combos;

    T pw = one_like(a);
    for (std::size_t k = 0;; ++k) {
        if (k > dim) throw domain_error("power sequence exceeded algebra dimension");
        std::vector<B> v;
        v.reserve(dim);
        flat_coords(pw, v);
        std::vector<B> comb(k + 1, zero_like(bproto));
        comb[k] = one_like(bproto);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            B f = v[pivots[r]];
            if (is_zero(f)) continue;
            for (std::size_t i = 0; i < dim; ++i) v[i] = v[i] - f * rows[r][i];
            for (std::size_t i = 0; i < combos[r].size(); ++i)
                comb[i] = comb[i] - f * combos[r][i];
        }
        std::size_t piv = 0;
        while (piv < dim && is_zero(v[piv])) ++piv;
        if (piv == dim) return Poly<B>(std::move(comb), bproto);
        B u = inv(v[piv]);
        for (auto& c : v) c = u * c;
        for (auto& c : comb) c = u * c;
        pivots.push_back(piv);
        rows.push_back(std::move(v));
        combos.push_back(std::move(comb));
        pw = pw * a;
    }
}

template <class T>
int tower_element_degree(const T& a) {
    return min_poly_flat(a).degree();
}

}  // namespace newpoints
