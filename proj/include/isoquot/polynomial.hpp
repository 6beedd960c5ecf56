#pragma once

#include "isoquot/errors.hpp"
#include "isoquot/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace isoquot {

// Dense univariate polynomial over a field K, lowest degree first.
template <class K>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(K c) { if (!is_zero(c)) c_.push_back(std::move(c)); }
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(K c, int k) {
        std::vector<K> v(static_cast<size_t>(k) + 1, K(0));
        v[static_cast<size_t>(k)] = std::move(c);
        return Polynomial(std::move(v));
    }
    static Polynomial x() { return monomial(K(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero_poly() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : K(0);
    }
    K leading() const { return c_.empty() ? K(0) : c_.back(); }

    K eval(const K& x) const {
        K r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Polynomial derivative() const {
        std::vector<K> v;
        for (size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * K(static_cast<long>(k)));
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return Polynomial();
        std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(v));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const K& s) const {
        std::vector<K> v(c_);
        for (auto& x : v) x *= s;
        return Polynomial(std::move(v));
    }

    Polynomial pow(int e) const {
        if (e < 0) throw InvalidArgument("negative polynomial power");
        Polynomial r(K(1)), b(*this);
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.c_.empty()) throw NotInvertible("polynomial division by zero");
        if (degree() < d.degree()) return {Polynomial(), *this};
        std::vector<K> r(c_);
        std::vector<K> q(static_cast<size_t>(degree() - d.degree()) + 1, K(0));
        K lead_inv = K(1) / d.c_.back();
        for (int k = degree(); k >= d.degree(); --k) {
            K f = r[static_cast<size_t>(k)] * lead_inv;
            if (is_zero(f)) continue;
            int s = k - d.degree();
            q[static_cast<size_t>(s)] = f;
            for (int j = 0; j <= d.degree(); ++j)
                r[static_cast<size_t>(s + j)] -= f * d.c_[static_cast<size_t>(j)];
        }
        r.resize(static_cast<size_t>(d.degree()));
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }

    Polynomial monic() const {
        if (c_.empty()) return *this;
        return scaled(K(1) / c_.back());
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

// Monic gcd.
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero_poly()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
struct ExtGcd {
    Polynomial<K> g, s, t;
};

template <class K>
ExtGcd<K> ext_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    Polynomial<K> r0 = a, r1 = b;
    Polynomial<K> s0(K(1)), s1, t0, t1(K(1));
    while (!r1.is_zero_poly()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero_poly()) return {r0, s0, t0};
    K li = K(1) / r0.leading();
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

using QPoly = Polynomial<Rational>;

std::string to_string(const QPoly& p, const std::string& var = "z");

} // namespace isoquot
