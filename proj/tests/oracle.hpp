#pragma once

// Independent reference arithmetic for tests: Q(sqrt(-D)) holds all 4th (D=1)
// and 6th (D=3) roots of unity, so sums over those roots can be done without
// the cyclotomic layer of the library.

#include "isoquot/rational.hpp"

#include <stdexcept>
#include <vector>

namespace oracle {

using isoquot::Rational;

struct Quad {
    Rational a, b; // a + b*sqrt(-D)
    long D = 1;

    Quad(Rational x = 0, Rational y = 0, long d = 1) : a(x), b(y), D(d) {}
    Quad operator+(const Quad& o) const { return {a + o.a, b + o.b, D}; }
    Quad operator-(const Quad& o) const { return {a - o.a, b - o.b, D}; }
    Quad operator*(const Quad& o) const { return {a * o.a - Rational(D) * b * o.b, a * o.b + b * o.a, D}; }
    Quad inv() const {
        Rational n = a * a + Rational(D) * b * b;
        if (n.is_zero()) throw std::domain_error("division by zero in oracle");
        return {a / n, -b / n, D};
    }
    Quad operator/(const Quad& o) const { return *this * o.inv(); }
    Quad pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Quad r(1, 0, D), x = *this;
        while (e) {
            if (e & 1) r = r * x;
            x = x * x;
            e >>= 1;
        }
        return r;
    }
    bool operator==(const Quad& o) const { return a == o.a && b == o.b; }
    bool is_rational() const { return b.is_zero(); }
};

// zeta_N^k for N in {2, 4, 6}.
inline Quad root(int N, int k) {
    k = ((k % N) + N) % N;
    if (N == 2) return Quad(k ? -1 : 1, 0, 1);
    if (N == 4) {
        static const Quad r[4] = {Quad(1, 0, 1), Quad(0, 1, 1), Quad(-1, 0, 1), Quad(0, -1, 1)};
        return r[k];
    }
    if (N == 6) {
        Quad z(Rational(1, 2), Rational(1, 2), 3);
        return z.pow(k);
    }
    throw std::invalid_argument("oracle roots only for N in {2,4,6}");
}

inline Quad cst(int N, const Rational& c) { return Quad(c, 0, N == 6 ? 3 : 1); }

// Sum over zeta^N = 1, zeta != +-1.
template <class F>
Rational root_sum(int N, F f) {
    Quad s = cst(N, 0);
    for (int k = 1; k < N; ++k)
        if (2 * k != N) s = s + f(root(N, k));
    if (!s.is_rational()) throw std::logic_error("oracle root sum not rational");
    return s.a;
}

// Sum over unordered pairs {w1, w2} of N-th roots with w1 != +-w2.
template <class F>
Rational pair_sum(int N, F f) {
    Quad s = cst(N, 0);
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            if (2 * (b - a) != N) s = s + f(root(N, a), root(N, b));
    if (!s.is_rational()) throw std::logic_error("oracle pair sum not rational");
    return s.a;
}

inline Rational T(int N, long g, long d) {
    Rational s(0);
    for (long i = 0; i <= d; ++i) s += isoquot::gen_binomial(Rational(g), i) * Rational(-N).pow(-i);
    return s;
}

inline Rational sgn(long e) { return e % 2 ? Rational(-1) : Rational(1); }

// Symplectic rank 2 single-root formula, summed directly in the quadratic field.
inline Rational a_sympl(int N, int g, int d, int m1, int m2) {
    long gb = g - 1;
    Rational s = root_sum(N, [&](const Quad& z) {
        Quad one = cst(N, 1);
        Quad J = cst(N, Rational(N * N)) / (z * (one - z) * (one - z) * (one + z));
        return (one + z).pow(m1 + d) * z.pow(m2) * J.pow(gb);
    });
    return sgn(gb + d) * Rational(N, 2) * T(N, g, d) * s;
}

// Symmetric rank 2 in the single-root form with n = (N-2)/2, for d >= g.
inline Rational a_symm_roots(int N, int g, int d, int m1, int m2) {
    long gb = g - 1;
    int n = (N - 2) / 2, M = N - 2;
    Rational c = sgn(gb + d) * Rational(4).pow(d) * Rational(n) * T(M, g, d);
    Rational s(0);
    if (M >= 4)
        s = root_sum(M, [&](const Quad& z) {
            Quad one = cst(M, 1);
            Quad J = cst(M, Rational(n * n)) / ((one + z) * (one - z) * (one - z));
            return (one + z).pow(m1 + d) * z.pow(m2) * J.pow(gb);
        });
    if (m2 == 0) s += Rational(4) * Rational(-n).pow(gb);
    return c * s;
}

} // namespace oracle
