#include "isoquot/invariants.hpp"
#include "isoquot/errors.hpp"
#include "isoquot/rootsum.hpp"
#include "isoquot/series.hpp"
#include "isoquot/symprod.hpp"

#include <sstream>
#include <stdexcept>

namespace isoquot {

namespace {

Rational sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

void require_sympl_N(int N) {
    if (N < 4 || N % 2) throw InvalidArgument("N must be even and >= 4");
}

void require_g_d(int g, int d) {
    if (g < 0 || d < 0) throw InvalidArgument("g and d must be non-negative");
}

void require_degree(long have, long vd) {
    if (have != vd)
        throw DegreeMismatch("insertion degree " + std::to_string(have) + " differs from virtual dimension " +
                             std::to_string(vd));
}

// (1+z)^e1 z^e2 (1-z)^e3 as a rational function.
RationalFunctionUni bundle(long e1, long e2, long e3) {
    return RationalFunctionUni::linear_power(Rational(1), Rational(1), e1) * RationalFunctionUni::z_power(e2) *
           RationalFunctionUni::linear_power(Rational(1), Rational(-1), e3);
}

} // namespace

InsertionPoly parse_insertion(const std::string& s) {
    InsertionPoly Q;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::stringstream is(item);
        std::string c, a, b, extra;
        if (!std::getline(is, c, ':') || !std::getline(is, a, ':') || !std::getline(is, b, ':') ||
            std::getline(is, extra, ':'))
            throw InvalidArgument("insertion term must be c:m1:m2, got '" + item + "'");
        Monomial m;
        try {
            m.coeff = Rational::parse(c);
            size_t pa = 0, pb = 0;
            m.m1 = std::stoi(a, &pa);
            m.m2 = std::stoi(b, &pb);
            if (pa != a.size() || pb != b.size()) throw std::invalid_argument("trailing");
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw InvalidArgument("bad insertion term '" + item + "'");
        }
        if (m.m1 < 0 || m.m2 < 0) throw InvalidArgument("exponents must be non-negative");
        Q.push_back(m);
    }
    if (Q.empty()) throw InvalidArgument("empty insertion polynomial");
    return Q;
}

long weighted_degree(const InsertionPoly& Q) {
    long deg = -1;
    for (const auto& m : Q) {
        long w = m.m1 + 2L * m.m2;
        if (deg >= 0 && w != deg) throw DegreeMismatch("insertion polynomial is not weighted-homogeneous");
        deg = w;
    }
    return deg;
}

long virtual_dim(const QuotFamily& f) {
    require_g_d(f.g, f.d);
    long gb = f.g - 1, N = f.N, d = f.d;
    if (f.form == Form::Symplectic) {
        if (f.r != 2) throw UnsupportedFamily("symplectic family supported only for r = 2");
        if (N % 2 || N < 4) throw UnsupportedFamily("symplectic family needs even N >= 4");
        return (N - 1) * d - (2 * N - 5) * gb;
    }
    if (f.r == 2) {
        if (N < 4) throw UnsupportedFamily("symmetric rank 2 needs N >= 4");
        return (N - 3) * d - gb * (2 * N - 7);
    }
    if (f.r == 1) {
        if (N < 3) throw UnsupportedFamily("symmetric rank 1 needs N >= 3");
        return (N - 2) * (d - gb);
    }
    throw UnsupportedFamily("rank must be 1 or 2");
}

Rational t_series_coeff(int N, long g, long k, long shift) {
    if (k < 0) return Rational(0);
    Rational c(N - 1, N), s(0);
    for (long j = 0; j <= k; ++j)
        s += gen_binomial(Rational(g), j) * c.pow(j) * gen_binomial(Rational(k - g + shift), k - j);
    return s;
}

Rational t_dg(int N, int g, int d) {
    if (N < 2) throw InvalidArgument("N must be >= 2");
    require_g_d(g, d);
    Rational direct(0);
    for (int i = 0; i <= d; ++i) direct += binomial(g, i) * Rational(-N).pow(-i);
    Rational coeff = t_series_coeff(N, g, d);
    if (!(coeff == direct)) throw std::logic_error("T_{d,g} definitions disagree");
    return direct;
}

Rational a_sympl(int N, int g, int d, int m1, int m2) {
    require_sympl_N(N);
    require_g_d(g, d);
    if (m1 < 0 || m2 < 0) throw InvalidArgument("exponents must be non-negative");
    require_degree(m1 + 2L * m2, virtual_dim({Form::Symplectic, N, 2, g, d}));
    long gb = g - 1;
    Rational pre = sign(gb + d) * Rational(N, 2) * t_dg(N, g, d) * Rational(N).pow(2 * gb);
    if (pre.is_zero()) return pre;
    return pre * sum_rational_over_roots(N, bundle(m1 + d - gb, m2 - gb, -2 * gb));
}

Rational a_sympl_poly(int N, int g, int d, const InsertionPoly& Q) {
    require_sympl_N(N);
    require_g_d(g, d);
    require_degree(weighted_degree(Q), virtual_dim({Form::Symplectic, N, 2, g, d}));
    long gb = g - 1;
    Rational pre = sign(gb + d) * t_dg(N, g, d);
    if (pre.is_zero()) return pre;
    Cyclo N2(Rational(N * N));
    Rational s = sum_over_pairs(N, [&](const Cyclo& w1, const Cyclo& w2) {
        Cyclo sum = w1 + w2, prod = w1 * w2, diff = w1 - w2;
        Cyclo S(0);
        for (const auto& m : Q) S += Cyclo(m.coeff) * sum.pow(m.m1) * prod.pow(m.m2);
        Cyclo J = N2 / (prod * diff * diff * sum);
        return S * J.pow(gb) * sum.pow(d);
    });
    return pre * s;
}

Rational a_symm_r2(int N, int g, int d, const InsertionPoly& Q) {
    require_sympl_N(N);
    require_g_d(g, d);
    require_degree(weighted_degree(Q), virtual_dim({Form::Symmetric, N, 2, g, d}));
    long gb = g - 1;
    int M = N - 2;
    Rational T = t_dg(M, g, d);
    if (T.is_zero()) return T;
    Rational I1(0);
    if (M >= 4) {
        Cyclo c(Rational(M * M, 4));
        Rational s = sum_over_pairs(M, [&](const Cyclo& w1, const Cyclo& w2) {
            Cyclo sum = w1 + w2, prod = w1 * w2, diff = w1 - w2;
            Cyclo S(0);
            for (const auto& m : Q) S += Cyclo(m.coeff) * sum.pow(m.m1) * prod.pow(m.m2);
            Cyclo J = c / (sum * diff * diff);
            return S * J.pow(gb) * sum.pow(d);
        });
        I1 = sign(gb + d) * Rational(4).pow(d) * T * s;
    }
    Rational Q10(0);
    for (const auto& m : Q)
        if (m.m2 == 0) Q10 += m.coeff;
    Rational I2 = sign(d) * Rational(2).pow(2L * d + 2 - g) * T * Rational(M).pow(g) * Q10;
    return I1 + I2;
}

Rational a_rank1_symm(int N, int g, int d) {
    if (N < 3) throw InvalidArgument("N must be >= 3");
    require_g_d(g, d);
    long gb = g - 1;
    if (virtual_dim({Form::Symmetric, N, 1, g, d}) < 0) throw DegreeMismatch("negative virtual dimension");
    Rational p2 = Rational(2).pow(2L * d - gb);
    if (N % 2 == 0) {
        Rational tt = coeff_linear_binomial(d, Rational(1), Rational(N - 2, N), g, d - g);
        return Rational(N).pow(g) * tt * p2;
    }
    return Rational(N - 1).pow(g) * p2 * t_dg(N - 1, g, d);
}

Rational g1_generating_check(int N, int d) {
    require_sympl_N(N);
    if (d < 0) throw InvalidArgument("d must be non-negative");
    if (d == 0) return Rational(N * (N - 2), 2);
    using S = MultiSeries<Rational>;
    int K = N * d;
    std::vector<int> o{K};
    S one_minus = S::linear_power(o, Rational(1), {Rational(-1)}, 1);
    S den = one_minus.pow(N) - S::linear_power(o, Rational(0), {Rational(1)}, N);
    S f = one_minus.pow(N - 1) * Rational(N) * den.invert();
    Rational c = f.coefficient({K}) - Rational(-2).pow(K);
    return sign(d) * Rational(N - 1, 2) * c;
}

std::pair<Rational, Rational> duality_check(int N, int g, int d, int m1, int m2) {
    require_sympl_N(N);
    require_g_d(g, d);
    long gb = g - 1;
    require_degree(m1 + 2L * m2, virtual_dim({Form::Symplectic, N, 2, g, d}));
    if (m2 - gb <= 0) throw HypothesisViolated("duality needs m2 - (g-1) > 0");
    Rational left = a_symm_r2(N + 2, g, d, {Monomial{Rational(1), m1, static_cast<int>(m2 - gb)}});
    Rational right = Rational(4).pow(d - gb) * a_sympl(N, g, d, m1, m2);
    return {left, right};
}

std::pair<Rational, Rational> compatibility_check(int N, int g, int d, int m1, int m2) {
    require_sympl_N(N);
    require_g_d(g, d);
    if (d < g) throw HypothesisViolated("compatibility check needs d >= g");
    require_degree(m1 + 2L + 2L * m2, virtual_dim({Form::Symplectic, N, 2, g, d}));
    return {a_sympl(N, g, d, m1 + 2, m2), a_sympl(N, g, d + 2, m1, m2 + N)};
}

} // namespace isoquot
