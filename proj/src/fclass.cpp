#include "isoquot/fclass.hpp"
#include "isoquot/rootsum.hpp"

#include <stdexcept>

namespace isoquot {

namespace {

using S = MultiSeries<Cyclo>;

Rational sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

std::vector<int> orders(int d) { return {d, d}; }

void check_common(int N, int g, int d, int m, const InsertionPoly& Q) {
    if (N < 4 || N % 2) throw InvalidArgument("N must be even and >= 4");
    if (g < 0 || d < 0 || m < 0) throw InvalidArgument("g, d, m must be non-negative");
    long vd = virtual_dim({Form::Symplectic, N, 2, g, d});
    long have = weighted_degree(Q) + m;
    if (have != vd)
        throw DegreeMismatch("m + deg Q = " + std::to_string(have) + " differs from virtual dimension " +
                             std::to_string(vd));
}

S q_over_one_plus(int var, int d) {
    std::vector<Cyclo> a(2, Cyclo(0));
    a[static_cast<size_t>(var)] = Cyclo(1);
    return S::linear_power(orders(d), Cyclo(0), a, 1) * S::binomial(orders(d), var, Rational(-1));
}

// u * sum_c (z1+z2)^m1 (z1 z2)^m2 times the remaining factors of B, at a pair point.
struct PairB {
    Cyclo B;    // B(z1, z2)
    Cyclo DB;   // (z1 z2 / 2)(d1 + d2) B
};

PairB pair_B(int N, int g, int d, const InsertionPoly& Q, const Cyclo& z1, const Cyclo& z2) {
    long gb = g - 1;
    Cyclo s = z1 + z2, p = z1 * z2, df = z1 - z2;
    Cyclo rest = Cyclo(sign(gb + d) * Rational(N).pow(2 * gb)) * s.pow(d - gb) * df.pow(-2 * gb) *
                 p.pow((N - 1) * gb);
    Cyclo q(0), dq(0);
    for (const auto& m : Q) {
        Cyclo c(m.coeff);
        q += c * s.pow(m.m1) * p.pow(m.m2);
        if (m.m1) dq += c * Cyclo(Rational(2L * m.m1)) * s.pow(m.m1 - 1) * p.pow(m.m2);
        if (m.m2) dq += c * Cyclo(Rational(m.m2)) * s.pow(m.m1 + 1) * p.pow(m.m2 - 1);
    }
    Cyclo logd = Cyclo(Rational(2 * (d - gb))) / s + Cyclo(Rational((N - 1) * gb)) * (z1.inverse() + z2.inverse());
    Cyclo B = q * rest;
    Cyclo DB = p * Cyclo(Rational(1, 2)) * (dq * rest + B * logd);
    return {B, DB};
}

} // namespace

S y_power(int N, int w, int var, long k, int d) {
    return S::binomial(orders(d), var, Rational(k, N)) * Cyclo::zeta(N, static_cast<long>(w) * k);
}

FExpr build_B(int N, int g, int d, const InsertionPoly& Q, int w1, int w2) {
    if (((w1 - w2) % N + N) % N == 0 || ((w1 - w2 - N / 2) % N + N) % N == 0)
        throw NonUnitDenominator("weights must satisfy w1 != +-w2");
    long gb = g - 1;
    auto o = orders(d);
    S Y1 = y_power(N, w1, 0, 1, d), Y2 = y_power(N, w2, 1, 1, d);
    S sum = Y1 + Y2;
    S prod = Y1 * Y2;
    S q(o);
    for (const auto& m : Q) q += sum.pow(m.m1) * prod.pow(m.m2) * Cyclo(m.coeff);
    S B = q * sum.pow(d - gb) * (Y1 - Y2).pow(-2 * gb) * y_power(N, w1, 0, (N - 1) * gb, d) *
          y_power(N, w2, 1, (N - 1) * gb, d) * Cyclo(sign(gb + d) * Rational(N).pow(2 * gb));
    return {B, N, w1, w2, d};
}

FExpr build_Tg(int N, int g, int d, int w1, int w2) {
    auto o = orders(d);
    S Y1 = y_power(N, w1, 0, 1, d), Y2 = y_power(N, w2, 1, 1, d);
    S inv_sum = (Y1 + Y2).invert() * Cyclo(Rational(1, N));
    S eta1 = q_over_one_plus(0, d) * Y1 * inv_sum;
    S eta2 = q_over_one_plus(1, d) * Y2 * inv_sum;
    S one = S::constant(o, Cyclo(1));
    S t = S::t_variable(o);
    S base = (one - eta1) * (one - eta2) - t * t * eta1 * eta2;
    return {base.pow(g), N, w1, w2, d};
}

FExpr apply_delta_u(const FExpr& e, int u) {
    if (u < 0) throw InvalidArgument("u must be non-negative");
    if (u == 0) return e;
    S total(e.value.orders());
    for (int i = 0; i <= u; ++i) {
        S f = y_power(e.N, e.w2, 1, i, e.d) * y_power(e.N, e.w1, 0, u - i, e.d) * e.value;
        for (int k = 0; k < i; ++k) f = f.euler(0);
        for (int k = 0; k < u - i; ++k) f = f.euler(1);
        total += f * Cyclo(binomial(u, i));
    }
    return {total, e.N, e.w1, e.w2, e.d};
}

FExpr apply_dt(const FExpr& e) {
    S sum = y_power(e.N, e.w1, 0, 1, e.d) + y_power(e.N, e.w2, 1, 1, e.d);
    return {e.value.derive_t() * sum * Cyclo(-1), e.N, e.w1, e.w2, e.d};
}

Rational f2_intersect(int N, int g, int d, int m, const InsertionPoly& Q) {
    check_common(N, g, d, m, Q);
    return sum_over_pair_indices(N, [&](int a, int b) {
        FExpr T = build_Tg(N, g, d, a, b);
        FExpr F = build_B(N, g, d, Q, a, b);
        F.value *= T.value;
        S total(F.value.orders());
        FExpr cur = F;
        for (int k = 0; k <= m; ++k) {
            // cur = d_t^k (B T_g)
            if (cur.value.t_degree() > std::max(2 * g - k, 0))
                throw std::logic_error("t-degree bound violated in f-class engine");
            total += apply_delta_u(cur, m - k).value * Cyclo(binomial(m, m - k));
            if (k < m) cur = apply_dt(cur);
        }
        S diag = total.eval_t(Cyclo(1)).diagonal(0, 1);
        return diag.coefficient({d});
    });
}

Rational f2_closed_m1(int N, int g, int d, const InsertionPoly& Q) {
    check_common(N, g, d, 1, Q);
    auto pairs = admissible_pairs(N);
    Cyclo sDB(0), sX(0);
    for (auto [a, b] : pairs) {
        Cyclo z1 = Cyclo::zeta(N, a), z2 = Cyclo::zeta(N, b);
        PairB pb = pair_B(N, g, d, Q, z1, z2);
        sDB += pb.DB;
        sX += z1 * z2 * pb.B / (z1 + z2);
    }
    Rational DB = sDB.to_rational(), X = sX.to_rational();
    Rational c1 = Rational(2, N) * t_series_coeff(N, g, d - 1);
    Rational c2 = Rational(2L * g, static_cast<long>(N) * N) * t_series_coeff(N, g - 1, d - 2) -
                  Rational(2L * g, N) * t_series_coeff(N, g - 1, d - 1, -1);
    return c1 * DB + c2 * X;
}

Rational f2_closed_m1_roots(int N, int g, int d, const InsertionPoly& Q) {
    check_common(N, g, d, 1, Q);
    if (d <= g) throw HypothesisViolated("root form needs d > g");
    using RF = RationalFunctionUni;
    long gb = g - 1;
    auto one_plus = [](long e) { return RF::linear_power(Rational(1), Rational(1), e); };
    RF rest = one_plus(d - gb) * RF::linear_power(Rational(1), Rational(-1), -2 * gb) *
              RF::z_power((N - 1) * gb);
    rest = rest.scaled(sign(gb + d) * Rational(N).pow(2 * gb));
    RF q(QPoly(Rational(0))), dq(QPoly(Rational(0)));
    for (const auto& m : Q) {
        q = q + (one_plus(m.m1) * RF::z_power(m.m2)).scaled(m.coeff);
        if (m.m1) dq = dq + (one_plus(m.m1 - 1) * RF::z_power(m.m2)).scaled(m.coeff * Rational(2L * m.m1));
        if (m.m2) dq = dq + (one_plus(m.m1 + 1) * RF::z_power(m.m2 - 1)).scaled(m.coeff * Rational(m.m2));
    }
    RF B = q * rest;
    RF logd = one_plus(-1).scaled(Rational(2 * (d - gb))) +
              (RF::z_power(0) + RF::z_power(-1)).scaled(Rational((N - 1) * gb));
    RF DB = RF::z_power(1).scaled(Rational(1, 2)) * (dq * rest + B * logd);
    RF X = RF::z_power(1) * B * one_plus(-1);
    Rational c(N - 1, N);
    Rational res = c.pow(g) * sum_rational_over_roots(N, DB);
    if (g > 0) res += Rational(g, N) * c.pow(g - 1) * sum_rational_over_roots(N, X);
    return res;
}

} // namespace isoquot
