#pragma once

#include "isoquot/invariants.hpp"
#include "isoquot/series.hpp"

namespace isoquot {

// Series in (q1, q2) over Q(zeta_N) with polynomial t-dependence, attached to
// one weight pair w_i = zeta_N^{w_i}, where Y_i = w_i (1+q_i)^{1/N}.
struct FExpr {
    MultiSeries<Cyclo> value;
    int N = 4;
    int w1 = 0;
    int w2 = 1;
    int d = 0;
};

// Y_i^k as a series (i = 0 or 1).
MultiSeries<Cyclo> y_power(int N, int w, int var, long k, int d);

FExpr build_B(int N, int g, int d, const InsertionPoly& Q, int w1, int w2);
FExpr build_Tg(int N, int g, int d, int w1, int w2);
FExpr apply_delta_u(const FExpr& e, int u);
FExpr apply_dt(const FExpr& e);

// sum over pairs of [q^d] (Delta + d_t)^m (B T_g) at t=1, q1=q2=q.
Rational f2_intersect(int N, int g, int d, int m, const InsertionPoly& Q);
// Closed form for m = 1 via pair sums of D.B and w1 w2 B/(w1+w2).
Rational f2_closed_m1(int N, int g, int d, const InsertionPoly& Q);
// The d > g specialization, evaluated with the single-root trace engine.
Rational f2_closed_m1_roots(int N, int g, int d, const InsertionPoly& Q);

} // namespace isoquot
