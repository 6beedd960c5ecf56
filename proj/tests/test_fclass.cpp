#include "isoquot/errors.hpp"
#include "isoquot/fclass.hpp"
#include "isoquot/localize.hpp"

#include <doctest.h>

using namespace isoquot;
using S = MultiSeries<Cyclo>;

namespace {

InsertionPoly mono(int m1, int m2) { return {Monomial{Rational(1), m1, m2}}; }

long vd(int N, int g, int d) { return virtual_dim({Form::Symplectic, N, 2, g, d}); }

template <class F>
void for_each_monomial(long deg, F f) {
    for (int m2 = 0; 2 * m2 <= deg; ++m2) f(static_cast<int>(deg - 2 * m2), m2);
}

} // namespace

TEST_SUITE("fclass") {

TEST_CASE("B at genus one has no denominator") {
    int N = 4, d = 2;
    auto Q = parse_insertion("1:4:1;2:2:2");
    FExpr B = build_B(N, 1, d, Q, 0, 1);
    S Y1 = y_power(N, 0, 0, 1, d), Y2 = y_power(N, 1, 1, 1, d);
    S want = ((Y1 + Y2).pow(4) * (Y1 * Y2) + (Y1 + Y2).pow(2) * (Y1 * Y2).pow(2) * Cyclo(2)) * (Y1 + Y2).pow(d);
    CHECK((B.value - want).all_zero());
}

TEST_CASE("B constant term") {
    for (int N : {4, 6})
        for (int g = 0; g <= 2; ++g) {
            int d = 1;
            long gb = g - 1;
            auto Q = mono(static_cast<int>(vd(N, g, d)), 0);
            int a = 1, b = 2;
            if (N == 4) b = 0;
            Cyclo w1 = Cyclo::zeta(N, a), w2 = Cyclo::zeta(N, b);
            Cyclo u((gb + d) % 2 ? -1 : 1);
            Cyclo want = u * (w1 + w2).pow(Q[0].m1) * (w1 + w2).pow(d - gb) * (w1 - w2).pow(-2 * gb) *
                         (Cyclo(N) * w1.pow(N - 1)).pow(gb) * (Cyclo(N) * w2.pow(N - 1)).pow(gb);
            CHECK(build_B(N, g, d, Q, a, b).value.constant_term() == want);
        }
}

TEST_CASE("B rejects coincident or antipodal weights") {
    CHECK_THROWS_AS(build_B(4, 0, 0, mono(3, 0), 1, 1), NonUnitDenominator);
    CHECK_THROWS_AS(build_B(4, 0, 0, mono(3, 0), 0, 2), NonUnitDenominator);
    CHECK_THROWS_AS(build_B(6, 0, 0, mono(3, 0), 1, 4), NonUnitDenominator);
}

TEST_CASE("Euler-type operator") {
    int N = 4, d = 3;
    FExpr e = build_B(N, 1, d, mono(static_cast<int>(vd(N, 1, d)), 0), 0, 1);
    CHECK((apply_delta_u(e, 0).value - e.value).all_zero());
    FExpr c{S::constant({d, d}, Cyclo(5)), N, 0, 1, d};
    CHECK(apply_delta_u(c, 1).value.all_zero());
    FExpr y{y_power(N, 0, 0, 1, d) * y_power(N, 1, 1, 1, d), N, 0, 1, d};
    S dy = apply_delta_u(y, 1).value;
    CHECK(dy.constant_term().is_zero());
    CHECK(!dy.all_zero());
    CHECK_THROWS_AS(apply_delta_u(y, -1), InvalidArgument);
}

TEST_CASE("t-derivative operator") {
    int N = 6, d = 2;
    std::vector<int> o{d, d};
    FExpr free{y_power(N, 1, 0, 3, d), N, 1, 2, d};
    CHECK(apply_dt(free).value.all_zero());
    S t = S::t_variable(o);
    FExpr t2{t * t, N, 1, 2, d};
    S want = t * (y_power(N, 1, 0, 1, d) + y_power(N, 2, 1, 1, d)) * Cyclo(-2);
    CHECK((apply_dt(t2).value - want).all_zero());
}

TEST_CASE("t-derivative of the T factor") {
    for (int N : {4, 6})
        for (int g = 1; g <= 3; ++g) {
            int d = 4, a = 0, b = 1;
            S got = apply_dt(build_Tg(N, g, d, a, b)).value.eval_t(Cyclo(1)).diagonal(0, 1);
            Cyclo w1 = Cyclo::zeta(N, a), w2 = Cyclo::zeta(N, b);
            std::vector<int> o{d};
            // (1 - q/(N(1+q))) = (N + (N-1)q) / (N(1+q))
            S Tq = S::linear_power(o, Cyclo(N), {Cyclo(N - 1)}, g - 1) * S::binomial(o, 0, Rational(1 - g)) *
                   Cyclo(Rational(N).pow(1 - g));
            S want = S::linear_power(o, Cyclo(0), {Cyclo(1)}, 2) * S::binomial(o, 0, Rational(-2)) *
                     S::binomial(o, 0, Rational(1, N)) * Tq *
                     (Cyclo(Rational(2 * g, N * N)) * w1 * w2 / (w1 + w2));
            CHECK((got - want).all_zero());
        }
}

TEST_CASE("m=0 reproduces the pair-sum evaluator") {
    for (int N : {4, 6})
        for (int g = 0; g <= 2; ++g)
            for (int d = 0; d <= 2; ++d)
                for_each_monomial(vd(N, g, d), [&](int m1, int m2) {
                    CHECK(f2_intersect(N, g, d, 0, mono(m1, m2)) == a_sympl_poly(N, g, d, mono(m1, m2)));
                });
}

TEST_CASE("m=1 engine matches the closed form") {
    for (int N : {4, 6})
        for (int g = 0; g <= 2; ++g)
            for (int d = 0; d <= 2; ++d)
                for_each_monomial(vd(N, g, d) - 1, [&](int m1, int m2) {
                    Rational e = f2_intersect(N, g, d, 1, mono(m1, m2));
                    CHECK(e == f2_closed_m1(N, g, d, mono(m1, m2)));
                    if (d > g) CHECK(e == f2_closed_m1_roots(N, g, d, mono(m1, m2)));
                });
    CHECK_THROWS_AS(f2_closed_m1_roots(4, 1, 1, mono(2, 0)), HypothesisViolated);
}

TEST_CASE("genus zero f-class against localization") {
    for (int d = 0; d <= 2; ++d)
        for (int m = 1; m <= 2; ++m)
            for_each_monomial(vd(4, 0, d) - m, [&](int m1, int m2) {
                CHECK(f2_intersect(4, 0, d, m, mono(m1, m2)) == intersect_oracle_g0(4, d, m1, m2, m));
            });
}

TEST_CASE("f-class argument checks") {
    CHECK_THROWS_AS(f2_intersect(4, 0, 0, 1, mono(3, 0)), DegreeMismatch);
    CHECK_THROWS_AS(f2_intersect(5, 0, 0, 0, mono(3, 0)), InvalidArgument);
    CHECK_THROWS_AS(f2_intersect(4, 0, 0, -1, mono(3, 0)), InvalidArgument);
}

}
