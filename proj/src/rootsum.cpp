#include "isoquot/rootsum.hpp"
#include "isoquot/parallel.hpp"

namespace isoquot {

namespace {

void require_even(int N, int min) {
    if (N % 2 != 0 || N < min)
        throw InvalidArgument("root-set order must be even and >= " + std::to_string(min));
}

QPoly excluded_quotient(int N) {
    std::vector<Rational> c(static_cast<size_t>(N - 1), Rational(0));
    for (int j = 0; j < N - 1; j += 2) c[static_cast<size_t>(j)] = Rational(1);
    return QPoly(std::move(c));
}

} // namespace

RationalFunctionUni::RationalFunctionUni(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero_poly()) throw NotInvertible("rational function with zero denominator");
    if (num_.is_zero_poly()) {
        den_ = QPoly(Rational(1));
        return;
    }
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Rational li = den_.leading().inverse();
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
}

RationalFunctionUni RationalFunctionUni::z_power(long k) {
    if (k >= 0) return {QPoly::monomial(Rational(1), static_cast<int>(k)), QPoly(Rational(1))};
    return {QPoly(Rational(1)), QPoly::monomial(Rational(1), static_cast<int>(-k))};
}

RationalFunctionUni RationalFunctionUni::linear_power(const Rational& a, const Rational& b, long e) {
    QPoly lin(std::vector<Rational>{a, b});
    if (e >= 0) return {lin.pow(static_cast<int>(e)), QPoly(Rational(1))};
    return {QPoly(Rational(1)), lin.pow(static_cast<int>(-e))};
}

Cyclo RationalFunctionUni::eval(const Cyclo& z) const {
    Cyclo n(0), d(0);
    for (int k = num_.degree(); k >= 0; --k) n = n * z + Cyclo(num_.coeff(k));
    for (int k = den_.degree(); k >= 0; --k) d = d * z + Cyclo(den_.coeff(k));
    if (d.is_zero()) throw NotInvertible("denominator vanishes at evaluation point");
    return n / d;
}

RationalFunctionUni RationalFunctionUni::operator+(const RationalFunctionUni& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}
RationalFunctionUni RationalFunctionUni::operator-(const RationalFunctionUni& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}
RationalFunctionUni RationalFunctionUni::operator*(const RationalFunctionUni& o) const {
    return {num_ * o.num_, den_ * o.den_};
}
RationalFunctionUni RationalFunctionUni::operator/(const RationalFunctionUni& o) const {
    return {num_ * o.den_, den_ * o.num_};
}
RationalFunctionUni RationalFunctionUni::scaled(const Rational& s) const {
    return {num_.scaled(s), den_};
}

Rational power_sum(int N, long k) {
    require_even(N, 4);
    if (k < 0) throw InvalidArgument("power_sum needs k >= 0");
    long r = (k % N == 0 ? N : 0) - 1 - (k % 2 == 0 ? 1 : -1);
    return Rational(r);
}

Rational sum_rational_over_roots(int N, const RationalFunctionUni& F) {
    require_even(N, 4);
    QPoly P = excluded_quotient(N);
    if (gcd(F.den(), P).degree() > 0)
        throw DenominatorVanishesAtRoot("denominator shares a root with (z^N-1)/(z^2-1)");
    auto mod = std::make_shared<const QPoly>(P);
    ResidueElement num(F.num(), mod), den(F.den(), mod);
    ResidueElement g = num * invert_mod(den);
    Rational tr(0);
    const QPoly& rep = g.representative();
    for (int k = 0; k <= rep.degree(); ++k)
        if (!rep.coeff(k).is_zero()) tr += rep.coeff(k) * power_sum(N, k);
    return tr;
}

Rational sum_rational_over_roots_enum(int N, const RationalFunctionUni& F) {
    require_even(N, 4);
    Cyclo acc = Cyclo::constant(N, Rational(0));
    for (int k = 1; k < N; ++k) {
        if (k == N / 2) continue;
        try {
            acc += F.eval(Cyclo::zeta(N, k));
        } catch (const NotInvertible&) {
            throw DenominatorVanishesAtRoot("pole at zeta^" + std::to_string(k));
        }
    }
    return acc.to_rational();
}

std::vector<std::pair<int, int>> admissible_pairs(int N) {
    require_even(N, 2);
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            if (b != a + N / 2) out.emplace_back(a, b);
    return out;
}

Rational sum_over_pair_indices(int N, const PairIndexFn& G) {
    auto pairs = admissible_pairs(N);
    Cyclo total = parallel_sum(pairs.size(), [&](size_t i) {
        try {
            return G(pairs[i].first, pairs[i].second);
        } catch (const NotInvertible&) {
            throw DenominatorVanishesAtPair("pole at pair (" + std::to_string(pairs[i].first) + "," +
                                            std::to_string(pairs[i].second) + ")");
        }
    }, Cyclo::constant(N, Rational(0)));
    return total.to_rational();
}

Rational sum_over_pairs(int N, const PairFn& G) {
    return sum_over_pair_indices(N, [&](int a, int b) { return G(Cyclo::zeta(N, a), Cyclo::zeta(N, b)); });
}

} // namespace isoquot
