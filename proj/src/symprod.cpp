#include "isoquot/symprod.hpp"

#include <functional>

namespace isoquot {

namespace {

Cyclo eval_form(const std::vector<Rational>& l, const std::vector<Cyclo>& Y) {
    if (l.size() != Y.size()) throw InvalidArgument("linear form arity mismatch");
    Cyclo s(0);
    for (size_t i = 0; i < l.size(); ++i)
        if (!l[i].is_zero()) s += Cyclo(l[i]) * Y[i];
    return s;
}

void check_input(const LBInput& in) {
    if (in.N < 2 || in.N % 2) throw InvalidArgument("N must be even and >= 2");
    if (in.g < 0 || in.d < 0) throw InvalidArgument("g and d must be non-negative");
    if (in.r < 1 || in.r > 2) throw InvalidArgument("r must be 1 or 2");
    if (static_cast<int>(in.p.size()) != in.r || static_cast<int>(in.w.size()) != in.r)
        throw InvalidArgument("p and w must have r entries");
    for (int pi : in.p)
        if (pi < 0) throw InvalidArgument("theta exponents must be non-negative");
}

void check_degree(const HomogeneousRational& R, long want) {
    auto deg = R.degree();
    if (deg && *deg != want)
        throw HomogeneityMismatch("R has degree " + std::to_string(*deg) + ", expected " + std::to_string(want));
}

std::vector<Cyclo> weight_points(const LBInput& in) {
    std::vector<Cyclo> w;
    for (int e : in.w) w.push_back(Cyclo::zeta(in.N, e));
    return w;
}

// h = x / ((w+x)^N - 1) as a series in variable i.
MultiSeries<Cyclo> h_series(const std::vector<int>& orders, int i, int N, const Cyclo& w) {
    using S = MultiSeries<Cyclo>;
    S den(orders);
    std::vector<int> e(orders.size(), 0);
    for (int k = 1; k <= N && k - 1 <= orders[static_cast<size_t>(i)]; ++k) {
        e[static_cast<size_t>(i)] = k - 1;
        den.add_to(e, 0, Cyclo(binomial(N, k)) * w.pow(N - k));
    }
    return den.invert();
}

} // namespace

HomogeneousRational HomogeneousRational::constant(const Rational& c) {
    return HomogeneousRational({RationalTerm{c, {}}});
}

HomogeneousRational HomogeneousRational::product(const Rational& c, std::vector<LinearFactor> factors) {
    return HomogeneousRational({RationalTerm{c, std::move(factors)}});
}

std::optional<long> HomogeneousRational::degree() const {
    std::optional<long> deg;
    for (const auto& t : terms_) {
        if (t.coeff.is_zero()) continue;
        long s = 0;
        for (const auto& f : t.factors) s += f.exponent;
        if (deg && *deg != s) throw HomogeneityMismatch("terms of R have different degrees");
        deg = s;
    }
    return deg;
}

HomogeneousRational HomogeneousRational::times(const LinearFactor& f) const {
    auto t = terms_;
    for (auto& x : t) x.factors.push_back(f);
    return HomogeneousRational(std::move(t));
}

HomogeneousRational HomogeneousRational::operator+(const HomogeneousRational& o) const {
    auto t = terms_;
    t.insert(t.end(), o.terms_.begin(), o.terms_.end());
    return HomogeneousRational(std::move(t));
}

Cyclo HomogeneousRational::eval(const std::vector<Cyclo>& Y) const {
    Cyclo total(0);
    for (const auto& t : terms_) {
        if (t.coeff.is_zero()) continue;
        Cyclo v(t.coeff);
        for (const auto& f : t.factors) v *= eval_form(f.coeffs, Y).pow(f.exponent);
        total += v;
    }
    return total;
}

MultiSeries<Cyclo> HomogeneousRational::expand(const std::vector<int>& orders, const std::vector<Cyclo>& base) const {
    using S = MultiSeries<Cyclo>;
    S total(orders);
    for (const auto& t : terms_) {
        if (t.coeff.is_zero()) continue;
        S v = S::constant(orders, Cyclo(t.coeff));
        for (const auto& f : t.factors) {
            std::vector<Cyclo> a;
            for (const auto& c : f.coeffs) a.emplace_back(c);
            v *= S::linear_power(orders, eval_form(f.coeffs, base), a, f.exponent);
        }
        total += v;
    }
    return total;
}

Rational theta_reduce(int ell, int g) {
    if (ell < 0 || g < 0) throw InvalidArgument("theta_reduce needs ell, g >= 0");
    if (ell > g) return Rational(0);
    return factorial(g) / factorial(g - ell);
}

Rational phi_reduce(int two_ell, int g) {
    if (two_ell < 0 || two_ell % 2) throw InvalidArgument("phi exponent must be even and non-negative");
    int ell = two_ell / 2;
    if (ell > g) throw EllExceedsGenus("phi exponent exceeds 2g");
    Rational s = (ell % 2) ? Rational(-1) : Rational(1);
    return s * binomial(2 * ell, ell) / binomial(g, ell);
}

Rational coeff_linear_binomial(long k, const Rational& c0, const Rational& c1, long e1, long e2) {
    if (k < 0) return Rational(0);
    if (e1 < 0) throw InvalidArgument("e1 must be non-negative");
    Rational s(0);
    for (long j = 0; j <= std::min(k, e1); ++j)
        s += binomial(e1, j) * c0.pow(e1 - j) * c1.pow(j) * gen_binomial(Rational(e2), k - j);
    return s;
}

Cyclo lb_theta_sum(const LBInput& in) {
    check_input(in);
    long gb = in.g - 1;
    long p = 0;
    for (int pi : in.p) p += pi;
    check_degree(in.R, static_cast<long>(in.N) * in.d - in.r * gb * (in.N - 1) - p);
    for (int pi : in.p)
        if (pi > in.g) return Cyclo(0);
    auto w = weight_points(in);
    Rational q = coeff_linear_binomial(in.d - p, in.a + in.b, in.a, static_cast<long>(in.r) * in.g - p,
                                       in.d - static_cast<long>(in.r) * in.g);
    if (q.is_zero()) return Cyclo(0);
    Cyclo v = in.R.eval(w) * Cyclo(q * Rational(in.N).pow(-in.r));
    for (int i = 0; i < in.r; ++i) {
        v *= w[static_cast<size_t>(i)].pow(in.p[static_cast<size_t>(i)] - gb);
        v *= Cyclo(binomial(in.g, in.p[static_cast<size_t>(i)]));
    }
    return v;
}

Cyclo pair_sum_r2(const LBInput& in) {
    check_input(in);
    if (in.r != 2) throw InvalidArgument("pair_sum_r2 needs r = 2");
    if (in.p[0] != 0 || in.p[1] != 0) throw InvalidArgument("pair_sum_r2 needs p = 0");
    long gb = in.g - 1;
    check_degree(in.R, static_cast<long>(in.N) * in.d - 2 * gb * (in.N - 1));
    // (1+q)^d (qT/(1+q))^{2g} (1-1/T)^g = (1+q)^{d-2g} (a+b+aq)^g (a+b+(a-1)q)^g
    QPoly l1(std::vector<Rational>{in.a + in.b, in.a});
    QPoly l2(std::vector<Rational>{in.a + in.b, in.a - Rational(1)});
    QPoly poly = l1.pow(in.g) * l2.pow(in.g);
    Rational q(0);
    for (int j = 0; j <= std::min(poly.degree(), in.d); ++j)
        q += poly.coeff(j) * gen_binomial(Rational(in.d - 2L * in.g), in.d - j);
    if (q.is_zero()) return Cyclo(0);
    auto w = weight_points(in);
    return in.R.eval(w) * (w[0] * w[1]).pow(-gb) * Cyclo(q / Rational(in.N * in.N));
}

MultiSeries<Cyclo> lb_integrand(const LBInput& in, const std::vector<int>& degs) {
    using S = MultiSeries<Cyclo>;
    check_input(in);
    if (static_cast<int>(degs.size()) != in.r) throw InvalidArgument("degs must have r entries");
    long gb = in.g - 1;
    auto w = weight_points(in);
    S f = in.R.expand(degs, w);
    for (int i = 0; i < in.r; ++i) {
        size_t ui = static_cast<size_t>(i);
        int pi = in.p[ui];
        if (pi > in.g) return S(degs);
        std::vector<Cyclo> unit(degs.size(), Cyclo(0));
        unit[ui] = Cyclo(1);
        S h = h_series(degs, i, in.N, w[ui]);
        // B(Y) = (a Y^N + b)/Y with Y = w + x
        S Bv = (S::linear_power(degs, w[ui], unit, in.N) * Cyclo(in.a) + S::constant(degs, Cyclo(in.b))) *
               S::linear_power(degs, w[ui], unit, -1);
        S z = Bv * h - S::constant(degs, Cyclo(1)); // x*z
        S xp = S::linear_power(degs, Cyclo(0), unit, pi);
        // sum_l theta^{p+l}/(p! l!) z^l with theta^k -> theta_reduce(k) x^k
        S acc(degs), zl = S::constant(degs, Cyclo(1));
        for (int l = 0; l + pi <= in.g; ++l) {
            Rational c = theta_reduce(pi + l, in.g) / (factorial(pi) * factorial(l));
            acc += zl * Cyclo(c);
            zl *= z;
        }
        f *= acc * xp * h.pow(degs[ui] - gb);
    }
    return f;
}

Cyclo brute_force_g0(const std::vector<int>& degs, const MultiSeries<Cyclo>& integrand) {
    if (static_cast<int>(degs.size()) != integrand.nvars()) throw InvalidArgument("degree arity mismatch");
    Cyclo s(0);
    int td = std::max(integrand.t_degree(), 0);
    for (int te = 0; te <= td; ++te) s += integrand.coefficient(degs, te);
    return s;
}

Cyclo brute_force_lb(const LBInput& in) {
    check_input(in);
    Cyclo total(0);
    std::vector<int> degs(static_cast<size_t>(in.r), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == in.r - 1) {
            degs[static_cast<size_t>(i)] = left;
            total += brute_force_g0(degs, lb_integrand(in, degs));
            return;
        }
        for (int k = 0; k <= left; ++k) {
            degs[static_cast<size_t>(i)] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, in.d);
    return total;
}

} // namespace isoquot
