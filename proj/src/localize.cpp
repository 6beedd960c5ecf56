#include "isoquot/localize.hpp"
#include "isoquot/errors.hpp"
#include "isoquot/parallel.hpp"

#include <functional>
#include <set>

namespace isoquot {

namespace {

using S = MultiSeries<Rational>;

const Rational kT0[] = {Rational(1, 7), Rational(1, 11), Rational(1, 13), Rational(1, 17)};

void require_even_N(int N) {
    if (N < 2 || N % 2) throw InvalidArgument("N must be even and >= 2");
}

// Evaluates f(t0) at the first two t0 values and insists on agreement.
Rational certified(const std::function<Rational(const Rational&)>& f) {
    std::vector<Rational> vals;
    for (const auto& t0 : kT0) {
        try {
            vals.push_back(f(t0));
        } catch (const DegenerateParameter&) {
            continue;
        }
        if (vals.size() == 2) break;
    }
    if (vals.size() < 2) throw DegenerateParameter("no two valid equivariant parameters");
    if (!(vals[0] == vals[1])) throw TIndependenceFailure("localization result depends on t0");
    return vals[0];
}

std::vector<Rational> x_coeffs(const std::vector<int>& x, size_t nvars) {
    std::vector<Rational> a(nvars, Rational(0));
    for (size_t i = 0; i < x.size(); ++i) a[i] = Rational(x[i]);
    return a;
}

} // namespace

std::vector<long> default_weights(int N) {
    require_even_N(N);
    int n = N / 2;
    std::vector<long> w;
    for (int i = 1; i <= n; ++i) w.push_back(i);
    for (int i = 1; i <= n; ++i) w.push_back(-i);
    return w;
}

std::vector<long> prime_weights(int N) {
    require_even_N(N);
    int n = N / 2;
    std::vector<long> p;
    for (long c = 2; static_cast<int>(p.size()) < n; ++c) {
        bool prime = true;
        for (long q : p)
            if (c % q == 0) prime = false;
        if (prime) p.push_back(c);
    }
    std::vector<long> w(p);
    for (long x : p) w.push_back(-x);
    return w;
}

void check_weights(const std::vector<long>& w) {
    if (w.empty() || w.size() % 2) throw InvalidArgument("weight vector must have even length");
    size_t n = w.size() / 2;
    std::set<long> seen(w.begin(), w.end());
    if (seen.size() != w.size()) throw InvalidArgument("weights must be distinct");
    for (size_t i = 0; i < n; ++i)
        if (w[i] != -w[i + n]) throw InvalidArgument("weights must satisfy w_i = -w_{i+n}");
}

std::vector<FixedLocus> enumerate_fixed_loci(int N, int r, int d) {
    require_even_N(N);
    int n = N / 2;
    if (r < 1 || r > n) throw InvalidArgument("r must satisfy 1 <= r <= N/2");
    if (d < 0) throw InvalidArgument("d must be non-negative");
    std::vector<FixedLocus> out;
    std::vector<int> ks, ds(static_cast<size_t>(r), 0);
    std::vector<std::vector<int>> comps;
    std::function<void(int, int)> comp = [&](int i, int left) {
        if (i == r - 1) {
            ds[static_cast<size_t>(i)] = left;
            comps.push_back(ds);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            ds[static_cast<size_t>(i)] = k;
            comp(i + 1, left - k);
        }
    };
    comp(0, d);
    std::function<void(int)> pick = [&](int start) {
        if (static_cast<int>(ks.size()) == r) {
            for (const auto& c : comps) out.push_back({ks, c});
            return;
        }
        for (int k = start; k < N; ++k) {
            bool ok = true;
            for (int j : ks)
                if ((k - j) % n == 0) ok = false;
            if (!ok) continue;
            ks.push_back(k);
            pick(k + 1);
            ks.pop_back();
        }
    };
    pick(0);
    return out;
}

std::vector<NormalFactor> normal_factors(const FixedLocus& loc, Form family, const std::vector<long>& w,
                                         const Rational& t0) {
    check_weights(w);
    int N = static_cast<int>(w.size());
    int r = static_cast<int>(loc.k.size());
    if (static_cast<int>(loc.d.size()) != r) throw InvalidArgument("locus arity mismatch");
    auto wk = [&](int i) { return w[static_cast<size_t>(loc.k[static_cast<size_t>(i)])]; };
    auto di = [&](int i) { return static_cast<long>(loc.d[static_cast<size_t>(i)]); };
    std::vector<NormalFactor> fs;
    auto push = [&](long weight, std::vector<int> x, long chi) {
        Rational c = Rational(weight) * t0;
        if (c.is_zero()) throw DegenerateParameter("a normal-bundle factor has zero weight");
        fs.push_back({c, std::move(x), chi});
    };
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < N; ++k) {
            if (k == loc.k[static_cast<size_t>(i)]) continue;
            std::vector<int> x(static_cast<size_t>(r), 0);
            x[static_cast<size_t>(i)] = 1;
            push(wk(i) - w[static_cast<size_t>(k)], x, di(i) + 1);
        }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            std::vector<int> x(static_cast<size_t>(r), 0);
            x[static_cast<size_t>(i)] += 1;
            x[static_cast<size_t>(j)] -= 1;
            push(wk(i) - wk(j), x, -(di(i) - di(j) + 1));
        }
    for (int i = 0; i < r; ++i)
        for (int j = (family == Form::Symmetric ? i : i + 1); j < r; ++j) {
            std::vector<int> x(static_cast<size_t>(r), 0);
            x[static_cast<size_t>(i)] += 1;
            x[static_cast<size_t>(j)] += 1;
            push(wk(i) + wk(j), x, -(di(i) + di(j) + 1));
        }
    return fs;
}

MultiSeries<Rational> inverse_euler_g0(const FixedLocus& loc, Form family, const std::vector<long>& w,
                                       const Rational& t0) {
    const auto& o = loc.d;
    S tot = S::constant(o, Rational(1));
    for (const auto& f : normal_factors(loc, family, w, t0))
        tot *= S::linear_power(o, f.constant, x_coeffs(f.x, o.size()), -f.chi);
    return tot;
}

Rational intersect_oracle_g0(int N, int d, int m1, int m2, int mf) {
    return intersect_oracle_g0(N, d, m1, m2, mf, default_weights(N));
}

Rational intersect_oracle_g0(int N, int d, int m1, int m2, int mf, const std::vector<long>& w) {
    require_even_N(N);
    if (N < 4) throw InvalidArgument("N must be >= 4");
    if (d < 0 || m1 < 0 || m2 < 0 || mf < 0) throw InvalidArgument("parameters must be non-negative");
    if (static_cast<int>(w.size()) != N) throw InvalidArgument("weight vector must have N entries");
    long vd = virtual_dim({Form::Symplectic, N, 2, 0, d});
    long have = m1 + 2L * m2 + mf;
    if (have != vd)
        throw DegreeMismatch("insertion degree " + std::to_string(have) + " differs from virtual dimension " +
                             std::to_string(vd));
    auto loci = enumerate_fixed_loci(N, 2, d);
    return certified([&](const Rational& t0) {
        return parallel_sum(loci.size(), [&](size_t li) {
            const auto& loc = loci[li];
            const auto& o = loc.d;
            Rational w1 = Rational(w[static_cast<size_t>(loc.k[0])]) * t0;
            Rational w2 = Rational(w[static_cast<size_t>(loc.k[1])]) * t0;
            S Y1 = S::linear_power(o, w1, {Rational(1), Rational(0)}, 1);
            S Y2 = S::linear_power(o, w2, {Rational(0), Rational(1)}, 1);
            // f2 restricts to d1 Y2 + d2 Y1 at genus 0
            S f2 = Y2 * Rational(o[0]) + Y1 * Rational(o[1]);
            S integrand = (Y1 + Y2).pow(m1) * (Y1 * Y2).pow(m2) * f2.pow(mf) *
                          inverse_euler_g0(loc, Form::Symplectic, w, t0);
            return integrand.coefficient(o);
        }, Rational(0));
    });
}

Rational evir_g0(int N, int r, int d, Form family) {
    Rational v = evir_g0(N, r, d, family, default_weights(N));
    if (d <= 2 && !(evir_g0(N, r, d, family, prime_weights(N)) == v))
        throw TIndependenceFailure("virtual Euler characteristic depends on the weights");
    return v;
}

Rational evir_g0(int N, int r, int d, Form family, const std::vector<long>& w) {
    if (static_cast<int>(w.size()) != N) throw InvalidArgument("weight vector must have N entries");
    auto loci = enumerate_fixed_loci(N, r, d);
    return certified([&](const Rational& t0) {
        return parallel_sum(loci.size(), [&](size_t li) {
            const auto& loc = loci[li];
            auto fs = normal_factors(loc, family, w, t0);
            long vd = d;
            for (const auto& f : fs) vd += f.chi;
            if (vd < 0) return Rational(0);
            // variables x_1..x_r and a grading variable lambda (last), truncated at vd
            std::vector<int> o(loc.d);
            o.push_back(static_cast<int>(vd));
            size_t nv = o.size();
            S tot = S::constant(o, Rational(1));
            // c(T_F) = prod (1 + lambda x_i)^{d_i+1}
            for (int i = 0; i < r; ++i) {
                S c(o);
                std::vector<int> e(nv, 0);
                int di = loc.d[static_cast<size_t>(i)];
                for (int a = 0; a <= std::min(di, static_cast<int>(vd)); ++a) {
                    e[static_cast<size_t>(i)] = a;
                    e[nv - 1] = a;
                    c.add_to(e, 0, binomial(di + 1, a));
                }
                tot *= c;
            }
            // c(N)/e(N) per factor: (1 + lambda rho)^chi rho^{-chi} = sum_j C(chi,j) lambda^j rho^{j-chi}
            std::vector<int> xo(loc.d);
            for (const auto& f : fs) {
                if (f.chi == 0) continue;
                S fac(o);
                S rho = S::linear_power(xo, f.constant, x_coeffs(f.x, xo.size()), 1);
                S pw = S::linear_power(xo, f.constant, x_coeffs(f.x, xo.size()), -f.chi);
                for (long j = 0; j <= vd; ++j) {
                    Rational c = gen_binomial(Rational(f.chi), j);
                    if (!c.is_zero()) {
                        pw.for_each([&](const std::vector<int>& e, int, const Rational& v) {
                            std::vector<int> ee(e);
                            ee.push_back(static_cast<int>(j));
                            fac.add_to(ee, 0, c * v);
                        });
                    }
                    if (j < vd) pw *= rho;
                }
                tot *= fac;
            }
            std::vector<int> top(loc.d);
            top.push_back(static_cast<int>(vd));
            return tot.coefficient(top);
        }, Rational(0));
    });
}

std::vector<Rational> evir_series(int N, int r, int dmax, Form family) {
    if (dmax < 0) throw InvalidArgument("dmax must be non-negative");
    std::vector<Rational> out;
    for (int d = 0; d <= dmax; ++d) {
        Rational v = evir_g0(N, r, d, family);
        if (family == Form::Symplectic && !v.is_integer())
            throw std::logic_error("virtual Euler characteristic is not an integer");
        out.push_back(v);
    }
    return out;
}

std::vector<Rational> etop_series(int N, int r, int g, int dmax) {
    require_even_N(N);
    int n = N / 2;
    if (r < 1 || r > n) throw InvalidArgument("r must satisfy 1 <= r <= N/2");
    if (g < 0 || dmax < 0) throw InvalidArgument("g and dmax must be non-negative");
    Rational pre = Rational(2).pow(r) * binomial(n, r);
    std::vector<Rational> out;
    for (int d = 0; d <= dmax; ++d)
        out.push_back(pre * Rational(d % 2 ? -1 : 1) * gen_binomial(Rational(static_cast<long>(r) * (2 * g - 2)), d));
    return out;
}

} // namespace isoquot
