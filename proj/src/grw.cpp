#include "isoquot/grw.hpp"
#include "isoquot/cyclo.hpp"
#include "isoquot/errors.hpp"
#include "isoquot/invariants.hpp"
#include "isoquot/rootsum.hpp"

#include <map>

namespace isoquot {

namespace {

Rational sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

void require_degree(long have, long vd) {
    if (have != vd)
        throw DegreeMismatch("insertion degree " + std::to_string(have) + " differs from expected dimension " +
                             std::to_string(vd));
}

// (1+z)^e1 z^e2 (1-z)^e3
RationalFunctionUni bundle(long e1, long e2, long e3) {
    return RationalFunctionUni::linear_power(Rational(1), Rational(1), e1) * RationalFunctionUni::z_power(e2) *
           RationalFunctionUni::linear_power(Rational(1), Rational(-1), e3);
}

// Laurent polynomial in z over Q(zeta).
class Laurent {
public:
    Laurent() = default;
    static Laurent mono(const Cyclo& c, int k) {
        Laurent l;
        if (!c.is_zero()) l.t_[k] = c;
        return l;
    }
    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (const auto& [k, c] : o.t_) r.add(k, c);
        return r;
    }
    Laurent operator-(const Laurent& o) const { return *this + o * Laurent::mono(Cyclo(-1), 0); }
    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (const auto& [k1, c1] : t_)
            for (const auto& [k2, c2] : o.t_) r.add(k1 + k2, c1 * c2);
        return r;
    }
    // Division by a single nonzero term c z^k.
    Laurent div_mono(const Cyclo& c, int k) const {
        Laurent r;
        Cyclo ci = c.inverse();
        for (const auto& [e, v] : t_) r.add(e - k, v * ci);
        return r;
    }
    bool operator==(const Laurent& o) const { return t_ == o.t_; }

private:
    void add(int k, const Cyclo& c) {
        auto it = t_.find(k);
        if (it == t_.end()) {
            if (!c.is_zero()) t_[k] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
    std::map<int, Cyclo> t_;
};

bool jacobian_at(int n, int k) {
    int N = 2 * n;
    Cyclo zeta = Cyclo::zeta(N, k);
    Cyclo one(1);
    // a1 = z(1+zeta), a2 = z^2 zeta, t = z^2
    Cyclo a1c = one + zeta, a2c = zeta;
    Laurent a1 = Laurent::mono(a1c, 1), a2 = Laurent::mono(a2c, 2);
    std::vector<Laurent> b(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        Cyclo s(0);
        for (int j = 0; j <= i; ++j) s += zeta.pow(2 * j);
        b[static_cast<size_t>(i)] = Laurent::mono(s, 2 * i);
    }
    auto B = [&](int i) {
        Laurent r;
        for (int j = 0; j <= i; ++j) r = r + b[static_cast<size_t>(j)] * b[static_cast<size_t>(i - j)];
        return r;
    };
    Laurent q = (b[static_cast<size_t>(n - 2)] * a2 * a2).div_mono(a1c, 1);
    Laurent two_a1a2_q = q.div_mono(Cyclo(2) * a1c * a2c, 3);
    Laurent two_a1_q = q.div_mono(Cyclo(2) * a1c, 1);
    Laurent Bn2 = B(n - 2), Bn1 = B(n - 1), Bn3 = (n >= 3) ? B(n - 3) : Laurent();
    Laurent det = Bn2 * (Bn2 - two_a1a2_q) - (Bn1 + two_a1_q) * Bn3;
    Laurent J = Laurent::mono(Cyclo(-4), 0) * a1 * a2 * det;
    Cyclo c = Cyclo(Rational(2L * n * (2 * n - 1))) / (zeta * (one + zeta) * (one - zeta) * (one - zeta));
    return J == Laurent::mono(c, 4 * n - 5);
}

} // namespace

long grw_expected_dim(GrassmannianKind kind, int n, int g, int d) {
    long gb = g - 1;
    if (kind == GrassmannianKind::SG) return (2L * n - 1) * d - (4L * n - 5) * gb;
    return (2L * n - 1) * d - (4L * n - 3) * gb;
}

Rational grw_sg(int n, int g, int d, int m1, int m2) {
    if (n < 2) throw InvalidArgument("SG(2,2n) needs n >= 2");
    if (g < 0 || d < 0 || m1 < 0 || m2 < 0) throw InvalidArgument("parameters must be non-negative");
    long gb = g - 1;
    require_degree(m1 + 2L * m2, grw_expected_dim(GrassmannianKind::SG, n, g, d));
    if (d >= g) {
        int N = 2 * n;
        // J = 2n(2n-1) zeta^{-1} (1+zeta)^{-1} (1-zeta)^{-2}
        Rational pre = sign(d + gb) * Rational(2L * n - 1, 2) * Rational(2L * n * (2 * n - 1)).pow(gb);
        return pre * sum_rational_over_roots(N, bundle(m1 + d - gb, m2 - gb, -2 * gb));
    }
    if (n == 2 && d == gb) return Rational(2).pow(gb) * Rational(3).pow(g) + sign(gb) * Rational(2).pow(d);
    if (g == 1 && d == 0) return Rational(2L * n * (n - 1));
    throw UnreachableRegime("d < g outside the two closed-form special cases");
}

Rational grw_og(int n, int g, int d, int m1, int m2) {
    if (n < 3) throw InvalidArgument("OG(2,2n+2) needs n >= 3");
    if (g < 0 || d < 0 || m1 < 0 || m2 < 0) throw InvalidArgument("parameters must be non-negative");
    long gb = g - 1;
    require_degree(m1 + 2L * m2, grw_expected_dim(GrassmannianKind::OG, n, g, d));
    if (d < g) throw UnsupportedRegime("OG closed form needs d >= g");
    int N = 2 * n;
    // (J'/4)^gbar with J' = 2n(2n-1)(1+zeta)^{-1}(1-zeta)^{-2}
    Rational jc = Rational(2L * n * (2 * n - 1), 4).pow(gb);
    Rational s = Rational(2L * n - 1, 2) * jc * sum_rational_over_roots(N, bundle(m1 + d - gb, m2, -2 * gb));
    if (m2 == 0) s += sign(gb) * Rational(4L * n - 2).pow(g) / Rational(4).pow(gb);
    return sign(gb + d) * Rational(4).pow(d) * s;
}

bool jacobian_identity_check(int n) {
    if (n < 2) throw InvalidArgument("Jacobian check needs n >= 2");
    for (int k = 1; k < 2 * n; ++k) {
        if (k == n) continue;
        if (!jacobian_at(n, k)) return false;
    }
    return true;
}

std::pair<Rational, Rational> grw_equals_quot(GrassmannianKind kind, int n, int g, int d, int m1, int m2) {
    if (kind == GrassmannianKind::SG) return {grw_sg(n, g, d, m1, m2), a_sympl(2 * n, g, d, m1, m2)};
    return {grw_og(n, g, d, m1, m2), a_symm_r2(2 * n + 2, g, d, {Monomial{Rational(1), m1, m2}})};
}

} // namespace isoquot
