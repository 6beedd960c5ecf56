#include "isoquot/checks.hpp"
#include "isoquot/errors.hpp"
#include "isoquot/fclass.hpp"
#include "isoquot/grw.hpp"
#include "isoquot/invariants.hpp"
#include "isoquot/localize.hpp"
#include "isoquot/rootsum.hpp"
#include "isoquot/symprod.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace isoquot {

namespace {

using Suite = std::function<void(std::vector<CheckResult>&)>;

struct Recorder {
    std::vector<CheckResult>& out;
    std::string suite;
    void eq(const std::string& name, const Rational& a, const Rational& b) {
        out.push_back({suite, name, a == b, a.str() + " vs " + b.str()});
    }
    void ok(const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({suite, name, pass, detail});
    }
};

std::string key(std::initializer_list<long> xs) {
    std::ostringstream os;
    bool first = true;
    for (long x : xs) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    return os.str();
}

QPoly random_poly(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-5, 5);
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rational(coef(rng));
    return QPoly(c);
}

void suite_engine(std::vector<CheckResult>& out) {
    Recorder r{out, "engine"};
    std::mt19937 rng(12345);
    int agree = 0, tried = 0;
    auto run = [](const std::function<Rational()>& f) {
        try {
            return f().str();
        } catch (const DenominatorVanishesAtRoot&) {
            return std::string("pole");
        }
    };
    for (int N = 4; N <= 12; N += 2)
        for (int i = 0; i < 10; ++i) {
            QPoly num = random_poly(rng, 6), den = random_poly(rng, 4);
            if (den.is_zero_poly()) den = QPoly(Rational(1));
            RationalFunctionUni F(num, den);
            ++tried;
            if (run([&] { return sum_rational_over_roots(N, F); }) ==
                run([&] { return sum_rational_over_roots_enum(N, F); }))
                ++agree;
        }
    r.ok("trace_vs_enumeration", agree == tried, std::to_string(agree) + "/" + std::to_string(tried));
    for (int N = 4; N <= 12; N += 2)
        r.eq("pair_count_N" + std::to_string(N),
             sum_over_pairs(N, [](const Cyclo&, const Cyclo&) { return Cyclo(1); }), Rational(N * (N - 2), 2));
    for (int N : {4, 6, 8})
        for (int g = 0; g <= 2; ++g)
            for (int d = 0; d <= 2; ++d) {
                long vd = virtual_dim({Form::Symplectic, N, 2, g, d});
                if (vd < 0 || vd > 12) continue;
                for (int m2 = 0; 2 * m2 <= vd; ++m2) {
                    int m1 = static_cast<int>(vd - 2 * m2);
                    r.eq("a_sympl_trace_vs_pairs(" + key({N, g, d, m1, m2}) + ")", a_sympl(N, g, d, m1, m2),
                         a_sympl_poly(N, g, d, {Monomial{Rational(1), m1, m2}}));
                }
            }
}

void suite_closed_forms(std::vector<CheckResult>& out) {
    Recorder r{out, "closed_forms"};
    for (int g = 0; g <= 4; ++g)
        for (int d = 0; d <= 5; ++d) {
            long gb = g - 1, vd = 3L * d - 3 * gb;
            if (vd < 0) continue;
            for (int m2 = 0; 2 * m2 <= vd; ++m2) {
                int m1 = static_cast<int>(vd - 2 * m2);
                Rational want = vd > 0 ? Rational(2).pow(2L * d - m2 - gb) * Rational(3).pow(g)
                                       : Rational(2).pow(gb) * (Rational(3).pow(g) + Rational(gb % 2 ? -1 : 1));
                r.eq("N4(" + key({g, d, m1, m2}) + ")", a_sympl(4, g, d, m1, m2), want);
            }
        }
    for (int N : {4, 6})
        for (int d = 0; d <= 4; ++d)
            r.eq("g1(" + key({N, d}) + ")", g1_generating_check(N, d), a_sympl(N, 1, d, (N - 1) * d, 0));
    for (int N : {4, 6, 8})
        for (int g = 0; g <= 3; ++g)
            for (int d = g; d <= g + 3; ++d)
                r.eq("rank1(" + key({N, g, d}) + ")", a_rank1_symm(N, g, d),
                     Rational(N - 2).pow(g) * Rational(2).pow(2L * d - (g - 1)));
}

void suite_grw(std::vector<CheckResult>& out) {
    Recorder r{out, "grw"};
    for (int n : {2, 3, 4})
        for (int g = 0; g <= 3; ++g)
            for (int d = g; d <= g + 3; ++d) {
                long vd = grw_expected_dim(GrassmannianKind::SG, n, g, d);
                for (int m2 = 0; 2 * m2 <= vd; ++m2) {
                    auto [a, b] = grw_equals_quot(GrassmannianKind::SG, n, g, d, static_cast<int>(vd - 2 * m2), m2);
                    r.eq("sg(" + key({n, g, d, vd - 2 * m2, m2}) + ")", a, b);
                }
            }
    for (int g = 1; g <= 4; ++g) {
        long gb = g - 1;
        Rational want = Rational(2).pow(gb) * Rational(3).pow(g) + Rational(gb % 2 ? -1 : 1) * Rational(2).pow(gb);
        r.eq("sg_special_n2_d=g-1(g=" + std::to_string(g) + ")", grw_sg(2, g, g - 1, 0, 0), want);
        r.eq("sg_special_vs_quot(g=" + std::to_string(g) + ")", grw_sg(2, g, g - 1, 0, 0), a_sympl(4, g, g - 1, 0, 0));
    }
    for (int n : {2, 3, 4}) {
        r.eq("sg_special_g1_d0(n=" + std::to_string(n) + ")", grw_sg(n, 1, 0, 0, 0), Rational(2L * n * (n - 1)));
        r.eq("sg_g1_d0_vs_quot(n=" + std::to_string(n) + ")", grw_sg(n, 1, 0, 0, 0), a_sympl(2 * n, 1, 0, 0, 0));
    }
    for (int g = 0; g <= 2; ++g)
        for (int d = g; d <= g + 2; ++d) {
            long vd = grw_expected_dim(GrassmannianKind::OG, 3, g, d);
            for (int m2 = 0; 2 * m2 <= vd; ++m2) {
                auto [a, b] = grw_equals_quot(GrassmannianKind::OG, 3, g, d, static_cast<int>(vd - 2 * m2), m2);
                r.eq("og(" + key({3, g, d, vd - 2 * m2, m2}) + ")", a, b);
            }
        }
}

void suite_jacobian(std::vector<CheckResult>& out) {
    Recorder r{out, "jacobian"};
    for (int n = 2; n <= 5; ++n) r.ok("n=" + std::to_string(n), jacobian_identity_check(n));
}

void suite_duality(std::vector<CheckResult>& out) {
    Recorder r{out, "duality"};
    for (int N : {4, 6})
        for (int g = 0; g <= 2; ++g)
            for (int d = 0; d <= g + 2; ++d) {
                long gb = g - 1;
                long vd = virtual_dim({Form::Symplectic, N, 2, g, d});
                for (long m2 = std::max(0L, gb + 1); 2 * m2 <= vd; ++m2) {
                    int m1 = static_cast<int>(vd - 2 * m2);
                    auto [a, b] = duality_check(N, g, d, m1, static_cast<int>(m2));
                    r.eq(key({N, g, d, m1, m2}), a, b);
                }
            }
}

void suite_compatibility(std::vector<CheckResult>& out) {
    Recorder r{out, "compatibility"};
    for (int N : {4, 6, 8})
        for (int g = 0; g <= 2; ++g)
            for (int d = g; d <= g + 2; ++d) {
                long vd = virtual_dim({Form::Symplectic, N, 2, g, d});
                for (int m2 = 0; 2 * m2 <= vd - 2; ++m2) {
                    int m1 = static_cast<int>(vd - 2 - 2 * m2);
                    auto [a, b] = compatibility_check(N, g, d, m1, m2);
                    r.eq(key({N, g, d, m1, m2}), a, b);
                }
            }
}

void suite_oracle(std::vector<CheckResult>& out) {
    Recorder r{out, "oracle"};
    for (int N : {4, 6})
        for (int d = 0; d <= 3; ++d) {
            long vd = virtual_dim({Form::Symplectic, N, 2, 0, d});
            for (int m2 = 0; 2 * m2 <= vd; ++m2) {
                int m1 = static_cast<int>(vd - 2 * m2);
                Rational loc = intersect_oracle_g0(N, d, m1, m2, 0);
                r.eq("loc_vs_trace(" + key({N, d, m1, m2}) + ")", loc, a_sympl(N, 0, d, m1, m2));
                r.eq("loc_vs_pairs(" + key({N, d, m1, m2}) + ")", loc,
                     a_sympl_poly(N, 0, d, {Monomial{Rational(1), m1, m2}}));
            }
        }
    for (int N : {4, 6})
        for (int d = 0; d <= 3; ++d)
            for (int d1 = 0; d1 <= d; ++d1) {
                LBInput in;
                in.N = N;
                in.g = 0;
                in.d = d;
                in.r = 2;
                in.a = Rational(N);
                in.b = Rational(0);
                in.p = {0, 0};
                in.w = {0, 1};
                long s = static_cast<long>(N) * d + 2L * (N - 1);
                in.R = HomogeneousRational::product(Rational(1), {LinearFactor{{Rational(1), Rational(0)}, s - d1},
                                                                  LinearFactor{{Rational(1), Rational(2)}, d1}});
                r.ok("lb_vs_bruteforce(" + key({N, d, d1}) + ")", lb_theta_sum(in) == brute_force_lb(in));
            }
}

void suite_fclass(std::vector<CheckResult>& out) {
    Recorder r{out, "fclass"};
    for (int N : {4, 6})
        for (int g = 0; g <= 2; ++g)
            for (int d = 0; d <= 3; ++d) {
                long vd = virtual_dim({Form::Symplectic, N, 2, g, d});
                if (vd < 1) continue;
                for (int m2 = 0; 2 * m2 <= vd - 1; ++m2) {
                    int m1 = static_cast<int>(vd - 1 - 2 * m2);
                    InsertionPoly Q{Monomial{Rational(1), m1, m2}};
                    Rational e = f2_intersect(N, g, d, 1, Q);
                    r.eq("m1_engine_vs_closed(" + key({N, g, d, m1, m2}) + ")", e, f2_closed_m1(N, g, d, Q));
                    if (d > g)
                        r.eq("m1_engine_vs_roots(" + key({N, g, d, m1, m2}) + ")", e, f2_closed_m1_roots(N, g, d, Q));
                    if (g == 0 && N == 4)
                        r.eq("m1_engine_vs_loc(" + key({N, d, m1, m2}) + ")", e, intersect_oracle_g0(N, d, m1, m2, 1));
                }
                if (vd > 8) continue;
                for (int m2 = 0; 2 * m2 <= vd; ++m2) {
                    int m1 = static_cast<int>(vd - 2 * m2);
                    InsertionPoly Q{Monomial{Rational(1), m1, m2}};
                    r.eq("m0_engine_vs_pairs(" + key({N, g, d, m1, m2}) + ")", f2_intersect(N, g, d, 0, Q),
                         a_sympl_poly(N, g, d, Q));
                }
            }
}

void suite_euler(std::vector<CheckResult>& out) {
    Recorder r{out, "euler"};
    auto ev = evir_series(4, 2, 4);
    const long want[] = {4, 16, 32, 112, -396};
    for (int d = 0; d <= 4; ++d) r.eq("evir(4,2," + std::to_string(d) + ")", ev[static_cast<size_t>(d)], Rational(want[d]));
    auto et = etop_series(4, 2, 0, 1);
    for (int d = 0; d <= 1; ++d) r.eq("smooth_evir_eq_etop(d=" + std::to_string(d) + ")", ev[static_cast<size_t>(d)], et[static_cast<size_t>(d)]);
    for (int d = 0; d <= 2; ++d)
        r.eq("locus_count(8,2," + std::to_string(d) + ")", Rational(static_cast<long>(enumerate_fixed_loci(8, 2, d).size())),
             Rational(4) * binomial(4, 2) * binomial(d + 1, 1));
}

const std::map<std::string, Suite>& registry() {
    static const std::map<std::string, Suite> m = {
        {"engine", suite_engine},   {"closed_forms", suite_closed_forms}, {"grw", suite_grw},
        {"jacobian", suite_jacobian}, {"duality", suite_duality},       {"compatibility", suite_compatibility},
        {"oracle", suite_oracle},   {"fclass", suite_fclass},             {"euler", suite_euler},
    };
    return m;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
}

std::vector<CheckResult> run_suite(const std::string& name) {
    std::vector<CheckResult> out;
    if (name == "all") {
        for (const auto& [k, f] : registry()) f(out);
        return out;
    }
    auto it = registry().find(name);
    if (it == registry().end()) throw InvalidArgument("unknown suite '" + name + "'");
    it->second(out);
    return out;
}

} // namespace isoquot
