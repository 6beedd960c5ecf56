#include "isoquot/checks.hpp"
#include "isoquot/errors.hpp"
#include "isoquot/fclass.hpp"
#include "isoquot/grw.hpp"
#include "isoquot/invariants.hpp"
#include "isoquot/localize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace isoquot;

namespace {

json insertion_json(const InsertionPoly& Q) {
    json a = json::array();
    for (const auto& m : Q) a.push_back({{"coeff", m.coeff.str()}, {"m1", m.m1}, {"m2", m.m2}});
    return a;
}

void emit(const json& params, const Rational& value, const std::string& method, json flags = json::array()) {
    json out;
    out["flags"] = std::move(flags);
    out["method"] = method;
    out["params"] = params;
    out["value"] = value.str();
    std::cout << out.dump() << "\n";
}

int fail(const std::string& code, const std::string& msg) {
    json err;
    err["error"] = {{"code", code}, {"message", msg}};
    std::cerr << err.dump() << "\n";
    return 1;
}

std::string log10_abs(const Rational& v) {
    if (v.is_zero()) return "-inf";
    mpq_class a = abs(v.raw());
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, a.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, a.get_den().get_mpz_t());
    double l = std::log10(mn) - std::log10(md) + static_cast<double>(en - ed) * std::log10(2.0);
    std::ostringstream os;
    os << std::fixed << std::setprecision(12) << l;
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intersection numbers on isotropic Quot schemes"};
    app.require_subcommand(1);

    int N = 4, g = 0, d = 0, m1 = 0, m2 = 0, m = 0, n = 2, r = 2, dmax = 0;
    std::string Qs, space, out_path, suite;
    bool closed = false, topological = false;
    std::function<int()> action;

    auto add_ngd = [&](CLI::App* s) {
        s->add_option("--N", N, "bundle rank")->required();
        s->add_option("--g", g, "genus")->required();
        s->add_option("--d", d, "degree")->required();
    };

    auto* s_sympl = app.add_subcommand("a-sympl", "symplectic a-class intersection (trace engine)");
    add_ngd(s_sympl);
    s_sympl->add_option("--m1", m1)->required();
    s_sympl->add_option("--m2", m2)->required();
    s_sympl->callback([&] {
        action = [&] {
            emit({{"N", N}, {"g", g}, {"d", d}, {"m1", m1}, {"m2", m2}}, a_sympl(N, g, d, m1, m2), "closed_form");
            return 0;
        };
    });

    auto* s_poly = app.add_subcommand("a-sympl-poly", "symplectic intersection of a polynomial (pair sum)");
    add_ngd(s_poly);
    s_poly->add_option("--Q", Qs, "c:m1:m2[;c:m1:m2...]")->required();
    s_poly->callback([&] {
        action = [&] {
            auto Q = parse_insertion(Qs);
            emit({{"N", N}, {"g", g}, {"d", d}, {"Q", insertion_json(Q)}}, a_sympl_poly(N, g, d, Q), "closed_form");
            return 0;
        };
    });

    auto* s_symm = app.add_subcommand("a-symm", "symmetric rank 2 intersection");
    add_ngd(s_symm);
    s_symm->add_option("--Q", Qs, "c:m1:m2[;c:m1:m2...]")->required();
    s_symm->callback([&] {
        action = [&] {
            auto Q = parse_insertion(Qs);
            json flags = json::array();
            if (d < g) flags.push_back("unverified_regime");
            emit({{"N", N}, {"g", g}, {"d", d}, {"Q", insertion_json(Q)}}, a_symm_r2(N, g, d, Q), "closed_form",
                 flags);
            return 0;
        };
    });

    auto* s_rank1 = app.add_subcommand("a-rank1", "symmetric rank 1 top intersection");
    add_ngd(s_rank1);
    s_rank1->callback([&] {
        action = [&] {
            json flags = json::array();
            if (d < g) flags.push_back("unverified_regime");
            emit({{"N", N}, {"g", g}, {"d", d}}, a_rank1_symm(N, g, d), "closed_form", flags);
            return 0;
        };
    });

    auto* s_f = app.add_subcommand("f-class", "f_2^m Q(a1,a2) intersection");
    add_ngd(s_f);
    s_f->add_option("--m", m, "power of f_2")->required();
    s_f->add_option("--Q", Qs, "c:m1:m2[;c:m1:m2...]")->required();
    s_f->add_flag("--closed-form", closed, "use the m=1 closed form");
    s_f->callback([&] {
        action = [&] {
            auto Q = parse_insertion(Qs);
            json params{{"N", N}, {"g", g}, {"d", d}, {"m", m}, {"Q", insertion_json(Q)}, {"closed_form", closed}};
            if (closed) {
                if (m != 1) throw InvalidArgument("--closed-form requires --m 1");
                emit(params, f2_closed_m1(N, g, d, Q), "closed_form");
            } else {
                emit(params, f2_intersect(N, g, d, m, Q), "closed_form");
            }
            return 0;
        };
    });

    auto* s_grw = app.add_subcommand("grw", "GRW invariant of SG(2,2n) or OG(2,2n+2)");
    s_grw->add_option("--space", space)->required()->check(CLI::IsMember({"sg", "og"}));
    s_grw->add_option("--n", n)->required();
    s_grw->add_option("--g", g)->required();
    s_grw->add_option("--d", d)->required();
    s_grw->add_option("--m1", m1)->required();
    s_grw->add_option("--m2", m2)->required();
    s_grw->callback([&] {
        action = [&] {
            json params{{"space", space}, {"n", n}, {"g", g}, {"d", d}, {"m1", m1}, {"m2", m2}};
            Rational v = space == "sg" ? grw_sg(n, g, d, m1, m2) : grw_og(n, g, d, m1, m2);
            emit(params, v, "closed_form");
            return 0;
        };
    });

    auto* s_euler = app.add_subcommand("euler", "virtual (or topological) Euler characteristic series as CSV");
    s_euler->add_option("--N", N)->required();
    s_euler->add_option("--r", r)->required();
    s_euler->add_option("--dmax", dmax)->required();
    s_euler->add_option("--g", g, "genus (topological series only)");
    s_euler->add_flag("--topological", topological);
    s_euler->callback([&] {
        action = [&] {
            if (!topological && g != 0) throw UnsupportedRegime("virtual Euler characteristics are genus 0 only");
            auto vals = topological ? etop_series(N, r, g, dmax) : evir_series(N, r, dmax);
            std::cout << "d,value\n";
            for (size_t i = 0; i < vals.size(); ++i) std::cout << i << "," << vals[i].str() << "\n";
            return 0;
        };
    });

    auto* s_plot = app.add_subcommand("plot-data", "TSV of |e_vir| and log10|e_vir| per degree");
    s_plot->add_option("--N", N)->required();
    s_plot->add_option("--r", r)->required();
    s_plot->add_option("--dmax", dmax)->required();
    s_plot->add_option("--out", out_path)->required();
    s_plot->callback([&] {
        action = [&] {
            auto vals = evir_series(N, r, dmax);
            std::ofstream f(out_path);
            if (!f) throw InvalidArgument("cannot open " + out_path);
            f << "# d\tabs_evir\tlog10_abs_evir (decimal, 12 digits)\n";
            for (size_t i = 0; i < vals.size(); ++i)
                f << i << "\t" << vals[i].abs().str() << "\t" << log10_abs(vals[i]) << "\n";
            if (!f) throw InvalidArgument("failed writing " + out_path);
            json o{{"out", out_path}, {"rows", vals.size()}, {"params", {{"N", N}, {"r", r}, {"dmax", dmax}}}};
            std::cout << o.dump() << "\n";
            return 0;
        };
    });

    auto* s_verify = app.add_subcommand("verify", "run cross-check suites");
    s_verify->add_option("--suite", suite, "suite name or 'all'")->required();
    s_verify->callback([&] {
        action = [&] {
            auto res = run_suite(suite);
            json checks = json::array();
            int failed = 0;
            for (const auto& c : res) {
                checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                if (!c.passed) ++failed;
            }
            json o{{"suite", suite},
                   {"checks", checks},
                   {"passed", static_cast<int>(res.size()) - failed},
                   {"failed", failed}};
            std::cout << o.dump(2) << "\n";
            return failed == 0 ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const Error& e) {
        return fail(e.code(), e.what());
    } catch (const std::exception& e) {
        return fail("InternalError", e.what());
    }
}
