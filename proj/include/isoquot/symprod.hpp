#pragma once

#include "isoquot/cyclo.hpp"
#include "isoquot/series.hpp"

#include <optional>
#include <vector>

namespace isoquot {

// prod_j (sum_i coeffs[j][i] * Y_i)^exponent[j], scaled.
struct LinearFactor {
    std::vector<Rational> coeffs;
    long exponent = 1;
};

struct RationalTerm {
    Rational coeff{1};
    std::vector<LinearFactor> factors;
};

// Sum of products of powers of linear forms in Y_1..Y_r.
class HomogeneousRational {
public:
    HomogeneousRational() = default;
    explicit HomogeneousRational(std::vector<RationalTerm> terms) : terms_(std::move(terms)) {}

    static HomogeneousRational constant(const Rational& c);
    // Single term c * prod (forms)^exps.
    static HomogeneousRational product(const Rational& c, std::vector<LinearFactor> factors);

    const std::vector<RationalTerm>& terms() const { return terms_; }
    // Common degree; nullopt for the zero function. HomogeneityMismatch if terms disagree.
    std::optional<long> degree() const;

    HomogeneousRational times(const LinearFactor& f) const;
    HomogeneousRational operator+(const HomogeneousRational& o) const;

    Cyclo eval(const std::vector<Cyclo>& Y) const;
    // Expansion around Y_i = base_i + x_i, truncated at orders.
    MultiSeries<Cyclo> expand(const std::vector<int>& orders, const std::vector<Cyclo>& base) const;

private:
    std::vector<RationalTerm> terms_;
};

struct LBInput {
    int N = 4;
    int g = 0;
    int d = 0;
    int r = 1;
    Rational a{4};
    Rational b{0};
    std::vector<int> p;          // per-factor theta exponents (size r)
    HomogeneousRational R;
    std::vector<int> w;          // weights as exponents of zeta_N (size r)
};

// g!/(g-ell)! for ell <= g, else 0.
Rational theta_reduce(int ell, int g);
// Multiplier replacing phi_12^{2l} by (theta_1 theta_2)^l. Odd input is InvalidArgument.
Rational phi_reduce(int two_ell, int g);

// Closed-form summed theta integral.
Cyclo lb_theta_sum(const LBInput& in);
// Summed integral with the exp(-(theta_1+theta_2-phi_12)/(Y_1+Y_2)) insertion, r=2, p=0.
Cyclo pair_sum_r2(const LBInput& in);

// Integrand on one product of symmetric powers, after the theta rule, as a series in x_i.
MultiSeries<Cyclo> lb_integrand(const LBInput& in, const std::vector<int>& degs);
// Coefficient of x^degs (summed over t-powers at t=1).
Cyclo brute_force_g0(const std::vector<int>& degs, const MultiSeries<Cyclo>& integrand);
// Sum of brute_force_g0 over all compositions of d.
Cyclo brute_force_lb(const LBInput& in);

// [q^k] (c0 + c1 q)^e1 (1+q)^e2, e1 >= 0.
Rational coeff_linear_binomial(long k, const Rational& c0, const Rational& c1, long e1, long e2);

} // namespace isoquot
