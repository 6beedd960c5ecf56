#pragma once

#include "isoquot/cyclo.hpp"
#include "isoquot/polynomial.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace isoquot {

// num/den over Q, normalized: gcd removed and den monic.
class RationalFunctionUni {
public:
    RationalFunctionUni(QPoly num = QPoly(), QPoly den = QPoly(Rational(1)));
    static RationalFunctionUni z_power(long k);                 // z^k, k may be negative
    static RationalFunctionUni linear_power(const Rational& a, const Rational& b, long e); // (a + b z)^e

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    Cyclo eval(const Cyclo& z) const; // NotInvertible when den vanishes

    RationalFunctionUni operator+(const RationalFunctionUni& o) const;
    RationalFunctionUni operator-(const RationalFunctionUni& o) const;
    RationalFunctionUni operator*(const RationalFunctionUni& o) const;
    RationalFunctionUni operator/(const RationalFunctionUni& o) const;
    RationalFunctionUni scaled(const Rational& s) const;

private:
    QPoly num_, den_;
};

// sum of zeta^k over zeta^N = 1, zeta != +-1.
Rational power_sum(int N, long k);

// Trace engine: reduce modulo (z^N-1)/(z^2-1) and take the trace.
Rational sum_rational_over_roots(int N, const RationalFunctionUni& F);
// Enumeration engine for the same sum, evaluated in Q(zeta_N).
Rational sum_rational_over_roots_enum(int N, const RationalFunctionUni& F);

// Exponent pairs (a,b), 0 <= a < b < N, b != a + N/2.
std::vector<std::pair<int, int>> admissible_pairs(int N);

using PairIndexFn = std::function<Cyclo(int a, int b)>;
using PairFn = std::function<Cyclo(const Cyclo& z1, const Cyclo& z2)>;

// Sum over unordered pairs {zeta^a, zeta^b} with w1 != +-w2; result must be rational.
Rational sum_over_pair_indices(int N, const PairIndexFn& G);
Rational sum_over_pairs(int N, const PairFn& G);

} // namespace isoquot
