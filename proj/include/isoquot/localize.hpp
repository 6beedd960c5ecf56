#pragma once

#include "isoquot/invariants.hpp"
#include "isoquot/series.hpp"

#include <vector>

namespace isoquot {

// (1..n, -1..-n).
std::vector<long> default_weights(int N);
// (p_1..p_n, -p_1..-p_n) over the first n primes.
std::vector<long> prime_weights(int N);
void check_weights(const std::vector<long>& w);

// Positions are 0-based indices into the weight vector.
struct FixedLocus {
    std::vector<int> k;
    std::vector<int> d;
};

std::vector<FixedLocus> enumerate_fixed_loci(int N, int r, int d);

// One line-bundle factor of the virtual normal bundle at t = t0:
// constant + sum_i x[i] x_i, with Riemann-Roch rank chi at genus 0.
struct NormalFactor {
    Rational constant;
    std::vector<int> x;
    long chi = 0;
};
std::vector<NormalFactor> normal_factors(const FixedLocus& loc, Form family, const std::vector<long>& w,
                                         const Rational& t0);

MultiSeries<Rational> inverse_euler_g0(const FixedLocus& loc, Form family, const std::vector<long>& w,
                                       const Rational& t0);

// Symplectic, g = 0: integral of a1^m1 a2^m2 f2^mf by localization, certified at two t0 values.
Rational intersect_oracle_g0(int N, int d, int m1, int m2, int mf);
Rational intersect_oracle_g0(int N, int d, int m1, int m2, int mf, const std::vector<long>& w);

// Virtual Euler characteristic at g = 0.
Rational evir_g0(int N, int r, int d, Form family = Form::Symplectic);
Rational evir_g0(int N, int r, int d, Form family, const std::vector<long>& w);

std::vector<Rational> evir_series(int N, int r, int dmax, Form family = Form::Symplectic);
std::vector<Rational> etop_series(int N, int r, int g, int dmax);

} // namespace isoquot
