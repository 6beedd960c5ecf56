#pragma once

#include "isoquot/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace isoquot {

enum class Form { Symplectic, Symmetric };

struct QuotFamily {
    Form form = Form::Symplectic;
    int N = 4;
    int r = 2;
    int g = 0;
    int d = 0;
};

struct Monomial {
    Rational coeff{1};
    int m1 = 0;
    int m2 = 0;
};
using InsertionPoly = std::vector<Monomial>;

// "c:m1:m2;c:m1:m2;..." with c an integer or p/q.
InsertionPoly parse_insertion(const std::string& s);
// Common weighted degree m1 + 2 m2; DegreeMismatch if monomials disagree, -1 if empty.
long weighted_degree(const InsertionPoly& Q);

long virtual_dim(const QuotFamily& f);

// [q^k] (1+q)^{k-g+shift} (1 + (N-1)q/N)^g for any integer g; 0 for k < 0.
Rational t_series_coeff(int N, long g, long k, long shift = 0);
Rational t_dg(int N, int g, int d);

Rational a_sympl(int N, int g, int d, int m1, int m2);
Rational a_sympl_poly(int N, int g, int d, const InsertionPoly& Q);
Rational a_symm_r2(int N, int g, int d, const InsertionPoly& Q);
Rational a_rank1_symm(int N, int g, int d);
Rational g1_generating_check(int N, int d);

std::pair<Rational, Rational> duality_check(int N, int g, int d, int m1, int m2);
std::pair<Rational, Rational> compatibility_check(int N, int g, int d, int m1, int m2);

} // namespace isoquot
