#pragma once

#include "isoquot/rational.hpp"

#include <utility>

namespace isoquot {

enum class GrassmannianKind { SG, OG };

// SG(2,2n): (2n-1)d - (4n-5)(g-1). OG(2,2n+2): (2n-1)d - (4n-3)(g-1).
long grw_expected_dim(GrassmannianKind kind, int n, int g, int d);

Rational grw_sg(int n, int g, int d, int m1, int m2);
Rational grw_og(int n, int g, int d, int m1, int m2);

// Exact check of the determinant form of J_q against its closed form, in z over Q(zeta_{2n}).
bool jacobian_identity_check(int n);

// (GRW value, Quot value).
std::pair<Rational, Rational> grw_equals_quot(GrassmannianKind kind, int n, int g, int d, int m1, int m2);

} // namespace isoquot
