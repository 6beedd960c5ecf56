#pragma once

#include "isoquot/residue.hpp"

#include <memory>
#include <string>
#include <vector>

namespace isoquot {

// Shared arithmetic context for Q(zeta_N) = Q[z]/Phi_N.
struct CycloField {
    int N = 0;
    int deg = 0;
    std::shared_ptr<const QPoly> phi;
    std::vector<std::vector<Rational>> high_powers; // z^k mod Phi_N for deg <= k <= 2deg-2

    static std::shared_ptr<const CycloField> get(int N);
};

// Element of Q(zeta_N). A null field means a rational constant that adapts to
// whatever field it meets.
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(int c) : Cyclo(Rational(c)) {}
    Cyclo(long c) : Cyclo(Rational(c)) {}
    Cyclo(const Rational& c);
    Cyclo(std::shared_ptr<const CycloField> f, std::vector<Rational> coeffs);

    static Cyclo zeta(int N, long k = 1);          // zeta_N^k
    static Cyclo constant(int N, const Rational& c);

    const std::shared_ptr<const CycloField>& field() const { return f_; }
    int order() const { return f_ ? f_->N : 0; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    Rational to_rational() const; // NonRationalResult unless rational

    Cyclo inverse() const;   // NotInvertible on zero
    Cyclo pow(long e) const;
    ResidueElement as_residue() const;
    std::string str() const;

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend Cyclo operator-(const Cyclo& a);
    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }

private:
    void adopt(const Cyclo& o);
    void trim();
    std::shared_ptr<const CycloField> f_;
    std::vector<Rational> c_;
};

inline bool is_zero(const Cyclo& c) { return c.is_zero(); }

} // namespace isoquot
