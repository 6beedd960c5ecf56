#include "isoquot/residue.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace isoquot {

std::string to_string(const QPoly& p, const std::string& var) {
    if (p.is_zero_poly()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        Rational a = c.abs();
        if (k == 0 || !a.is_one()) os << a << (k ? "*" : "");
        if (k >= 1) os << var;
        if (k > 1) os << "^" << k;
        first = false;
    }
    return os.str();
}

ResidueElement::ResidueElement(QPoly rep, std::shared_ptr<const QPoly> modulus)
    : rep_(std::move(rep)), mod_(std::move(modulus)) {
    if (mod_->degree() < 1) throw InvalidArgument("modulus must have positive degree");
    if (rep_.degree() >= mod_->degree()) rep_ = rep_ % *mod_;
}

ResidueElement ResidueElement::operator+(const ResidueElement& o) const {
    return ResidueElement(rep_ + o.rep_, mod_);
}
ResidueElement ResidueElement::operator-(const ResidueElement& o) const {
    return ResidueElement(rep_ - o.rep_, mod_);
}
ResidueElement ResidueElement::operator*(const ResidueElement& o) const {
    return ResidueElement(rep_ * o.rep_, mod_);
}

QPoly cyclotomic_poly(int n) {
    if (n < 1) throw InvalidArgument("cyclotomic_poly needs n >= 1");
    static std::mutex mu;
    static std::map<int, QPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    QPoly p = QPoly::monomial(Rational(1), n) - QPoly(Rational(1));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = p / cyclotomic_poly(d);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, p);
    return p;
}

ResidueElement invert_mod(const ResidueElement& f) {
    auto eg = ext_gcd(f.representative(), f.modulus());
    if (eg.g.degree() != 0)
        throw NotInvertible("gcd with modulus is " + to_string(eg.g));
    return ResidueElement(eg.s, f.modulus_ptr());
}

ResidueElement pow_mod(const ResidueElement& f, long e) {
    if (e < 0) return pow_mod(invert_mod(f), -e);
    ResidueElement r(QPoly(Rational(1)), f.modulus_ptr());
    ResidueElement b = f;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

} // namespace isoquot
