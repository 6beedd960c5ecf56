#include "isoquot/cyclo.hpp"

#include <map>
#include <mutex>

namespace isoquot {

std::shared_ptr<const CycloField> CycloField::get(int N) {
    if (N < 1) throw InvalidArgument("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    auto f = std::make_shared<CycloField>();
    f->N = N;
    f->phi = std::make_shared<const QPoly>(cyclotomic_poly(N));
    f->deg = f->phi->degree();
    for (int k = f->deg; k <= 2 * f->deg - 2; ++k) {
        QPoly r = QPoly::monomial(Rational(1), k) % *f->phi;
        std::vector<Rational> row(static_cast<size_t>(f->deg), Rational(0));
        for (int j = 0; j < f->deg; ++j) row[static_cast<size_t>(j)] = r.coeff(j);
        f->high_powers.push_back(std::move(row));
    }
    cache.emplace(N, f);
    return f;
}

Cyclo::Cyclo(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Cyclo::Cyclo(std::shared_ptr<const CycloField> f, std::vector<Rational> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
    if (f_ && static_cast<int>(c_.size()) > f_->deg) {
        QPoly r = QPoly(c_) % *f_->phi;
        c_ = r.coeffs();
    }
    trim();
}

Cyclo Cyclo::zeta(int N, long k) {
    auto f = CycloField::get(N);
    long e = ((k % N) + N) % N;
    QPoly r = QPoly::monomial(Rational(1), static_cast<int>(e)) % *f->phi;
    return Cyclo(f, r.coeffs());
}

Cyclo Cyclo::constant(int N, const Rational& c) {
    return Cyclo(CycloField::get(N), c.is_zero() ? std::vector<Rational>{} : std::vector<Rational>{c});
}

void Cyclo::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Cyclo::adopt(const Cyclo& o) {
    if (!f_) f_ = o.f_;
    else if (o.f_ && o.f_ != f_ && o.f_->N != f_->N)
        throw InvalidArgument("mixing cyclotomic fields of different order");
}

Rational Cyclo::to_rational() const {
    if (!is_rational()) throw NonRationalResult("value " + str() + " is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    adopt(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    adopt(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Cyclo operator-(const Cyclo& a) {
    Cyclo r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    Cyclo r;
    r.f_ = a.f_ ? a.f_ : b.f_;
    if (a.f_ && b.f_ && a.f_->N != b.f_->N)
        throw InvalidArgument("mixing cyclotomic fields of different order");
    if (a.c_.empty() || b.c_.empty()) return r;
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    if (r.f_ && static_cast<int>(v.size()) > r.f_->deg) {
        const int deg = r.f_->deg;
        for (size_t k = static_cast<size_t>(deg); k < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            const auto& row = r.f_->high_powers[k - static_cast<size_t>(deg)];
            for (int j = 0; j < deg; ++j) v[static_cast<size_t>(j)] += v[k] * row[static_cast<size_t>(j)];
        }
        v.resize(static_cast<size_t>(deg));
    }
    r.c_ = std::move(v);
    r.trim();
    return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) { return *this = *this * o; }

ResidueElement Cyclo::as_residue() const {
    if (!f_) throw InvalidArgument("rational constant has no cyclotomic context");
    return ResidueElement(QPoly(c_), f_->phi);
}

Cyclo Cyclo::inverse() const {
    if (c_.empty()) throw NotInvertible("inverse of zero in cyclotomic field");
    if (!f_ || c_.size() == 1) {
        Cyclo r(c_[0].inverse());
        r.f_ = f_;
        return r;
    }
    return Cyclo(f_, invert_mod(as_residue()).representative().coeffs());
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo r(1), b(*this);
    r.f_ = f_;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::string Cyclo::str() const {
    return to_string(QPoly(c_), "zeta");
}

} // namespace isoquot
