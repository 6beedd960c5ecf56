#pragma once

#include "isoquot/polynomial.hpp"

#include <memory>

namespace isoquot {

// Element of Q[z]/(modulus), kept fully reduced.
class ResidueElement {
public:
    ResidueElement(QPoly rep, std::shared_ptr<const QPoly> modulus);
    ResidueElement(QPoly rep, const QPoly& modulus)
        : ResidueElement(std::move(rep), std::make_shared<const QPoly>(modulus)) {}

    const QPoly& representative() const { return rep_; }
    const QPoly& modulus() const { return *mod_; }
    const std::shared_ptr<const QPoly>& modulus_ptr() const { return mod_; }

    ResidueElement operator+(const ResidueElement& o) const;
    ResidueElement operator-(const ResidueElement& o) const;
    ResidueElement operator*(const ResidueElement& o) const;
    friend bool operator==(const ResidueElement& a, const ResidueElement& b) {
        return a.rep_ == b.rep_ && *a.mod_ == *b.mod_;
    }

private:
    QPoly rep_;
    std::shared_ptr<const QPoly> mod_;
};

QPoly cyclotomic_poly(int n);

ResidueElement invert_mod(const ResidueElement& f);
ResidueElement pow_mod(const ResidueElement& f, long e);

} // namespace isoquot
