#pragma once

#include <stdexcept>
#include <string>

namespace isoquot {

// Every library failure carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define ISOQUOT_ERROR(Name)                                                 \
    struct Name : Error {                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    }

ISOQUOT_ERROR(InvalidArgument);
ISOQUOT_ERROR(NotInvertible);
ISOQUOT_ERROR(NonUnitConstantTerm);
ISOQUOT_ERROR(DenominatorVanishesAtRoot);
ISOQUOT_ERROR(DenominatorVanishesAtPair);
ISOQUOT_ERROR(NonRationalResult);
ISOQUOT_ERROR(EllExceedsGenus);
ISOQUOT_ERROR(HomogeneityMismatch);
ISOQUOT_ERROR(TruncationTooShallow);
ISOQUOT_ERROR(UnsupportedFamily);
ISOQUOT_ERROR(DegreeMismatch);
ISOQUOT_ERROR(HypothesisViolated);
ISOQUOT_ERROR(NonUnitDenominator);
ISOQUOT_ERROR(UnreachableRegime);
ISOQUOT_ERROR(UnsupportedRegime);
ISOQUOT_ERROR(TIndependenceFailure);
ISOQUOT_ERROR(DegenerateParameter);

#undef ISOQUOT_ERROR

} // namespace isoquot
