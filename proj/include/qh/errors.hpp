#pragma once

#include <stdexcept>
#include <string>

namespace qh {

// Two families of failure. A DomainError means the request cannot be served
// (bad input, empty variety, enumeration too large). A CorrectnessAlarm means a
// quantity that must be integral or polynomial came out otherwise: either the
// implementation is wrong or a convention is miscalibrated.

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CorrectnessAlarm : public std::runtime_error {
public:
    CorrectnessAlarm(const std::string& kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(kind) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define QH_DOMAIN_ERROR(Name)                                                  \
    class Name : public DomainError {                                          \
    public:                                                                    \
        explicit Name(const std::string& what)                                 \
            : DomainError(std::string(#Name ": ") + what) {}                   \
    }

#define QH_ALARM(Name)                                                         \
    class Name : public CorrectnessAlarm {                                     \
    public:                                                                    \
        explicit Name(const std::string& what) : CorrectnessAlarm(#Name, what) {} \
    }

QH_DOMAIN_ERROR(BudgetExceeded);
QH_DOMAIN_ERROR(EmptyVariety);
QH_DOMAIN_ERROR(ShapeMismatch);
QH_DOMAIN_ERROR(CapMismatch);
QH_DOMAIN_ERROR(InvalidPartition);
QH_DOMAIN_ERROR(ParseError);
QH_DOMAIN_ERROR(IndexOutOfRange);
QH_DOMAIN_ERROR(InsufficientPoints);
QH_DOMAIN_ERROR(NonUnitConstantTerm);
QH_DOMAIN_ERROR(NonzeroConstantTerm);
QH_DOMAIN_ERROR(ConstantTermNotOne);
QH_DOMAIN_ERROR(EvenQ);
QH_DOMAIN_ERROR(NotPrimePower);
QH_DOMAIN_ERROR(InvalidArgument);

QH_ALARM(NotDivisible);
QH_ALARM(NonPolynomialCoefficient);
QH_ALARM(NonPolynomialResult);
QH_ALARM(NonIntegralCount);
QH_ALARM(NonIntegralInterpolant);
QH_ALARM(NonIntegral);
QH_ALARM(InconsistentCounts);

#undef QH_DOMAIN_ERROR
#undef QH_ALARM

} // namespace qh
