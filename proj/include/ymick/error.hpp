#pragma once

#include <stdexcept>
#include <string>

namespace ymick {

// Shared error taxonomy. what() always starts with the error name so CLI
// output and test diagnostics can match on it.
class Error : public std::runtime_error {
public:
    Error(const std::string& name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define YMICK_DEFINE_ERROR(NAME)                                             \
    class NAME : public Error {                                              \
    public:                                                                  \
        explicit NAME(const std::string& detail) : Error(#NAME, detail) {}   \
    }

YMICK_DEFINE_ERROR(IndexOutOfRange);
YMICK_DEFINE_ERROR(DimensionMismatch);
YMICK_DEFINE_ERROR(NonInvertibleLeadingTerm);
YMICK_DEFINE_ERROR(NotARepresentation);
YMICK_DEFINE_ERROR(NonGenericWeight);
YMICK_DEFINE_ERROR(NotPolynomial);
YMICK_DEFINE_ERROR(PoleEncountered);
YMICK_DEFINE_ERROR(InvalidDegree);
YMICK_DEFINE_ERROR(InvalidDegreeSequence);
YMICK_DEFINE_ERROR(RankMismatch);
YMICK_DEFINE_ERROR(UnknownSuite);
YMICK_DEFINE_ERROR(DimensionCapExceeded);

#undef YMICK_DEFINE_ERROR

}  // namespace ymick
