#pragma once

#include <stdexcept>
#include <string>

namespace gapcert {

// Shared error vocabulary.  Each maps to a CLI exit code, see runconfig.hpp.
struct InvalidWord : std::runtime_error {
    explicit InvalidWord(const std::string& what) : std::runtime_error(what) {}
};

struct EnumerationLimit : std::runtime_error {
    explicit EnumerationLimit(const std::string& what) : std::runtime_error(what) {}
};

struct CharFail : std::runtime_error {
    explicit CharFail(const std::string& what) : std::runtime_error(what) {}
};

struct IncompleteEnumeration : std::runtime_error {
    explicit IncompleteEnumeration(const std::string& what) : std::runtime_error(what) {}
};

struct VerificationFailed : std::runtime_error {
    explicit VerificationFailed(const std::string& what) : std::runtime_error(what) {}
};

struct PrecisionFail : std::runtime_error {
    explicit PrecisionFail(const std::string& what) : std::runtime_error(what) {}
};

struct ClassMismatch : std::runtime_error {
    explicit ClassMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotTransitive : std::runtime_error {
    explicit NotTransitive(const std::string& what) : std::runtime_error(what) {}
};

struct LengthMismatch : std::runtime_error {
    explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct NonPositive : std::domain_error {
    explicit NonPositive(const std::string& what) : std::domain_error(what) {}
};

struct OutOfRange : std::domain_error {
    explicit OutOfRange(const std::string& what) : std::domain_error(what) {}
};

} // namespace gapcert
