#pragma once

#include <stdexcept>
#include <string>

namespace gs2 {

struct Error : std::runtime_error {
    Error(std::string type, const std::string& what)
        : std::runtime_error(what), type(std::move(type)) {}
    std::string type;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

struct NonExactDivision : Error {
    explicit NonExactDivision(const std::string& what) : Error("NonExactDivision", what) {}
};

struct NonIntegralCoefficient : Error {
    explicit NonIntegralCoefficient(const std::string& what)
        : Error("NonIntegralCoefficient", what) {}
};

struct CountInconsistency : Error {
    explicit CountInconsistency(const std::string& what) : Error("CountInconsistency", what) {}
};

struct RelationFalsified : Error {
    explicit RelationFalsified(const std::string& what) : Error("RelationFalsified", what) {}
};

struct InsufficientPrecision : Error {
    explicit InsufficientPrecision(const std::string& what)
        : Error("InsufficientPrecision", what) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error("UsageError", what) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error("InternalError", what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("IoError", what) {}
};

} // namespace gs2
