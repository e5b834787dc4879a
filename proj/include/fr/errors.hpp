#pragma once

#include <stdexcept>
#include <string>

namespace fr {

// Error taxonomy shared across the library. Everything derives from Error so
// callers can catch one type at the CLI boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// numerics
class NonFinite : public Error {
public:
    explicit NonFinite(const std::string& msg) : Error("NonFinite: " + msg) {}
};
class UnknownParam : public Error {
public:
    explicit UnknownParam(const std::string& msg) : Error("UnknownParam: " + msg) {}
};
class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& msg) : Error("ShapeMismatch: " + msg) {}
};
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("DomainError: " + msg) {}
};

// data / models
class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& msg) : Error("EmptyInput: " + msg) {}
};
class EmptyDataset : public Error {
public:
    explicit EmptyDataset(const std::string& msg) : Error("EmptyDataset: " + msg) {}
};
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("ParseError: " + msg) {}
};
class MissingField : public Error {
public:
    explicit MissingField(const std::string& msg) : Error("MissingField: " + msg) {}
};
class InfeasibleSpec : public Error {
public:
    explicit InfeasibleSpec(const std::string& msg) : Error("InfeasibleSpec: " + msg) {}
};

// debias / eval
class VariantMismatch : public Error {
public:
    explicit VariantMismatch(const std::string& msg) : Error("VariantMismatch: " + msg) {}
};
class LengthMismatch : public Error {
public:
    explicit LengthMismatch(const std::string& msg) : Error("LengthMismatch: " + msg) {}
};
class NoEvaluableClass : public Error {
public:
    explicit NoEvaluableClass(const std::string& msg) : Error("NoEvaluableClass: " + msg) {}
};

// config
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error("ConfigError: " + msg) {}
};

}  // namespace fr
