#pragma once

#include <stdexcept>
#include <string>

namespace hookcomm {

// Every library error carries a short machine-readable kind tag so the CLI
// can print "error: <kind>: <message>" on a single line.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error("invalid-input", what) {}
};

class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& what) : Error("resource-limit", what) {}
};

class NotNilpotent : public Error {
public:
    explicit NotNilpotent(const std::string& what) : Error("not-nilpotent", what) {}
};

// Raised by modular rank when the chosen prime divides a denominator.
class BadModulus : public Error {
public:
    explicit BadModulus(const std::string& what) : Error("retry-with-new-prime", what) {}
};

// Hook parameters outside n >= 3, m >= 1.
class OutOfTheoremDomain : public Error {
public:
    explicit OutOfTheoremDomain(const std::string& what)
        : Error("out-of-theorem-domain", what) {}
};

class WitnessUnavailable : public Error {
public:
    explicit WitnessUnavailable(const std::string& what)
        : Error("witness-unavailable", what) {}
};

// A constructed object failed its own verification. Never expected to fire.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error("internal-error", what) {}
};

}  // namespace hookcomm
