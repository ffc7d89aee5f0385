#pragma once

#include <stdexcept>
#include <string>

namespace bandlim {

// Base error carrying a stable machine-readable kind tag. CLI surfaces the
// tag in its JSON error document; library callers can catch by type.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error("invalid-input", msg) {}
};

class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error("numerical-accuracy", msg) {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& msg) : Error("resource", msg) {}
};

class UndefinedBandwidthError : public Error {
public:
    explicit UndefinedBandwidthError(const std::string& msg) : Error("undefined-bandwidth", msg) {}
};

class InfeasibleCutoffError : public Error {
public:
    explicit InfeasibleCutoffError(const std::string& msg) : Error("infeasible-cutoff", msg) {}
};

class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& msg) : Error("infeasible", msg) {}
};

class DisconnectedComponentError : public Error {
public:
    explicit DisconnectedComponentError(const std::string& msg)
        : Error("disconnected-component", msg) {}
};

// Raised when a formula variant produces a value outside the domain of a
// downstream operation (e.g. a nonpositive bias limit under the printed
// coefficient variant).
class VariantInconsistencyError : public Error {
public:
    explicit VariantInconsistencyError(const std::string& msg)
        : Error("variant-inconsistency", msg) {}
};

}  // namespace bandlim
