#pragma once

#include <stdexcept>
#include <string>

namespace nonarch {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what)
        : std::invalid_argument("dimension mismatch: " + what) {}
};

struct SingularLinearPart : std::domain_error {
    SingularLinearPart() : std::domain_error("singular linear part") {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what)
        : std::invalid_argument("precondition violated: " + what) {}
};

struct BoundExceeded : std::invalid_argument {
    explicit BoundExceeded(const std::string& what)
        : std::invalid_argument("bound exceeded: " + what) {}
};

struct WrongConstruction : std::invalid_argument {
    explicit WrongConstruction(const std::string& what)
        : std::invalid_argument("wrong construction: " + what) {}
};

// Thrown when a requested orbit base point is fixed by some nonempty word.
struct StabilizedBasePoint : std::invalid_argument {
    std::string word;
    explicit StabilizedBasePoint(std::string w)
        : std::invalid_argument("base point stabilized by word \"" + w + "\""),
          word(std::move(w)) {}
};

struct UnsupportedDescriptor : std::invalid_argument {
    explicit UnsupportedDescriptor(const std::string& what)
        : std::invalid_argument("unsupported descriptor: " + what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what)
        : std::invalid_argument("parse error: " + what) {}
};

}  // namespace nonarch
