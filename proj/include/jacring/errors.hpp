#pragma once

#include <stdexcept>
#include <string>

namespace jacring {

struct DimensionOverflow : std::runtime_error {
    explicit DimensionOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentDimensions : std::runtime_error {
    explicit InconsistentDimensions(const std::string& what) : std::runtime_error(what) {}
};

struct BidegreeMismatch : std::runtime_error {
    explicit BidegreeMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when the top graded piece is not one-dimensional, i.e. the instance
// fails to behave like a transversal (smooth, snc) configuration.
struct TraceUndefined : std::runtime_error {
    long long dim;
    explicit TraceUndefined(long long dim_)
        : std::runtime_error("trace undefined: top piece has dimension " + std::to_string(dim_)),
          dim(dim_) {}
};

struct BadSubspace : std::runtime_error {
    explicit BadSubspace(const std::string& what) : std::runtime_error(what) {}
};

struct BadIndexList : std::runtime_error {
    explicit BadIndexList(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeMismatch : std::runtime_error {
    explicit DegreeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct GenerationBudgetExhausted : std::runtime_error {
    explicit GenerationBudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct SchemaError : std::runtime_error {
    std::string pointer;  // JSON pointer to the offending element
    SchemaError(const std::string& what, std::string pointer_)
        : std::runtime_error(what + " (at " + pointer_ + ")"), pointer(std::move(pointer_)) {}
};

}  // namespace jacring
