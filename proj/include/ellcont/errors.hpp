#pragma once

#include <stdexcept>
#include <string>

namespace ellcont {

enum class ErrorCategory { config, precondition, divergence, internal };

/// All library failures carry a category that the CLI maps onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, std::string msg)
        : std::runtime_error(std::move(msg)), cat_(cat) {}

    ErrorCategory category() const noexcept { return cat_; }

    int exit_code() const noexcept {
        switch (cat_) {
            case ErrorCategory::config: return 2;
            case ErrorCategory::precondition: return 3;
            case ErrorCategory::divergence: return 4;
            case ErrorCategory::internal: return 5;
        }
        return 5;
    }

    const char* category_name() const noexcept {
        switch (cat_) {
            case ErrorCategory::config: return "config";
            case ErrorCategory::precondition: return "precondition";
            case ErrorCategory::divergence: return "divergence";
            case ErrorCategory::internal: return "internal";
        }
        return "internal";
    }

private:
    ErrorCategory cat_;
};

struct ConfigError : Error {
    explicit ConfigError(std::string msg) : Error(ErrorCategory::config, std::move(msg)) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(std::string msg) : Error(ErrorCategory::precondition, std::move(msg)) {}
};

struct DivergenceError : Error {
    explicit DivergenceError(std::string msg) : Error(ErrorCategory::divergence, std::move(msg)) {}
};

struct InternalError : Error {
    explicit InternalError(std::string msg) : Error(ErrorCategory::internal, std::move(msg)) {}
};

} // namespace ellcont
