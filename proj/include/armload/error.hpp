#pragma once

#include <stdexcept>
#include <string>

namespace armload {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorCategory : int {
    kUsage = 1,
    kIo = 2,
    kData = 3,
    kNumeric = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

struct UsageError : Error {
    explicit UsageError(const std::string& m) : Error(ErrorCategory::kUsage, m) {}
};

struct IoError : Error {
    explicit IoError(const std::string& m) : Error(ErrorCategory::kIo, m) {}
};

// File exists but is not a format this tool reads/writes.
struct UnsupportedFormatError : IoError {
    explicit UnsupportedFormatError(const std::string& m) : IoError(m) {}
};

struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& m) : Error(ErrorCategory::kData, m) {}
};

struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string& m) : Error(ErrorCategory::kData, m) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(ErrorCategory::kData, m) {}
};

struct NumericError : Error {
    explicit NumericError(const std::string& m) : Error(ErrorCategory::kNumeric, m) {}
};

}  // namespace armload
