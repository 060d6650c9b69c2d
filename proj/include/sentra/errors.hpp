#pragma once

#include <stdexcept>
#include <string>

namespace sentra {

// Exit-code categories used by the CLI: 1 config, 2 data, 3 runtime.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual int exit_code() const { return 3; }
};

class ConfigError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 1; }
};

class DataError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 2; }
};

class RuntimeError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 3; }
};

// --- data errors -----------------------------------------------------------

class ParseError : public DataError {
public:
    ParseError(const std::string& what, size_t line)
        : DataError("parse error at line " + std::to_string(line) + ": " + what),
          line_(line) {}
    size_t line() const { return line_; }

private:
    size_t line_;
};

class EmptyLexicon : public DataError {
public:
    EmptyLexicon() : DataError("lexicon contains no valid entries") {}
};

class EmptyData : public DataError {
public:
    EmptyData() : DataError("market data is empty") {}
};

class DataGap : public DataError {
public:
    DataGap(const std::string& date, const std::string& ticker)
        : DataError("missing row for (" + date + ", " + ticker + ")") {}
};

class NonPositivePrice : public DataError {
public:
    NonPositivePrice(const std::string& date, const std::string& ticker, double px)
        : DataError("non-positive close " + std::to_string(px) + " for (" + date +
                    ", " + ticker + ")") {}
};

// --- runtime errors ---------------------------------------------------------

class DimensionMismatch : public RuntimeError {
public:
    explicit DimensionMismatch(const std::string& msg)
        : RuntimeError("dimension mismatch: " + msg) {}
};

class EndOfData : public RuntimeError {
public:
    EndOfData() : RuntimeError("no next market frame") {}
};

class EmptyHeadline : public RuntimeError {
public:
    EmptyHeadline() : RuntimeError("headline tokenizes to zero terms") {}
};

class EmptyBatch : public RuntimeError {
public:
    EmptyBatch() : RuntimeError("empty transition batch") {}
};

class TooShort : public RuntimeError {
public:
    explicit TooShort(const std::string& msg) : RuntimeError("series too short: " + msg) {}
};

class EmptySeries : public RuntimeError {
public:
    EmptySeries() : RuntimeError("empty series") {}
};

class NoValidScores : public RuntimeError {
public:
    NoValidScores() : RuntimeError("no agent produced a valid validation score") {}
};

class InsufficientData : public RuntimeError {
public:
    explicit InsufficientData(const std::string& msg)
        : RuntimeError("insufficient data: " + msg) {}
};

}  // namespace sentra
