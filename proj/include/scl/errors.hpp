#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace scl {

// Root of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
               std::string found);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::vector<std::string> expected_;
    std::string found_;
};

// An identifier that is neither an atom ([a-z][a-z0-9_]*) nor a variable ([A-Z][A-Za-z0-9_]*).
class AtomCaseError : public Error {
public:
    AtomCaseError(std::size_t line, std::size_t column, std::string identifier);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& identifier() const { return identifier_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string identifier_;
};

class UnsupportedConnective : public Error {
public:
    using Error::Error;
};

class OpenTermError : public Error {
public:
    explicit OpenTermError(const std::string& variable)
        : Error("term is not closed: contains variable " + variable), variable_(variable) {}
    const std::string& variable() const { return variable_; }

private:
    std::string variable_;
};

class DepthLimitError : public Error {
public:
    explicit DepthLimitError(std::size_t limit)
        : Error("nesting depth exceeds limit of " + std::to_string(limit)), limit_(limit) {}
    std::size_t limit() const { return limit_; }

private:
    std::size_t limit_;
};

class UnboundAtomError : public Error {
public:
    explicit UnboundAtomError(const std::string& atom)
        : Error("valuation has no value for atom " + atom), atom_(atom) {}
    const std::string& atom() const { return atom_; }

private:
    std::string atom_;
};

class MissingBindingError : public Error {
public:
    explicit MissingBindingError(const std::string& variable)
        : Error("substitution has no binding for variable " + variable), variable_(variable) {}
    const std::string& variable() const { return variable_; }

private:
    std::string variable_;
};

class SignatureError : public Error {
public:
    using Error::Error;
};

// A normalizer produced output violating its own contract. Always a bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace scl
