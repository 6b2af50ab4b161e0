#ifndef ULIE_ERRORS_HPP
#define ULIE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ulie {

// Base for every domain error raised by the library.
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The operation is undefined on the empty word.
class EmptyWordError : public AlgebraError {
public:
    explicit EmptyWordError(const std::string& op)
        : AlgebraError(op + ": undefined on the empty word") {}
};

class NotRegularError : public AlgebraError {
public:
    NotRegularError(const std::string& op, const std::string& word)
        : AlgebraError(op + ": word '" + word + "' is not regular"), word_(word) {}
    const std::string& word() const noexcept { return word_; }

private:
    std::string word_;
};

// Raised by to_basis when the polynomial is not in the free Lie algebra.
class NotLieElementError : public AlgebraError {
public:
    explicit NotLieElementError(const std::string& word)
        : AlgebraError("not a Lie element: leading word '" + word + "' is not regular"), word_(word) {}
    const std::string& word() const noexcept { return word_; }

private:
    std::string word_;
};

class ConstantTermError : public AlgebraError {
public:
    ConstantTermError() : AlgebraError("not a Lie element: nonzero coefficient on the empty word") {}
};

// Argument outside an operation's domain (n = 0 for a_n, etc).
class DomainError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

// Text-grammar error; position is 1-based.
class ParseError : public AlgebraError {
public:
    ParseError(const std::string& what, std::size_t position)
        : AlgebraError(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace ulie

#endif
