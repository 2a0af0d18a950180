#ifndef UDM_ERROR_HPP
#define UDM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace udm {

/// Invalid arguments or parameters outside an operation's domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in finite field") {}
};

/// Rank-deficient system where a unique solution was required.
class SingularError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InconsistentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A transformation step could not be carried out on the given family.
class TransformError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Too few symbols received, or the received symbols do not determine u.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace udm

#endif  // UDM_ERROR_HPP
