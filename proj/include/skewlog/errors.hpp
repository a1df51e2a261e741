#ifndef SKEWLOG_ERRORS_HPP
#define SKEWLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewlog {

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation exactly at a pole where no finite limit exists.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Caller misuse: missing parameter, limit exceeded, bad flag.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace skewlog

#endif
