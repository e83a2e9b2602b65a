#ifndef SIGSAT_ERRORS_HPP
#define SIGSAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sigsat {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// DIMACS input could not be parsed (bad header, bad literal, duplicate
/// variable in a clause, clause count mismatch, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A caller-supplied object violates its contract (invalid PartitionSpec,
/// single-block query on a multi-block decomposition, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An instance generator was asked for an infeasible parameter combination.
class GenerationError : public Error {
public:
    using Error::Error;
};

/// The exhaustive oracle refuses instances above its variable limit.
class OracleLimitError : public Error {
public:
    using Error::Error;
};

} // namespace sigsat

#endif
