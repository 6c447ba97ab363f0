// Error types shared across the library.
//
// Each class corresponds to one failure category the command-line driver
// maps to a distinct exit code: malformed input, an operation requested
// outside its domain of validity, a computation refused because it would
// exceed the configured size guard, and a cross-check disagreement.

#pragma once

#include <stdexcept>
#include <string>

namespace springer {

/// Malformed textual input (link pattern or tableau).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was requested outside its domain of validity, e.g. the
/// direct singular-locus algorithm on a non-maximal pattern.
class ScopeError : public std::runtime_error {
public:
    explicit ScopeError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation was refused because it would enumerate a pattern universe
/// beyond the configured size guard.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Two methods that must agree produced different answers.
class MismatchError : public std::runtime_error {
public:
    explicit MismatchError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace springer
