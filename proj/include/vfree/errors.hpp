#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vfree {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A multiplication table that is not a group law.
class TableNotAGroup : public Error {
public:
    using Error::Error;
};

class GeneratorsDontGenerate : public Error {
public:
    using Error::Error;
};

/// A letter whose symbol is not part of the alphabet it is used with.
class ForeignSymbol : public Error {
public:
    using Error::Error;
};

/// One failed structural check on a graph of groups.
struct Diagnostic {
    enum class Kind {
        BadTable,
        BadMap,
        NotInjective,
        NotHomomorphism,
        NotConnected,
        DuplicateSymbol,
        BadSymbol,
        BadReference,
    };
    Kind kind;
    std::string message;
};

const char* to_string(Diagnostic::Kind kind);

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// A word that is not an A-loop at the base vertex.
class NotALoop : public Error {
public:
    NotALoop(std::size_t word_index, std::size_t position, const std::string& reason);
    std::size_t word_index() const { return word_index_; }
    std::size_t position() const { return position_; }

private:
    std::size_t word_index_;
    std::size_t position_;
};

class NotReduced : public Error {
public:
    using Error::Error;
};

/// A graph vertex forced onto two different vertices of the underlying graph.
class ConflictingAssignment : public Error {
public:
    using Error::Error;
};

class NotUnimodular : public Error {
public:
    using Error::Error;
};

class DetMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed text input (spec files, words, matrices).
class ParseError : public Error {
public:
    using Error::Error;
};

class UnknownSymbol : public ParseError {
public:
    using ParseError::ParseError;
};

class BadExponent : public ParseError {
public:
    using ParseError::ParseError;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantBreach : public Error {
public:
    using Error::Error;
};

}  // namespace vfree
