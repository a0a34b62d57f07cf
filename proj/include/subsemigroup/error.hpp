#pragma once

#include <stdexcept>
#include <string>

namespace subsemigroup {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad alphabet, erasing image, letter outside the alphabet.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Two operands live over different alphabets.
class AlphabetMismatch : public Error {
public:
    AlphabetMismatch() : Error("operands are over different alphabets") {}
};

/// An operation would produce the empty word, which is not a word.
class EmptyWordError : public Error {
public:
    using Error::Error;
};

class UnknownGenerator : public Error {
public:
    explicit UnknownGenerator(const std::string& name)
        : Error("unknown generator name '" + name + "'") {}
};

/// A documented precondition does not hold (e.g. the system has a fixed letter).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured cap.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// The requested prefix resolution cannot be guaranteed at the requested depth.
class ResolutionUnreachable : public Error {
public:
    using Error::Error;
};

} // namespace subsemigroup
