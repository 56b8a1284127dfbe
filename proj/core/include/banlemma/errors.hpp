#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace banlemma {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Resource file could not be parsed or violates the file contract.
// what() carries the file name and, where available, the location.
class MalformedResource : public Error {
public:
    using Error::Error;
};

// Duplicate dictionary key with a different lemma, or a lemma value whose
// own entry contradicts the self-mapping convention.
class ConflictingEntry : public Error {
public:
    using Error::Error;
};

// Empty string in a marker or suffix list.
class EmptyMarker : public Error {
public:
    using Error::Error;
};

// Annotated-TSV line with the wrong field count (strict mode).
class MalformedLine : public Error {
public:
    MalformedLine(std::size_t line_no, const std::string& message)
        : Error(message), line_no(line_no) {}
    std::size_t line_no;
};

// PoS tag not covered by the projection (strict mode).
class UnknownPosTag : public Error {
public:
    UnknownPosTag(std::size_t line_no, const std::string& message)
        : Error(message), line_no(line_no) {}
    std::size_t line_no;
};

// Gold and prediction streams of different length.
class AlignmentError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace banlemma
