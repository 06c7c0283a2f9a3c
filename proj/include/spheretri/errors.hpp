#pragma once

#include <stdexcept>
#include <string>

namespace spheretri {

// Reasons a rotation system can fail validation, in the order the checks run.
enum class ValidationErrorKind {
    TooFewVertices,    // fewer than 4 vertex entries
    NotSimple,         // self-loop, repeated neighbor, or out-of-range index
    NotSymmetric,      // u lists v but v does not list u
    NonTriangularFace, // some face orbit has length != 3
    Disconnected,
    WrongEdgeCount,    // e != 3n-6 (all-triangle rotation systems of higher genus land here)
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ValidationErrorKind kind() const { return kind_; }

private:
    ValidationErrorKind kind_;
};

class InvalidSplit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFlippable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InducedCycleBroken : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownPredicateField : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FormatErrorKind {
    BadHeader,
    TruncatedRecord,
    UnsupportedVariant, // multi-byte planar_code (lead size byte 0)
    TooManyVertices,
    ValidationFailed,
};

class FormatError : public std::runtime_error {
public:
    FormatError(FormatErrorKind kind, const std::string& what, long record_index = -1)
        : std::runtime_error(what), kind_(kind), record_index_(record_index) {}
    FormatErrorKind kind() const { return kind_; }
    // index of the offending graph record, -1 when not applicable
    long record_index() const { return record_index_; }

private:
    FormatErrorKind kind_;
    long record_index_;
};

} // namespace spheretri
