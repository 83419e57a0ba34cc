#pragma once

#include <stdexcept>
#include <string>

namespace kset {

enum class ErrorKind {
    Syntax,         // malformed spec strings or input files
    InvalidParam,   // parameter outside its documented constraint
    NotLatin,       // table row/column repeats an entry
    NotAssociative, // table fails the exhaustive triple check
    NoIdentity,     // row/column 0 is not the identity pattern
    Range,          // element index out of range
    Resource,       // memory cap or order cap exceeded
    Io,             // file could not be read
    NotASubgroup,   // a K-set failed closure during series iteration
    Malformed,      // degenerate symbolic commutator pair
    Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
          kind_(kind),
          raw_(msg) {}

    ErrorKind kind() const { return kind_; }
    const std::string& raw() const { return raw_; }

private:
    ErrorKind kind_;
    std::string raw_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Syntax: return "SyntaxError";
        case ErrorKind::InvalidParam: return "InvalidParam";
        case ErrorKind::NotLatin: return "NotLatin";
        case ErrorKind::NotAssociative: return "NotAssociative";
        case ErrorKind::NoIdentity: return "NoIdentity";
        case ErrorKind::Range: return "RangeError";
        case ErrorKind::Resource: return "ResourceLimit";
        case ErrorKind::Io: return "IoError";
        case ErrorKind::NotASubgroup: return "NotASubgroup";
        case ErrorKind::Malformed: return "MalformedPair";
        case ErrorKind::Internal: return "InternalError";
    }
    return "Error";
}

} // namespace kset
