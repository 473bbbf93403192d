#pragma once

#include <stdexcept>
#include <string>

namespace pdthresh {

// Every precondition violation in the library throws Error with a code that
// callers (and the CLI) can switch on.  Messages are human-readable detail.
class Error : public std::runtime_error {
public:
    enum class Code {
        DimensionMismatch,
        OutOfRange,
        DuplicateEdge,
        NotConnected,
        NotChordal,
        NotATree,
        NotAPathPattern,
        NonpositiveDiagonal,
        NotASubgraph,
        NoBrokenCycle,
        SingularBlock,
        NotPd,
        TooSmall,
        NonFinite,
        PatternMismatch,
        InvalidDecomposition,
        Parse,
        Io,
    };

    Error(Code c, const std::string& what) : std::runtime_error(what), code(c) {}

    Code code;
};

inline const char* error_code_name(Error::Code c) {
    switch (c) {
        case Error::Code::DimensionMismatch:   return "DimensionMismatch";
        case Error::Code::OutOfRange:          return "OutOfRange";
        case Error::Code::DuplicateEdge:       return "DuplicateEdge";
        case Error::Code::NotConnected:        return "NotConnected";
        case Error::Code::NotChordal:          return "NotChordal";
        case Error::Code::NotATree:            return "NotATree";
        case Error::Code::NotAPathPattern:     return "NotAPathPattern";
        case Error::Code::NonpositiveDiagonal: return "NonpositiveDiagonal";
        case Error::Code::NotASubgraph:        return "NotASubgraph";
        case Error::Code::NoBrokenCycle:       return "NoBrokenCycle";
        case Error::Code::SingularBlock:       return "SingularBlock";
        case Error::Code::NotPd:               return "NotPd";
        case Error::Code::TooSmall:            return "TooSmall";
        case Error::Code::NonFinite:           return "NonFinite";
        case Error::Code::PatternMismatch:     return "PatternMismatch";
        case Error::Code::InvalidDecomposition: return "InvalidDecomposition";
        case Error::Code::Parse:               return "Parse";
        case Error::Code::Io:                  return "Io";
    }
    return "Unknown";
}

}  // namespace pdthresh
