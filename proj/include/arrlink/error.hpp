#pragma once
#include <stdexcept>
#include <string>

namespace arrlink {

enum class Errc {
    ReducibleMinPoly,
    AmbiguousRootHint,
    NotGaloisExtension,
    DivisionByZero,
    FieldMismatch,
    IdenticalLines,
    IdenticalPoints,
    SingularMatrix,
    DegreeMismatch,
    DisconnectedGraph,
    NonContiguousSupport,
    LineNotInSupport,
    LineAbsent,
    FrameSearchExhausted,
    DegenerateSegment,
    InvalidTensor,
    InconsistentWiring,
    NotAnAutomorphism,
    SharedLineOutsidePrefix,
    ModulusMismatch,
    GenericityExhausted,
    SchemaError,
    DuplicateLine,
    PencilRejected,
};

const char *errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string &what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace arrlink
