#ifndef CHAINMOD_ERRORS_HPP
#define CHAINMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chainmod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSegment : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ComplexMismatch : Error { using Error::Error; };
struct NotInBoundarySupport : Error { using Error::Error; };
struct MalformedChain : Error { using Error::Error; };
struct CoefficientOutOfRange : Error { using Error::Error; };
struct ApexCollision : Error { using Error::Error; };
struct ParamOutOfRange : Error { using Error::Error; };

// Violated internal invariant (e.g. repair iteration cap). CLI exit code 3.
struct InternalError : Error { using Error::Error; };

// Malformed input document; carries 1-based line/column.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg), line(line_), column(column_) {}
};

} // namespace chainmod

#endif
