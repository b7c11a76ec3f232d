#ifndef WHL_ERRORS_HPP
#define WHL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace whl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidPartition : Error { using Error::Error; };
struct DuplicateDegree : Error { using Error::Error; };
struct InvalidClass : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NoSuchPartition : Error { using Error::Error; };
struct EvenModulus : Error { using Error::Error; };
struct ResonantModulus : Error { using Error::Error; };
struct NonzeroConstantRequired : Error { using Error::Error; };
struct NoEdges : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// An arithmetic identity the theory guarantees failed to hold; always a bug.
struct InternalError : Error { using Error::Error; };

} // namespace whl

#endif
