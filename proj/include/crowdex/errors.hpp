#pragma once

#include <stdexcept>
#include <string>

namespace crowdex {

// Base class for every validation or domain error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mass-function construction and algebra.
struct SumNotOne : Error { using Error::Error; };
struct NegativeMass : Error { using Error::Error; };
struct EmptySetMass : Error { using Error::Error; };
struct ForeignSubset : Error { using Error::Error; };
struct EmptySubset : Error { using Error::Error; };
struct FrameMismatch : Error { using Error::Error; };
struct EmptyList : Error { using Error::Error; };

// Preference graphs.
struct UnknownItem : Error { using Error::Error; };

// Campaign ingestion and filtering.
struct ParseError : Error { using Error::Error; };
struct DuplicateResponse : Error { using Error::Error; };
struct UnknownCondition : Error { using Error::Error; };
struct RatingOutOfRange : Error { using Error::Error; };
struct ThresholdOutOfRange : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// Synthetic population generation.
struct InvalidSpec : Error { using Error::Error; };

// File access problems surfaced by the command-line driver.
struct IoError : Error { using Error::Error; };

} // namespace crowdex
