#pragma once

#include <stdexcept>
#include <string>

namespace treewave {

// Base class for all treewave errors. Every failure mode thrown by the
// library derives from this, so callers can catch one type at the boundary.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// syntax
struct MergeError : Error { using Error::Error; };
struct UnlabelableError : Error { using Error::Error; };
struct OrderMismatchError : Error { using Error::Error; };

// signal
struct NyquistError : Error { using Error::Error; };
struct UnknownCategoryError : Error { using Error::Error; };
struct StepSizeError : Error { using Error::Error; };
struct EmptyInputError : Error { using Error::Error; };

// spiking
struct IndexError : Error { using Error::Error; };
struct ThinnessError : Error { using Error::Error; };

// lexicon
struct DimensionError : Error { using Error::Error; };
struct DegenerateWeightsError : Error { using Error::Error; };

// hopf
struct NoDecompositionError : Error { using Error::Error; };

// codec
struct UnlabeledTreeError : Error { using Error::Error; };
struct UnknownLeafError : Error { using Error::Error; };
struct TooShortError : Error { using Error::Error; };
struct AmbiguousDecodeError : Error { using Error::Error; };
struct InsufficientDataError : Error { using Error::Error; };

// sim
struct ScheduleError : Error { using Error::Error; };

// io / config
struct ConfigError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

}  // namespace treewave
