#pragma once

#include <stdexcept>
#include <string>

namespace gazelens {

/// Base class for every data/domain error raised by the toolkit.
/// The CLI maps these to exit code 2; usage errors exit with 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// core_model
struct MalformedId : Error { using Error::Error; };
struct InvalidToken : Error { using Error::Error; };

// ingest
struct IoError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct ValueError : Error { using Error::Error; };
struct NonMonotonicTime : Error { using Error::Error; };
struct JsonError : Error { using Error::Error; };
struct DuplicateId : Error { using Error::Error; };
struct UnknownCategory : Error { using Error::Error; };
struct DuplicateParticipant : Error { using Error::Error; };

// segmentation
struct BrushMismatch : Error { using Error::Error; };

// attention
struct KTooLarge : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };

// analytics
struct EmptyTrace : Error { using Error::Error; };
struct UnknownBrush : Error { using Error::Error; };

// classify
struct TooFewEvents : Error { using Error::Error; };
struct DegenerateSplit : Error { using Error::Error; };
struct NonFiniteLoss : Error { using Error::Error; };
struct SingleClassTraining : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct KOutOfRange : Error { using Error::Error; };

// synth
struct EmptyCatalogue : Error { using Error::Error; };

} // namespace gazelens
