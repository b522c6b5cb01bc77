#pragma once

#include <stdexcept>

namespace topiclab {

/// Base class for all topiclab errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable file.
struct IoError : Error {
    using Error::Error;
};

/// Malformed input data (bad JSONL record, bad lexicon line, bad artifact header).
struct FormatError : Error {
    using Error::Error;
};

/// No term survived the document-frequency filters.
struct EmptyVocabulary : Error {
    using Error::Error;
};

/// Incompatible matrix/factor shapes, or a rank outside [1, min(n, m)].
struct DimensionError : Error {
    using Error::Error;
};

/// A matrix with no nonzero entries where data is required.
struct EmptyMatrix : Error {
    using Error::Error;
};

/// A matrix with the wrong weighting for the requested operation.
struct WeightingError : Error {
    using Error::Error;
};

/// Noun filtering removed every descriptor of a topic.
struct EmptyDescriptorSet : Error {
    using Error::Error;
};

/// A topic whose term weights are all zero (a dead topic).
struct AllZeroTopic : Error {
    using Error::Error;
};

/// A label with no token in the training vocabulary.
struct UnknownVocabulary : Error {
    using Error::Error;
};

/// Evaluation reports built against different validation sets or thresholds.
struct MismatchedValidation : Error {
    using Error::Error;
};

/// A pipeline stage input file that does not exist yet.
struct MissingArtifact : IoError {
    using IoError::IoError;
};

}  // namespace topiclab
