#pragma once

#include <stdexcept>

namespace tfse {

/// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter is outside its mathematically valid range.
struct DomainError : Error { using Error::Error; };

/// Sampling a non-vanishing function onto a homogeneous-boundary field.
struct NonVanishingBoundary : Error { using Error::Error; };

/// Two fields from different meshes were combined.
struct MeshMismatch : Error { using Error::Error; };

/// A kernel application needs at least two time levels.
struct HistoryTooShort : Error { using Error::Error; };

/// assemble/step asked for level n without levels 0..n-1 present.
struct HistoryIncomplete : Error { using Error::Error; };

/// The shifted operator has a (near-)zero eigenvalue.
struct SingularShift : Error { using Error::Error; };

/// Dense reference solver limited to M <= 24.
struct TooLarge : Error { using Error::Error; };

/// Elimination hit a vanishing pivot.
struct NearSingular : Error { using Error::Error; };

/// A run would exceed the configured history memory cap.
struct MemoryBudgetExceeded : Error { using Error::Error; };

/// A runtime numeric invariant failed (NaN/Inf or a violated bound). CLI exit code 4.
struct NumericFailure : Error { using Error::Error; };

/// Bad command line or config file. CLI exit code 2.
struct UsageError : Error { using Error::Error; };

/// File output failed. CLI exit code 3.
struct IoError : Error { using Error::Error; };

} // namespace tfse
