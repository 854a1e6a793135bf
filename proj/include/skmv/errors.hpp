#pragma once

// Domain-error hierarchy shared by every module.  Each error carries a stable
// machine-readable code (used verbatim by the CLI's JSON error payloads) next
// to a human-readable detail message.

#include <stdexcept>
#include <string>
#include <utility>

namespace skmv {

/// Base class for all domain errors: a semantic failure on well-formed input.
/// `code()` is a stable identifier, `what()` a human-readable explanation.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}

  [[nodiscard]] const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// A weight difference was expected to lie in the root lattice but does not.
struct NotInRootLattice : DomainError {
  explicit NotInRootLattice(const std::string& detail)
      : DomainError("NotInRootLattice", detail) {}
};

/// A point set has no componentwise-minimal point among its members, so the
/// canonical translate of its hull is undefined.
struct AmbiguousMinimum : DomainError {
  explicit AmbiguousMinimum(const std::string& detail)
      : DomainError("AmbiguousMinimum", detail) {}
};

/// A step sequence does not decode to a valid folded gallery.
struct MalformedGallery : DomainError {
  explicit MalformedGallery(const std::string& detail)
      : DomainError("MalformedGallery", detail) {}
};

/// A position set is not closed under the span of its step roots.
struct NotAFlat : DomainError {
  explicit NotAFlat(const std::string& detail)
      : DomainError("NotAFlat", detail) {}
};

/// A quadruple fails the structural requirements of the character-quiver
/// construction.
struct NotInClassA : DomainError {
  explicit NotInClassA(const std::string& detail)
      : DomainError("NotInClassA", detail) {}
};

/// Two operands live over different ranks.
struct RankMismatch : DomainError {
  explicit RankMismatch(const std::string& detail)
      : DomainError("RankMismatch", detail) {}
};

/// An index or interval is outside its documented range.
struct BoundsError : DomainError {
  explicit BoundsError(const std::string& detail)
      : DomainError("Bounds", detail) {}
};

/// A weight is not the endpoint of any one-step path from a fundamental
/// chain, i.e. it fails the 0/1 indicator criterion.
struct NotFundamental : DomainError {
  explicit NotFundamental(const std::string& detail)
      : DomainError("NotFundamental", detail) {}
};

}  // namespace skmv
