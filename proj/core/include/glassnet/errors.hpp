#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "glassnet/region.hpp"

namespace glassnet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that is well-formed but violates a rule of the model.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input files, unreadable paths.
class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidNetworkError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OnWallError : public DomainError {
 public:
  OnWallError(int coordinate, int threshold_index);
  int coordinate() const { return coordinate_; }
  int threshold_index() const { return threshold_index_; }

 private:
  int coordinate_;
  int threshold_index_;
};

class MissingFocalError : public DomainError {
 public:
  explicit MissingFocalError(RegionIndex region);
  const RegionIndex& region() const { return region_; }

 private:
  RegionIndex region_;
};

/// Two coordinates reach their thresholds at the same instant.
class TieError : public DomainError {
 public:
  TieError(int first, int second);
  int first() const { return first_; }
  int second() const { return second_; }

 private:
  int first_;
  int second_;
};

/// The focal point of the entered region sends the trajectory straight back
/// through the wall it just crossed.
class SlidingWallError : public DomainError {
 public:
  SlidingWallError(RegionIndex region, int coordinate);
  const RegionIndex& region() const { return region_; }
  int coordinate() const { return coordinate_; }

 private:
  RegionIndex region_;
  int coordinate_;
};

class AmbiguousEntryError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotOnSubspaceError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotNonIdealError : public DomainError {
 public:
  using DomainError::DomainError;
};

class FocalOnWallError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OutOfDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInConeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoConvergenceError : public DomainError {
 public:
  NoConvergenceError(const std::string& what, int iterations);
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

class ContainmentFailure : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class ViolationReason {
  TooShort,
  RepeatedRegion,
  NonAdjacentSuccessor,
  NoSwitchingCoordinate,
  MultipleSwitchingCoordinates,
  WrongCoordinate,
  WrongDirection,
  NonTransversalWall,
};

const char* to_string(ViolationReason reason);

/// A cycle of regions that is not a cyclic attractor.
class CycleViolation : public DomainError {
 public:
  CycleViolation(RegionIndex region, ViolationReason reason, const std::string& detail);
  const RegionIndex& region() const { return region_; }
  ViolationReason reason() const { return reason_; }

 private:
  RegionIndex region_;
  ViolationReason reason_;
};

}  // namespace glassnet
