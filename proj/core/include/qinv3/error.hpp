#pragma once

#include <stdexcept>
#include <string>

namespace qinv3 {

/// Malformed text input (presentation, triangulation, category, table files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed request that violates a precondition: bad group spec,
/// non-coprime lens parameters, genus 0, non-abelian group for the trace route.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Stored data contradicts itself (K mismatch, missing 6j entry, broken gluing).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is valid but this pipeline does not serve it, e.g. an
/// elliptic monodromy routed to the layered-triangulation builder.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qinv3
