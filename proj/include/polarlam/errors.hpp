// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace polarlam {

/// Input data failed validation (bad material constants, malformed file, ...).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class MaterialError : public ValidationError {
public:
  explicit MaterialError(const std::string& msg) : ValidationError(msg) {}
};

class UnknownMaterialError : public ValidationError {
public:
  explicit UnknownMaterialError(const std::string& name)
      : ValidationError("unknown material: " + name), material(name) {}
  std::string material;
};

/// Requested an identical-ply-only operation on a hybrid stack.
class HybridLaminateError : public ValidationError {
public:
  explicit HybridLaminateError(const std::string& msg) : ValidationError(msg) {}
};

/// A matrix block of the constitutive law could not be inverted.
class SingularBlockError : public std::runtime_error {
public:
  explicit SingularBlockError(const std::string& block)
      : std::runtime_error("singular block: " + block), block_name(block) {}
  std::string block_name;
};

/// A closed-form denominator is within tolerance of zero (singular laminate).
class DenominatorVanishesError : public std::runtime_error {
public:
  explicit DenominatorVanishesError(const std::string& which)
      : std::runtime_error("closed-form denominator vanishes: " + which) {}
};

}  // namespace polarlam
