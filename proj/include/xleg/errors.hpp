// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace xleg {

/// Rational function evaluated at a zero of its (reduced) denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quotient that was required to be polynomial left a remainder.
class NotPolynomialError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A recursion step hit an identically vanishing denominator 1 + t R.
class DegenerateParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation requires parameters for which tau has no zeros on [-1, 1].
class InadmissibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two routes that must agree by theorem did not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace xleg
