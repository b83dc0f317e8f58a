// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace jointassoc {

// std::invalid_argument covers bad parameters. The types below cover the
// remaining failure classes so callers (and the CLI exit-code mapping) can
// tell them apart.

/// Input references something that does not exist (dangling ids, unknown images).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A statistic or similarity has no defined value for the given input.
class UndefinedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Problem exceeds the size an exhaustive routine is willing to enumerate.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jointassoc
