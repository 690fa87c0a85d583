// Copyright (c) 2026 voxtopo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace voxtopo {

/// File could not be opened or read/written at the OS level.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// File content does not conform to a supported format.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// A surface or mesh violates a structural invariant (corrupt counts,
/// open edges, incidence out of range). Signals invalid input or an
/// extraction bug, never a recoverable condition.
class SurfaceError : public std::runtime_error {
 public:
  explicit SurfaceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace voxtopo
