/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>

namespace slink {

/** Base class of every error raised by the library. */
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** A caller-supplied value is out of range or violates a precondition. */
class invalid_argument : public error {
 public:
  using error::error;
};

/** Malformed input file or in-memory data rejected at ingestion. */
class ingestion_error : public error {
 public:
  using error::error;
};

/** Filesystem failure (cannot open, short write). */
class io_error : public error {
 public:
  using error::error;
};

/** The reconnection loop did not reach a single component within its cap. */
class not_converged : public error {
 public:
  using error::error;
};

/** An internal invariant was violated. Indicates a bug, not bad input. */
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace slink

#define SLINK_EXPECTS(cond, exc, msg) \
  do {                                \
    if (!(cond)) throw exc(msg);      \
  } while (0)
