// SPDX-License-Identifier: Apache-2.0
//
// hmimo - electromagnetic-domain LOS channel models for holographic MIMO surfaces
// Copyright (C) 2026 The hmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef HMIMO_ERRORS_HPP
#define HMIMO_ERRORS_HPP

#include <exception>
#include <string>

#include "hmimo/types.hpp"

namespace hmimo
{

// Base of every error raised by the library. The message can be prefixed
// with context (e.g. the (m, n) pair) while rethrowing the same dynamic type.
class Error : public std::exception
{
  public:
    explicit Error(std::string message) : message_(std::move(message)) {}
    const char *what() const noexcept override { return message_.c_str(); }

    // Short name of the error kind, e.g. "CoincidentPoints".
    virtual const char *kind() const noexcept { return "Error"; }

    void prepend_context(const std::string &context) { message_ = context + ": " + message_; }

  private:
    std::string message_;
};

#define HMIMO_DECLARE_ERROR(Name)                                                  \
    class Name : public Error                                                      \
    {                                                                              \
      public:                                                                      \
        using Error::Error;                                                        \
        const char *kind() const noexcept override { return #Name; }               \
    }

HMIMO_DECLARE_ERROR(InvalidArgument);
HMIMO_DECLARE_ERROR(DegenerateOrientation);
HMIMO_DECLARE_ERROR(AzimuthDegenerate);
HMIMO_DECLARE_ERROR(CoincidentPoints);
HMIMO_DECLARE_ERROR(OrderingMismatch);
HMIMO_DECLARE_ERROR(DimensionMismatch);
HMIMO_DECLARE_ERROR(ZeroReference);

#undef HMIMO_DECLARE_ERROR

// Raised when the tensor Gauss-Legendre rule did not settle within the
// refinement budget. Carries the last two estimates.
class QuadratureNotConverged : public Error
{
  public:
    QuadratureNotConverged(std::string message, Mat3c previous, Mat3c last, int last_nodes)
        : Error(std::move(message)), previous_(previous), last_(last), last_nodes_(last_nodes)
    {
    }
    const char *kind() const noexcept override { return "QuadratureNotConverged"; }

    const Mat3c &previous_estimate() const noexcept { return previous_; }
    const Mat3c &last_estimate() const noexcept { return last_; }
    int last_nodes() const noexcept { return last_nodes_; }

  private:
    Mat3c previous_;
    Mat3c last_;
    int last_nodes_;
};

} // namespace hmimo

#endif
