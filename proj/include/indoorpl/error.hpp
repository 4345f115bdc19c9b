// SPDX-License-Identifier: Apache-2.0
//
// indoorpl: indoor path loss modelling and calibration for the 2.4 GHz ISM band
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indoorpl
{

enum class ErrorKind
{
    InvalidArgument,
    DomainError,
    MissingParameter,
    ParseError,
    EmptyInput,
    FloorMismatch,
    InsufficientData,
    DegenerateDesign,
    LengthMismatch,
    GeometryExhausted,
    IoError
};

const char *to_string(ErrorKind kind);

// Base class of every error raised by the library. The CLI maps all of them to exit status 2.
class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string &what);
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

#define INDOORPL_ERROR_CLASS(Name)                                                       \
    class Name : public Error                                                            \
    {                                                                                    \
      public:                                                                            \
        explicit Name(const std::string &what) : Error(ErrorKind::Name, what) {}         \
    }

INDOORPL_ERROR_CLASS(InvalidArgument);
INDOORPL_ERROR_CLASS(DomainError);
INDOORPL_ERROR_CLASS(MissingParameter);
INDOORPL_ERROR_CLASS(EmptyInput);
INDOORPL_ERROR_CLASS(FloorMismatch);
INDOORPL_ERROR_CLASS(InsufficientData);
INDOORPL_ERROR_CLASS(DegenerateDesign);
INDOORPL_ERROR_CLASS(LengthMismatch);
INDOORPL_ERROR_CLASS(GeometryExhausted);
INDOORPL_ERROR_CLASS(IoError);

#undef INDOORPL_ERROR_CLASS

// Row and column are 1-based; column 0 means the whole row.
class ParseError : public Error
{
  public:
    ParseError(std::size_t row, std::size_t column, const std::string &reason);

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }
    const std::string &reason() const noexcept { return reason_; }

  private:
    std::size_t row_;
    std::size_t column_;
    std::string reason_;
};

} // namespace indoorpl
