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

#include "indoorpl/error.hpp"

namespace indoorpl
{

const char *to_string(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::FloorMismatch: return "FloorMismatch";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::DegenerateDesign: return "DegenerateDesign";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::GeometryExhausted: return "GeometryExhausted";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}

static std::string format_parse_error(std::size_t row, std::size_t column, const std::string &reason)
{
    std::string msg = "row " + std::to_string(row);
    if (column != 0)
        msg += ", column " + std::to_string(column);
    return msg + ": " + reason;
}

ParseError::ParseError(std::size_t row, std::size_t column, const std::string &reason)
    : Error(ErrorKind::ParseError, format_parse_error(row, column, reason)), row_(row), column_(column), reason_(reason)
{
}

} // namespace indoorpl
