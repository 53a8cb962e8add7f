// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VCGAME_RATIONAL_HPP_
#define VCGAME_RATIONAL_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace vcgame {

// Exact arbitrary-precision rational. mpq_class keeps values canonical as
// long as every constructor path goes through MakeRational/ParseRational.
using Rational = mpq_class;

// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (numbers, JSON documents, profile strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

Rational MakeRational(long num, long den = 1);

// Accepts "12", "-3", "2.503", ".5", "7/3", "-1/4". Decimal strings are
// converted exactly ("2.503" -> 2503/1000).
Rational ParseRational(std::string_view text);

// Finite-decimal rendering when the reduced denominator is 2^a 5^b,
// otherwise "num/den". ParseRational(FormatRational(x)) == x.
std::string FormatRational(const Rational& value);

// True iff the reduced denominator has no prime factors other than 2 and 5.
bool HasFiniteDecimal(const Rational& value);

}  // namespace vcgame

#endif  // VCGAME_RATIONAL_HPP_
