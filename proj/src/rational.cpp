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

#include "vcgame/rational.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace vcgame {
namespace {

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

mpz_class ParseInteger(std::string_view digits, std::string_view original) {
  if (!AllDigits(digits)) {
    throw ParseError("invalid number '" + std::string(original) + "'");
  }
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational MakeRational(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) throw ParseError("empty number");

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = ParseInteger(s.substr(0, slash), text);
    mpz_class den = ParseInteger(s.substr(slash + 1), text);
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    result = Rational(num, den);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw ParseError("invalid number '" + std::string(text) + "'");
    }
    mpz_class num = whole.empty() ? mpz_class(0) : ParseInteger(whole, text);
    mpz_class den = 1;
    if (!frac.empty()) {
      mpz_class f = ParseInteger(frac, text);
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      num = num * den + f;
    }
    result = Rational(num, den);
  } else {
    result = Rational(ParseInteger(s, text));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

bool HasFiniteDecimal(const Rational& value) {
  mpz_class den = value.get_den();
  for (unsigned long p : {2UL, 5UL}) {
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
      mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
    }
  }
  return den == 1;
}

std::string FormatRational(const Rational& value) {
  if (!HasFiniteDecimal(value)) return value.get_str();
  if (value.get_den() == 1) return value.get_num().get_str();

  mpz_class den = value.get_den();
  unsigned long twos = mpz_scan1(den.get_mpz_t(), 0);
  unsigned long fives = 0;
  mpz_class rest = den >> twos;
  while (rest != 1) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 5);
    ++fives;
  }
  const unsigned long digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = abs(value.get_num()) * (scale / den);

  std::string body = scaled.get_str();
  if (body.size() <= digits) body.insert(0, digits - body.size() + 1, '0');
  body.insert(body.size() - digits, ".");
  while (body.back() == '0') body.pop_back();
  if (body.back() == '.') body.pop_back();
  return sgn(value) < 0 ? "-" + body : body;
}

}  // namespace vcgame
