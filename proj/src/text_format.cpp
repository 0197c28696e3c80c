// Copyright 2026 The DualBloch Authors
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

#include "dualbloch/text_format.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <vector>

namespace dualbloch {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class ComplexReader {
 public:
  ComplexReader(std::string_view text, std::size_t base) : s_(text), base_(base) {}

  Complex read() {
    skip_space();
    if (pos_ == s_.size()) fail("empty complex literal");
    auto [first, first_imag] = term(/*require_sign=*/false);
    skip_space();
    if (pos_ == s_.size()) {
      return first_imag ? Complex(0, first) : Complex(first, 0);
    }
    if (first_imag) fail("imaginary part must come last");
    auto [second, second_imag] = term(/*require_sign=*/true);
    if (!second_imag) fail("expected imaginary part");
    skip_space();
    if (pos_ != s_.size()) fail("unexpected trailing characters");
    return Complex(first, second);
  }

 private:
  std::pair<double, bool> term(bool require_sign) {
    double sign = 1;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      if (s_[pos_] == '-') sign = -1;
      ++pos_;
      skip_space();
    } else if (require_sign) {
      fail("expected '+' or '-'");
    }
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      return {sign, true};
    }
    double value = 0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    if (!std::isfinite(value)) fail("number is not finite");
    bool imag = false;
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      imag = true;
      ++pos_;
    }
    return {sign * value, imag};
  }

  void skip_space() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, base_ + pos_);
  }

  std::string_view s_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Complex parse_complex(std::string_view text) { return ComplexReader(text, 0).read(); }

TwoQubitState parse_state(std::string_view text) {
  if (auto named = states::by_name(trim(text))) return *named;

  Vec4c amps;
  std::size_t start = 0;
  int count = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
    if (count == 4) throw ParseError("expected exactly 4 amplitudes", start);
    amps[count++] = ComplexReader(text.substr(start, stop - start), start).read();
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (count != 4) {
    throw ParseError("expected 4 comma-separated amplitudes or a state name",
                     text.size());
  }
  return TwoQubitState::from_amplitudes(amps);
}

std::string format_real(double x, int significant_digits) {
  return fmt::format("{:.{}g}", x, significant_digits);
}

std::string format_complex(Complex z, int significant_digits) {
  double re = z.real();
  double im = z.imag();
  if (significant_digits < 17) {
    if (std::abs(re) < EPS_EXACT) re = 0;
    if (std::abs(im) < EPS_EXACT) im = 0;
  }
  if (re == 0) re = 0;  // drop the sign of -0
  if (im == 0) return format_real(re, significant_digits);
  if (re == 0) return format_real(im, significant_digits) + "i";
  std::string out = format_real(re, significant_digits);
  out += im < 0 ? "-" : "+";
  out += format_real(std::abs(im), significant_digits);
  out += "i";
  return out;
}

std::string format_state(const TwoQubitState& psi, int significant_digits) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (i) out += ",";
    out += format_complex(psi[i], significant_digits);
  }
  return out;
}

}  // namespace dualbloch
