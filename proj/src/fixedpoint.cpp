// Copyright 2026 The qneuron Authors
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

#include "qneuron/fixedpoint.hpp"

#include <cmath>
#include <stdexcept>

namespace qneuron {

FixedPointFormat FixedPointFormat::signed_format(int int_bits, int frac_bits) {
  FixedPointFormat fmt{1, int_bits, frac_bits};
  fmt.validate();
  return fmt;
}

FixedPointFormat FixedPointFormat::unsigned_format(int int_bits,
                                                   int frac_bits) {
  FixedPointFormat fmt{0, int_bits, frac_bits};
  fmt.validate();
  return fmt;
}

FixedPointFormat FixedPointFormat::parse(std::string_view text) {
  int fields[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("fixed-point format must be 's:i:f', got '" +
                                  std::string(text) + "'");
    }
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 64) {
        throw std::invalid_argument("fixed-point field too large in '" +
                                    std::string(text) + "'");
      }
      ++pos;
    }
    fields[i] = static_cast<int>(value);
    if (i < 2) {
      if (pos >= text.size() || text[pos] != ':') {
        throw std::invalid_argument("fixed-point format must be 's:i:f', got '" +
                                    std::string(text) + "'");
      }
      ++pos;
    }
  }
  if (pos != text.size()) {
    throw std::invalid_argument("trailing characters in fixed-point format '" +
                                std::string(text) + "'");
  }
  FixedPointFormat fmt{fields[0], fields[1], fields[2]};
  fmt.validate();
  return fmt;
}

std::string FixedPointFormat::to_string() const {
  return std::to_string(sign_bits) + ":" + std::to_string(int_bits) + ":" +
         std::to_string(frac_bits);
}

double FixedPointFormat::step() const { return std::ldexp(1.0, -frac_bits); }

double FixedPointFormat::min_value() const {
  return is_signed() ? -std::ldexp(1.0, int_bits) : 0.0;
}

double FixedPointFormat::max_value() const {
  return std::ldexp(1.0, int_bits) - step();
}

void FixedPointFormat::validate() const {
  if (sign_bits != 0 && sign_bits != 1) {
    throw std::invalid_argument("sign field must be 0 or 1");
  }
  if (int_bits < 0 || frac_bits < 0) {
    throw std::invalid_argument("fixed-point widths must be non-negative");
  }
  if (total_bits() < 1 || total_bits() > 63) {
    throw std::invalid_argument("fixed-point total width must be in [1, 63]");
  }
}

std::uint64_t quantize(double value, const FixedPointFormat& fmt,
                       Rounding rounding) {
  fmt.validate();
  if (!std::isfinite(value)) {
    throw std::invalid_argument("cannot quantize a non-finite value");
  }
  double scaled = std::ldexp(value, fmt.frac_bits);
  // nearbyint honours the default FE_TONEAREST mode, i.e. ties go to even.
  double rounded = rounding == Rounding::NearestEven ? std::nearbyint(scaled)
                                                     : std::floor(scaled);
  double lo = std::ldexp(fmt.min_value(), fmt.frac_bits);
  double hi = std::ldexp(fmt.max_value(), fmt.frac_bits);
  if (rounded < lo || rounded > hi) {
    throw std::domain_error("value overflows the fixed-point range");
  }
  auto integral = static_cast<std::int64_t>(rounded);
  std::uint64_t mask = (std::uint64_t{1} << fmt.total_bits()) - 1;
  return static_cast<std::uint64_t>(integral) & mask;
}

double decode(std::uint64_t code, const FixedPointFormat& fmt) {
  fmt.validate();
  int t = fmt.total_bits();
  if (t < 63 && (code >> t) != 0) {
    throw std::invalid_argument("code does not fit the fixed-point width");
  }
  auto value = static_cast<std::int64_t>(code);
  if (fmt.is_signed() && (code >> (t - 1)) & 1) {
    value -= std::int64_t{1} << t;
  }
  return std::ldexp(static_cast<double>(value), -fmt.frac_bits);
}

SampleEncoding basis_encode_sample(std::span<const double> x, int p) {
  return basis_encode_sample(x, p, 0);
}

SampleEncoding basis_encode_sample(std::span<const double> x, int p,
                                   int int_bits) {
  if (p < 0 || int_bits < 0 || p + int_bits < 1 || p + int_bits > 62) {
    throw std::invalid_argument("sample encoding needs 1..62 bits per feature");
  }
  if (x.empty()) {
    throw std::invalid_argument("sample must have at least one feature");
  }
  double limit = std::ldexp(1.0, int_bits);
  SampleEncoding enc;
  enc.n = static_cast<int>(x.size());
  enc.p = p;
  enc.int_bits = int_bits;
  enc.bits.reserve(static_cast<std::size_t>(enc.total_bits()));
  for (double xi : x) {
    if (!(xi >= 0.0 && xi < limit)) {
      throw std::invalid_argument(
          "feature value outside [0, 2^int_bits) cannot be basis-encoded");
    }
    auto code = static_cast<std::uint64_t>(std::floor(std::ldexp(xi, p)));
    for (int b = int_bits + p - 1; b >= 0; --b) {
      enc.bits.push_back((code >> b) & 1 ? '1' : '0');
    }
  }
  return enc;
}

double SampleEncoding::decode_feature(int j) const {
  if (j < 0 || j >= n) {
    throw std::invalid_argument("feature index out of range");
  }
  std::uint64_t code = 0;
  int w = bits_per_feature();
  for (int b = 0; b < w; ++b) {
    code = (code << 1) | (bits[static_cast<std::size_t>(j * w + b)] == '1');
  }
  return std::ldexp(static_cast<double>(code), -p);
}

}  // namespace qneuron
