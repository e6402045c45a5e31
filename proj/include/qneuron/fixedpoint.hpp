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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace qneuron {

/// Rounding rule used when a real value is squeezed into a fixed-point code.
/// Truncate drops low bits (rounds toward negative infinity, the two's
/// complement bit-drop behaviour); NearestEven is round-half-to-even.
enum class Rounding { NearestEven, Truncate };

/// Two's complement fixed-point format: an optional sign bit, `int_bits`
/// integer bits and `frac_bits` fraction bits, written "s:i:f" (e.g. "1:3:4"
/// for an 8-bit signed register with 4 fraction bits).
///
/// A signed code c on t = 1+i+f bits represents
///   value = (c - 2^t * [c >= 2^(t-1)]) / 2^f
/// so the representable range is [-2^i, 2^i - 2^-f]; unsigned formats cover
/// [0, 2^i - 2^-f].
struct FixedPointFormat {
  int sign_bits = 1;
  int int_bits = 0;
  int frac_bits = 0;

  static FixedPointFormat signed_format(int int_bits, int frac_bits);
  static FixedPointFormat unsigned_format(int int_bits, int frac_bits);

  /// Parses the "s:i:f" triple. Throws std::invalid_argument on anything
  /// that is not three ':'-separated non-negative integers with s in {0,1}
  /// and at least one bit in total.
  static FixedPointFormat parse(std::string_view text);

  std::string to_string() const;

  bool is_signed() const { return sign_bits != 0; }
  int total_bits() const { return sign_bits + int_bits + frac_bits; }
  double step() const;
  double min_value() const;
  double max_value() const;

  /// Validates the invariants (s in {0,1}, non-negative widths, 1..63 bits
  /// total); throws std::invalid_argument otherwise.
  void validate() const;

  bool operator==(const FixedPointFormat&) const = default;
};

/// Encodes `value` as a code in [0, 2^total_bits). Throws std::domain_error
/// when the rounded value falls outside the representable range; callers
/// that want saturation (activation tabulation) clamp before quantizing.
std::uint64_t quantize(double value, const FixedPointFormat& fmt,
                       Rounding rounding = Rounding::NearestEven);

/// Inverse of quantize on representable codes. Throws std::invalid_argument
/// if `code` has bits above the format width.
double decode(std::uint64_t code, const FixedPointFormat& fmt);

/// Basis encoding of a classical sample: each feature is truncated to
/// `int_bits` unsigned integer bits and `p` fraction bits
/// (code = floor(x * 2^p), so features must lie in [0, 2^int_bits)), and the
/// codes are concatenated MSB-first into one bitstring of n*(int_bits+p)
/// characters, feature 0 first.
struct SampleEncoding {
  int n = 0;
  int p = 0;
  int int_bits = 0;
  std::string bits;

  int bits_per_feature() const { return int_bits + p; }
  int total_bits() const { return n * bits_per_feature(); }
  /// The value actually represented by feature j's bits (after truncation).
  double decode_feature(int j) const;
};

SampleEncoding basis_encode_sample(std::span<const double> x, int p);
SampleEncoding basis_encode_sample(std::span<const double> x, int p,
                                   int int_bits);

}  // namespace qneuron
