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

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qneuron/fixedpoint.hpp"

namespace qn = qneuron;

TEST_CASE("format parsing and rendering") {
  auto fmt = qn::FixedPointFormat::parse("1:3:4");
  CHECK(fmt.sign_bits == 1);
  CHECK(fmt.int_bits == 3);
  CHECK(fmt.frac_bits == 4);
  CHECK(fmt.total_bits() == 8);
  CHECK(fmt.to_string() == "1:3:4");

  CHECK_THROWS_AS(qn::FixedPointFormat::parse("1:3"), std::invalid_argument);
  CHECK_THROWS_AS(qn::FixedPointFormat::parse("2:1:1"), std::invalid_argument);
  CHECK_THROWS_AS(qn::FixedPointFormat::parse("a:b:c"), std::invalid_argument);
  CHECK_THROWS_AS(qn::FixedPointFormat::parse("0:0:0"), std::invalid_argument);
}

TEST_CASE("format range") {
  auto fmt = qn::FixedPointFormat::signed_format(3, 4);
  CHECK(fmt.step() == 0.0625);
  CHECK(fmt.min_value() == -8.0);
  CHECK(fmt.max_value() == 7.9375);

  auto reg = qn::FixedPointFormat::unsigned_format(4, 0);
  CHECK(reg.min_value() == 0.0);
  CHECK(reg.max_value() == 15.0);
}

TEST_CASE("quantize and decode") {
  auto fmt = qn::FixedPointFormat::signed_format(3, 4);
  CHECK(qn::quantize(0.5, fmt) == 8);
  CHECK(qn::quantize(-0.5, fmt) == 248);
  CHECK(qn::quantize(7.9375, fmt) == 127);
  CHECK(qn::quantize(-8.0, fmt) == 128);
  CHECK_THROWS_AS(qn::quantize(9.0, fmt), std::domain_error);
  CHECK_THROWS_AS(qn::quantize(8.0, fmt), std::domain_error);
  CHECK_THROWS_AS(qn::quantize(-8.1, fmt), std::domain_error);

  CHECK(qn::decode(8, fmt) == 0.5);
  CHECK(qn::decode(128, fmt) == -8.0);
  CHECK(qn::decode(0, fmt) == 0.0);
  CHECK_THROWS_AS(qn::decode(256, fmt), std::invalid_argument);
}

TEST_CASE("rounding rules") {
  auto fmt = qn::FixedPointFormat::unsigned_format(1, 1);
  // 0.99 scales to 1.98: truncation drops to 1, nearest rounds to 2.
  CHECK(qn::quantize(0.99, fmt, qn::Rounding::Truncate) == 1);
  CHECK(qn::quantize(0.99, fmt, qn::Rounding::NearestEven) == 2);
  // Ties go to even: 0.25 scales to 0.5 -> 0, 0.75 scales to 1.5 -> 2.
  CHECK(qn::quantize(0.25, fmt, qn::Rounding::NearestEven) == 0);
  CHECK(qn::quantize(0.75, fmt, qn::Rounding::NearestEven) == 2);
}

TEST_CASE("grid round-trip") {
  auto fmt = qn::FixedPointFormat::signed_format(3, 4);
  for (std::uint64_t code = 0; code < 256; ++code) {
    CHECK(qn::quantize(qn::decode(code, fmt), fmt) == code);
  }
}

TEST_CASE("quantization error bound") {
  auto fmt = qn::FixedPointFormat::signed_format(3, 4);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> values(-8.0, 7.9375);
  for (int i = 0; i < 200; ++i) {
    double v = values(rng);
    double back = qn::decode(qn::quantize(v, fmt), fmt);
    CHECK(std::abs(back - v) <= std::ldexp(1.0, -5));
  }
}

TEST_CASE("non-finite and invalid formats rejected") {
  auto fmt = qn::FixedPointFormat::signed_format(3, 4);
  CHECK_THROWS_AS(qn::quantize(std::nan(""), fmt), std::invalid_argument);
  qn::FixedPointFormat bad{2, 1, 1};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  qn::FixedPointFormat empty{0, 0, 0};
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}

TEST_CASE("basis sample encoding") {
  std::array<double, 1> half = {0.5};
  auto enc = qn::basis_encode_sample(half, 2);
  CHECK(enc.bits == "10");
  CHECK(enc.total_bits() == 2);

  std::array<double, 2> pair = {0.25, 0.75};
  auto enc2 = qn::basis_encode_sample(pair, 2);
  CHECK(enc2.bits == "0111");

  // Truncation: 0.3 with two fraction bits lands on 0.25.
  std::array<double, 1> crooked = {0.3};
  auto enc3 = qn::basis_encode_sample(crooked, 2);
  CHECK(enc3.bits == "01");
  CHECK(enc3.decode_feature(0) == 0.25);

  // Integer bits widen the admissible range.
  std::array<double, 1> big = {1.5};
  auto enc4 = qn::basis_encode_sample(big, 1, 1);
  CHECK(enc4.bits == "11");
  CHECK(enc4.decode_feature(0) == 1.5);
}

TEST_CASE("basis sample encoding rejects out-of-range input") {
  std::array<double, 1> one = {1.0};
  CHECK_THROWS_AS(qn::basis_encode_sample(one, 2), std::invalid_argument);
  std::array<double, 1> negative = {-0.25};
  CHECK_THROWS_AS(qn::basis_encode_sample(negative, 2), std::invalid_argument);
  CHECK_THROWS_AS(qn::basis_encode_sample({}, 2), std::invalid_argument);
  std::array<double, 1> fine = {0.5};
  CHECK_THROWS_AS(qn::basis_encode_sample(fine, 0, 0), std::invalid_argument);
}
