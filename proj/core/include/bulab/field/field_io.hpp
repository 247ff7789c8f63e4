// Copyright 2026 The bulab Authors
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
#include <filesystem>
#include <string>
#include <vector>

#include "bulab/field/fields.hpp"

namespace bulab {

/// Flat binary container for sampled fields.
///
/// Header: six little-endian 64-bit values (dim, N as int64; L as float64;
/// M as int64; T-, T+ as float64). Payload: row-major float64 samples,
/// frame after frame for space-time fields and component after component
/// for vector fields. Static fields store M = 0 and T- = T+ = 0. The number
/// of components is implied by the payload length.
struct FieldHeader {
  std::int64_t dim = 0;
  std::int64_t points_per_axis = 0;
  double box_length = 0.0;
  std::int64_t steps = 0;
  double t_minus = 0.0;
  double t_plus = 0.0;
};

inline constexpr std::size_t kFieldHeaderBytes = 48;

std::vector<std::uint8_t> encode_field(const ScalarField& f);
std::vector<std::uint8_t> encode_field(const VectorField& f);
std::vector<std::uint8_t> encode_field(const SpaceTimeField& f);

FieldHeader decode_header(const std::vector<std::uint8_t>& bytes);
ScalarField decode_scalar_field(const std::vector<std::uint8_t>& bytes);
VectorField decode_vector_field(const std::vector<std::uint8_t>& bytes);
SpaceTimeField decode_spacetime_field(const std::vector<std::uint8_t>& bytes);

void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);

/// 64-bit FNV-1a of the encoded bytes, as 16 lowercase hex digits.
std::string content_hash(const std::vector<std::uint8_t>& bytes);

}  // namespace bulab
