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

#include "bulab/field/field_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <stdexcept>

namespace bulab {
namespace {

template <typename T>
void put(std::vector<std::uint8_t>& out, T value) {
  static_assert(sizeof(T) == 8);
  std::uint64_t bits;
  std::memcpy(&bits, &value, 8);
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(bits >> (8 * b)));
}

template <typename T>
T get(const std::vector<std::uint8_t>& in, std::size_t offset) {
  static_assert(sizeof(T) == 8);
  if (offset + 8 > in.size()) throw std::runtime_error("field container truncated");
  std::uint64_t bits = 0;
  for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(in[offset + b]) << (8 * b);
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  T value;
  std::memcpy(&value, &bits, 8);
  return value;
}

std::vector<std::uint8_t> header_bytes(const Grid& g, std::int64_t steps, double t_minus, double t_plus,
                                       std::size_t payload_values) {
  std::vector<std::uint8_t> out;
  out.reserve(kFieldHeaderBytes + 8 * payload_values);
  put<std::int64_t>(out, g.dim());
  put<std::int64_t>(out, g.points_per_axis());
  put<double>(out, g.box_length());
  put<std::int64_t>(out, steps);
  put<double>(out, t_minus);
  put<double>(out, t_plus);
  return out;
}

void append_samples(std::vector<std::uint8_t>& out, const ScalarField& f) {
  for (double v : f.samples()) put<double>(out, v);
}

ScalarField read_block(const std::vector<std::uint8_t>& bytes, const Grid& grid, std::size_t block) {
  std::vector<double> samples(grid.size());
  const std::size_t base = kFieldHeaderBytes + block * grid.size() * 8;
  for (std::size_t i = 0; i < grid.size(); ++i) samples[i] = get<double>(bytes, base + 8 * i);
  return ScalarField(grid, std::move(samples));
}

// Number of grid-sized blocks in the payload; throws if ragged.
std::size_t block_count(const std::vector<std::uint8_t>& bytes, const Grid& grid) {
  const std::size_t payload = bytes.size() - kFieldHeaderBytes;
  const std::size_t block = grid.size() * 8;
  if (payload % block != 0) throw std::runtime_error("field payload is not a whole number of grids");
  return payload / block;
}

}  // namespace

std::vector<std::uint8_t> encode_field(const ScalarField& f) {
  auto out = header_bytes(f.grid(), 0, 0.0, 0.0, f.size());
  append_samples(out, f);
  return out;
}

std::vector<std::uint8_t> encode_field(const VectorField& f) {
  auto out = header_bytes(f.grid(), 0, 0.0, 0.0, f.grid().size() * f.dim());
  for (const auto& c : f.components()) append_samples(out, c);
  return out;
}

std::vector<std::uint8_t> encode_field(const SpaceTimeField& f) {
  const TimeGrid& tg = f.time_grid();
  auto out = header_bytes(f.grid(), tg.steps(), tg.t_minus(), tg.t_plus(), f.grid().size() * f.frame_count());
  for (const auto& frame : f.frames()) append_samples(out, frame);
  return out;
}

FieldHeader decode_header(const std::vector<std::uint8_t>& bytes) {
  FieldHeader h;
  h.dim = get<std::int64_t>(bytes, 0);
  h.points_per_axis = get<std::int64_t>(bytes, 8);
  h.box_length = get<double>(bytes, 16);
  h.steps = get<std::int64_t>(bytes, 24);
  h.t_minus = get<double>(bytes, 32);
  h.t_plus = get<double>(bytes, 40);
  return h;
}

ScalarField decode_scalar_field(const std::vector<std::uint8_t>& bytes) {
  const FieldHeader h = decode_header(bytes);
  const Grid grid = Grid::make(static_cast<int>(h.dim), static_cast<int>(h.points_per_axis), h.box_length);
  if (h.steps != 0 || block_count(bytes, grid) != 1) throw std::runtime_error("container does not hold a scalar field");
  return read_block(bytes, grid, 0);
}

VectorField decode_vector_field(const std::vector<std::uint8_t>& bytes) {
  const FieldHeader h = decode_header(bytes);
  const Grid grid = Grid::make(static_cast<int>(h.dim), static_cast<int>(h.points_per_axis), h.box_length);
  if (h.steps != 0 || block_count(bytes, grid) != static_cast<std::size_t>(grid.dim()))
    throw std::runtime_error("container does not hold a vector field");
  std::vector<ScalarField> comps;
  for (int i = 0; i < grid.dim(); ++i) comps.push_back(read_block(bytes, grid, i));
  return VectorField(std::move(comps));
}

SpaceTimeField decode_spacetime_field(const std::vector<std::uint8_t>& bytes) {
  const FieldHeader h = decode_header(bytes);
  const Grid grid = Grid::make(static_cast<int>(h.dim), static_cast<int>(h.points_per_axis), h.box_length);
  const TimeGrid tg = TimeGrid::make(h.t_minus, h.t_plus, static_cast<int>(h.steps), h.t_plus);
  if (block_count(bytes, grid) != static_cast<std::size_t>(tg.frames()))
    throw std::runtime_error("container does not hold a space-time field");
  std::vector<ScalarField> frames;
  for (int m = 0; m < tg.frames(); ++m) frames.push_back(read_block(bytes, grid, m));
  return SpaceTimeField(tg, std::move(frames));
}

void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string content_hash(const std::vector<std::uint8_t>& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = kHex[h & 0xf];
  return out;
}

}  // namespace bulab
