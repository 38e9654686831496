#pragma once

// Six-index qubit coordinates (x, y, z, i, j, k) and their cell-major
// linearization. Each K4,4 cell (x, y, z) owns eight consecutive linear
// indices; k is the least significant index, then j, then the side i.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>

#include "pegasus_topo/errors.hpp"

namespace pegasus_topo {

using VertexId = std::uint32_t;

inline constexpr int kQubitsPerCell = 8;

struct Dims {
  int X = 1;  // cells along x
  int Y = 1;  // cells along y
  int Z = 1;  // Chimera layers: 1 (plain Chimera) or 3 (Pegasus)

  constexpr std::size_t cell_count() const noexcept {
    return static_cast<std::size_t>(X) * static_cast<std::size_t>(Y) *
           static_cast<std::size_t>(Z);
  }
  constexpr std::size_t qubit_count() const noexcept {
    return kQubitsPerCell * cell_count();
  }

  friend constexpr bool operator==(const Dims&, const Dims&) = default;
};

struct CellCoord {
  int x = 0;
  int y = 0;
  int z = 0;

  friend constexpr auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

struct QubitCoord {
  int x = 0;
  int y = 0;
  int z = 0;
  int i = 0;  // side within the K4,4
  int j = 0;
  int k = 0;

  constexpr CellCoord cell() const noexcept { return {x, y, z}; }

  friend constexpr auto operator<=>(const QubitCoord&, const QubitCoord&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const QubitCoord& q) {
  return os << '(' << q.x << ',' << q.y << ',' << q.z << ',' << q.i << ','
            << q.j << ',' << q.k << ')';
}

inline std::ostream& operator<<(std::ostream& os, const CellCoord& c) {
  return os << '(' << c.x << ',' << c.y << ',' << c.z << ')';
}

inline std::ostream& operator<<(std::ostream& os, const Dims& d) {
  return os << d.X << 'x' << d.Y << 'x' << d.Z;
}

// Throws ValidationError unless X, Y >= 1 and Z is 1 or 3.
inline void validate_dims(const Dims& d) {
  if (d.X < 1) throw ValidationError("X", "X must be >= 1, got " + std::to_string(d.X));
  if (d.Y < 1) throw ValidationError("Y", "Y must be >= 1, got " + std::to_string(d.Y));
  if (d.Z != 1 && d.Z != 3)
    throw ValidationError("Z", "Z must be 1 or 3, got " + std::to_string(d.Z));
  // linear indices are 32-bit
  if (d.qubit_count() > 0xFFFFFFFFull)
    throw ValidationError("X", "dimensions exceed the 32-bit vertex index space");
}

namespace detail {

// Name of the first out-of-range field, or nullptr.
constexpr const char* invalid_field(const QubitCoord& q, const Dims& d) noexcept {
  if (q.x < 0 || q.x >= d.X) return "x";
  if (q.y < 0 || q.y >= d.Y) return "y";
  if (q.z < 0 || q.z >= d.Z) return "z";
  if (q.i < 0 || q.i > 1) return "i";
  if (q.j < 0 || q.j > 1) return "j";
  if (q.k < 0 || q.k > 1) return "k";
  return nullptr;
}

constexpr const char* invalid_field(const CellCoord& c, const Dims& d) noexcept {
  if (c.x < 0 || c.x >= d.X) return "x";
  if (c.y < 0 || c.y >= d.Y) return "y";
  if (c.z < 0 || c.z >= d.Z) return "z";
  return nullptr;
}

}  // namespace detail

constexpr bool validate(const QubitCoord& q, const Dims& d) noexcept {
  return detail::invalid_field(q, d) == nullptr;
}

constexpr bool validate(const CellCoord& c, const Dims& d) noexcept {
  return detail::invalid_field(c, d) == nullptr;
}

inline void require_valid(const QubitCoord& q, const Dims& d) {
  if (const char* f = detail::invalid_field(q, d)) {
    std::string msg = "qubit coordinate field '";
    msg += f;
    msg += "' out of range for dims ";
    msg += std::to_string(d.X) + "x" + std::to_string(d.Y) + "x" + std::to_string(d.Z);
    throw ValidationError(f, msg);
  }
}

inline void require_valid(const CellCoord& c, const Dims& d) {
  if (const char* f = detail::invalid_field(c, d)) {
    std::string msg = "cell coordinate field '";
    msg += f;
    msg += "' out of range";
    throw ValidationError(f, msg);
  }
}

// Linear index of a cell in [0, X*Y*Z), x fastest.
constexpr std::size_t cell_index(const CellCoord& c, const Dims& d) noexcept {
  return static_cast<std::size_t>(c.x) +
         static_cast<std::size_t>(d.X) *
             (static_cast<std::size_t>(c.y) +
              static_cast<std::size_t>(d.Y) * static_cast<std::size_t>(c.z));
}

constexpr CellCoord cell_from_index(std::size_t idx, const Dims& d) noexcept {
  const auto X = static_cast<std::size_t>(d.X);
  const auto Y = static_cast<std::size_t>(d.Y);
  return {static_cast<int>(idx % X), static_cast<int>((idx / X) % Y),
          static_cast<int>(idx / (X * Y))};
}

// Unchecked linearization; callers guarantee q is valid for d.
constexpr VertexId linear_index_unchecked(const QubitCoord& q, const Dims& d) noexcept {
  return static_cast<VertexId>(q.k + 2 * q.j + 4 * q.i +
                               kQubitsPerCell * cell_index(q.cell(), d));
}

inline VertexId linear_index(const QubitCoord& q, const Dims& d) {
  require_valid(q, d);
  return linear_index_unchecked(q, d);
}

constexpr QubitCoord from_linear_unchecked(VertexId idx, const Dims& d) noexcept {
  const CellCoord c = cell_from_index(idx / kQubitsPerCell, d);
  const int within = static_cast<int>(idx % kQubitsPerCell);
  return {c.x, c.y, c.z, (within >> 2) & 1, (within >> 1) & 1, within & 1};
}

inline QubitCoord from_linear(std::uint64_t idx, const Dims& d) {
  if (idx >= d.qubit_count())
    throw RangeError("linear index " + std::to_string(idx) + " out of range [0, " +
                     std::to_string(d.qubit_count()) + ")");
  return from_linear_unchecked(static_cast<VertexId>(idx), d);
}

}  // namespace pegasus_topo
