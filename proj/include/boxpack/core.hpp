#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boxpack {

// All geometry is carried in integer length units; fractional inputs are
// scaled to integers at ingestion.
using Length = std::int64_t;

// Axis indices into dimension triples.
inline constexpr int kAxisX = 0;
inline constexpr int kAxisY = 1;
inline constexpr int kAxisZ = 2;

inline char axis_name(int axis) { return "XYZ"[axis]; }

using Dims = std::array<Length, 3>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

/// Exact rational number with 64-bit numerator/denominator, always normalized
/// with a positive denominator. Intermediate products use 128-bit arithmetic;
/// results that do not fit 64 bits throw.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rat(std::int64_t n, std::int64_t d);

  static Rat parse(const std::string& text);  // "n" or "n/d"

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool operator<=(const Rat& o) const { return *this < o || *this == o; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return o <= *this; }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// One of the six axis permutations, in the fixed canonical order
/// (1,2,3), (1,3,2), (2,1,3), (2,3,1), (3,1,2), (3,2,1).
struct Orientation {
  int index = 0;

  // Box axis (1-based) placed along fixed axis `axis` (0=X,1=Y,2=Z).
  int box_axis(int axis) const;

  bool operator==(const Orientation& o) const { return index == o.index; }
};

inline constexpr int kOrientationCount = 6;

const std::array<int, 3>& orientation_perm(int index);

using RotationMask = std::array<bool, 6>;

inline constexpr RotationMask kAllRotations = {true, true, true, true, true, true};

/// A species of small box: sorted side lengths, availability, value, mass and
/// the set of allowed orientations.
struct BoxType {
  int id = 0;
  std::array<Length, 3> lengths{};  // ascending
  std::int64_t count = 1;
  Rat value;
  Rat mass;
  RotationMask rotations = kAllRotations;

  Length volume() const { return lengths[0] * lengths[1] * lengths[2]; }
};

enum class ProblemKind { Clp, Vlp };

struct Instance {
  ProblemKind kind = ProblemKind::Clp;
  Dims container{};
  Rat payload;  // meaningful only when kind == Vlp
  std::vector<BoxType> types;

  Length container_volume() const { return container[0] * container[1] * container[2]; }
};

struct Placement {
  int type_id = 0;
  Orientation orientation;
  Dims position{};  // lower-back-left vertex
};

struct Packing {
  std::vector<Placement> placements;
  Rat total_value;
  Rat total_mass;
};

// Validating constructors. `value` defaults to the box volume, the usual
// choice when maximizing packed volume.
BoxType make_box_type(int id, Dims lengths, std::int64_t count, const Rat* value = nullptr,
                      Rat mass = Rat(0), RotationMask rotations = kAllRotations);

Instance make_instance(ProblemKind kind, Dims container, std::vector<BoxType> types,
                       const Rat* payload = nullptr);

/// Applies an orientation to a box, returning the oriented dimension triple.
Dims orient(const BoxType& box, Orientation o);

/// All orientations enabled in the box's rotation mask together with their
/// oriented dimensions. Duplicate triples from equal side lengths are kept.
std::vector<std::pair<Orientation, Dims>> allowed_orientations(const BoxType& box);

}  // namespace boxpack
