#include "boxpack/core.hpp"

#include <numeric>

namespace boxpack {

namespace {

std::int64_t checked_narrow(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(std::string("rational overflow in ") + what);
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  if (d == 0) throw Error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw Error("trailing characters");
      return Rat(n);
    }
    std::int64_t n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw Error("trailing characters");
    std::int64_t d = std::stoll(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1) throw Error("trailing characters");
    return Rat(n, d);
  } catch (const std::exception&) {
    throw Error("malformed rational '" + text + "'");
  }
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::operator+(const Rat& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  // Reduce with 128-bit gcd before narrowing.
  __int128 a = n < 0 ? -n : n, b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return Rat(checked_narrow(n, "add"), checked_narrow(d, "add"));
}

Rat Rat::operator-(const Rat& o) const { return *this + Rat(-o.num_, o.den_); }

Rat Rat::operator*(const Rat& o) const {
  std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
  std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
  __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
  __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
  return Rat(checked_narrow(n, "mul"), checked_narrow(d, "mul"));
}

bool Rat::operator<(const Rat& o) const {
  return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

namespace {
constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
}};
}  // namespace

const std::array<int, 3>& orientation_perm(int index) {
  if (index < 0 || index >= kOrientationCount) throw Error("orientation index out of range");
  return kPerms[static_cast<std::size_t>(index)];
}

int Orientation::box_axis(int axis) const { return orientation_perm(index)[static_cast<std::size_t>(axis)]; }

BoxType make_box_type(int id, Dims lengths, std::int64_t count, const Rat* value, Rat mass,
                      RotationMask rotations) {
  BoxType t;
  t.id = id;
  t.lengths = lengths;
  t.count = count;
  t.mass = mass;
  t.rotations = rotations;
  for (Length l : lengths)
    if (l <= 0) throw Error("box side lengths must be positive");
  if (!(lengths[0] <= lengths[1] && lengths[1] <= lengths[2]))
    throw Error("box side lengths must be sorted ascending");
  if (count < 1) throw Error("box count must be at least 1");
  bool any = false;
  for (bool b : rotations) any = any || b;
  if (!any) throw Error("no allowed orientation");
  t.value = value != nullptr ? *value : Rat(t.volume());
  if (t.value < Rat(0)) throw Error("box value must be non-negative");
  if (t.mass < Rat(0)) throw Error("box mass must be non-negative");
  return t;
}

Instance make_instance(ProblemKind kind, Dims container, std::vector<BoxType> types,
                       const Rat* payload) {
  Instance inst;
  inst.kind = kind;
  inst.container = container;
  inst.types = std::move(types);
  for (Length d : container)
    if (d <= 0) throw Error("container dimensions must be positive");
  if (kind == ProblemKind::Vlp) {
    if (payload == nullptr) throw Error("van instances require a payload");
    if (*payload < Rat(0)) throw Error("payload must be non-negative");
    inst.payload = *payload;
  } else if (payload != nullptr) {
    throw Error("payload given for a container instance");
  }
  return inst;
}

Dims orient(const BoxType& box, Orientation o) {
  const auto& p = orientation_perm(o.index);
  return {box.lengths[static_cast<std::size_t>(p[0] - 1)],
          box.lengths[static_cast<std::size_t>(p[1] - 1)],
          box.lengths[static_cast<std::size_t>(p[2] - 1)]};
}

std::vector<std::pair<Orientation, Dims>> allowed_orientations(const BoxType& box) {
  std::vector<std::pair<Orientation, Dims>> out;
  for (int i = 0; i < kOrientationCount; ++i) {
    if (!box.rotations[static_cast<std::size_t>(i)]) continue;
    Orientation o{i};
    out.emplace_back(o, orient(box, o));
  }
  if (out.empty()) throw Error("no allowed orientation");
  return out;
}

}  // namespace boxpack
