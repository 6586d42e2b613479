#pragma once

// Finite rings as validated Cayley tables. Construction re-derives zero,
// unity, and the unit set from the tables instead of trusting the caller,
// and rejects any table that violates the ring axioms with a concrete
// witness in the error message.

#include <optional>
#include <string>

#include "ringtop/space.hpp"

namespace ringtop {

class FiniteRing {
 public:
  // Tables are n×n element indices, row = left operand. Throws InputError
  // naming the violated axiom and a witness tuple.
  static FiniteRing validate(GroundSet ground,
                             const std::vector<std::vector<int>>& add,
                             const std::vector<std::vector<int>>& mul,
                             std::string name = "");

  int size() const { return ground_.size(); }
  const GroundSet& ground() const { return ground_; }
  const std::string& name() const { return name_; }

  int add(int x, int y) const { return add_[index(x, y)]; }
  int mul(int x, int y) const { return mul_[index(x, y)]; }
  int neg(int x) const { return neg_[static_cast<std::size_t>(x)]; }
  int zero() const { return zero_; }
  std::optional<int> unity() const { return unity_; }

  /// R*: elements with a two-sided multiplicative inverse; empty when the
  /// ring has no unity.
  Mask units() const { return units_; }
  std::vector<int> unit_elements() const { return mask_elements(units_); }

  // Element-wise set arithmetic.
  Mask set_add(Mask a, Mask b) const;   // {u+v : u∈a, v∈b}
  Mask set_mul(Mask a, Mask b) const;   // {uv : u∈a, v∈b}
  Mask set_neg(Mask a) const;           // {−u : u∈a}
  Mask translate(int x, Mask a) const;  // x + A
  Mask scale_left(int r, Mask a) const;   // rA
  Mask scale_right(Mask a, int r) const;  // Ar

  /// True when the Cayley tables coincide, ignoring labels and name.
  bool same_tables(const FiniteRing& other) const;

  bool operator==(const FiniteRing&) const = default;

 private:
  FiniteRing() = default;
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(ground_.size()) +
           static_cast<std::size_t>(y);
  }

  GroundSet ground_{std::vector<std::string>{"x0"}};
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  int zero_ = 0;
  std::optional<int> unity_;
  Mask units_ = 0;
  std::string name_;
};

struct HomViolation {
  std::string op;  // "add" or "mul"
  int x = 0;
  int y = 0;
};

/// First pair (in sweep order) where the map fails to preserve an operation,
/// or nullopt when the map is a ring homomorphism.
std::optional<HomViolation> hom_violation(const std::vector<int>& map,
                                          const FiniteRing& source,
                                          const FiniteRing& target);
bool is_homomorphism(const std::vector<int>& map, const FiniteRing& source,
                     const FiniteRing& target);

class RingHom {
 public:
  /// Throws InputError when the map is not total or not a homomorphism.
  static RingHom validate(FiniteRing source, FiniteRing target, std::vector<int> map);

  const FiniteRing& source() const { return source_; }
  const FiniteRing& target() const { return target_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int x) const { return map_[static_cast<std::size_t>(x)]; }

 private:
  RingHom(FiniteRing source, FiniteRing target, std::vector<int> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  FiniteRing source_;
  FiniteRing target_;
  std::vector<int> map_;
};

// Constructor catalog.
FiniteRing catalog_zn(int n);                // Z_n, labels "0".."n-1"
FiniteRing catalog_product(const FiniteRing& a, const FiniteRing& b);
FiniteRing catalog_example34();              // the bundled 4-element fixture ring

/// String-keyed dispatcher: "zn" with {n}, "product" with a list of cyclic
/// orders, "example34" with no params.
FiniteRing catalog(std::string_view name, const std::vector<int>& params);

}  // namespace ringtop
