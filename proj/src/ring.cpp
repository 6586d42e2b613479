#include "ringtop/ring.hpp"

#include <sstream>

namespace ringtop {

namespace {

std::string triple(const GroundSet& g, int x, int y, int z) {
  return "(" + g.label(x) + ", " + g.label(y) + ", " + g.label(z) + ")";
}

std::string pair(const GroundSet& g, int x, int y) {
  return "(" + g.label(x) + ", " + g.label(y) + ")";
}

std::vector<std::uint8_t> flatten_table(const GroundSet& ground,
                                        const std::vector<std::vector<int>>& table,
                                        const char* what) {
  const int n = ground.size();
  if (table.size() != static_cast<std::size_t>(n)) {
    throw InputError(std::string(what) + " table has " + std::to_string(table.size()) +
                     " rows, expected " + std::to_string(n));
  }
  std::vector<std::uint8_t> flat;
  flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int row = 0; row < n; ++row) {
    const auto& entries = table[static_cast<std::size_t>(row)];
    if (entries.size() != static_cast<std::size_t>(n)) {
      throw InputError(std::string(what) + " table row for " + ground.label(row) + " has " +
                       std::to_string(entries.size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (int entry : entries) {
      if (entry < 0 || entry >= n) {
        throw InputError(std::string(what) + " table entry out of range in row for " +
                         ground.label(row));
      }
      flat.push_back(static_cast<std::uint8_t>(entry));
    }
  }
  return flat;
}

}  // namespace

FiniteRing FiniteRing::validate(GroundSet ground,
                                const std::vector<std::vector<int>>& add,
                                const std::vector<std::vector<int>>& mul,
                                std::string name) {
  FiniteRing ring;
  ring.ground_ = std::move(ground);
  ring.name_ = std::move(name);
  ring.add_ = flatten_table(ring.ground_, add, "add");
  ring.mul_ = flatten_table(ring.ground_, mul, "mul");

  const GroundSet& g = ring.ground_;
  const int n = g.size();
  auto a = [&ring](int x, int y) { return ring.add_[ring.index(x, y)]; };
  auto m = [&ring](int x, int y) { return ring.mul_[ring.index(x, y)]; };

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (a(x, y) != a(y, x)) {
        throw InputError("addition is not commutative at " + pair(g, x, y) + ": " +
                         g.label(a(x, y)) + " vs " + g.label(a(y, x)));
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (a(a(x, y), z) != a(x, a(y, z))) {
          throw InputError("addition is not associative at " + triple(g, x, y, z));
        }
      }
    }
  }

  int zero = -1;
  for (int e = 0; e < n && zero < 0; ++e) {
    bool identity = true;
    for (int x = 0; x < n; ++x) {
      if (a(e, x) != x) {
        identity = false;
        break;
      }
    }
    if (identity) zero = e;
  }
  if (zero < 0) throw InputError("addition has no identity element");
  ring.zero_ = zero;

  ring.neg_.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    int inverse = -1;
    for (int y = 0; y < n; ++y) {
      if (a(x, y) == zero) {
        inverse = y;
        break;
      }
    }
    if (inverse < 0) {
      throw InputError("element " + g.label(x) + " has no additive inverse");
    }
    ring.neg_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(inverse);
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (m(m(x, y), z) != m(x, m(y, z))) {
          throw InputError("multiplication is not associative at " + triple(g, x, y, z));
        }
        if (m(x, a(y, z)) != a(m(x, y), m(x, z))) {
          throw InputError("left distributivity fails at " + triple(g, x, y, z));
        }
        if (m(a(y, z), x) != a(m(y, x), m(z, x))) {
          throw InputError("right distributivity fails at " + triple(g, x, y, z));
        }
      }
    }
  }

  for (int u = 0; u < n && !ring.unity_; ++u) {
    bool identity = true;
    for (int x = 0; x < n; ++x) {
      if (m(u, x) != x || m(x, u) != x) {
        identity = false;
        break;
      }
    }
    if (identity) ring.unity_ = u;
  }

  ring.units_ = 0;
  if (ring.unity_) {
    const int one = *ring.unity_;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (m(x, y) == one && m(y, x) == one) {
          ring.units_ |= mask_bit(x);
          break;
        }
      }
    }
  }
  return ring;
}

Mask FiniteRing::set_add(Mask a, Mask b) const {
  Mask out = 0;
  for (int x = 0; x < size(); ++x) {
    if (!mask_contains(a, x)) continue;
    for (int y = 0; y < size(); ++y) {
      if (mask_contains(b, y)) out |= mask_bit(add(x, y));
    }
  }
  return out;
}

Mask FiniteRing::set_mul(Mask a, Mask b) const {
  Mask out = 0;
  for (int x = 0; x < size(); ++x) {
    if (!mask_contains(a, x)) continue;
    for (int y = 0; y < size(); ++y) {
      if (mask_contains(b, y)) out |= mask_bit(mul(x, y));
    }
  }
  return out;
}

Mask FiniteRing::set_neg(Mask a) const {
  Mask out = 0;
  for (int x = 0; x < size(); ++x) {
    if (mask_contains(a, x)) out |= mask_bit(neg(x));
  }
  return out;
}

Mask FiniteRing::translate(int x, Mask a) const {
  Mask out = 0;
  for (int y = 0; y < size(); ++y) {
    if (mask_contains(a, y)) out |= mask_bit(add(x, y));
  }
  return out;
}

Mask FiniteRing::scale_left(int r, Mask a) const {
  Mask out = 0;
  for (int y = 0; y < size(); ++y) {
    if (mask_contains(a, y)) out |= mask_bit(mul(r, y));
  }
  return out;
}

Mask FiniteRing::scale_right(Mask a, int r) const {
  Mask out = 0;
  for (int y = 0; y < size(); ++y) {
    if (mask_contains(a, y)) out |= mask_bit(mul(y, r));
  }
  return out;
}

bool FiniteRing::same_tables(const FiniteRing& other) const {
  return size() == other.size() && add_ == other.add_ && mul_ == other.mul_;
}

std::optional<HomViolation> hom_violation(const std::vector<int>& map,
                                          const FiniteRing& source,
                                          const FiniteRing& target) {
  const int n = source.size();
  if (map.size() != static_cast<std::size_t>(n)) {
    throw InputError("homomorphism map must cover every source element");
  }
  for (int image : map) {
    if (image < 0 || image >= target.size()) {
      throw InputError("homomorphism map image out of range");
    }
  }
  auto f = [&map](int x) { return map[static_cast<std::size_t>(x)]; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (f(source.add(x, y)) != target.add(f(x), f(y))) {
        return HomViolation{"add", x, y};
      }
      if (f(source.mul(x, y)) != target.mul(f(x), f(y))) {
        return HomViolation{"mul", x, y};
      }
    }
  }
  return std::nullopt;
}

bool is_homomorphism(const std::vector<int>& map, const FiniteRing& source,
                     const FiniteRing& target) {
  return !hom_violation(map, source, target).has_value();
}

RingHom RingHom::validate(FiniteRing source, FiniteRing target, std::vector<int> map) {
  if (auto violation = hom_violation(map, source, target)) {
    throw InputError("map is not a ring homomorphism: f(x" +
                     std::string(violation->op == "add" ? "+" : "·") + "y) differs at " +
                     pair(source.ground(), violation->x, violation->y));
  }
  return RingHom(std::move(source), std::move(target), std::move(map));
}

FiniteRing catalog_zn(int n) {
  if (n < 1 || n > kMaxCarrier) {
    throw InputError("zn order must be between 1 and 16, got " + std::to_string(n));
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<int>> add(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      add[static_cast<std::size_t>(x)].push_back((x + y) % n);
      mul[static_cast<std::size_t>(x)].push_back((x * y) % n);
    }
  }
  return FiniteRing::validate(GroundSet(std::move(labels)), add, mul,
                              "Z" + std::to_string(n));
}

FiniteRing catalog_product(const FiniteRing& a, const FiniteRing& b) {
  const int na = a.size();
  const int nb = b.size();
  const int n = na * nb;
  if (n > kMaxCarrier) throw InputError("product ring exceeds the 16-element carrier cap");

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      labels.push_back("(" + a.ground().label(i) + "," + b.ground().label(j) + ")");
    }
  }
  auto pack = [nb](int i, int j) { return i * nb + j; };
  std::vector<std::vector<int>> add(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n));
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      auto& add_row = add[static_cast<std::size_t>(pack(i, j))];
      auto& mul_row = mul[static_cast<std::size_t>(pack(i, j))];
      for (int k = 0; k < na; ++k) {
        for (int l = 0; l < nb; ++l) {
          add_row.push_back(pack(a.add(i, k), b.add(j, l)));
          mul_row.push_back(pack(a.mul(i, k), b.mul(j, l)));
        }
      }
    }
  }
  return FiniteRing::validate(GroundSet(std::move(labels)), add, mul,
                              a.name() + "x" + b.name());
}

FiniteRing catalog_example34() {
  GroundSet ground({"a", "b", "c", "d"});
  const std::vector<std::vector<int>> add{
      {0, 1, 2, 3},
      {1, 2, 3, 0},
      {2, 3, 0, 1},
      {3, 0, 1, 2},
  };
  const std::vector<std::vector<int>> mul{
      {0, 0, 0, 0},
      {0, 2, 0, 2},
      {0, 0, 0, 0},
      {0, 2, 0, 2},
  };
  return FiniteRing::validate(std::move(ground), add, mul, "example34");
}

FiniteRing catalog(std::string_view name, const std::vector<int>& params) {
  if (name == "zn") {
    if (params.size() != 1) throw InputError("catalog zn expects one order parameter");
    return catalog_zn(params[0]);
  }
  if (name == "product") {
    if (params.size() < 2) {
      throw InputError("catalog product expects at least two cyclic orders");
    }
    FiniteRing ring = catalog_zn(params[0]);
    for (std::size_t i = 1; i < params.size(); ++i) {
      ring = catalog_product(ring, catalog_zn(params[i]));
    }
    return ring;
  }
  if (name == "example34") {
    if (!params.empty()) throw InputError("catalog example34 takes no parameters");
    return catalog_example34();
  }
  throw InputError("unknown catalog ring \"" + std::string(name) + "\"");
}

}  // namespace ringtop
