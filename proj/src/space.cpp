#include "ringtop/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace ringtop {

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < kMaxCarrier; ++i) {
    if (mask_contains(m, i)) out.push_back(i);
  }
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() > static_cast<std::size_t>(kMaxCarrier)) {
    throw InputError("carrier must have between 1 and 16 elements, got " +
                     std::to_string(labels_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw InputError("element labels must be non-empty");
    if (!seen.insert(label).second) {
      throw InputError("duplicate element label \"" + label + "\"");
    }
  }
}

GroundSet GroundSet::synthetic(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return GroundSet(std::move(labels));
}

int GroundSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

std::string format_mask(const GroundSet& ground, Mask m) {
  if (m == 0) return "∅";
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < ground.size(); ++i) {
    if (!mask_contains(m, i)) continue;
    if (!first) out << ',';
    out << ground.label(i);
    first = false;
  }
  out << '}';
  return out.str();
}

Mask mask_from_labels(const GroundSet& ground, std::span<const std::string> labels) {
  Mask m = 0;
  for (const auto& label : labels) {
    int idx = ground.index_of(label);
    if (idx < 0) throw InputError("unknown element label \"" + label + "\"");
    m |= mask_bit(idx);
  }
  return m;
}

namespace {

void require_in_range(const GroundSet& ground, Mask m, const char* what) {
  if (!mask_subset(m, ground.full())) {
    throw InputError(std::string(what) + " uses element indices outside the carrier");
  }
}

}  // namespace

Topology::Topology(GroundSet ground, std::vector<Mask> opens)
    : ground_(std::move(ground)), opens_(std::move(opens)) {}

Topology Topology::from_open_sets(GroundSet ground, std::vector<Mask> opens) {
  for (Mask m : opens) require_in_range(ground, m, "open set");
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  auto member = [&](Mask m) {
    return std::binary_search(opens.begin(), opens.end(), m);
  };
  if (!member(0)) throw InputError("open_sets must contain the empty set");
  if (!member(ground.full())) {
    throw InputError("open_sets must contain the whole carrier " +
                     format_mask(ground, ground.full()));
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      Mask u = opens[i] | opens[j];
      if (!member(u)) {
        throw InputError("open_sets is not closed under union: " +
                         format_mask(ground, opens[i]) + " ∪ " + format_mask(ground, opens[j]) +
                         " = " + format_mask(ground, u) + " is missing");
      }
      Mask v = opens[i] & opens[j];
      if (!member(v)) {
        throw InputError("open_sets is not closed under intersection: " +
                         format_mask(ground, opens[i]) + " ∩ " + format_mask(ground, opens[j]) +
                         " = " + format_mask(ground, v) + " is missing");
      }
    }
  }
  return Topology(std::move(ground), std::move(opens));
}

Topology Topology::generate(GroundSet ground, const std::vector<Mask>& subbasis) {
  for (Mask m : subbasis) require_in_range(ground, m, "subbasis set");

  std::set<Mask> family(subbasis.begin(), subbasis.end());
  family.insert(ground.full());

  // Close under pairwise intersection, then pairwise union. Distributivity
  // keeps the union closure from breaking the intersection closure.
  auto close_under = [&family](auto combine) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Mask> current(family.begin(), family.end());
      for (std::size_t i = 0; i < current.size(); ++i) {
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          if (family.insert(combine(current[i], current[j])).second) grew = true;
        }
      }
    }
  };
  close_under([](Mask a, Mask b) { return a & b; });
  family.insert(0);
  close_under([](Mask a, Mask b) { return a | b; });

  return Topology(std::move(ground), std::vector<Mask>(family.begin(), family.end()));
}

Topology Topology::discrete(GroundSet ground) {
  std::vector<Mask> opens;
  opens.reserve(std::size_t{1} << ground.size());
  for (Mask m = 0; m <= ground.full(); ++m) opens.push_back(m);
  return Topology(std::move(ground), std::move(opens));
}

Topology Topology::indiscrete(GroundSet ground) {
  std::vector<Mask> opens{0, ground.full()};
  return Topology(std::move(ground), std::move(opens));
}

bool Topology::is_open(Mask a) const {
  return std::binary_search(opens_.begin(), opens_.end(), a);
}

bool Topology::is_closed(Mask a) const { return is_open(full() & ~a); }

Mask Topology::closure(Mask a) const {
  Mask acc = full();
  for (Mask open : opens_) {
    Mask closed = full() & ~open;
    if (mask_subset(a, closed)) acc &= closed;
  }
  return acc;
}

Mask Topology::interior(Mask a) const {
  Mask acc = 0;
  for (Mask open : opens_) {
    if (mask_subset(open, a)) acc |= open;
  }
  return acc;
}

std::vector<Mask> Topology::closed_family() const {
  std::vector<Mask> closed;
  closed.reserve(opens_.size());
  for (Mask open : opens_) closed.push_back(full() & ~open);
  std::sort(closed.begin(), closed.end());
  return closed;
}

}  // namespace ringtop
