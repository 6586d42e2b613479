#pragma once

// Finite carriers, bit-indexed subsets, and validated finite topologies.
// Everything here computes on element indices; labels only matter at the
// I/O boundary (parsing and report formatting).

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ringtop {

// Raised on malformed input: bad labels, tables violating the ring axioms,
// set families that are not topologies. The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message) : std::runtime_error(message) {}
};

// A subset of a ground set with at most 16 elements; bit i = element i.
using Mask = std::uint32_t;

inline constexpr int kMaxCarrier = 16;

constexpr Mask mask_bit(int i) { return Mask{1} << i; }
constexpr bool mask_contains(Mask m, int i) { return ((m >> i) & 1u) != 0; }
constexpr bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Indices of the elements of m, ascending.
std::vector<int> mask_elements(Mask m);

// Labelled finite carrier: pairwise distinct labels, 1 <= n <= 16.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);
  static GroundSet synthetic(int n);  // labels "x0", "x1", ...

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full() const { return (Mask{1} << labels_.size()) - 1; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int index_of(std::string_view label) const;  // -1 when unknown

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// "{a,b}" in element order; "∅" when empty.
std::string format_mask(const GroundSet& ground, Mask m);

/// Resolves a list of labels to a subset; throws InputError on unknown labels.
Mask mask_from_labels(const GroundSet& ground, std::span<const std::string> labels);

// A topology as its full family of open sets, canonically sorted ascending
// by mask value. Construction validates the axioms, so every instance is a
// genuine topology. Immutable after construction.
class Topology {
 public:
  // Validates: masks in range, ∅ and the carrier present, family closed
  // under pairwise union and intersection (which on a finite carrier gives
  // closure under arbitrary unions and finite intersections). Input order
  // and duplicates are normalized away.
  static Topology from_open_sets(GroundSet ground, std::vector<Mask> opens);

  /// Smallest topology containing every subbasis set.
  static Topology generate(GroundSet ground, const std::vector<Mask>& subbasis);

  static Topology discrete(GroundSet ground);
  static Topology indiscrete(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  int carrier_size() const { return ground_.size(); }
  Mask full() const { return ground_.full(); }
  const std::vector<Mask>& opens() const { return opens_; }

  bool is_open(Mask a) const;
  bool is_closed(Mask a) const;
  Mask closure(Mask a) const;   // intersection of closed supersets
  Mask interior(Mask a) const;  // union of contained opens
  std::vector<Mask> closed_family() const;

  bool operator==(const Topology&) const = default;

 private:
  Topology(GroundSet ground, std::vector<Mask> opens);

  GroundSet ground_;
  std::vector<Mask> opens_;  // strictly ascending
};

}  // namespace ringtop
