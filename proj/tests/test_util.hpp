#pragma once

// Shared builders for the test suites.

#include <initializer_list>
#include <string>

#include "ringtop/analyzer.hpp"

namespace ringtop::test {

// Runs fn, returning the InputError message it throws ("" when it does not).
template <typename Fn>
std::string input_error_message(Fn fn) {
  try {
    fn();
  } catch (const InputError& error) {
    return error.what();
  }
  return "";
}

inline bool message_contains(const std::string& message, std::string_view needle) {
  return message.find(needle) != std::string::npos;
}

inline Mask ms(std::initializer_list<int> elements) {
  Mask m = 0;
  for (int e : elements) m |= mask_bit(e);
  return m;
}

// Carrier {a,b,c,d} with opens {∅, {a}, {a,b}, X}.
inline Topology example34_topology() {
  GroundSet ground({"a", "b", "c", "d"});
  return Topology::from_open_sets(ground, {0x0, 0x1, 0x3, 0xF});
}

inline TopoRingStructure example34_structure() {
  return TopoRingStructure::make(catalog_example34(), example34_topology());
}

inline TopoRingStructure zn_discrete(int n) {
  FiniteRing ring = catalog_zn(n);
  Topology topology = Topology::discrete(ring.ground());
  return TopoRingStructure::make(std::move(ring), std::move(topology));
}

inline TopoRingStructure zn_indiscrete(int n) {
  FiniteRing ring = catalog_zn(n);
  Topology topology = Topology::indiscrete(ring.ground());
  return TopoRingStructure::make(std::move(ring), std::move(topology));
}

// Z3 with opens generated by {{x0},{x1}}: not an e*-topological ring; the
// smallest gating counterexample used across the suites.
inline TopoRingStructure z3_two_singletons() {
  FiniteRing ring = catalog_zn(3);
  Topology topology = Topology::generate(ring.ground(), {ms({0}), ms({1})});
  return TopoRingStructure::make(std::move(ring), std::move(topology));
}

}  // namespace ringtop::test
