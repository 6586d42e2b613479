#include "ringtop/explorer.hpp"

#include <algorithm>
#include <thread>

namespace ringtop {

namespace {

void require_enumeration_range(int n) {
  if (n < 1 || n > kMaxEnumerationPoints) {
    throw InputError("topology enumeration supports 1 to 4 points, got " +
                     std::to_string(n));
  }
}

// A candidate family is a bitmask over the 2^n subsets: bit s set means
// subset-mask s belongs to the family.
bool family_is_topology(std::uint32_t family, int subset_count) {
  std::uint32_t members[1 << kMaxEnumerationPoints];
  int count = 0;
  for (int s = 0; s < subset_count; ++s) {
    if ((family >> s) & 1u) members[count++] = static_cast<std::uint32_t>(s);
  }
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if (((family >> (members[i] | members[j])) & 1u) == 0) return false;
      if (((family >> (members[i] & members[j])) & 1u) == 0) return false;
    }
  }
  return true;
}

template <typename Fn>
void for_each_topology_family(int n, Fn fn) {
  require_enumeration_range(n);
  const int subset_count = 1 << n;
  const std::uint32_t empty_bit = 1u;
  const std::uint32_t full_bit = 1u << (subset_count - 1);
  const std::uint64_t family_count = std::uint64_t{1} << subset_count;
  for (std::uint64_t family = 0; family < family_count; ++family) {
    const auto f = static_cast<std::uint32_t>(family);
    if ((f & empty_bit) == 0 || (f & full_bit) == 0) continue;
    if (family_is_topology(f, subset_count)) fn(f);
  }
}

}  // namespace

std::vector<Topology> enumerate_topologies(int n) {
  std::vector<Topology> out;
  const GroundSet ground = GroundSet::synthetic(n);
  for_each_topology_family(n, [&](std::uint32_t family) {
    std::vector<Mask> opens;
    for (int s = 0; s < (1 << n); ++s) {
      if ((family >> s) & 1u) opens.push_back(static_cast<Mask>(s));
    }
    out.push_back(Topology::from_open_sets(ground, std::move(opens)));
  });
  return out;
}

std::size_t count_topologies(int n) {
  std::size_t count = 0;
  for_each_topology_family(n, [&count](std::uint32_t) { ++count; });
  return count;
}

namespace {

// Bilinear multiplications over a fixed abelian group: a multiplication that
// distributes over the group addition is determined by the generator
// products, so enumerate those and keep whatever validates.
void append_brute_rings(int order, std::vector<FiniteRing>& pool) {
  auto try_candidate = [&pool](const GroundSet& ground,
                               const std::vector<std::vector<int>>& add,
                               const std::vector<std::vector<int>>& mul,
                               std::string name) {
    std::optional<FiniteRing> candidate;
    try {
      candidate = FiniteRing::validate(ground, add, mul, std::move(name));
    } catch (const InputError&) {
      return;  // not associative for this generator choice
    }
    for (const FiniteRing& existing : pool) {
      if (existing.same_tables(*candidate)) return;
    }
    pool.push_back(std::move(*candidate));
  };

  const GroundSet ground = GroundSet::synthetic(order);

  // Cyclic additive group: x·y = x*y*k mod order, one candidate per k.
  {
    std::vector<std::vector<int>> add(static_cast<std::size_t>(order));
    for (int x = 0; x < order; ++x) {
      for (int y = 0; y < order; ++y) {
        add[static_cast<std::size_t>(x)].push_back((x + y) % order);
      }
    }
    for (int k = 0; k < order; ++k) {
      std::vector<std::vector<int>> mul(static_cast<std::size_t>(order));
      for (int x = 0; x < order; ++x) {
        for (int y = 0; y < order; ++y) {
          mul[static_cast<std::size_t>(x)].push_back((x * y * k) % order);
        }
      }
      try_candidate(ground, add, mul, "brute-c" + std::to_string(order) + "-k" + std::to_string(k));
    }
  }

  // Klein group at order 4: elements are (a,b) over Z2 packed as 2a+b; the
  // multiplication is fixed by the four generator products.
  if (order == 4) {
    std::vector<std::vector<int>> add(4);
    for (int x = 0; x < 4; ++x) {
      for (int y = 0; y < 4; ++y) add[static_cast<std::size_t>(x)].push_back(x ^ y);
    }
    auto combine = [](int coefficient, int value) { return coefficient ? value : 0; };
    for (int p11 = 0; p11 < 4; ++p11) {
      for (int p12 = 0; p12 < 4; ++p12) {
        for (int p21 = 0; p21 < 4; ++p21) {
          for (int p22 = 0; p22 < 4; ++p22) {
            std::vector<std::vector<int>> mul(4);
            for (int x = 0; x < 4; ++x) {
              const int a = x >> 1, b = x & 1;
              for (int y = 0; y < 4; ++y) {
                const int c = y >> 1, d = y & 1;
                int value = combine(a & c, p11) ^ combine(a & d, p12) ^
                            combine(b & c, p21) ^ combine(b & d, p22);
                mul[static_cast<std::size_t>(x)].push_back(value);
              }
            }
            try_candidate(ground, add, mul,
                          "brute-v4-" + std::to_string(p11) + std::to_string(p12) +
                              std::to_string(p21) + std::to_string(p22));
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<FiniteRing> ring_pool(int order, bool brute_force) {
  if (order < 1 || order > 8) {
    throw InputError("ring pool supports orders 1 to 8, got " + std::to_string(order));
  }
  std::vector<FiniteRing> pool;
  pool.push_back(catalog_zn(order));

  // Direct products of cyclic factors >= 2, factors nondecreasing.
  if (order == 4) pool.push_back(catalog("product", {2, 2}));
  if (order == 6) pool.push_back(catalog("product", {2, 3}));
  if (order == 8) {
    pool.push_back(catalog("product", {2, 4}));
    pool.push_back(catalog("product", {2, 2, 2}));
  }
  if (order == 4) pool.push_back(catalog_example34());

  if (brute_force) {
    if (order > 4) {
      throw InputError("brute-force ring enumeration is capped at order 4");
    }
    append_brute_rings(order, pool);
  }
  return pool;
}

SearchGoal SearchGoal::separating(FamilyKind weaker, FamilyKind stronger) {
  auto rank = [](FamilyKind kind) {
    switch (kind) {
      case FamilyKind::Open: return 0;
      case FamilyKind::Beta: return 1;
      case FamilyKind::EStar: return 2;
      default: return -1;
    }
  };
  if (rank(weaker) < 0 || rank(stronger) < 0 || rank(weaker) >= rank(stronger)) {
    throw InputError(
        "separating goal needs a strict hierarchy pair from open < beta < estar");
  }
  SearchGoal goal;
  goal.kind = Kind::Separating;
  goal.weaker = weaker;
  goal.stronger = stronger;
  return goal;
}

SearchGoal SearchGoal::converse_counterexample(std::string check_id) {
  if (check_id == "T4.11") check_id = "T4.11-converse";
  const TheoremEntry* entry = find_theorem(check_id);
  if (entry == nullptr || !entry->existential) {
    throw InputError("no reverse-inclusion check registered under \"" + check_id + "\"");
  }
  SearchGoal goal;
  goal.kind = Kind::ConverseCounterexample;
  goal.check_id = std::move(check_id);
  return goal;
}

SearchGoal SearchGoal::census() {
  SearchGoal goal;
  goal.kind = Kind::Census;
  return goal;
}

SearchGoal SearchGoal::parse(std::string_view text) {
  if (text == "census") return census();
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    std::string_view head = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);
    if (head == "separating") {
      auto comma = rest.find(',');
      if (comma != std::string_view::npos) {
        auto weaker = parse_family_kind(rest.substr(0, comma));
        auto stronger = parse_family_kind(rest.substr(comma + 1));
        if (weaker && stronger) return separating(*weaker, *stronger);
      }
      throw InputError("separating goal expects two family kinds, e.g. "
                       "separating:beta,estar");
    }
    if (head == "converse" || head == "converse-counterexample") {
      return converse_counterexample(std::string(rest));
    }
  }
  throw InputError("unknown search goal \"" + std::string(text) +
                   "\" (expected separating:K1,K2 | converse:ID | census)");
}

std::string SearchGoal::describe() const {
  switch (kind) {
    case Kind::Separating:
      return "separating(" + std::string(to_string(weaker)) + "," +
             std::string(to_string(stronger)) + ")";
    case Kind::ConverseCounterexample: return "converse-counterexample(" + check_id + ")";
    case Kind::Census: return "census";
  }
  return "?";
}

namespace {

std::optional<SearchHit> evaluate_cell(const SearchGoal& goal, const FiniteRing& ring,
                                       const Topology& canonical_topology,
                                       DeltaClosureMode mode) {
  // The enumerated topology uses synthetic labels; reinterpret its opens over
  // the ring's carrier so the structure has a single ground set.
  Topology topology =
      Topology::from_open_sets(ring.ground(), canonical_topology.opens());
  TopoRingStructure structure = TopoRingStructure::make(ring, std::move(topology));
  Classification classification = classify(structure, mode);

  switch (goal.kind) {
    case SearchGoal::Kind::Separating: {
      if (classification.satisfies(goal.stronger) &&
          !classification.satisfies(goal.weaker)) {
        return SearchHit{std::move(structure), std::move(classification), std::nullopt};
      }
      return std::nullopt;
    }
    case SearchGoal::Kind::ConverseCounterexample: {
      RunOptions options;
      options.mode = mode;
      CheckReport report = run_check(goal.check_id, structure, Variant::AsProved, options);
      if (report.status == CheckStatus::Pass && report.witness.has_value()) {
        return SearchHit{std::move(structure), std::move(classification),
                         std::move(report)};
      }
      return std::nullopt;
    }
    case SearchGoal::Kind::Census:
      return SearchHit{std::move(structure), std::move(classification), std::nullopt};
  }
  return std::nullopt;
}

}  // namespace

std::vector<SearchHit> search(const SearchGoal& goal, const SearchOptions& options) {
  if (options.max_points < 1 || options.max_points > kMaxEnumerationPoints) {
    throw InputError("search max-points must be between 1 and 4");
  }
  if (options.max_order < 1) throw InputError("search max-order must be at least 1");

  struct Cell {
    const FiniteRing* ring;
    const Topology* topology;
  };
  std::vector<std::vector<FiniteRing>> pools;
  std::vector<std::vector<Topology>> topology_sets;
  std::vector<Cell> cells;
  const int limit = std::min(options.max_points, options.max_order);
  for (int n = 1; n <= limit; ++n) {
    pools.push_back(ring_pool(n, options.brute_force_rings));
    topology_sets.push_back(enumerate_topologies(n));
  }
  for (std::size_t level = 0; level < pools.size(); ++level) {
    for (const FiniteRing& ring : pools[level]) {
      for (const Topology& topology : topology_sets[level]) {
        cells.push_back({&ring, &topology});
      }
    }
  }

  std::vector<std::optional<SearchHit>> slots(cells.size());
  unsigned thread_count = options.threads != 0 ? options.threads
                                               : std::max(1u, std::thread::hardware_concurrency());
  thread_count = std::min<unsigned>(thread_count, std::max<std::size_t>(cells.size(), 1));

  auto worker = [&](unsigned worker_index) {
    for (std::size_t i = worker_index; i < cells.size(); i += thread_count) {
      slots[i] = evaluate_cell(goal, *cells[i].ring, *cells[i].topology, options.mode);
    }
  };
  if (thread_count <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t) threads.emplace_back(worker, t);
    for (auto& thread : threads) thread.join();
  }

  std::vector<SearchHit> hits;
  for (auto& slot : slots) {
    if (slot) hits.push_back(std::move(*slot));
  }
  return hits;
}

}  // namespace ringtop
