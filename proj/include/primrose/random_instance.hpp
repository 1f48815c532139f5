// Seeded random instances for randomized law suites. All draws come from raw
// std::mt19937_64 output (standardized bit-exactly), never from <random>
// distributions, whose mappings differ across standard libraries; the same
// seed therefore yields the same instance on every platform.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "primrose/errors.hpp"
#include "primrose/instance.hpp"

namespace primrose {

/// Record of how a random instance was drawn, for reproducibility reports.
struct RandomDraws {
  std::uint64_t seed = 0;
  std::size_t size = 0;
  std::size_t antichain_rejections = 0;  // whole-antichain redraws (full-mask seed)
};

struct RandomInstance {
  Instance instance;
  RandomDraws draws;
};

/// Default labels x1..xn used by generated and searched instances.
inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

/// One random instance over x1..xn: each relation pair is included with
/// probability 1/2; the primal is the downward closure of a random antichain
/// (up to n seed masks), redrawn whole whenever a seed is the full mask (which
/// would put the universe itself into the closure). The family may come out
/// empty (degenerate weak primal). Validated at Weak level.
inline RandomInstance random_instance(std::size_t size, std::uint64_t seed) {
  if (size == 0 || size > 16) {
    throw CapacityError("random instances support sizes 1..16");
  }
  std::mt19937_64 gen(seed);
  RandomDraws draws;
  draws.seed = seed;
  draws.size = size;

  Universe universe(default_labels(size));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (gen() & 1u) pairs.emplace_back(i, j);
    }
  }
  Relation relation(universe, pairs);

  const std::uint64_t full = (size >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
  std::vector<Subset> seeds;
  for (;;) {
    seeds.clear();
    std::size_t count = static_cast<std::size_t>(gen() % (size + 1));
    bool rejected = false;
    for (std::size_t k = 0; k < count; ++k) {
      std::uint64_t bits = gen() % (full + 1);
      if (bits == full) rejected = true;
      seeds.emplace_back(bits, size);
    }
    if (!rejected) break;
    ++draws.antichain_rejections;
  }
  SetFamily family = SetFamily::downward_closure(size, seeds);
  Primal primal(std::move(family), ValidationLevel::Weak);

  return RandomInstance{Instance{std::move(relation), std::move(primal)}, draws};
}

/// Deterministic suite: sizes cycle 1..max_size, seeds base_seed+i.
inline std::vector<RandomInstance> random_instance_suite(std::size_t count, std::size_t max_size,
                                                         std::uint64_t base_seed) {
  if (max_size == 0) throw StructuralError("max_size must be at least 1");
  std::vector<RandomInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t size = 1 + (i % max_size);
    out.push_back(random_instance(size, base_seed + i));
  }
  return out;
}

}  // namespace primrose
