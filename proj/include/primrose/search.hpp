// Bounded counterexample search for claims that are not properties of the
// model families. The search is fully deterministic: universe sizes ascend
// from 1, relations are enumerated by their n*n-bit adjacency mask ascending
// (bit i*n+j is the pair (i,j)), primals are the downward closures of
// antichains in canonical backtracking order (the empty antichain first, so
// the degenerate empty family is tried), kinds run a, b, i, u, and target
// subsets ascend by mask. The first violation in that order is the witness.
//
// Each target may register a companion fixture: an instance file that is
// expected to violate the target's claim. validate_companion re-runs the
// violation scan on such an instance.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primrose/errors.hpp"
#include "primrose/instance.hpp"
#include "primrose/models.hpp"
#include "primrose/primal.hpp"
#include "primrose/random_instance.hpp"
#include "primrose/rational.hpp"
#include "primrose/relation.hpp"

namespace primrose {

/// Relations are enumerated by an n*n-bit mask, so n stays at most 8.
inline constexpr std::size_t kSearchSizeCap = 8;

struct SearchBounds {
  std::size_t max_universe_size = 4;
  std::uint64_t max_instances = 50'000'000;
  /// Recorded in reports for reproducibility; the systematic search is
  /// deterministic and does not consume randomness.
  std::uint64_t seed = 0;
};

struct SearchWitness {
  Instance instance;
  NeighborhoodKind kind = NeighborhoodKind::A;
  Subset v;
  std::optional<Subset> w;
  std::string detail;
};

struct CounterexampleReport {
  std::string target;
  SearchBounds bounds;
  std::optional<SearchWitness> witness;
  std::uint64_t instances_tried = 0;
  /// True when the whole bounded space was enumerated without a witness;
  /// false with no witness means the instance budget ran out first.
  bool exhausted = false;
};

namespace search_detail {

using u64 = std::uint64_t;

/// Flat per-instance approximation evaluator used in the search hot loop.
/// Values are computed on demand; no caching, since search universes are tiny.
struct Tables {
  std::size_t n = 0;
  u64 full = 0;
  const Universe* uni = nullptr;
  std::array<u64, 16> succ{};
  std::array<u64, 16> pred{};
  const std::vector<char>* member = nullptr;
  std::size_t member_count = 0;

  bool mem(u64 m) const { return (*member)[m] != 0; }
  bool maximal() const { return member_count == (u64{1} << n) - 1; }

  u64 nb(NeighborhoodKind k, std::size_t i) const {
    switch (k) {
      case NeighborhoodKind::A: return succ[i];
      case NeighborhoodKind::B: return pred[i];
      case NeighborhoodKind::I: return succ[i] & pred[i];
      default: return succ[i] | pred[i];
    }
  }

  u64 l1(NeighborhoodKind k, u64 v) const {
    u64 vc = full & ~v, out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mem(nb(k, i) & vc)) out |= u64{1} << i;
    }
    return out;
  }
  u64 u1(NeighborhoodKind k, u64 v) const {
    u64 out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!mem(nb(k, i) & v)) out |= u64{1} << i;
    }
    return out;
  }
  u64 l2(NeighborhoodKind k, u64 v) const { return l1(k, v); }
  u64 u2(NeighborhoodKind k, u64 v) const { return v | u1(k, v); }
  u64 l3(NeighborhoodKind k, u64 v) const {
    u64 vc = full & ~v, out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      u64 w = nb(k, i);
      if (mem(w & vc)) out |= w;
    }
    return out;
  }
  u64 u3(NeighborhoodKind k, u64 v) const { return full & ~l3(k, full & ~v); }
  u64 u4(NeighborhoodKind k, u64 v) const {
    u64 out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      u64 w = nb(k, i);
      if (!mem(w & v)) out |= w;
    }
    return out;
  }
  u64 l4(NeighborhoodKind k, u64 v) const { return full & ~u4(k, full & ~v); }
  u64 yl(NeighborhoodKind k, u64 v) const {
    u64 out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((nb(k, i) & ~v) == 0) out |= u64{1} << i;
    }
    return out;
  }
  u64 yu(NeighborhoodKind k, u64 v) const {
    u64 out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((nb(k, i) & v) != 0) out |= u64{1} << i;
    }
    return out;
  }

  u64 lower(ModelId m, NeighborhoodKind k, u64 v) const {
    switch (m) {
      case ModelId::Yao: return yl(k, v);
      case ModelId::N1:
      case ModelId::N2: return l1(k, v);
      case ModelId::N3: return l3(k, v);
      default: return l4(k, v);
    }
  }
  u64 upper(ModelId m, NeighborhoodKind k, u64 v) const {
    switch (m) {
      case ModelId::Yao: return yu(k, v);
      case ModelId::N1: return u1(k, v);
      case ModelId::N2: return u2(k, v);
      case ModelId::N3: return u3(k, v);
      default: return u4(k, v);
    }
  }
  u64 boundary(ModelId m, NeighborhoodKind k, u64 v) const {
    return upper(m, k, v) & ~lower(m, k, v);
  }
  Rational sigma(ModelId m, NeighborhoodKind k, u64 v) const {
    auto pc = [](u64 x) { return static_cast<std::size_t>(std::popcount(x)); };
    if (m == ModelId::Yao) return Rational::ratio(pc(yl(k, v)), pc(yu(k, v)));
    if (v == 0) return Rational::ratio(1, 1);
    u64 lo = lower(m, k, v), up = upper(m, k, v);
    std::size_t den = (m == ModelId::N2) ? pc(up) : pc(up | v);
    return Rational::ratio(pc(lo & v), den);
  }

  std::string fmt(u64 bits) const { return uni->format(Subset(bits, n)); }
};

inline bool masks_comparable(u64 a, u64 b) { return (a & ~b) == 0 || (b & ~a) == 0; }

/// All antichains over the proper subsets of an n-element universe, in
/// canonical backtracking order (strictly increasing mask sequences; the
/// empty antichain first). The full mask is excluded from the pool.
inline std::vector<std::vector<u64>> enumerate_antichains(std::size_t n) {
  u64 full = (u64{1} << n) - 1;
  std::vector<std::vector<u64>> out;
  std::vector<u64> cur;
  std::function<void(u64)> rec = [&](u64 start) {
    out.push_back(cur);
    for (u64 m = start; m < full; ++m) {
      bool clash = false;
      for (u64 c : cur) {
        if (masks_comparable(c, m)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      cur.push_back(m);
      rec(m + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Downward-closure membership bitmap of an antichain.
inline std::vector<char> closure_bitmap(std::size_t n, const std::vector<u64>& seeds) {
  u64 count = u64{1} << n;
  std::vector<char> map(count, 0);
  for (u64 s : seeds) {
    u64 sub = s;
    // enumerate all submasks of s, including 0
    while (true) {
      map[sub] = 1;
      if (sub == 0) break;
      sub = (sub - 1) & s;
    }
  }
  return map;
}

}  // namespace search_detail

using SearchPredicate = std::function<std::optional<std::string>(
    const search_detail::Tables&, NeighborhoodKind, std::uint64_t, std::uint64_t)>;

struct SearchTarget {
  std::string id;
  std::string description;
  bool needs_pair = false;
  /// Basename of a shipped instance file expected to violate the claim;
  /// empty when no companion is registered.
  std::string companion_fixture;
  SearchPredicate violates;
};

namespace search_detail {

inline std::string lname(ModelId m) { return "lower_" + to_string(m); }
inline std::string uname(ModelId m) { return "upper_" + to_string(m); }

inline SearchPredicate p_contraction(ModelId m) {
  return [m](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
    u64 lo = t.lower(m, k, v);
    if ((lo & ~v) == 0) return std::nullopt;
    return lname(m) + "(V) = " + t.fmt(lo) + " is not contained in V";
  };
}

inline SearchPredicate p_extension(ModelId m) {
  return [m](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
    u64 up = t.upper(m, k, v);
    if ((v & ~up) == 0) return std::nullopt;
    return "V is not contained in " + uname(m) + "(V) = " + t.fmt(up);
  };
}

inline SearchPredicate p_lower_idempotence(ModelId m) {
  return [m](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
    u64 lo = t.lower(m, k, v);
    u64 lolo = t.lower(m, k, lo);
    if (lolo == lo) return std::nullopt;
    return lname(m) + "(" + lname(m) + "(V)) = " + t.fmt(lolo) + " differs from " + lname(m) +
           "(V) = " + t.fmt(lo);
  };
}

inline SearchPredicate p_upper_idempotence(ModelId m) {
  return [m](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
    u64 up = t.upper(m, k, v);
    u64 upup = t.upper(m, k, up);
    if (upup == up) return std::nullopt;
    return uname(m) + "(" + uname(m) + "(V)) = " + t.fmt(upup) + " differs from " + uname(m) +
           "(V) = " + t.fmt(up);
  };
}

inline SearchPredicate p_lower_of_upper(ModelId m) {
  return [m](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
    u64 up = t.upper(m, k, v);
    u64 lo = t.lower(m, k, up);
    if (lo == up) return std::nullopt;
    return lname(m) + "(" + uname(m) + "(V)) = " + t.fmt(lo) + " differs from " + uname(m) +
           "(V) = " + t.fmt(up);
  };
}

inline SearchPredicate p_upper_of_lower(ModelId m) {
  return [m](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
    u64 lo = t.lower(m, k, v);
    u64 up = t.upper(m, k, lo);
    if (up == lo) return std::nullopt;
    return uname(m) + "(" + lname(m) + "(V)) = " + t.fmt(up) + " differs from " + lname(m) +
           "(V) = " + t.fmt(lo);
  };
}

inline SearchPredicate p_union_equality(ModelId m, bool on_lower) {
  return [m, on_lower](const Tables& t, NeighborhoodKind k, u64 v,
                       u64 w) -> std::optional<std::string> {
    auto get = [&](u64 x) { return on_lower ? t.lower(m, k, x) : t.upper(m, k, x); };
    u64 joined = get(v | w);
    u64 parts = get(v) | get(w);
    if (joined == parts) return std::nullopt;
    std::string name = on_lower ? lname(m) : uname(m);
    return name + "(V|W) = " + t.fmt(joined) + " differs from " + name + "(V)|" + name +
           "(W) = " + t.fmt(parts);
  };
}

inline SearchPredicate p_intersection_equality(ModelId m, bool on_lower) {
  return [m, on_lower](const Tables& t, NeighborhoodKind k, u64 v,
                       u64 w) -> std::optional<std::string> {
    auto get = [&](u64 x) { return on_lower ? t.lower(m, k, x) : t.upper(m, k, x); };
    u64 met = get(v & w);
    u64 parts = get(v) & get(w);
    if (met == parts) return std::nullopt;
    std::string name = on_lower ? lname(m) : uname(m);
    return name + "(V&W) = " + t.fmt(met) + " differs from " + name + "(V)&" + name +
           "(W) = " + t.fmt(parts);
  };
}

inline SearchPredicate p_duality(ModelId m) {
  return [m](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
    u64 lo = t.lower(m, k, v);
    u64 dual = t.full & ~t.upper(m, k, t.full & ~v);
    if (lo == dual) return std::nullopt;
    return lname(m) + "(V) = " + t.fmt(lo) + " differs from the complement of " + uname(m) +
           "(V') = " + t.fmt(dual);
  };
}

/// Violations of the claimed N3 kind chains; evaluated once per subset
/// (the kind axis is collapsed to the first kind).
inline SearchPredicate p_kind_chain(ModelId m, bool on_lower) {
  return [m, on_lower](const Tables& t, NeighborhoodKind k, u64 v,
                       u64) -> std::optional<std::string> {
    if (k != NeighborhoodKind::A) return std::nullopt;
    auto get = [&](NeighborhoodKind kk, u64 x) {
      return on_lower ? t.lower(m, kk, x) : t.upper(m, kk, x);
    };
    const char* base = on_lower ? "lower" : "upper";
    struct Step {
      NeighborhoodKind from, to;
      const char *fk, *tk;
    };
    static constexpr Step steps[] = {
        {NeighborhoodKind::U, NeighborhoodKind::A, "u", "a"},
        {NeighborhoodKind::U, NeighborhoodKind::B, "u", "b"},
        {NeighborhoodKind::A, NeighborhoodKind::I, "a", "i"},
        {NeighborhoodKind::B, NeighborhoodKind::I, "b", "i"},
    };
    for (const auto& s : steps) {
      // lower chains ascend u -> a/b -> i; upper chains descend
      u64 small = on_lower ? get(s.from, v) : get(s.to, v);
      u64 big = on_lower ? get(s.to, v) : get(s.from, v);
      const char* sk = on_lower ? s.fk : s.tk;
      const char* bk = on_lower ? s.tk : s.fk;
      if ((small & ~big) != 0) {
        return std::string(base) + "_" + to_string(m) + " kind " + sk + " = " + t.fmt(small) +
               " is not contained in kind " + bk + " = " + t.fmt(big);
      }
    }
    return std::nullopt;
  };
}

inline SearchPredicate p_boundary_chain(ModelId m) {
  return [m](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
    if (k != NeighborhoodKind::A) return std::nullopt;
    struct Step {
      NeighborhoodKind from, to;
      const char *fk, *tk;
    };
    static constexpr Step steps[] = {
        {NeighborhoodKind::I, NeighborhoodKind::A, "i", "a"},
        {NeighborhoodKind::I, NeighborhoodKind::B, "i", "b"},
        {NeighborhoodKind::A, NeighborhoodKind::U, "a", "u"},
        {NeighborhoodKind::B, NeighborhoodKind::U, "b", "u"},
    };
    for (const auto& s : steps) {
      u64 small = t.boundary(m, s.from, v);
      u64 big = t.boundary(m, s.to, v);
      if ((small & ~big) != 0) {
        return "boundary_" + to_string(m) + " kind " + std::string(s.fk) + " = " + t.fmt(small) +
               " is not contained in kind " + s.tk + " = " + t.fmt(big);
      }
    }
    return std::nullopt;
  };
}

inline SearchPredicate p_accuracy_chain(ModelId m) {
  return [m](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
    if (k != NeighborhoodKind::A) return std::nullopt;
    struct Step {
      NeighborhoodKind lo, hi;
      const char *lk, *hk;
    };
    static constexpr Step steps[] = {
        {NeighborhoodKind::U, NeighborhoodKind::A, "u", "a"},
        {NeighborhoodKind::U, NeighborhoodKind::B, "u", "b"},
        {NeighborhoodKind::A, NeighborhoodKind::I, "a", "i"},
        {NeighborhoodKind::B, NeighborhoodKind::I, "b", "i"},
    };
    for (const auto& s : steps) {
      Rational lo = t.sigma(m, s.lo, v);
      Rational hi = t.sigma(m, s.hi, v);
      auto c = lo <=> hi;
      if (c == std::partial_ordering::greater) {
        return "sigma_" + to_string(m) + " kind " + std::string(s.lk) + " = " + lo.to_string() +
               " exceeds kind " + s.hk + " = " + hi.to_string();
      }
    }
    return std::nullopt;
  };
}

/// The printed maximal-primal claim lower(V) = empty for V != universe.
inline SearchPredicate p_maximal_lower_empty(ModelId m) {
  return [m](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
    if (!t.maximal() || v == t.full) return std::nullopt;
    u64 lo = t.lower(m, k, v);
    if (lo == 0) return std::nullopt;
    return "the primal is maximal and V != universe, yet " + lname(m) + "(V) = " + t.fmt(lo) +
           " is nonempty";
  };
}

}  // namespace search_detail

/// The registry of non-property targets, in fixed order.
inline const std::vector<SearchTarget>& search_targets() {
  using namespace search_detail;
  static const std::vector<SearchTarget> targets = [] {
    std::vector<SearchTarget> t;
    auto add = [&](std::string id, std::string description, bool needs_pair,
                   std::string companion, SearchPredicate pred) {
      t.push_back(SearchTarget{std::move(id), std::move(description), needs_pair,
                               std::move(companion), std::move(pred)});
    };
    const ModelId n1 = ModelId::N1, n2 = ModelId::N2, n3 = ModelId::N3, n4 = ModelId::N4;

    // first lower/upper family
    add("N1-contraction", "lower1(V) contained in V", false, "ex33.inst", p_contraction(n1));
    add("N1-extension", "V contained in upper1(V)", false, "ex31.inst", p_extension(n1));
    add("N1-lower-idempotence", "lower1 is idempotent", false, "ex34.inst",
        p_lower_idempotence(n1));
    add("N1-upper-idempotence", "upper1 is idempotent", false, "ex34.inst",
        p_upper_idempotence(n1));
    add("N1-lower-of-upper-fixpoint", "upper1(V) is a fixed point of lower1", false, "ex34.inst",
        p_lower_of_upper(n1));
    add("N1-upper-of-lower-fixpoint", "lower1(V) is a fixed point of upper1", false, "ex34.inst",
        p_upper_of_lower(n1));
    add("N1-lower-union-equality", "lower1 distributes over unions", true, "ex32.inst",
        p_union_equality(n1, true));
    add("N1-upper-union-equality", "upper1 distributes over unions", true, "ex34.inst",
        p_union_equality(n1, false));
    add("N1-lower-intersection-equality", "lower1 distributes over intersections", true,
        "ex34.inst", p_intersection_equality(n1, true));
    add("N1-upper-intersection-equality", "upper1 distributes over intersections", true,
        "ex32.inst", p_intersection_equality(n1, false));

    // second lower/upper family
    add("N2-contraction", "lower2(V) contained in V", false, "ex31.inst", p_contraction(n2));
    add("N2-duality", "lower2 and upper2 are complement-duals", false, "ex36.inst",
        p_duality(n2));
    add("N2-lower-idempotence", "lower2 is idempotent", false, "ex34.inst",
        p_lower_idempotence(n2));
    add("N2-upper-idempotence", "upper2 is idempotent", false, "ex34.inst",
        p_upper_idempotence(n2));
    add("N2-lower-of-upper-fixpoint", "upper2(V) is a fixed point of lower2", false, "ex34.inst",
        p_lower_of_upper(n2));
    add("N2-upper-of-lower-fixpoint", "lower2(V) is a fixed point of upper2", false, "ex34.inst",
        p_upper_of_lower(n2));
    add("N2-upper-union-equality", "upper2 distributes over unions", true, "ex34.inst",
        p_union_equality(n2, false));
    add("N2-upper-intersection-equality", "upper2 distributes over intersections", true,
        "ex36.inst", p_intersection_equality(n2, false));

    // third lower/upper family
    add("N3-contraction", "lower3(V) contained in V", false, "ex311.inst", p_contraction(n3));
    add("N3-extension", "V contained in upper3(V)", false, "ex311.inst", p_extension(n3));
    add("N3-lower-idempotence", "lower3 is idempotent", false, "ex34.inst",
        p_lower_idempotence(n3));
    add("N3-upper-idempotence", "upper3 is idempotent", false, "ex34.inst",
        p_upper_idempotence(n3));
    add("N3-lower-of-upper-fixpoint", "upper3(V) is a fixed point of lower3", false, "ex313.inst",
        p_lower_of_upper(n3));
    add("N3-upper-of-lower-fixpoint", "lower3(V) is a fixed point of upper3", false, "ex313.inst",
        p_upper_of_lower(n3));
    add("N3-lower-union-equality", "lower3 distributes over unions", true, "ex311.inst",
        p_union_equality(n3, true));
    add("N3-upper-union-equality", "upper3 distributes over unions", true, "ex34.inst",
        p_union_equality(n3, false));
    add("N3-lower-intersection-equality", "lower3 distributes over intersections", true,
        "ex34.inst", p_intersection_equality(n3, true));
    add("N3-upper-intersection-equality", "upper3 distributes over intersections", true,
        "ex311.inst", p_intersection_equality(n3, false));
    add("N3-lower-empty-on-empty", "lower3 of the empty set is empty", false, "ex313.inst",
        [](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
          if (v != 0) return std::nullopt;
          u64 lo = t.l3(k, 0);
          if (lo == 0) return std::nullopt;
          return "lower_n3(empty) = " + t.fmt(lo) + " is nonempty";
        });
    add("N3-upper-empty-on-empty", "upper3 of the empty set is empty", false, "ex311.inst",
        [](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
          if (v != 0) return std::nullopt;
          u64 up = t.u3(k, 0);
          if (up == 0) return std::nullopt;
          return "upper_n3(empty) = " + t.fmt(up) + " is nonempty";
        });
    add("N3-lower-full-on-universe", "lower3 of the universe is the universe", false, "ex311.inst",
        [](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
          if (v != t.full) return std::nullopt;
          u64 lo = t.l3(k, t.full);
          if (lo == t.full) return std::nullopt;
          return "lower_n3(universe) = " + t.fmt(lo) + " is not the universe";
        });
    add("N3-upper-full-on-universe", "upper3 of the universe is the universe", false, "ex313.inst",
        [](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
          if (v != t.full) return std::nullopt;
          u64 up = t.u3(k, t.full);
          if (up == t.full) return std::nullopt;
          return "upper_n3(universe) = " + t.fmt(up) + " is not the universe";
        });

    // fourth lower/upper family
    add("N4-contraction", "lower4(V) contained in V", false, "ex311.inst", p_contraction(n4));
    add("N4-extension", "V contained in upper4(V)", false, "ex311.inst", p_extension(n4));
    add("N4-lower-idempotence", "lower4 is idempotent", false, "ex34.inst",
        p_lower_idempotence(n4));
    add("N4-upper-idempotence", "upper4 is idempotent", false, "ex34.inst",
        p_upper_idempotence(n4));
    add("N4-lower-of-upper-fixpoint", "upper4(V) is a fixed point of lower4", false, "ex34.inst",
        p_lower_of_upper(n4));
    add("N4-upper-of-lower-fixpoint", "lower4(V) is a fixed point of upper4", false, "ex34.inst",
        p_upper_of_lower(n4));
    add("N4-upper-union-equality", "upper4 distributes over unions", true, "ex34.inst",
        p_union_equality(n4, false));
    add("N4-lower-intersection-equality", "lower4 distributes over intersections", true,
        "ex34.inst", p_intersection_equality(n4, true));
    add("N4-upper-empty-converse", "an empty upper4 forces an empty V", false, "ex311_alt2.inst",
        [](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
          if (v == 0) return std::nullopt;
          if (t.u4(k, v) != 0) return std::nullopt;
          return "upper_n4(V) is empty although V = " + t.fmt(v) + " is not";
        });
    add("N4-lower-full-converse", "a full lower4 forces V = universe", false, "ex311_alt2.inst",
        [](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
          if (v == t.full) return std::nullopt;
          if (t.l4(k, v) != t.full) return std::nullopt;
          return "lower_n4(V) is the whole universe although V = " + t.fmt(v) + " is not";
        });

    // claimed chains for the third family (no companion fixtures; the
    // shipped instances satisfy them, witnesses need other relations)
    add("N3-kind-chain-lower", "lower3 grows along kinds u -> a/b -> i", false, "",
        p_kind_chain(n3, true));
    add("N3-kind-chain-upper", "upper3 shrinks along kinds u -> a/b -> i", false, "",
        p_kind_chain(n3, false));
    add("N3-boundary-chain", "boundary3 grows along kinds i -> a/b -> u", false, "",
        p_boundary_chain(n3));
    add("N3-accuracy-chain", "sigma3 grows along kinds u -> a/b -> i", false, "",
        p_accuracy_chain(n3));

    // printed maximal-primal degeneracies
    add("N1-maximal-lower-empty", "maximal primal: lower1(V) empty for V != universe", false,
        "ex313.inst", p_maximal_lower_empty(n1));
    add("N2-maximal-lower-empty", "maximal primal: lower2(V) empty for V != universe", false,
        "ex313.inst", p_maximal_lower_empty(n2));

    // plain-model accuracy claims without their gates
    add("yao-sigma-above-one", "the plain sigma never exceeds 1 (without seriality)", false,
        "ex313.inst",
        [](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
          Rational s = t.sigma(ModelId::Yao, k, v);
          if (s.is_undefined()) return std::nullopt;
          auto c = s <=> Rational::ratio(1, 1);
          if (c != std::partial_ordering::greater) return std::nullopt;
          return "sigma_yao(V) = " + s.to_string() + " exceeds 1";
        });
    add("yao-accuracy-ungated", "sigma_yao <= sigma1 (without reflexivity)", false, "ex313.inst",
        [](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
          Rational ys = t.sigma(ModelId::Yao, k, v);
          if (ys.is_undefined()) return std::nullopt;
          Rational s1 = t.sigma(ModelId::N1, k, v);
          auto c = ys <=> s1;
          if (c != std::partial_ordering::greater) return std::nullopt;
          return "sigma_yao(V) = " + ys.to_string() + " exceeds sigma_n1(V) = " + s1.to_string();
        });
    add("definability-converse",
        "nonempty V: an empty boundary1 forces sigma1 = 1", false, "defconv.inst",
        [](const Tables& t, NeighborhoodKind k, u64 v, u64) -> std::optional<std::string> {
          if (v == 0) return std::nullopt;
          if (t.boundary(ModelId::N1, k, v) != 0) return std::nullopt;
          Rational s = t.sigma(ModelId::N1, k, v);
          if (s == Rational::ratio(1, 1)) return std::nullopt;
          return "boundary_n1(V) is empty but sigma_n1(V) = " + s.to_string();
        });

    return t;
  }();
  return targets;
}

inline const SearchTarget* find_target(const std::string& id) {
  for (const auto& t : search_targets()) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

namespace search_detail {

/// Scan one instance (already flattened into Tables) in kind/subset order.
inline std::optional<SearchWitness> scan_tables(const SearchTarget& target, const Tables& t,
                                                const std::function<Instance()>& materialize) {
  u64 count = u64{1} << t.n;
  for (NeighborhoodKind k : kAllKinds) {
    for (u64 v = 0; v < count; ++v) {
      if (target.needs_pair) {
        for (u64 w = 0; w < count; ++w) {
          if (auto detail = target.violates(t, k, v, w)) {
            SearchWitness wit{materialize(), k, Subset(v, t.n), Subset(w, t.n),
                              std::move(*detail)};
            return wit;
          }
        }
      } else {
        if (auto detail = target.violates(t, k, v, 0)) {
          SearchWitness wit{materialize(), k, Subset(v, t.n), std::nullopt, std::move(*detail)};
          return wit;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace search_detail

/// Re-run the violation scan on a concrete instance (used to confirm that a
/// registered companion fixture indeed violates its target's claim).
inline std::optional<SearchWitness> find_violation_on_instance(const SearchTarget& target,
                                                               const Instance& instance) {
  using namespace search_detail;
  std::size_t n = instance.universe().size();
  if (n > 16) {
    throw CapacityError("violation scans enumerate all subsets; universe size " +
                        std::to_string(n) + " exceeds cap 16");
  }
  Tables t;
  t.n = n;
  t.full = (u64{1} << n) - 1;
  t.uni = &instance.universe();
  for (std::size_t i = 0; i < n; ++i) {
    t.succ[i] = instance.relation.successors(i).bits();
    t.pred[i] = instance.relation.predecessors(i).bits();
  }
  std::vector<char> member(u64{1} << n, 0);
  std::size_t member_count = 0;
  if (instance.primal) {
    for (const Subset& m : instance.primal->family().members()) {
      member[m.bits()] = 1;
      ++member_count;
    }
  }
  t.member = &member;
  t.member_count = member_count;
  return scan_tables(target, t, [&] { return instance; });
}

inline std::optional<SearchWitness> find_violation_on_instance(const std::string& target_id,
                                                               const Instance& instance) {
  const SearchTarget* t = find_target(target_id);
  if (t == nullptr) throw StructuralError("unknown search target: " + target_id);
  return find_violation_on_instance(*t, instance);
}

/// Systematic bounded search for a violation of one target's claim.
inline CounterexampleReport search_counterexample(const std::string& target_id,
                                                  const SearchBounds& bounds = {}) {
  using namespace search_detail;
  const SearchTarget* target = find_target(target_id);
  if (target == nullptr) throw StructuralError("unknown search target: " + target_id);
  if (bounds.max_universe_size < 1 || bounds.max_universe_size > kSearchSizeCap) {
    throw CapacityError("search universe size must lie in 1.." +
                        std::to_string(kSearchSizeCap));
  }

  CounterexampleReport report;
  report.target = target_id;
  report.bounds = bounds;

  for (std::size_t n = 1; n <= bounds.max_universe_size; ++n) {
    Universe universe(default_labels(n));
    u64 count = u64{1} << n;
    u64 full = count - 1;
    auto antichains = enumerate_antichains(n);
    std::vector<std::vector<char>> bitmaps;
    bitmaps.reserve(antichains.size());
    std::vector<std::size_t> counts;
    counts.reserve(antichains.size());
    for (const auto& seeds : antichains) {
      auto map = closure_bitmap(n, seeds);
      std::size_t c = 0;
      for (char b : map) c += (b != 0);
      bitmaps.push_back(std::move(map));
      counts.push_back(c);
    }

    u64 relation_count = u64{1} << (n * n);
    for (u64 rel_mask = 0; rel_mask < relation_count; ++rel_mask) {
      Tables t;
      t.n = n;
      t.full = full;
      t.uni = &universe;
      for (std::size_t i = 0; i < n; ++i) {
        u64 succ = 0, pred = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (rel_mask & (u64{1} << (i * n + j))) succ |= u64{1} << j;
          if (rel_mask & (u64{1} << (j * n + i))) pred |= u64{1} << j;
        }
        t.succ[i] = succ;
        t.pred[i] = pred;
      }
      for (std::size_t fi = 0; fi < bitmaps.size(); ++fi) {
        if (report.instances_tried >= bounds.max_instances) return report;
        ++report.instances_tried;
        t.member = &bitmaps[fi];
        t.member_count = counts[fi];
        auto materialize = [&]() {
          Relation relation = Relation::from_mask(universe, rel_mask);
          std::vector<Subset> seeds;
          for (u64 s : antichains[fi]) seeds.emplace_back(s, n);
          SetFamily family = SetFamily::downward_closure(n, seeds);
          return Instance{std::move(relation), Primal(family, ValidationLevel::Weak)};
        };
        if (auto wit = scan_tables(*target, t, materialize)) {
          report.witness = std::move(wit);
          return report;
        }
      }
    }
  }
  report.exhausted = true;
  return report;
}

}  // namespace primrose
