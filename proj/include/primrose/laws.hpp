// Law catalog and checker: evaluates the algebraic laws of the five model
// families over every subset (and every ordered subset pair for two-set laws)
// of one instance. Laws are either Derivable (expected to hold whenever their
// precondition gate is met; a Fails verdict is a defect) or NonProperty
// (equality strengthenings and printed claims that provably fail; they exist
// to carry machine-checkable witnesses and are excluded from default runs).
//
// Two-primal laws derive deterministic mate primals from the instance's own
// primal (drop the largest maximal member / adjoin the closure of the first
// non-member / two fixed auxiliary families), so the checker stays a pure
// function of (relation, primal, kinds).
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "primrose/errors.hpp"
#include "primrose/models.hpp"
#include "primrose/primal.hpp"
#include "primrose/rational.hpp"
#include "primrose/relation.hpp"

namespace primrose {

/// Cap for whole-catalog checks; two-set laws cost 4^n per kind.
inline constexpr std::size_t kLawCheckCap = 12;

enum class LawKind { Derivable, NonProperty };

inline std::string to_string(LawKind k) {
  return k == LawKind::Derivable ? "derivable" : "non-property";
}

enum class Verdict { Holds, Fails, Skipped };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "skipped";
  }
}

struct LawWitness {
  std::optional<NeighborhoodKind> kind;
  std::optional<Subset> v;
  std::optional<Subset> w;
  std::string detail;
};

struct LawReport {
  std::string law;
  LawKind law_kind = LawKind::Derivable;
  /// Set for per-kind evaluations; empty for once-evaluated laws
  /// (kind chains compare the kinds against each other).
  std::optional<NeighborhoodKind> kind;
  Verdict verdict = Verdict::Holds;
  std::optional<LawWitness> witness;
  std::string skip_reason;
};

/// Precomputed per-kind approximation tables for one instance, plus lazily
/// derived mate primals. All subsets are raw masks for speed.
class LawEnv {
 public:
  using u64 = std::uint64_t;

  enum class Slot : std::size_t {
    Main = 0,   // the instance's primal
    Sub,        // main minus its largest maximal member
    Super,      // main plus the closure of its first non-member != universe
    Aux1,       // {{}, {first element}} (just {{}} on a 1-element universe)
    Aux2,       // all sets avoiding the first element (strict)
    UnionAux1,  // main united with Aux1
    UnionAux2,  // main united with Aux2
    Reduction,  // {{}}
    kCount
  };

  struct PrimalCols {
    std::vector<u64> l1, u1, l3, u3, l4, u4;
  };
  struct YaoCols {
    std::vector<u64> yl, yu;
  };

  LawEnv(Relation relation, Primal primal)
      : relation_(std::move(relation)), primal_(std::move(primal)) {
    n_ = relation_.universe().size();
    if (n_ > kLawCheckCap) {
      throw CapacityError("law checking enumerates all subset pairs; universe size " +
                          std::to_string(n_) + " exceeds cap " + std::to_string(kLawCheckCap));
    }
    if (primal_.width() != n_) {
      throw StructuralError("primal universe does not match the relation's");
    }
    count_ = u64{1} << n_;
    full_ = count_ - 1;
  }

  const Universe& universe() const { return relation_.universe(); }
  const Relation& relation() const { return relation_; }
  const Primal& primal() const { return primal_; }
  std::size_t n() const { return n_; }
  u64 mask_count() const { return count_; }
  u64 full() const { return full_; }

  bool reflexive() const { return relation_.reflexive(); }
  bool serial(NeighborhoodKind k) const { return relation_.serial(k); }
  bool primal_nonempty() const { return !primal_.degenerate(); }
  bool primal_maximal() const { return primal_.family().size() == count_ - 1; }

  bool slot_available(Slot s) {
    build_family(s);
    return family_state_[index(s)] == 1;
  }

  const SetFamily& family(Slot s) {
    build_family(s);
    if (family_state_[index(s)] != 1) {
      throw StructuralError("mate primal unavailable for this instance");
    }
    return *families_[index(s)];
  }

  bool member(Slot s, u64 mask) { return member_map(s)[mask] != 0; }

  const PrimalCols& cols(Slot s, NeighborhoodKind k) {
    auto& cache = primal_cols_[index(s)][kind_index(k)];
    if (!cache) cache = compute_primal_cols(s, k);
    return *cache;
  }

  const YaoCols& yao_cols(NeighborhoodKind k) {
    auto& cache = yao_cols_[kind_index(k)];
    if (!cache) cache = compute_yao_cols(k);
    return *cache;
  }

  Subset subset(u64 bits) const { return Subset(bits, n_); }
  std::string fmt(u64 bits) const { return universe().format(subset(bits)); }

 private:
  static std::size_t index(Slot s) { return static_cast<std::size_t>(s); }
  static std::size_t kind_index(NeighborhoodKind k) { return static_cast<std::size_t>(k); }

  void build_family(Slot s) {
    std::size_t i = index(s);
    if (family_state_[i] != 0) return;
    family_state_[i] = 2;  // unavailable until proven otherwise
    switch (s) {
      case Slot::Main:
        families_[i] = primal_.family();
        family_state_[i] = 1;
        break;
      case Slot::Sub: {
        const SetFamily& main = primal_.family();
        if (main.empty()) break;
        SetFamily sub = main;
        auto maximal = sub.maximal_members();
        sub.erase(maximal.back());
        families_[i] = std::move(sub);
        family_state_[i] = 1;
        break;
      }
      case Slot::Super: {
        const SetFamily& main = primal_.family();
        std::optional<u64> missing;
        for (u64 m = 0; m < full_; ++m) {
          if (!main.contains(subset(m))) {
            missing = m;
            break;
          }
        }
        if (!missing) break;  // maximal primal: no proper superfamily exists
        SetFamily extra = SetFamily::downward_closure(n_, {subset(*missing)});
        families_[i] = main.united_with(extra);
        family_state_[i] = 1;
        break;
      }
      case Slot::Aux1: {
        if (n_ >= 2) {
          families_[i] = SetFamily::downward_closure(n_, {subset(1)});
        } else {
          families_[i] = SetFamily(n_, {subset(0)});
        }
        family_state_[i] = 1;
        break;
      }
      case Slot::Aux2: {
        SetFamily fam(n_);
        for (u64 m = 0; m <= full_; ++m) {
          if ((m & 1u) == 0) fam.insert(subset(m));
        }
        families_[i] = std::move(fam);
        family_state_[i] = 1;
        break;
      }
      case Slot::UnionAux1:
        families_[i] = primal_.family().united_with(family(Slot::Aux1));
        family_state_[i] = 1;
        break;
      case Slot::UnionAux2:
        families_[i] = primal_.family().united_with(family(Slot::Aux2));
        family_state_[i] = 1;
        break;
      case Slot::Reduction:
        families_[i] = SetFamily(n_, {subset(0)});
        family_state_[i] = 1;
        break;
      default:
        throw StructuralError("unknown mate slot");
    }
  }

  const std::vector<char>& member_map(Slot s) {
    auto& cache = members_[index(s)];
    if (!cache) {
      const SetFamily& fam = family(s);
      std::vector<char> map(count_, 0);
      for (const Subset& m : fam.members()) map[m.bits()] = 1;
      cache = std::move(map);
    }
    return *cache;
  }

  const std::vector<u64>& rows_for(NeighborhoodKind k) {
    auto& cache = rows_[kind_index(k)];
    if (!cache) {
      std::vector<u64> rows(n_);
      auto map = relation_.neighborhood_map(k);
      for (std::size_t i = 0; i < n_; ++i) rows[i] = map[i].bits();
      cache = std::move(rows);
    }
    return *cache;
  }

  PrimalCols compute_primal_cols(Slot s, NeighborhoodKind k) {
    const auto& bm = member_map(s);
    const auto& rows = rows_for(k);
    PrimalCols c;
    c.l1.assign(count_, 0);
    c.u1.assign(count_, 0);
    c.l3.assign(count_, 0);
    c.u3.assign(count_, 0);
    c.l4.assign(count_, 0);
    c.u4.assign(count_, 0);
    for (u64 v = 0; v < count_; ++v) {
      u64 vc = full_ & ~v;
      u64 l1 = 0, u1 = 0, l3 = 0, u4 = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        u64 w = rows[i];
        u64 bit = u64{1} << i;
        if (bm[w & vc]) {
          l1 |= bit;
          l3 |= w;
        }
        if (!bm[w & v]) {
          u1 |= bit;
          u4 |= w;
        }
      }
      c.l1[v] = l1;
      c.u1[v] = u1;
      c.l3[v] = l3;
      c.u4[v] = u4;
    }
    for (u64 v = 0; v < count_; ++v) {
      u64 vc = full_ & ~v;
      c.u3[v] = full_ & ~c.l3[vc];
      c.l4[v] = full_ & ~c.u4[vc];
    }
    return c;
  }

  YaoCols compute_yao_cols(NeighborhoodKind k) {
    const auto& rows = rows_for(k);
    YaoCols c;
    c.yl.assign(count_, 0);
    c.yu.assign(count_, 0);
    for (u64 v = 0; v < count_; ++v) {
      u64 yl = 0, yu = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        u64 w = rows[i];
        u64 bit = u64{1} << i;
        if ((w & ~v) == 0) yl |= bit;
        if ((w & v) != 0) yu |= bit;
      }
      c.yl[v] = yl;
      c.yu[v] = yu;
    }
    return c;
  }

  Relation relation_;
  Primal primal_;
  std::size_t n_ = 0;
  u64 count_ = 0;
  u64 full_ = 0;

  static constexpr std::size_t kSlots = static_cast<std::size_t>(Slot::kCount);
  std::array<int, kSlots> family_state_{};  // 0 unbuilt, 1 available, 2 unavailable
  std::array<std::optional<SetFamily>, kSlots> families_{};
  std::array<std::optional<std::vector<char>>, kSlots> members_{};
  std::array<std::optional<std::vector<u64>>, 4> rows_{};
  std::array<std::array<std::optional<PrimalCols>, 4>, kSlots> primal_cols_{};
  std::array<std::optional<YaoCols>, 4> yao_cols_{};
};

namespace laws_detail {

using u64 = std::uint64_t;

inline bool contained(u64 a, u64 b) { return (a & ~b) == 0; }
inline std::size_t popcount(u64 v) { return static_cast<std::size_t>(std::popcount(v)); }

/// Column access for one model over one primal slot and kind.
struct ModelOps {
  LawEnv* env;
  LawEnv::Slot slot;
  NeighborhoodKind kind;
  ModelId model;

  u64 lower(u64 v) const {
    switch (model) {
      case ModelId::Yao: return env->yao_cols(kind).yl[v];
      case ModelId::N1:
      case ModelId::N2: return env->cols(slot, kind).l1[v];
      case ModelId::N3: return env->cols(slot, kind).l3[v];
      default: return env->cols(slot, kind).l4[v];
    }
  }

  u64 upper(u64 v) const {
    switch (model) {
      case ModelId::Yao: return env->yao_cols(kind).yu[v];
      case ModelId::N1: return env->cols(slot, kind).u1[v];
      case ModelId::N2: return v | env->cols(slot, kind).u1[v];
      case ModelId::N3: return env->cols(slot, kind).u3[v];
      default: return env->cols(slot, kind).u4[v];
    }
  }

  u64 boundary(u64 v) const { return upper(v) & ~lower(v); }

  Rational sigma(u64 v) const {
    if (model == ModelId::Yao) {
      return Rational::ratio(popcount(lower(v)), popcount(upper(v)));
    }
    if (v == 0) return Rational::ratio(1, 1);  // empty target convention
    std::size_t num = popcount(lower(v) & v);
    std::size_t den = (model == ModelId::N2) ? popcount(upper(v)) : popcount(upper(v) | v);
    return Rational::ratio(num, den);
  }
};

inline ModelOps ops(LawEnv& env, LawEnv::Slot slot, NeighborhoodKind k, ModelId m) {
  return ModelOps{&env, slot, k, m};
}

inline std::string lname(ModelId m) { return "lower_" + to_string(m); }
inline std::string uname(ModelId m) { return "upper_" + to_string(m); }
inline std::string bname(ModelId m) { return "boundary_" + to_string(m); }
inline std::string sname(ModelId m) { return "sigma_" + to_string(m); }

/// a <= b under the partial order; unordered counts as satisfied (skipped).
inline bool sigma_le(const Rational& a, const Rational& b) {
  auto c = a <=> b;
  if (c == std::partial_ordering::unordered) return true;
  return c != std::partial_ordering::greater;
}

}  // namespace laws_detail

using LawGate = std::function<std::optional<std::string>(LawEnv&, std::optional<NeighborhoodKind>)>;
using LawCheck = std::function<bool(LawEnv&, std::optional<NeighborhoodKind>, LawWitness&)>;

struct LawDef {
  std::string id;
  LawKind kind = LawKind::Derivable;
  bool per_kind = true;
  bool hidden = false;  // diagnostic hook: only an exact-name selection runs it
  std::string description;
  LawGate gate;
  LawCheck check;
};

namespace laws_detail {

inline std::optional<std::string> gate_none(LawEnv&, std::optional<NeighborhoodKind>) {
  return std::nullopt;
}

inline std::optional<std::string> gate_nonempty(LawEnv& env, std::optional<NeighborhoodKind>) {
  if (!env.primal_nonempty()) return "empty primal";
  return std::nullopt;
}

inline std::optional<std::string> gate_maximal(LawEnv& env, std::optional<NeighborhoodKind>) {
  if (!env.primal_maximal()) return "not maximal";
  return std::nullopt;
}

inline std::optional<std::string> gate_reflexive(LawEnv& env, std::optional<NeighborhoodKind>) {
  if (!env.reflexive()) return "not reflexive";
  return std::nullopt;
}

inline std::optional<std::string> gate_reflexive_nonempty(LawEnv& env,
                                                          std::optional<NeighborhoodKind> k) {
  if (auto r = gate_reflexive(env, k)) return r;
  return gate_nonempty(env, k);
}

inline std::optional<std::string> gate_serial(LawEnv& env, std::optional<NeighborhoodKind> k) {
  if (!k || !env.serial(*k)) return "not serial";
  return std::nullopt;
}

// ---- check builders -------------------------------------------------------

/// lower(universe) = universe and upper(empty) = empty.
inline LawCheck check_edge(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps o = ops(env, LawEnv::Slot::Main, *k, m);
    u64 full = env.full();
    if (o.lower(full) != full) {
      wit.v = env.subset(full);
      wit.detail = lname(m) + "(universe) = " + env.fmt(o.lower(full)) + " is not the universe";
      return false;
    }
    if (o.upper(0) != 0) {
      wit.v = env.subset(0);
      wit.detail = uname(m) + "(empty) = " + env.fmt(o.upper(0)) + " is not empty";
      return false;
    }
    return true;
  };
}

/// V is contained in upper(V) for every V.
inline LawCheck check_extension(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps o = ops(env, LawEnv::Slot::Main, *k, m);
    for (u64 v = 0; v < env.mask_count(); ++v) {
      if (!contained(v, o.upper(v))) {
        wit.v = env.subset(v);
        wit.detail = "V = " + env.fmt(v) + " is not contained in " + uname(m) + "(V) = " +
                     env.fmt(o.upper(v));
        return false;
      }
    }
    return true;
  };
}

/// V in W implies lower(V) in lower(W) and upper(V) in upper(W).
inline LawCheck check_monotone(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps o = ops(env, LawEnv::Slot::Main, *k, m);
    for (u64 v = 0; v < env.mask_count(); ++v) {
      for (u64 w = 0; w < env.mask_count(); ++w) {
        if (!contained(v, w)) continue;
        if (!contained(o.lower(v), o.lower(w))) {
          wit.v = env.subset(v);
          wit.w = env.subset(w);
          wit.detail = lname(m) + "(V) = " + env.fmt(o.lower(v)) + " is not contained in " +
                       lname(m) + "(W) = " + env.fmt(o.lower(w));
          return false;
        }
        if (!contained(o.upper(v), o.upper(w))) {
          wit.v = env.subset(v);
          wit.w = env.subset(w);
          wit.detail = uname(m) + "(V) = " + env.fmt(o.upper(v)) + " is not contained in " +
                       uname(m) + "(W) = " + env.fmt(o.upper(w));
          return false;
        }
      }
    }
    return true;
  };
}

/// lower(V)|lower(W) in lower(V|W), and the same for upper.
inline LawCheck check_union_superset(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps o = ops(env, LawEnv::Slot::Main, *k, m);
    for (u64 v = 0; v < env.mask_count(); ++v) {
      for (u64 w = 0; w < env.mask_count(); ++w) {
        if (!contained(o.lower(v) | o.lower(w), o.lower(v | w))) {
          wit.v = env.subset(v);
          wit.w = env.subset(w);
          wit.detail = lname(m) + "(V)|" + lname(m) + "(W) = " +
                       env.fmt(o.lower(v) | o.lower(w)) + " is not contained in " + lname(m) +
                       "(V|W) = " + env.fmt(o.lower(v | w));
          return false;
        }
        if (!contained(o.upper(v) | o.upper(w), o.upper(v | w))) {
          wit.v = env.subset(v);
          wit.w = env.subset(w);
          wit.detail = uname(m) + "(V)|" + uname(m) + "(W) = " +
                       env.fmt(o.upper(v) | o.upper(w)) + " is not contained in " + uname(m) +
                       "(V|W) = " + env.fmt(o.upper(v | w));
          return false;
        }
      }
    }
    return true;
  };
}

/// lower(V&W) in lower(V)&lower(W), and the same for upper.
inline LawCheck check_intersection_subset(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps o = ops(env, LawEnv::Slot::Main, *k, m);
    for (u64 v = 0; v < env.mask_count(); ++v) {
      for (u64 w = 0; w < env.mask_count(); ++w) {
        if (!contained(o.lower(v & w), o.lower(v) & o.lower(w))) {
          wit.v = env.subset(v);
          wit.w = env.subset(w);
          wit.detail = lname(m) + "(V&W) = " + env.fmt(o.lower(v & w)) +
                       " is not contained in " + lname(m) + "(V)&" + lname(m) + "(W) = " +
                       env.fmt(o.lower(v) & o.lower(w));
          return false;
        }
        if (!contained(o.upper(v & w), o.upper(v) & o.upper(w))) {
          wit.v = env.subset(v);
          wit.w = env.subset(w);
          wit.detail = uname(m) + "(V&W) = " + env.fmt(o.upper(v & w)) +
                       " is not contained in " + uname(m) + "(V)&" + uname(m) + "(W) = " +
                       env.fmt(o.upper(v) & o.upper(w));
          return false;
        }
      }
    }
    return true;
  };
}

/// Equality strengthenings of the two laws above (non-properties).
inline LawCheck check_union_equality(ModelId m, bool on_lower) {
  return [m, on_lower](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps o = ops(env, LawEnv::Slot::Main, *k, m);
    auto get = [&](u64 v) { return on_lower ? o.lower(v) : o.upper(v); };
    std::string name = on_lower ? lname(m) : uname(m);
    for (u64 v = 0; v < env.mask_count(); ++v) {
      for (u64 w = 0; w < env.mask_count(); ++w) {
        if (get(v | w) != (get(v) | get(w))) {
          wit.v = env.subset(v);
          wit.w = env.subset(w);
          wit.detail = name + "(V|W) = " + env.fmt(get(v | w)) + " differs from " + name +
                       "(V)|" + name + "(W) = " + env.fmt(get(v) | get(w));
          return false;
        }
      }
    }
    return true;
  };
}

inline LawCheck check_intersection_equality(ModelId m, bool on_lower) {
  return [m, on_lower](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps o = ops(env, LawEnv::Slot::Main, *k, m);
    auto get = [&](u64 v) { return on_lower ? o.lower(v) : o.upper(v); };
    std::string name = on_lower ? lname(m) : uname(m);
    for (u64 v = 0; v < env.mask_count(); ++v) {
      for (u64 w = 0; w < env.mask_count(); ++w) {
        if (get(v & w) != (get(v) & get(w))) {
          wit.v = env.subset(v);
          wit.w = env.subset(w);
          wit.detail = name + "(V&W) = " + env.fmt(get(v & w)) + " differs from " + name +
                       "(V)&" + name + "(W) = " + env.fmt(get(v) & get(w));
          return false;
        }
      }
    }
    return true;
  };
}

/// lower(V) = complement(upper(V')) and, when both_directions, the dual.
inline LawCheck check_duality(ModelId m, bool both_directions) {
  return [m, both_directions](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps o = ops(env, LawEnv::Slot::Main, *k, m);
    u64 full = env.full();
    for (u64 v = 0; v < env.mask_count(); ++v) {
      u64 vc = full & ~v;
      if (o.lower(v) != (full & ~o.upper(vc))) {
        wit.v = env.subset(v);
        wit.detail = lname(m) + "(V) = " + env.fmt(o.lower(v)) +
                     " differs from the complement of " + uname(m) + "(V') = " +
                     env.fmt(full & ~o.upper(vc));
        return false;
      }
      if (both_directions && o.upper(v) != (full & ~o.lower(vc))) {
        wit.v = env.subset(v);
        wit.detail = uname(m) + "(V) = " + env.fmt(o.upper(v)) +
                     " differs from the complement of " + lname(m) + "(V') = " +
                     env.fmt(full & ~o.lower(vc));
        return false;
      }
    }
    return true;
  };
}

/// Maximal-primal degeneracies, per model (gate: primal is maximal).
inline LawCheck check_maximal_degeneracy(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps o = ops(env, LawEnv::Slot::Main, *k, m);
    u64 full = env.full();
    for (u64 v = 0; v < env.mask_count(); ++v) {
      if (m == ModelId::N2) {
        if (o.upper(v) != v) {
          wit.v = env.subset(v);
          wit.detail = uname(m) + "(V) = " + env.fmt(o.upper(v)) + " differs from V";
          return false;
        }
      } else if (v != full && o.upper(v) != 0) {
        wit.v = env.subset(v);
        wit.detail = uname(m) + "(V) = " + env.fmt(o.upper(v)) + " is not empty";
        return false;
      }
      if (v != 0 && o.lower(v) != full) {
        wit.v = env.subset(v);
        wit.detail = lname(m) + "(V) = " + env.fmt(o.lower(v)) + " is not the universe";
        return false;
      }
    }
    return true;
  };
}

/// The printed (incorrect) maximal-primal claim: lower(V) empty for V != universe.
inline LawCheck check_maximal_lower_empty(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps o = ops(env, LawEnv::Slot::Main, *k, m);
    for (u64 v = 0; v < env.mask_count(); ++v) {
      if (v == env.full()) continue;
      if (o.lower(v) != 0) {
        wit.v = env.subset(v);
        wit.detail = lname(m) + "(V) = " + env.fmt(o.lower(v)) + " is not empty";
        return false;
      }
    }
    return true;
  };
}

/// V' in the primal forces lower(V) = universe.
inline LawCheck check_complement_member_lower(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps o = ops(env, LawEnv::Slot::Main, *k, m);
    u64 full = env.full();
    for (u64 v = 0; v < env.mask_count(); ++v) {
      if (!env.member(LawEnv::Slot::Main, full & ~v)) continue;
      if (o.lower(v) != full) {
        wit.v = env.subset(v);
        wit.detail = "V' is a member but " + lname(m) + "(V) = " + env.fmt(o.lower(v)) +
                     " is not the universe";
        return false;
      }
    }
    return true;
  };
}

/// V in the primal forces upper1(V) empty / upper2(V) = V.
inline LawCheck check_member_upper(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps o = ops(env, LawEnv::Slot::Main, *k, m);
    for (u64 v = 0; v < env.mask_count(); ++v) {
      if (!env.member(LawEnv::Slot::Main, v)) continue;
      u64 expect = (m == ModelId::N2) ? v : 0;
      if (o.upper(v) != expect) {
        wit.v = env.subset(v);
        wit.detail = "V is a member but " + uname(m) + "(V) = " + env.fmt(o.upper(v)) +
                     (m == ModelId::N2 ? " differs from V" : " is not empty");
        return false;
      }
    }
    return true;
  };
}

/// Growing the primal grows lower and shrinks upper.
inline LawCheck check_primal_monotone(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps main = ops(env, LawEnv::Slot::Main, *k, m);
    auto compare = [&](LawEnv::Slot small_slot, LawEnv::Slot big_slot, const char* tag,
                       LawWitness& w2) {
      ModelOps small = ops(env, small_slot, *k, m);
      ModelOps big = ops(env, big_slot, *k, m);
      for (u64 v = 0; v < env.mask_count(); ++v) {
        if (!contained(small.lower(v), big.lower(v))) {
          w2.v = env.subset(v);
          w2.detail = std::string(tag) + ": " + lname(m) + " under the smaller primal = " +
                      env.fmt(small.lower(v)) + " is not contained in " +
                      env.fmt(big.lower(v));
          return false;
        }
        if (!contained(big.upper(v), small.upper(v))) {
          w2.v = env.subset(v);
          w2.detail = std::string(tag) + ": " + uname(m) + " under the larger primal = " +
                      env.fmt(big.upper(v)) + " is not contained in " +
                      env.fmt(small.upper(v));
          return false;
        }
      }
      return true;
    };
    if (env.slot_available(LawEnv::Slot::Sub)) {
      if (!compare(LawEnv::Slot::Sub, LawEnv::Slot::Main, "subfamily", wit)) return false;
    }
    if (env.slot_available(LawEnv::Slot::Super)) {
      if (!compare(LawEnv::Slot::Main, LawEnv::Slot::Super, "superfamily", wit)) return false;
    }
    return true;
  };
}

/// Primal-union identities; for N4 only the derivable one-sided containments.
inline LawCheck check_primal_union(ModelId m, bool exact) {
  return [m, exact](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    struct Pair {
      LawEnv::Slot aux, unioned;
      const char* tag;
    };
    static constexpr Pair pairs[] = {
        {LawEnv::Slot::Aux1, LawEnv::Slot::UnionAux1, "auxiliary family 1"},
        {LawEnv::Slot::Aux2, LawEnv::Slot::UnionAux2, "auxiliary family 2"},
    };
    for (const auto& p : pairs) {
      ModelOps main = ops(env, LawEnv::Slot::Main, *k, m);
      ModelOps aux = ops(env, p.aux, *k, m);
      ModelOps uni = ops(env, p.unioned, *k, m);
      for (u64 v = 0; v < env.mask_count(); ++v) {
        u64 lower_join = main.lower(v) | aux.lower(v);
        u64 upper_meet = main.upper(v) & aux.upper(v);
        bool lower_ok = exact ? (uni.lower(v) == lower_join) : contained(lower_join, uni.lower(v));
        if (!lower_ok) {
          wit.v = env.subset(v);
          wit.detail = std::string(p.tag) + ": " + lname(m) + " under the union = " +
                       env.fmt(uni.lower(v)) + (exact ? " differs from " : " does not contain ") +
                       "the join " + env.fmt(lower_join);
          return false;
        }
        bool upper_ok = exact ? (uni.upper(v) == upper_meet) : contained(uni.upper(v), upper_meet);
        if (!upper_ok) {
          wit.v = env.subset(v);
          wit.detail = std::string(p.tag) + ": " + uname(m) + " under the union = " +
                       env.fmt(uni.upper(v)) +
                       (exact ? " differs from " : " is not contained in ") + "the meet " +
                       env.fmt(upper_meet);
          return false;
        }
      }
    }
    return true;
  };
}

/// lower_u in lower_a/lower_b in lower_i, reversed for upper (once-evaluated).
inline LawCheck check_kind_chain(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind>, LawWitness& wit) {
    ModelOps a = ops(env, LawEnv::Slot::Main, NeighborhoodKind::A, m);
    ModelOps b = ops(env, LawEnv::Slot::Main, NeighborhoodKind::B, m);
    ModelOps i = ops(env, LawEnv::Slot::Main, NeighborhoodKind::I, m);
    ModelOps u = ops(env, LawEnv::Slot::Main, NeighborhoodKind::U, m);
    struct Step {
      const ModelOps *from, *to;
      const char *fk, *tk;
    };
    const Step lower_steps[] = {
        {&u, &a, "u", "a"}, {&u, &b, "u", "b"}, {&a, &i, "a", "i"}, {&b, &i, "b", "i"}};
    for (u64 v = 0; v < env.mask_count(); ++v) {
      for (const auto& s : lower_steps) {
        if (!contained(s.from->lower(v), s.to->lower(v))) {
          wit.v = env.subset(v);
          wit.detail = lname(m) + " kind " + s.fk + " = " + env.fmt(s.from->lower(v)) +
                       " is not contained in kind " + s.tk + " = " + env.fmt(s.to->lower(v));
          return false;
        }
        // upper chains run in the reverse direction
        if (!contained(s.to->upper(v), s.from->upper(v))) {
          wit.v = env.subset(v);
          wit.detail = uname(m) + " kind " + s.tk + " = " + env.fmt(s.to->upper(v)) +
                       " is not contained in kind " + s.fk + " = " + env.fmt(s.from->upper(v));
          return false;
        }
      }
    }
    return true;
  };
}

/// boundary_i in boundary_a/boundary_b in boundary_u (once-evaluated).
inline LawCheck check_boundary_chain(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind>, LawWitness& wit) {
    ModelOps a = ops(env, LawEnv::Slot::Main, NeighborhoodKind::A, m);
    ModelOps b = ops(env, LawEnv::Slot::Main, NeighborhoodKind::B, m);
    ModelOps i = ops(env, LawEnv::Slot::Main, NeighborhoodKind::I, m);
    ModelOps u = ops(env, LawEnv::Slot::Main, NeighborhoodKind::U, m);
    struct Step {
      const ModelOps *from, *to;
      const char *fk, *tk;
    };
    const Step steps[] = {
        {&i, &a, "i", "a"}, {&i, &b, "i", "b"}, {&a, &u, "a", "u"}, {&b, &u, "b", "u"}};
    for (u64 v = 0; v < env.mask_count(); ++v) {
      for (const auto& s : steps) {
        if (!contained(s.from->boundary(v), s.to->boundary(v))) {
          wit.v = env.subset(v);
          wit.detail = bname(m) + " kind " + s.fk + " = " + env.fmt(s.from->boundary(v)) +
                       " is not contained in kind " + s.tk + " = " + env.fmt(s.to->boundary(v));
          return false;
        }
      }
    }
    return true;
  };
}

/// sigma_u <= sigma_a/sigma_b <= sigma_i (once-evaluated; unordered skipped).
inline LawCheck check_accuracy_chain(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind>, LawWitness& wit) {
    ModelOps a = ops(env, LawEnv::Slot::Main, NeighborhoodKind::A, m);
    ModelOps b = ops(env, LawEnv::Slot::Main, NeighborhoodKind::B, m);
    ModelOps i = ops(env, LawEnv::Slot::Main, NeighborhoodKind::I, m);
    ModelOps u = ops(env, LawEnv::Slot::Main, NeighborhoodKind::U, m);
    struct Step {
      const ModelOps *lo, *hi;
      const char *lk, *hk;
    };
    const Step steps[] = {
        {&u, &a, "u", "a"}, {&u, &b, "u", "b"}, {&a, &i, "a", "i"}, {&b, &i, "b", "i"}};
    for (u64 v = 0; v < env.mask_count(); ++v) {
      for (const auto& s : steps) {
        Rational lo = s.lo->sigma(v);
        Rational hi = s.hi->sigma(v);
        if (!sigma_le(lo, hi)) {
          wit.v = env.subset(v);
          wit.detail = sname(m) + " kind " + s.lk + " = " + lo.to_string() + " exceeds kind " +
                       s.hk + " = " + hi.to_string();
          return false;
        }
      }
    }
    return true;
  };
}

/// Larger primal never enlarges the boundary.
inline LawCheck check_boundary_primal_compare(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps main = ops(env, LawEnv::Slot::Main, *k, m);
    if (env.slot_available(LawEnv::Slot::Sub)) {
      ModelOps sub = ops(env, LawEnv::Slot::Sub, *k, m);
      for (u64 v = 0; v < env.mask_count(); ++v) {
        if (!contained(main.boundary(v), sub.boundary(v))) {
          wit.v = env.subset(v);
          wit.detail = bname(m) + " under the primal = " + env.fmt(main.boundary(v)) +
                       " is not contained in the subfamily boundary " + env.fmt(sub.boundary(v));
          return false;
        }
      }
    }
    if (env.slot_available(LawEnv::Slot::Super)) {
      ModelOps super = ops(env, LawEnv::Slot::Super, *k, m);
      for (u64 v = 0; v < env.mask_count(); ++v) {
        if (!contained(super.boundary(v), main.boundary(v))) {
          wit.v = env.subset(v);
          wit.detail = bname(m) + " under the superfamily = " + env.fmt(super.boundary(v)) +
                       " is not contained in the primal boundary " + env.fmt(main.boundary(v));
          return false;
        }
      }
    }
    return true;
  };
}

/// Larger primal never lowers the accuracy.
inline LawCheck check_accuracy_primal_compare(ModelId m) {
  return [m](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps main = ops(env, LawEnv::Slot::Main, *k, m);
    if (env.slot_available(LawEnv::Slot::Sub)) {
      ModelOps sub = ops(env, LawEnv::Slot::Sub, *k, m);
      for (u64 v = 0; v < env.mask_count(); ++v) {
        if (!sigma_le(sub.sigma(v), main.sigma(v))) {
          wit.v = env.subset(v);
          wit.detail = sname(m) + " under the subfamily = " + sub.sigma(v).to_string() +
                       " exceeds the primal accuracy " + main.sigma(v).to_string();
          return false;
        }
      }
    }
    if (env.slot_available(LawEnv::Slot::Super)) {
      ModelOps super = ops(env, LawEnv::Slot::Super, *k, m);
      for (u64 v = 0; v < env.mask_count(); ++v) {
        if (!sigma_le(main.sigma(v), super.sigma(v))) {
          wit.v = env.subset(v);
          wit.detail = sname(m) + " under the primal = " + main.sigma(v).to_string() +
                       " exceeds the superfamily accuracy " + super.sigma(v).to_string();
          return false;
        }
      }
    }
    return true;
  };
}

/// Three-model containment chain lower(first) in lower(mid) in lower(last),
/// with the reversed chain on upper when reversed_upper holds.
inline LawCheck check_model_chain_lower(ModelId first, ModelId mid, ModelId last) {
  return [first, mid, last](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps a = ops(env, LawEnv::Slot::Main, *k, first);
    ModelOps b = ops(env, LawEnv::Slot::Main, *k, mid);
    ModelOps c = ops(env, LawEnv::Slot::Main, *k, last);
    for (u64 v = 0; v < env.mask_count(); ++v) {
      if (!contained(a.lower(v), b.lower(v))) {
        wit.v = env.subset(v);
        wit.detail = lname(first) + "(V) = " + env.fmt(a.lower(v)) + " is not contained in " +
                     lname(mid) + "(V) = " + env.fmt(b.lower(v));
        return false;
      }
      if (!contained(b.lower(v), c.lower(v))) {
        wit.v = env.subset(v);
        wit.detail = lname(mid) + "(V) = " + env.fmt(b.lower(v)) + " is not contained in " +
                     lname(last) + "(V) = " + env.fmt(c.lower(v));
        return false;
      }
    }
    return true;
  };
}

inline LawCheck check_model_chain_upper(ModelId first, ModelId mid, ModelId last) {
  return [first, mid, last](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps a = ops(env, LawEnv::Slot::Main, *k, first);
    ModelOps b = ops(env, LawEnv::Slot::Main, *k, mid);
    ModelOps c = ops(env, LawEnv::Slot::Main, *k, last);
    for (u64 v = 0; v < env.mask_count(); ++v) {
      if (!contained(a.upper(v), b.upper(v))) {
        wit.v = env.subset(v);
        wit.detail = uname(first) + "(V) = " + env.fmt(a.upper(v)) + " is not contained in " +
                     uname(mid) + "(V) = " + env.fmt(b.upper(v));
        return false;
      }
      if (!contained(b.upper(v), c.upper(v))) {
        wit.v = env.subset(v);
        wit.detail = uname(mid) + "(V) = " + env.fmt(b.upper(v)) + " is not contained in " +
                     uname(last) + "(V) = " + env.fmt(c.upper(v));
        return false;
      }
    }
    return true;
  };
}

inline LawCheck check_model_chain_boundary(ModelId first, ModelId mid, ModelId last) {
  return [first, mid, last](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps a = ops(env, LawEnv::Slot::Main, *k, first);
    ModelOps b = ops(env, LawEnv::Slot::Main, *k, mid);
    ModelOps c = ops(env, LawEnv::Slot::Main, *k, last);
    for (u64 v = 0; v < env.mask_count(); ++v) {
      if (!contained(a.boundary(v), b.boundary(v))) {
        wit.v = env.subset(v);
        wit.detail = bname(first) + "(V) = " + env.fmt(a.boundary(v)) +
                     " is not contained in " + bname(mid) + "(V) = " + env.fmt(b.boundary(v));
        return false;
      }
      if (!contained(b.boundary(v), c.boundary(v))) {
        wit.v = env.subset(v);
        wit.detail = bname(mid) + "(V) = " + env.fmt(b.boundary(v)) + " is not contained in " +
                     bname(last) + "(V) = " + env.fmt(c.boundary(v));
        return false;
      }
    }
    return true;
  };
}

inline LawCheck check_model_chain_accuracy(ModelId lo, ModelId mid, ModelId hi) {
  return [lo, mid, hi](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
    ModelOps a = ops(env, LawEnv::Slot::Main, *k, lo);
    ModelOps b = ops(env, LawEnv::Slot::Main, *k, mid);
    ModelOps c = ops(env, LawEnv::Slot::Main, *k, hi);
    for (u64 v = 0; v < env.mask_count(); ++v) {
      if (!sigma_le(a.sigma(v), b.sigma(v))) {
        wit.v = env.subset(v);
        wit.detail = sname(lo) + "(V) = " + a.sigma(v).to_string() + " exceeds " + sname(mid) +
                     "(V) = " + b.sigma(v).to_string();
        return false;
      }
      if (!sigma_le(b.sigma(v), c.sigma(v))) {
        wit.v = env.subset(v);
        wit.detail = sname(mid) + "(V) = " + b.sigma(v).to_string() + " exceeds " + sname(hi) +
                     "(V) = " + c.sigma(v).to_string();
        return false;
      }
    }
    return true;
  };
}

}  // namespace laws_detail

/// The full catalog in report order: derivable laws, then non-properties,
/// then the hidden diagnostic hook.
inline const std::vector<LawDef>& law_catalog() {
  using namespace laws_detail;
  using Slot = LawEnv::Slot;
  using u64 = LawEnv::u64;

  static const std::vector<LawDef> catalog = [] {
    std::vector<LawDef> laws;
    auto add = [&](std::string id, LawKind kind, bool per_kind, std::string description,
                   LawGate gate, LawCheck check) {
      laws.push_back(LawDef{std::move(id), kind, per_kind, false, std::move(description),
                            std::move(gate), std::move(check)});
    };
    const auto D = LawKind::Derivable;
    const auto N = LawKind::NonProperty;

    // ---- first lower/upper family -----------------------------------------
    add("P3.1a-edge", D, true, "lower1(universe) = universe and upper1(empty) = empty",
        gate_nonempty, check_edge(ModelId::N1));
    add("P3.1b-monotone", D, true, "V in W implies lower1(V) in lower1(W), upper1(V) in upper1(W)",
        gate_none, check_monotone(ModelId::N1));
    add("P3.1c-union-superset", D, true,
        "lower1/upper1 of a union contain the union of the parts", gate_none,
        check_union_superset(ModelId::N1));
    add("P3.1d-intersection-subset", D, true,
        "lower1/upper1 of an intersection are contained in the intersection of the parts",
        gate_none, check_intersection_subset(ModelId::N1));
    add("P3.1e-duality", D, true, "lower1(V) equals the complement of upper1(V')", gate_none,
        check_duality(ModelId::N1, false));
    add("P3.2a-maximal-degeneracy", D, true,
        "maximal primal: upper1(V) empty for V != universe; lower1(V) = universe for V nonempty",
        gate_maximal, check_maximal_degeneracy(ModelId::N1));
    add("P3.2b-complement-member-lower", D, true, "V' in the primal forces lower1(V) = universe",
        gate_none, check_complement_member_lower(ModelId::N1));
    add("P3.2c-member-empty-upper", D, true, "V in the primal forces upper1(V) = empty", gate_none,
        check_member_upper(ModelId::N1));
    add("P3.2d-primal-monotone", D, true,
        "growing the primal grows lower1 and shrinks upper1 (derived mates)", gate_none,
        check_primal_monotone(ModelId::N1));
    add("P3.2e-primal-union", D, true,
        "under a primal union, lower1 is the join and upper1 the meet of the parts", gate_none,
        check_primal_union(ModelId::N1, true));
    add("P3.3-kind-chain", D, false,
        "lower1 grows and upper1 shrinks along kinds u -> a/b -> i", gate_none,
        check_kind_chain(ModelId::N1));
    add("C3.1-boundary-chain", D, false, "boundary1 grows along kinds i -> a/b -> u", gate_none,
        check_boundary_chain(ModelId::N1));
    add("C3.2-accuracy-chain", D, false, "sigma1 grows along kinds u -> a/b -> i", gate_none,
        check_accuracy_chain(ModelId::N1));
    add("C3.3a-boundary-primal-compare", D, true, "a larger primal never enlarges boundary1",
        gate_none, check_boundary_primal_compare(ModelId::N1));
    add("C3.3b-accuracy-primal-compare", D, true, "a larger primal never lowers sigma1", gate_none,
        check_accuracy_primal_compare(ModelId::N1));

    // ---- second lower/upper family -----------------------------------------
    add("P3.4a-extension", D, true, "V is contained in upper2(V)", gate_none,
        check_extension(ModelId::N2));
    add("P3.4b-edge", D, true, "lower2(universe) = universe and upper2(empty) = empty",
        gate_nonempty, check_edge(ModelId::N2));
    add("P3.4c-monotone", D, true, "V in W implies lower2(V) in lower2(W), upper2(V) in upper2(W)",
        gate_none, check_monotone(ModelId::N2));
    add("P3.4d-union-superset", D, true,
        "lower2/upper2 of a union contain the union of the parts", gate_none,
        check_union_superset(ModelId::N2));
    add("P3.4e-intersection-subset", D, true,
        "lower2/upper2 of an intersection are contained in the intersection of the parts",
        gate_none, check_intersection_subset(ModelId::N2));
    add("P3.5a-maximal-degeneracy", D, true,
        "maximal primal: upper2(V) = V always; lower2(V) = universe for V nonempty", gate_maximal,
        check_maximal_degeneracy(ModelId::N2));
    add("P3.5b-complement-member-lower", D, true, "V' in the primal forces lower2(V) = universe",
        gate_none, check_complement_member_lower(ModelId::N2));
    add("P3.5c-member-upper-is-v", D, true, "V in the primal forces upper2(V) = V", gate_none,
        check_member_upper(ModelId::N2));
    add("P3.5d-primal-monotone", D, true,
        "growing the primal grows lower2 and shrinks upper2 (derived mates)", gate_none,
        check_primal_monotone(ModelId::N2));
    add("P3.5e-primal-union", D, true,
        "under a primal union, lower2 is the join and upper2 the meet of the parts", gate_none,
        check_primal_union(ModelId::N2, true));
    add("P3.6-kind-chain", D, false,
        "lower2 grows and upper2 shrinks along kinds u -> a/b -> i", gate_none,
        check_kind_chain(ModelId::N2));
    add("C3.4-boundary-chain", D, false, "boundary2 grows along kinds i -> a/b -> u", gate_none,
        check_boundary_chain(ModelId::N2));
    add("C3.5-accuracy-chain", D, false, "sigma2 grows along kinds u -> a/b -> i", gate_none,
        check_accuracy_chain(ModelId::N2));
    add("C3.6a-boundary-primal-compare", D, true, "a larger primal never enlarges boundary2",
        gate_none, check_boundary_primal_compare(ModelId::N2));
    add("C3.6b-accuracy-primal-compare", D, true, "a larger primal never lowers sigma2", gate_none,
        check_accuracy_primal_compare(ModelId::N2));

    // ---- third lower/upper family (no kind chains: they fail; see targets) --
    add("P3.7a-monotone", D, true, "V in W implies lower3(V) in lower3(W), upper3(V) in upper3(W)",
        gate_none, check_monotone(ModelId::N3));
    add("P3.7b-union-superset", D, true,
        "lower3/upper3 of a union contain the union of the parts", gate_none,
        check_union_superset(ModelId::N3));
    add("P3.7c-intersection-subset", D, true,
        "lower3/upper3 of an intersection are contained in the intersection of the parts",
        gate_none, check_intersection_subset(ModelId::N3));
    add("P3.7d-duality", D, true, "lower3 and upper3 are complement-duals in both directions",
        gate_none, check_duality(ModelId::N3, true));
    add("P3.8a-primal-monotone", D, true,
        "growing the primal grows lower3 and shrinks upper3 (derived mates)", gate_none,
        check_primal_monotone(ModelId::N3));
    add("P3.8b-primal-union", D, true,
        "under a primal union, lower3 is the join and upper3 the meet of the parts", gate_none,
        check_primal_union(ModelId::N3, true));
    add("C3.9a-boundary-primal-compare", D, true, "a larger primal never enlarges boundary3",
        gate_none, check_boundary_primal_compare(ModelId::N3));
    add("C3.9b-accuracy-primal-compare", D, true, "a larger primal never lowers sigma3", gate_none,
        check_accuracy_primal_compare(ModelId::N3));

    // ---- fourth lower/upper family -----------------------------------------
    add("P3.10a-edge", D, true, "lower4(universe) = universe and upper4(empty) = empty",
        gate_nonempty, check_edge(ModelId::N4));
    add("P3.10b-monotone", D, true,
        "V in W implies lower4(V) in lower4(W), upper4(V) in upper4(W)", gate_none,
        check_monotone(ModelId::N4));
    add("P3.10c-union-superset", D, true,
        "lower4/upper4 of a union contain the union of the parts", gate_none,
        check_union_superset(ModelId::N4));
    add("P3.10d-intersection-subset", D, true,
        "lower4/upper4 of an intersection are contained in the intersection of the parts",
        gate_none, check_intersection_subset(ModelId::N4));
    add("P3.10e-duality", D, true, "lower4 and upper4 are complement-duals in both directions",
        gate_none, check_duality(ModelId::N4, true));
    add("P3.11a-maximal-degeneracy", D, true,
        "maximal primal: upper4(V) empty for V != universe; lower4(V) = universe for V nonempty",
        gate_maximal, check_maximal_degeneracy(ModelId::N4));
    add("P3.11b-primal-monotone", D, true,
        "growing the primal grows lower4 and shrinks upper4 (derived mates)", gate_none,
        check_primal_monotone(ModelId::N4));
    add("P3.11c-primal-union-lower", D, true,
        "under a primal union, lower4 contains the join and upper4 is contained in the meet "
        "(one-sided only)",
        gate_none, check_primal_union(ModelId::N4, false));
    add("P3.12-kind-chain", D, false,
        "lower4 grows and upper4 shrinks along kinds u -> a/b -> i", gate_none,
        check_kind_chain(ModelId::N4));
    add("C3.10-boundary-chain", D, false, "boundary4 grows along kinds i -> a/b -> u", gate_none,
        check_boundary_chain(ModelId::N4));
    add("C3.11-accuracy-chain", D, false, "sigma4 grows along kinds u -> a/b -> i", gate_none,
        check_accuracy_chain(ModelId::N4));
    add("C3.12a-boundary-primal-compare", D, true, "a larger primal never enlarges boundary4",
        gate_none, check_boundary_primal_compare(ModelId::N4));
    add("C3.12b-accuracy-primal-compare", D, true, "a larger primal never lowers sigma4",
        gate_none, check_accuracy_primal_compare(ModelId::N4));

    // ---- cross-model ---------------------------------------------------------
    add("T4.1-equal-lower", D, true, "lower2 coincides with lower1", gate_none,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          ModelOps m1 = ops(env, Slot::Main, *k, ModelId::N1);
          ModelOps m2 = ops(env, Slot::Main, *k, ModelId::N2);
          for (u64 v = 0; v < env.mask_count(); ++v) {
            if (m1.lower(v) != m2.lower(v)) {
              wit.v = env.subset(v);
              wit.detail = "lower_n2(V) = " + env.fmt(m2.lower(v)) + " differs from lower_n1(V) = " +
                           env.fmt(m1.lower(v));
              return false;
            }
          }
          return true;
        });
    add("T4.1-chain-upper", D, true, "upper1 is contained in upper2", gate_none,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          ModelOps m1 = ops(env, Slot::Main, *k, ModelId::N1);
          ModelOps m2 = ops(env, Slot::Main, *k, ModelId::N2);
          for (u64 v = 0; v < env.mask_count(); ++v) {
            if (!contained(m1.upper(v), m2.upper(v))) {
              wit.v = env.subset(v);
              wit.detail = "upper_n1(V) = " + env.fmt(m1.upper(v)) +
                           " is not contained in upper_n2(V) = " + env.fmt(m2.upper(v));
              return false;
            }
          }
          return true;
        });
    add("T4.1-chain-boundary", D, true, "boundary1 is contained in boundary2", gate_none,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          ModelOps m1 = ops(env, Slot::Main, *k, ModelId::N1);
          ModelOps m2 = ops(env, Slot::Main, *k, ModelId::N2);
          for (u64 v = 0; v < env.mask_count(); ++v) {
            if (!contained(m1.boundary(v), m2.boundary(v))) {
              wit.v = env.subset(v);
              wit.detail = "boundary_n1(V) = " + env.fmt(m1.boundary(v)) +
                           " is not contained in boundary_n2(V) = " + env.fmt(m2.boundary(v));
              return false;
            }
          }
          return true;
        });
    add("T4.1-accuracy-equal", D, true, "sigma1 equals sigma2", gate_none,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          ModelOps m1 = ops(env, Slot::Main, *k, ModelId::N1);
          ModelOps m2 = ops(env, Slot::Main, *k, ModelId::N2);
          for (u64 v = 0; v < env.mask_count(); ++v) {
            if (!(m1.sigma(v) == m2.sigma(v))) {
              wit.v = env.subset(v);
              wit.detail = "sigma_n1(V) = " + m1.sigma(v).to_string() +
                           " differs from sigma_n2(V) = " + m2.sigma(v).to_string();
              return false;
            }
          }
          return true;
        });
    add("T4.2-chain-lower", D, true, "reflexive: lower2 in lower1 in lower3", gate_reflexive,
        check_model_chain_lower(ModelId::N2, ModelId::N1, ModelId::N3));
    add("T4.2-chain-upper", D, true, "reflexive: upper3 in upper1 in upper2", gate_reflexive,
        check_model_chain_upper(ModelId::N3, ModelId::N1, ModelId::N2));
    add("T4.2-chain-boundary", D, true, "reflexive: boundary3 in boundary1 in boundary2",
        gate_reflexive, check_model_chain_boundary(ModelId::N3, ModelId::N1, ModelId::N2));
    add("T4.2-accuracy-chain", D, true, "reflexive: sigma2 <= sigma1 <= sigma3", gate_reflexive,
        check_model_chain_accuracy(ModelId::N2, ModelId::N1, ModelId::N3));
    add("T4.3-chain-lower", D, true, "reflexive: lower4 in lower1 in lower3", gate_reflexive,
        check_model_chain_lower(ModelId::N4, ModelId::N1, ModelId::N3));
    add("T4.3-chain-upper", D, true, "reflexive: upper3 in upper1 in upper4", gate_reflexive,
        check_model_chain_upper(ModelId::N3, ModelId::N1, ModelId::N4));
    add("T4.3-chain-boundary", D, true, "reflexive: boundary3 in boundary1 in boundary4",
        gate_reflexive, check_model_chain_boundary(ModelId::N3, ModelId::N1, ModelId::N4));
    add("T4.3-accuracy-chain", D, true, "reflexive: sigma4 <= sigma1 <= sigma3", gate_reflexive,
        check_model_chain_accuracy(ModelId::N4, ModelId::N1, ModelId::N3));
    add("T4.4-yao-lower", D, true, "nonempty primal: the plain lower is contained in lower1",
        gate_nonempty,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          ModelOps y = ops(env, Slot::Main, *k, ModelId::Yao);
          ModelOps m1 = ops(env, Slot::Main, *k, ModelId::N1);
          for (u64 v = 0; v < env.mask_count(); ++v) {
            if (!contained(y.lower(v), m1.lower(v))) {
              wit.v = env.subset(v);
              wit.detail = "lower_yao(V) = " + env.fmt(y.lower(v)) +
                           " is not contained in lower_n1(V) = " + env.fmt(m1.lower(v));
              return false;
            }
          }
          return true;
        });
    add("T4.4-yao-upper", D, true, "nonempty primal: upper1 is contained in the plain upper",
        gate_nonempty,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          ModelOps y = ops(env, Slot::Main, *k, ModelId::Yao);
          ModelOps m1 = ops(env, Slot::Main, *k, ModelId::N1);
          for (u64 v = 0; v < env.mask_count(); ++v) {
            if (!contained(m1.upper(v), y.upper(v))) {
              wit.v = env.subset(v);
              wit.detail = "upper_n1(V) = " + env.fmt(m1.upper(v)) +
                           " is not contained in upper_yao(V) = " + env.fmt(y.upper(v));
              return false;
            }
          }
          return true;
        });
    add("T4.4-yao-accuracy", D, true,
        "reflexive and nonempty primal: sigma_yao <= sigma1 wherever sigma_yao is defined",
        gate_reflexive_nonempty,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          ModelOps y = ops(env, Slot::Main, *k, ModelId::Yao);
          ModelOps m1 = ops(env, Slot::Main, *k, ModelId::N1);
          for (u64 v = 0; v < env.mask_count(); ++v) {
            Rational ys = y.sigma(v);
            if (ys.is_undefined()) continue;
            if (!sigma_le(ys, m1.sigma(v))) {
              wit.v = env.subset(v);
              wit.detail = "sigma_yao(V) = " + ys.to_string() + " exceeds sigma_n1(V) = " +
                           m1.sigma(v).to_string();
              return false;
            }
          }
          return true;
        });
    add("D3.1-yao-reduction", D, true,
        "with the primal replaced by {{}}, lower1/upper1 equal the plain lower/upper", gate_none,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          ModelOps y = ops(env, Slot::Main, *k, ModelId::Yao);
          ModelOps red = ops(env, Slot::Reduction, *k, ModelId::N1);
          for (u64 v = 0; v < env.mask_count(); ++v) {
            if (red.lower(v) != y.lower(v)) {
              wit.v = env.subset(v);
              wit.detail = "lower_n1(V) under {{}} = " + env.fmt(red.lower(v)) +
                           " differs from lower_yao(V) = " + env.fmt(y.lower(v));
              return false;
            }
            if (red.upper(v) != y.upper(v)) {
              wit.v = env.subset(v);
              wit.detail = "upper_n1(V) under {{}} = " + env.fmt(red.upper(v)) +
                           " differs from upper_yao(V) = " + env.fmt(y.upper(v));
              return false;
            }
          }
          return true;
        });
    add("P2.1-union-primal", D, false,
        "the union with each auxiliary family is again a valid primal (strictness preserved)",
        gate_none,
        [](LawEnv& env, std::optional<NeighborhoodKind>, LawWitness& wit) {
          for (Slot aux : {Slot::Aux1, Slot::Aux2}) {
            SetFamily u = env.primal().family().united_with(env.family(aux));
            ValidationReport rep = validate_family(u, ValidationLevel::Weak);
            if (!rep.ok()) {
              wit.detail = "union with an auxiliary family violates the weak axioms";
              return false;
            }
          }
          if (env.primal().level() == ValidationLevel::Strict &&
              env.n() <= kStrictValidationCap) {
            SetFamily u = env.primal().family().united_with(env.family(Slot::Aux2));
            ValidationReport rep = validate_family(u, ValidationLevel::Strict);
            if (!rep.ok()) {
              wit.detail = "union of two strict primals lost the splitting axiom";
              return false;
            }
          }
          return true;
        });
    add("INV-accuracy-bounds", D, true, "sigma1..sigma4 lie in [0,1] for every V", gate_none,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          const Rational one = Rational::ratio(1, 1);
          for (ModelId m : kPrimalModels) {
            ModelOps o = ops(env, Slot::Main, *k, m);
            for (u64 v = 0; v < env.mask_count(); ++v) {
              Rational s = o.sigma(v);
              if (s.is_undefined() || !sigma_le(s, one)) {
                wit.v = env.subset(v);
                wit.detail = sname(m) + "(V) = " + s.to_string() + " falls outside [0,1]";
                return false;
              }
            }
          }
          return true;
        });
    add("INV-yao-accuracy-bound", D, true,
        "serial kind: the plain sigma never exceeds 1 where defined", gate_serial,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          const Rational one = Rational::ratio(1, 1);
          ModelOps y = ops(env, Slot::Main, *k, ModelId::Yao);
          for (u64 v = 0; v < env.mask_count(); ++v) {
            Rational s = y.sigma(v);
            if (s.is_undefined()) continue;
            if (!sigma_le(s, one)) {
              wit.v = env.subset(v);
              wit.detail = "sigma_yao(V) = " + s.to_string() + " exceeds 1";
              return false;
            }
          }
          return true;
        });
    add("INV-definability-forward", D, true,
        "nonempty V: sigma = 1 forces an empty boundary (all four primal models)", gate_none,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          const Rational one = Rational::ratio(1, 1);
          for (ModelId m : kPrimalModels) {
            ModelOps o = ops(env, Slot::Main, *k, m);
            for (u64 v = 1; v < env.mask_count(); ++v) {
              if (o.sigma(v) == one && o.boundary(v) != 0) {
                wit.v = env.subset(v);
                wit.detail = sname(m) + "(V) = 1 but " + bname(m) + "(V) = " +
                             env.fmt(o.boundary(v)) + " is nonempty";
                return false;
              }
            }
          }
          return true;
        });

    // ---- non-properties (witness carriers; excluded from default runs) ------
    add("P3.1c-lower-union-equality", N, true, "equality form of the lower1 union law", gate_none,
        check_union_equality(ModelId::N1, true));
    add("P3.1c-upper-union-equality", N, true, "equality form of the upper1 union law", gate_none,
        check_union_equality(ModelId::N1, false));
    add("P3.1d-lower-intersection-equality", N, true,
        "equality form of the lower1 intersection law", gate_none,
        check_intersection_equality(ModelId::N1, true));
    add("P3.1d-upper-intersection-equality", N, true,
        "equality form of the upper1 intersection law", gate_none,
        check_intersection_equality(ModelId::N1, false));
    add("P3.2a-lower-empty", N, true,
        "printed maximal-primal claim: lower1(V) empty for V != universe", gate_maximal,
        check_maximal_lower_empty(ModelId::N1));
    add("P3.4d-lower-union-equality", N, true, "equality form of the lower2 union law", gate_none,
        check_union_equality(ModelId::N2, true));
    add("P3.4d-upper-union-equality", N, true, "equality form of the upper2 union law", gate_none,
        check_union_equality(ModelId::N2, false));
    add("P3.4e-lower-intersection-equality", N, true,
        "equality form of the lower2 intersection law", gate_none,
        check_intersection_equality(ModelId::N2, true));
    add("P3.4e-upper-intersection-equality", N, true,
        "equality form of the upper2 intersection law", gate_none,
        check_intersection_equality(ModelId::N2, false));
    add("P3.5a-lower-empty", N, true,
        "printed maximal-primal claim: lower2(V) empty for V != universe", gate_maximal,
        check_maximal_lower_empty(ModelId::N2));
    add("P3.7b-lower-union-equality", N, true, "equality form of the lower3 union law", gate_none,
        check_union_equality(ModelId::N3, true));
    add("P3.7b-upper-union-equality", N, true, "equality form of the upper3 union law", gate_none,
        check_union_equality(ModelId::N3, false));
    add("P3.7c-lower-intersection-equality", N, true,
        "equality form of the lower3 intersection law", gate_none,
        check_intersection_equality(ModelId::N3, true));
    add("P3.7c-upper-intersection-equality", N, true,
        "equality form of the upper3 intersection law", gate_none,
        check_intersection_equality(ModelId::N3, false));
    add("P3.9-kind-chain", N, false,
        "claimed kind chains for lower3/upper3 (fail: lower3 unions whole neighborhoods)",
        gate_none, check_kind_chain(ModelId::N3));
    add("C3.7-boundary-chain", N, false, "claimed kind chain for boundary3", gate_none,
        check_boundary_chain(ModelId::N3));
    add("C3.8-accuracy-chain", N, false, "claimed kind chain for sigma3", gate_none,
        check_accuracy_chain(ModelId::N3));
    add("P3.10c-lower-union-equality", N, true, "equality form of the lower4 union law", gate_none,
        check_union_equality(ModelId::N4, true));
    add("P3.10c-upper-union-equality", N, true, "equality form of the upper4 union law", gate_none,
        check_union_equality(ModelId::N4, false));
    add("P3.10d-lower-intersection-equality", N, true,
        "equality form of the lower4 intersection law", gate_none,
        check_intersection_equality(ModelId::N4, true));
    add("P3.10d-upper-intersection-equality", N, true,
        "equality form of the upper4 intersection law", gate_none,
        check_intersection_equality(ModelId::N4, false));
    add("T4.4-accuracy-unrestricted", N, true,
        "sigma_yao <= sigma1 without the reflexivity gate", gate_nonempty,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          ModelOps y = ops(env, Slot::Main, *k, ModelId::Yao);
          ModelOps m1 = ops(env, Slot::Main, *k, ModelId::N1);
          for (u64 v = 0; v < env.mask_count(); ++v) {
            Rational ys = y.sigma(v);
            if (ys.is_undefined()) continue;
            if (!sigma_le(ys, m1.sigma(v))) {
              wit.v = env.subset(v);
              wit.detail = "sigma_yao(V) = " + ys.to_string() + " exceeds sigma_n1(V) = " +
                           m1.sigma(v).to_string();
              return false;
            }
          }
          return true;
        });
    add("INV-definability-converse", N, true,
        "nonempty V: an empty boundary forces sigma = 1 (fails: sigma is V-relative)", gate_none,
        [](LawEnv& env, std::optional<NeighborhoodKind> k, LawWitness& wit) {
          const Rational one = Rational::ratio(1, 1);
          for (ModelId m : kPrimalModels) {
            ModelOps o = ops(env, Slot::Main, *k, m);
            for (u64 v = 1; v < env.mask_count(); ++v) {
              if (o.boundary(v) == 0 && !(o.sigma(v) == one)) {
                wit.v = env.subset(v);
                wit.detail = bname(m) + "(V) is empty but " + sname(m) + "(V) = " +
                             o.sigma(v).to_string();
                return false;
              }
            }
          }
          return true;
        });

    // ---- hidden diagnostic hook ---------------------------------------------
    laws.push_back(LawDef{
        "corrupt-test-hook", LawKind::NonProperty, false, true,
        "deliberately mis-stated edge law (claims lower1(universe) is empty); exercises the "
        "failure path",
        gate_none,
        [](LawEnv& env, std::optional<NeighborhoodKind>, LawWitness& wit) {
          ModelOps o = ops(env, LawEnv::Slot::Main, NeighborhoodKind::A, ModelId::N1);
          if (o.lower(env.full()) != 0) {
            wit.v = env.subset(env.full());
            wit.detail = "lower_n1(universe) = " + env.fmt(o.lower(env.full())) +
                         " is not empty (the claim is deliberately corrupted)";
            return false;
          }
          return true;
        }});

    return laws;
  }();
  return catalog;
}

/// Ids of one kind, in catalog order (hidden hook excluded).
inline std::vector<std::string> law_ids(LawKind kind) {
  std::vector<std::string> out;
  for (const auto& law : law_catalog()) {
    if (!law.hidden && law.kind == kind) out.push_back(law.id);
  }
  return out;
}

/// All non-hidden ids in catalog order.
inline std::vector<std::string> all_law_ids() {
  std::vector<std::string> out;
  for (const auto& law : law_catalog()) {
    if (!law.hidden) out.push_back(law.id);
  }
  return out;
}

inline const LawDef* find_law(const std::string& id) {
  for (const auto& law : law_catalog()) {
    if (law.id == id) return &law;
  }
  return nullptr;
}

/// Evaluate the selected laws on one instance over the requested kinds.
/// Reports come out in catalog order; per-kind laws in canonical kind order.
inline std::vector<LawReport> check_laws(const Relation& relation, const Primal& primal,
                                         const std::vector<std::string>& ids,
                                         const std::vector<NeighborhoodKind>& kinds) {
  for (const auto& id : ids) {
    if (find_law(id) == nullptr) throw StructuralError("unknown law id: " + id);
  }
  if (kinds.empty()) throw StructuralError("no neighborhood kinds requested");
  std::set<std::string> selected(ids.begin(), ids.end());

  std::vector<NeighborhoodKind> ordered;
  for (NeighborhoodKind k : kAllKinds) {
    for (NeighborhoodKind r : kinds) {
      if (r == k) {
        ordered.push_back(k);
        break;
      }
    }
  }

  LawEnv env(relation, primal);
  std::vector<LawReport> reports;
  for (const auto& law : law_catalog()) {
    if (selected.count(law.id) == 0) continue;
    auto run_one = [&](std::optional<NeighborhoodKind> kind) {
      LawReport rep;
      rep.law = law.id;
      rep.law_kind = law.kind;
      rep.kind = kind;
      if (auto reason = law.gate(env, kind)) {
        rep.verdict = Verdict::Skipped;
        rep.skip_reason = *reason;
      } else {
        LawWitness wit;
        if (law.check(env, kind, wit)) {
          rep.verdict = Verdict::Holds;
        } else {
          rep.verdict = Verdict::Fails;
          if (!wit.kind && kind) wit.kind = kind;
          rep.witness = std::move(wit);
        }
      }
      reports.push_back(std::move(rep));
    };
    if (law.per_kind) {
      for (NeighborhoodKind k : ordered) run_one(k);
    } else {
      run_one(std::nullopt);
    }
  }
  return reports;
}

}  // namespace primrose
