#include "holomorphy/cayley.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "holomorphy/numtheory.hpp"
#include "holomorphy/rng.hpp"

namespace holomorphy {

namespace {

// Construction checks must not depend on any user-facing seed, or two runs
// with different seeds could disagree about whether a table is a group.
constexpr std::uint64_t kCheckSeed = 0x0ddc0ffee1234567ull;

}  // namespace

CayleyGroup::CayleyGroup(std::size_t size, std::vector<std::int32_t> table,
                         std::int32_t identity,
                         std::vector<std::int32_t> generators,
                         std::vector<std::string> labels)
    : size_(size),
      table_(std::move(table)),
      identity_(identity),
      generators_(std::move(generators)),
      labels_(std::move(labels)) {
  verify_invariants();
  inverses_.assign(size_, -1);
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(size_); ++i) {
    for (std::int32_t j = 0; j < static_cast<std::int32_t>(size_); ++j) {
      if (mul(i, j) == identity_) {
        if (mul(j, i) != identity_) {
          throw ConsistencyError("table has a one-sided inverse at " +
                                 std::to_string(i));
        }
        inverses_[i] = j;
        break;
      }
    }
    if (inverses_[i] < 0) {
      throw ConsistencyError("element " + std::to_string(i) +
                             " has no inverse");
    }
  }
}

void CayleyGroup::verify_invariants() const {
  if (size_ == 0) throw ConsistencyError("empty table");
  if (table_.size() != size_ * size_) {
    throw ConsistencyError("table has " + std::to_string(table_.size()) +
                           " entries, expected " +
                           std::to_string(size_ * size_));
  }
  for (std::int32_t v : table_) {
    if (v < 0 || static_cast<std::size_t>(v) >= size_) {
      throw ConsistencyError("table entry " + std::to_string(v) +
                             " out of range");
    }
  }
  if (identity_ < 0 || static_cast<std::size_t>(identity_) >= size_) {
    throw ConsistencyError("identity index out of range");
  }
  if (!labels_.empty() && labels_.size() != size_) {
    throw ConsistencyError("label count does not match table size");
  }
  for (std::int32_t g : generators_) {
    if (g < 0 || static_cast<std::size_t>(g) >= size_) {
      throw ConsistencyError("generator index out of range");
    }
  }

  const auto n = static_cast<std::int32_t>(size_);
  for (std::int32_t i = 0; i < n; ++i) {
    if (mul(identity_, i) != i || mul(i, identity_) != i) {
      throw ConsistencyError("identity fails at element " + std::to_string(i));
    }
  }

  // Latin property: every row and column is a permutation.
  std::vector<bool> seen(size_);
  for (std::int32_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::int32_t j = 0; j < n; ++j) {
      if (seen[mul(i, j)]) {
        throw ConsistencyError("row " + std::to_string(i) +
                               " repeats an entry");
      }
      seen[mul(i, j)] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::int32_t j = 0; j < n; ++j) {
      if (seen[mul(j, i)]) {
        throw ConsistencyError("column " + std::to_string(i) +
                               " repeats an entry");
      }
      seen[mul(j, i)] = true;
    }
  }

  auto assoc_at = [&](std::int32_t a, std::int32_t b, std::int32_t c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw ConsistencyError("associativity fails at (" + std::to_string(a) +
                             ", " + std::to_string(b) + ", " +
                             std::to_string(c) + ")");
    }
  };
  if (size_ <= kCayleyExhaustiveLimit) {
    for (std::int32_t a = 0; a < n; ++a)
      for (std::int32_t b = 0; b < n; ++b)
        for (std::int32_t c = 0; c < n; ++c) assoc_at(a, b, c);
  } else {
    SplitMix64 rng(kCheckSeed);
    for (std::size_t t = 0; t < kCayleySampledChecks; ++t) {
      assoc_at(static_cast<std::int32_t>(rng.below(size_)),
               static_cast<std::int32_t>(rng.below(size_)),
               static_cast<std::int32_t>(rng.below(size_)));
    }
  }
}

std::uint64_t CayleyGroup::element_order(std::int32_t i) const {
  std::int32_t acc = i;
  std::uint64_t t = 1;
  while (acc != identity_) {
    acc = mul(acc, i);
    ++t;
  }
  return t;
}

nlohmann::json CayleyGroup::to_json() const {
  return nlohmann::json{{"size", size_},
                        {"identity", identity_},
                        {"generators", generators_},
                        {"table", table_},
                        {"labels", labels_}};
}

CayleyGroup CayleyGroup::from_json(const nlohmann::json& j) {
  return CayleyGroup(j.at("size").get<std::size_t>(),
                     j.at("table").get<std::vector<std::int32_t>>(),
                     j.at("identity").get<std::int32_t>(),
                     j.at("generators").get<std::vector<std::int32_t>>(),
                     j.at("labels").get<std::vector<std::string>>());
}

std::int32_t evaluate_word(const CayleyGroup& g,
                           std::span<const std::int32_t> word,
                           std::span<const std::int32_t> gen_images) {
  std::int32_t acc = g.identity();
  for (std::int32_t letter : word) {
    const std::size_t idx = static_cast<std::size_t>(std::abs(letter)) - 1;
    const std::int32_t img = gen_images[idx];
    acc = g.mul(acc, letter > 0 ? img : g.inverse(img));
  }
  return acc;
}

GroupHom::GroupHom(const CayleyGroup& source, const CayleyGroup& target,
                   std::vector<std::int32_t> mapping)
    : source_(&source), target_(&target), mapping_(std::move(mapping)) {
  if (mapping_.size() != source.size()) {
    throw ConsistencyError("mapping covers " +
                           std::to_string(mapping_.size()) +
                           " elements, expected " +
                           std::to_string(source.size()));
  }
  for (std::int32_t v : mapping_) {
    if (v < 0 || static_cast<std::size_t>(v) >= target.size()) {
      throw ConsistencyError("mapping image out of range");
    }
  }
  if (mapping_[source.identity()] != target.identity()) {
    throw ConsistencyError("mapping does not preserve the identity");
  }
  auto check_pair = [&](std::int32_t a, std::int32_t b) {
    if (mapping_[source.mul(a, b)] !=
        target.mul(mapping_[a], mapping_[b])) {
      throw ConsistencyError("not a homomorphism at (" + std::to_string(a) +
                             ", " + std::to_string(b) + ")");
    }
  };
  const auto n = static_cast<std::int32_t>(source.size());
  if (source.size() <= kCayleyExhaustiveLimit) {
    for (std::int32_t a = 0; a < n; ++a)
      for (std::int32_t b = 0; b < n; ++b) check_pair(a, b);
  } else {
    SplitMix64 rng(kCheckSeed);
    for (std::size_t t = 0; t < kCayleySampledChecks; ++t) {
      check_pair(static_cast<std::int32_t>(rng.below(source.size())),
                 static_cast<std::int32_t>(rng.below(source.size())));
    }
  }
}

bool GroupHom::is_bijective() const {
  if (source_->size() != target_->size()) return false;
  std::vector<bool> seen(target_->size(), false);
  for (std::int32_t v : mapping_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

CayleyGroup build_holomorph_table(const HolContext& ctx) {
  const std::size_t size = ctx.group_order();
  std::vector<std::int32_t> table(size * size);
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    labels.push_back(ctx.format(ctx.element_at(i)));
    for (std::size_t j = 0; j < size; ++j) {
      table[i * size + j] = static_cast<std::int32_t>(
          ctx.index_of(ctx.mul(ctx.element_at(i), ctx.element_at(j))));
    }
  }
  const std::vector<std::int32_t> gens{
      static_cast<std::int32_t>(ctx.index_of(ctx.x())),
      static_cast<std::int32_t>(ctx.index_of(ctx.y()))};
  return CayleyGroup(size, std::move(table),
                     static_cast<std::int32_t>(ctx.index_of(ctx.identity())),
                     gens, std::move(labels));
}

Presentation holomorph_presentation(const HolContext& ctx) {
  Presentation pres;
  pres.generator_count = 2;
  std::vector<std::int32_t> rel_x(ctx.n(), 1);
  std::vector<std::int32_t> rel_y(ctx.phi(), 2);
  // y x y^-1 x^-k
  std::vector<std::int32_t> rel_conj{2, 1, -2};
  rel_conj.insert(rel_conj.end(), ctx.k(), -1);
  pres.relators = {rel_x, rel_y, rel_conj};
  pres.expected_order = ctx.group_order();
  return pres;
}

CayleyGroup build_dihedral(std::uint64_t n) {
  if (n < 3) {
    throw std::domain_error("build_dihedral: need n >= 3, got " +
                            std::to_string(n));
  }
  const std::size_t size = 2 * n;
  const auto sn = static_cast<std::int64_t>(n);
  // index i < n: rotation r^i; index n + i: reflection r^i s
  auto rot = [&](std::int64_t i) {
    return static_cast<std::int32_t>(((i % sn) + sn) % sn);
  };
  auto refl = [&](std::int64_t i) {
    return static_cast<std::int32_t>(sn + ((i % sn) + sn) % sn);
  };
  std::vector<std::int32_t> table(size * size);
  auto set = [&](std::int32_t i, std::int32_t j, std::int32_t v) {
    table[static_cast<std::size_t>(i) * size + j] = v;
  };
  for (std::int64_t i = 0; i < sn; ++i) {
    for (std::int64_t j = 0; j < sn; ++j) {
      set(rot(i), rot(j), rot(i + j));          // r^i r^j
      set(rot(i), refl(j), refl(i + j));        // r^i (r^j s)
      set(refl(i), rot(j), refl(i - j));        // (r^i s) r^j
      set(refl(i), refl(j), rot(i - j));        // (r^i s)(r^j s)
    }
  }
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::int64_t i = 0; i < sn; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "r" : "r^" + std::to_string(i)));
  }
  for (std::int64_t i = 0; i < sn; ++i) {
    labels.push_back(i == 0 ? "s"
                            : (i == 1 ? "r s" : "r^" + std::to_string(i) +
                                                    " s"));
  }
  const std::vector<std::int32_t> gens{rot(1), refl(0)};
  return CayleyGroup(size, std::move(table), rot(0), gens, std::move(labels));
}

Presentation dihedral_presentation(std::uint64_t n) {
  if (n < 3) {
    throw std::domain_error("dihedral_presentation: need n >= 3");
  }
  Presentation pres;
  pres.generator_count = 2;
  std::vector<std::int32_t> rel_r(n, 1);
  pres.relators = {rel_r, {2, 2}, {2, 1, 2, 1}};
  pres.expected_order = 2 * n;
  return pres;
}

namespace {

std::vector<std::uint64_t> units_ascending(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 1; u < n; ++u) {
    if (std::gcd(u, n) == 1) out.push_back(u);
  }
  return out;
}

}  // namespace

CayleyGroup build_general_holomorph(std::uint64_t n) {
  if (n < 2 || n > 60) {
    throw std::domain_error("build_general_holomorph: need 2 <= n <= 60");
  }
  const std::vector<std::uint64_t> units = units_ascending(n);
  const std::size_t phi = units.size();
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t i = 0; i < phi; ++i) rank[units[i]] = i;

  const std::size_t size = n * phi;
  auto index = [&](std::uint64_t a, std::uint64_t u) {
    return a * phi + rank[u];
  };
  std::vector<std::int32_t> table(size * size);
  std::vector<std::string> labels(size);
  for (std::uint64_t a1 = 0; a1 < n; ++a1) {
    for (std::size_t i1 = 0; i1 < phi; ++i1) {
      const std::uint64_t u1 = units[i1];
      labels[index(a1, u1)] =
          "(" + std::to_string(a1) + "," + std::to_string(u1) + ")";
      for (std::uint64_t a2 = 0; a2 < n; ++a2) {
        for (std::size_t i2 = 0; i2 < phi; ++i2) {
          const std::uint64_t u2 = units[i2];
          // (a1, u1)(a2, u2) = (a1 + u1 a2, u1 u2)
          table[index(a1, u1) * size + index(a2, u2)] =
              static_cast<std::int32_t>(
                  index((a1 + u1 * a2) % n, (u1 * u2) % n));
        }
      }
    }
  }
  std::vector<std::int32_t> gens{static_cast<std::int32_t>(index(1, 1))};
  for (std::uint64_t g : unit_group_decomposition(n).generators) {
    gens.push_back(static_cast<std::int32_t>(index(0, g)));
  }
  return CayleyGroup(size, std::move(table),
                     static_cast<std::int32_t>(index(0, 1)), gens,
                     std::move(labels));
}

Presentation general_holomorph_presentation(std::uint64_t n) {
  if (n < 2 || n > 60) {
    throw std::domain_error(
        "general_holomorph_presentation: need 2 <= n <= 60");
  }
  const UnitGroupDecomposition dec = unit_group_decomposition(n);
  Presentation pres;
  pres.generator_count = 1 + dec.generators.size();
  pres.relators.push_back(std::vector<std::int32_t>(n, 1));  // x^n
  for (std::size_t i = 0; i < dec.generators.size(); ++i) {
    const auto yi = static_cast<std::int32_t>(2 + i);
    pres.relators.push_back(
        std::vector<std::int32_t>(dec.orders[i], yi));  // y_i^(d_i)
    std::vector<std::int32_t> conj{yi, 1, -yi};         // y_i x y_i^-1 x^-g_i
    conj.insert(conj.end(), dec.generators[i], -1);
    pres.relators.push_back(std::move(conj));
    for (std::size_t j = 0; j < i; ++j) {
      const auto yj = static_cast<std::int32_t>(2 + j);
      pres.relators.push_back({yi, yj, -yi, -yj});  // units commute
    }
  }
  pres.expected_order = n * totient(n);
  return pres;
}

namespace {

// Breadth-first parent pointers over right multiplication by generators.
struct GeneratorReach {
  std::vector<std::int32_t> order;   // discovery order, identity first
  std::vector<std::int32_t> parent;  // element -> previously found element
  std::vector<std::int32_t> via;     // element -> generator index applied
  bool complete = false;
};

GeneratorReach bfs_generators(const CayleyGroup& g,
                              std::span<const std::int32_t> gens) {
  GeneratorReach reach;
  reach.parent.assign(g.size(), -1);
  reach.via.assign(g.size(), -1);
  std::vector<bool> seen(g.size(), false);
  seen[g.identity()] = true;
  reach.order.push_back(g.identity());
  for (std::size_t head = 0; head < reach.order.size(); ++head) {
    const std::int32_t cur = reach.order[head];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const std::int32_t nxt = g.mul(cur, gens[gi]);
      if (seen[nxt]) continue;
      seen[nxt] = true;
      reach.parent[nxt] = cur;
      reach.via[nxt] = static_cast<std::int32_t>(gi);
      reach.order.push_back(nxt);
    }
  }
  reach.complete = reach.order.size() == g.size();
  return reach;
}

std::vector<std::int32_t> extend_by_words(
    const CayleyGroup& src, const CayleyGroup& tgt,
    const GeneratorReach& reach, std::span<const std::int32_t> gen_images) {
  std::vector<std::int32_t> mapping(src.size(), -1);
  mapping[src.identity()] = tgt.identity();
  for (std::size_t i = 1; i < reach.order.size(); ++i) {
    const std::int32_t e = reach.order[i];
    mapping[e] = tgt.mul(mapping[reach.parent[e]], gen_images[reach.via[e]]);
  }
  return mapping;
}

// Shared search over generator images, used by both automorphism
// enumeration and isomorphism search. Calls on_found with each bijective
// verified hom in ascending candidate order; on_found returns false to
// stop the search.
template <typename OnFound>
void search_generator_images(const CayleyGroup& src, const CayleyGroup& tgt,
                             const Presentation& pres, OnFound&& on_found) {
  const std::vector<std::int32_t>& gens = src.generators();
  if (gens.empty() || pres.generator_count != gens.size()) {
    throw ConsistencyError(
        "presentation generator count does not match the group's "
        "designated generators");
  }
  if (!pres.expected_order || *pres.expected_order != src.size()) {
    throw ConsistencyError(
        "presentation is not certified complete: expected_order must equal "
        "the group size");
  }
  for (const auto& rel : pres.relators) {
    for (std::int32_t letter : rel) {
      const std::size_t idx = static_cast<std::size_t>(std::abs(letter));
      if (letter == 0 || idx > gens.size()) {
        throw ConsistencyError("relator letter out of range");
      }
    }
    if (evaluate_word(src, rel, gens) != src.identity()) {
      throw ConsistencyError(
          "a relator is not satisfied by the designated generators");
    }
  }
  const GeneratorReach reach = bfs_generators(src, gens);
  if (!reach.complete) {
    throw ConsistencyError("designated generators do not generate the group");
  }

  // Candidate images, filtered by element order (isomorphisms preserve
  // orders; this only prunes assignments that could not become bijective).
  std::vector<std::uint64_t> tgt_orders(tgt.size());
  for (std::size_t i = 0; i < tgt.size(); ++i) {
    tgt_orders[i] = tgt.element_order(static_cast<std::int32_t>(i));
  }
  std::vector<std::vector<std::int32_t>> candidates(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const std::uint64_t want = src.element_order(gens[gi]);
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      if (tgt_orders[i] == want) {
        candidates[gi].push_back(static_cast<std::int32_t>(i));
      }
    }
  }

  // Check each relator as soon as all generators it mentions are assigned.
  std::vector<std::vector<std::size_t>> relators_at(gens.size());
  for (std::size_t ri = 0; ri < pres.relators.size(); ++ri) {
    std::size_t level = 0;
    for (std::int32_t letter : pres.relators[ri]) {
      level = std::max(level,
                       static_cast<std::size_t>(std::abs(letter)) - 1);
    }
    relators_at[level].push_back(ri);
  }

  std::vector<std::int32_t> images(gens.size(), -1);
  bool keep_going = true;
  auto dfs = [&](auto&& self, std::size_t level) -> void {
    if (!keep_going) return;
    if (level == gens.size()) {
      std::vector<std::int32_t> mapping =
          extend_by_words(src, tgt, reach, images);
      std::vector<bool> seen(tgt.size(), false);
      for (std::int32_t v : mapping) {
        if (seen[v]) return;  // not injective; a legitimate dead end
        seen[v] = true;
      }
      keep_going = on_found(GroupHom(src, tgt, std::move(mapping)));
      return;
    }
    for (std::int32_t cand : candidates[level]) {
      if (!keep_going) return;
      images[level] = cand;
      bool ok = true;
      for (std::size_t ri : relators_at[level]) {
        if (evaluate_word(tgt, pres.relators[ri], images) != tgt.identity()) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, level + 1);
    }
    images[level] = -1;
  };
  dfs(dfs, 0);
}

}  // namespace

std::vector<GroupHom> enumerate_automorphisms_bruteforce(
    const CayleyGroup& g, const Presentation& pres) {
  std::vector<GroupHom> out;
  search_generator_images(g, g, pres, [&](GroupHom hom) {
    out.push_back(std::move(hom));
    return true;
  });
  return out;
}

std::optional<GroupHom> find_isomorphism(const CayleyGroup& g,
                                         const CayleyGroup& h,
                                         const Presentation& g_pres) {
  if (g.size() != h.size()) {
    throw std::domain_error("find_isomorphism: groups have different sizes");
  }
  std::optional<GroupHom> out;
  search_generator_images(g, h, g_pres, [&](GroupHom hom) {
    out.emplace(std::move(hom));
    return false;
  });
  return out;
}

CayleyGroup aut_group_table(const CayleyGroup& g,
                            const std::vector<GroupHom>& auts) {
  if (auts.empty()) {
    throw ConsistencyError("aut_group_table: empty automorphism list");
  }
  const bool by_gens = !g.generators().empty();
  auto key_of = [&](const std::vector<std::int32_t>& mapping) {
    if (!by_gens) return mapping;
    std::vector<std::int32_t> key;
    key.reserve(g.generators().size());
    for (std::int32_t gen : g.generators()) key.push_back(mapping[gen]);
    return key;
  };

  std::map<std::vector<std::int32_t>, std::int32_t> lookup;
  for (std::size_t i = 0; i < auts.size(); ++i) {
    if (auts[i].mapping().size() != g.size()) {
      throw ConsistencyError("aut_group_table: mapping size mismatch");
    }
    if (!lookup.emplace(key_of(auts[i].mapping()),
                        static_cast<std::int32_t>(i))
             .second) {
      throw ConsistencyError("aut_group_table: duplicate automorphism");
    }
  }

  std::vector<std::int32_t> id_key;
  {
    std::vector<std::int32_t> identity_mapping(g.size());
    std::iota(identity_mapping.begin(), identity_mapping.end(), 0);
    id_key = key_of(identity_mapping);
  }
  const auto id_it = lookup.find(id_key);
  if (id_it == lookup.end()) {
    throw ConsistencyError("aut_group_table: identity map missing");
  }

  const std::size_t size = auts.size();
  std::vector<std::int32_t> table(size * size);
  std::vector<std::int32_t> composed_key(
      by_gens ? g.generators().size() : g.size());
  for (std::size_t i = 0; i < size; ++i) {
    const auto& mi = auts[i].mapping();
    for (std::size_t j = 0; j < size; ++j) {
      const auto& mj = auts[j].mapping();
      // entry (i, j) is auts[i] after auts[j]
      if (by_gens) {
        for (std::size_t t = 0; t < g.generators().size(); ++t) {
          composed_key[t] = mi[mj[g.generators()[t]]];
        }
      } else {
        for (std::size_t t = 0; t < g.size(); ++t) {
          composed_key[t] = mi[mj[static_cast<std::int32_t>(t)]];
        }
      }
      const auto it = lookup.find(composed_key);
      if (it == lookup.end()) {
        throw ConsistencyError(
            "aut_group_table: list is not closed under composition");
      }
      table[i * size + j] = it->second;
    }
  }
  return CayleyGroup(size, std::move(table), id_it->second);
}

std::vector<std::int32_t> center_bruteforce(const CayleyGroup& g) {
  std::vector<std::int32_t> out;
  const auto n = static_cast<std::int32_t>(g.size());
  for (std::int32_t i = 0; i < n; ++i) {
    bool central = true;
    for (std::int32_t j = 0; j < n; ++j) {
      if (g.mul(i, j) != g.mul(j, i)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(i);
  }
  return out;
}

std::vector<std::int32_t> conjugation_mapping(const CayleyGroup& g,
                                              std::int32_t w) {
  std::vector<std::int32_t> out(g.size());
  const std::int32_t winv = g.inverse(w);
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i] = g.mul(g.mul(w, static_cast<std::int32_t>(i)), winv);
  }
  return out;
}

}  // namespace holomorphy
