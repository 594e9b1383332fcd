#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "holomorphy/errors.hpp"
#include "holomorphy/holomorph.hpp"

namespace holomorphy {

// A finite group given by its full multiplication table. Construction
// verifies the table is a group: Latin rows and columns, two-sided
// identity, two-sided inverses, and associativity (exhaustive up to
// kCayleyExhaustiveLimit elements, sampled with a fixed seed above that).
inline constexpr std::size_t kCayleyExhaustiveLimit = 200;
inline constexpr std::size_t kCayleySampledChecks = 100000;

class CayleyGroup {
 public:
  CayleyGroup(std::size_t size, std::vector<std::int32_t> table,
              std::int32_t identity,
              std::vector<std::int32_t> generators = {},
              std::vector<std::string> labels = {});

  std::size_t size() const { return size_; }
  std::int32_t identity() const { return identity_; }
  std::int32_t mul(std::int32_t i, std::int32_t j) const {
    return table_[static_cast<std::size_t>(i) * size_ + j];
  }
  std::int32_t inverse(std::int32_t i) const { return inverses_[i]; }
  const std::vector<std::int32_t>& table() const { return table_; }
  const std::vector<std::int32_t>& generators() const { return generators_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Least t >= 1 with i^t = identity, by repeated multiplication.
  std::uint64_t element_order(std::int32_t i) const;

  // {size, identity, generators, table (row-major), labels}. from_json
  // reruns the construction checks, so a round trip certifies the table.
  nlohmann::json to_json() const;
  static CayleyGroup from_json(const nlohmann::json& j);

 private:
  void verify_invariants() const;

  std::size_t size_ = 0;
  std::vector<std::int32_t> table_;
  std::int32_t identity_ = 0;
  std::vector<std::int32_t> generators_;
  std::vector<std::string> labels_;
  std::vector<std::int32_t> inverses_;
};

// Finite presentation over the designated generators of a CayleyGroup.
// Relator letters are 1-based: +g means generator g-1, -g its inverse.
// expected_order is the number of normal forms; enumeration requires it
// to equal the group size (that equality is what certifies completeness).
struct Presentation {
  std::size_t generator_count = 0;
  std::vector<std::vector<std::int32_t>> relators;
  std::optional<std::uint64_t> expected_order;
};

// Left fold of the word over the table, empty word = identity.
std::int32_t evaluate_word(const CayleyGroup& g,
                           std::span<const std::int32_t> word,
                           std::span<const std::int32_t> gen_images);

// A verified homomorphism between tables: identity is preserved and
// mapping[g h] == mapping[g] mapping[h] (exhaustive up to the same limit
// as CayleyGroup construction, sampled above it). Holds pointers only;
// the groups must outlive the hom.
class GroupHom {
 public:
  GroupHom(const CayleyGroup& source, const CayleyGroup& target,
           std::vector<std::int32_t> mapping);

  const CayleyGroup& source() const { return *source_; }
  const CayleyGroup& target() const { return *target_; }
  const std::vector<std::int32_t>& mapping() const { return mapping_; }
  std::int32_t operator()(std::int32_t i) const { return mapping_[i]; }
  bool is_bijective() const;

 private:
  const CayleyGroup* source_;
  const CayleyGroup* target_;
  std::vector<std::int32_t> mapping_;
};

// Hol(C_n) as a table. Element (a, b) sits at index a * phi + b; the
// designated generators are x then y; labels use the x^a y^b rendering.
CayleyGroup build_holomorph_table(const HolContext& ctx);

// < x, y | x^n, y^phi, y x y^-1 x^-k > with expected order n * phi.
Presentation holomorph_presentation(const HolContext& ctx);

// Dihedral group of order 2n (n >= 3): rotations r^i at indices 0..n-1,
// reflections r^i s at n..2n-1; generators r then s.
CayleyGroup build_dihedral(std::uint64_t n);

// < r, s | r^n, s^2, (s r)^2 > with expected order 2n.
Presentation dihedral_presentation(std::uint64_t n);

// Hol(C_n) for any 2 <= n <= 60, with the automorphism part carried as
// the full unit group mod n (handles non-cyclic unit groups). Element
// (a, u) sits at index a * phi + rank(u), units ranked ascending.
// Generators: x = (1, 1) first, then (0, g) for each generator g of
// unit_group_decomposition(n).
CayleyGroup build_general_holomorph(std::uint64_t n);

// x^n, y_i^(d_i), y_i x y_i^-1 x^(-g_i), and commutators [y_i, y_j],
// expected order n * totient(n).
Presentation general_holomorph_presentation(std::uint64_t n);

// All automorphisms by finite search: candidate images for each generator
// are filtered by element order, relators are checked as soon as all their
// generators are assigned, and surviving assignments are extended to full
// mappings along breadth-first generator words. Requires the presentation
// to carry expected_order equal to the group size. Results are ordered by
// ascending candidate index tuples.
std::vector<GroupHom> enumerate_automorphisms_bruteforce(
    const CayleyGroup& g, const Presentation& pres);

// Composition table of the given automorphisms (entry (i, j) is auts[i]
// after auts[j]), indexed in the order given. Throws ConsistencyError if
// the list is not closed under composition or misses the identity.
CayleyGroup aut_group_table(const CayleyGroup& g,
                            const std::vector<GroupHom>& auts);

// First isomorphism found from g onto h (same search as automorphism
// enumeration, with candidates drawn from h), or nullopt. g_pres must
// present g over its designated generators.
std::optional<GroupHom> find_isomorphism(const CayleyGroup& g,
                                         const CayleyGroup& h,
                                         const Presentation& g_pres);

// Indices of central elements, ascending.
std::vector<std::int32_t> center_bruteforce(const CayleyGroup& g);

// The mapping x -> w x w^-1.
std::vector<std::int32_t> conjugation_mapping(const CayleyGroup& g,
                                              std::int32_t w);

}  // namespace holomorphy
