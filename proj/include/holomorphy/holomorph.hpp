#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holomorphy/errors.hpp"

namespace holomorphy {

// Element x^a y^b in normal form: 0 <= a < n, 0 <= b < phi(n).
struct HolElem {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend auto operator<=>(const HolElem&, const HolElem&) = default;
};

// Hol(C_n) for n = 2 * p^e, presented as
//   < x, y | x^n = 1, y^phi = 1, y x y^-1 = x^k >
// where phi = totient(n) and k is a unit of maximal order mod n.
class HolContext {
 public:
  // Validates the shape of n and, when k is supplied, that 1 < k < n is a
  // unit of order phi. Defaults k to the least such unit.
  static HolContext make(std::uint64_t n,
                         std::optional<std::uint64_t> k = std::nullopt);

  std::uint64_t n() const { return n_; }
  std::uint64_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint64_t phi() const { return phi_; }
  std::uint64_t k() const { return k_; }
  std::uint64_t group_order() const { return n_ * phi_; }

  // Reduce arbitrary exponents into normal form.
  HolElem elem(std::int64_t a, std::int64_t b) const;
  HolElem identity() const { return {0, 0}; }
  HolElem x() const { return {1, 0}; }
  HolElem y() const { return {0, 1}; }

  // (a1, b1) * (a2, b2) = (a1 + a2 * k^b1 mod n, b1 + b2 mod phi)
  HolElem mul(const HolElem& g, const HolElem& h) const;

  // (-a * k^-b mod n, -b mod phi); k^-b is computed as k^(phi - b).
  HolElem inverse(const HolElem& g) const;

  // Exponent of y^b x^a y^-b, i.e. a * k^b mod n. b need not be < phi.
  std::uint64_t conjugate_by_y_power(std::uint64_t a, std::uint64_t b) const;

  // (x^a y^b)^m = (a * (1 + k^b + ... + k^(b(m-1))) mod n, b m mod phi).
  // The geometric sum is accumulated term by term, so this is O(m).
  HolElem power(const HolElem& g, std::uint64_t m) const;

  // Least t >= 1 with g^t = 1, by repeated multiplication.
  std::uint64_t element_order(const HolElem& g) const;

  // Elements commuting with everything, in lexicographic (a, b) order.
  std::vector<HolElem> center() const;

  // All n * phi elements in lexicographic (a, b) order.
  std::vector<HolElem> elements() const;

  // Position of g in elements(): a * phi + b.
  std::size_t index_of(const HolElem& g) const;
  HolElem element_at(std::size_t index) const;

  // "1", "x^3", "y", "x^3 y^2", ...
  std::string format(const HolElem& g) const;

 private:
  HolContext(std::uint64_t n, std::uint64_t p, std::uint32_t e,
             std::uint64_t phi, std::uint64_t k);

  std::uint64_t n_ = 0;
  std::uint64_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint64_t phi_ = 0;
  std::uint64_t k_ = 0;
  std::vector<std::uint64_t> k_pows_;  // k^b mod n for 0 <= b < phi
};

}  // namespace holomorphy
