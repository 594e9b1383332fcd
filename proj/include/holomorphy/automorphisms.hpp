#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "holomorphy/holomorph.hpp"

namespace holomorphy {

// The automorphism of Hol(C_n) determined by x -> x^(k^j), y -> x^c y,
// with 0 <= c < n and 0 <= j < phi.
struct AutData {
  std::int64_t c = 0;
  std::int64_t j = 0;
  friend auto operator<=>(const AutData&, const AutData&) = default;
};

// Reduce arbitrary (c, j) into range.
AutData make_aut(const HolContext& ctx, std::int64_t c, std::int64_t j);

// alpha(x^a y^b) = x^(a k^j) (x^c y)^b, evaluated with group operations.
HolElem apply(const HolContext& ctx, const AutData& alpha, const HolElem& g);

// alpha after beta: apply(compose(a, b), g) == apply(a, apply(b, g)).
// Parameters combine exactly like the group law:
//   (c_a + c_b * k^(j_a) mod n, j_a + j_b mod phi).
AutData compose(const HolContext& ctx, const AutData& alpha,
                const AutData& beta);

// The transcription (c, j) -> x^c y^j and its inverse.
HolElem psi(const HolContext& ctx, const AutData& alpha);
AutData psi_inverse(const HolContext& ctx, const HolElem& g);

struct VerificationOutcome {
  bool ok = true;
  std::string witness;  // empty when ok; otherwise the failing check
};

// Checks that (c, j) really defines an automorphism: the image of x has
// order n, the image of y has order dividing phi, and conjugation by the
// image of y acts on <x> as raising to the k-th power (checked for every
// power of x, mirroring the defining relation).
VerificationOutcome validate_automorphism(const HolContext& ctx,
                                          const AutData& alpha);

// Parameters of conjugation by g, read off from the normal forms of
// g x g^-1 and g y g^-1 (no closed form is assumed; the results are
// cross-checked against the defining images).
AutData inner_automorphism(const HolContext& ctx, const HolElem& g);

// All n * phi parameter pairs in lexicographic (c, j) order.
std::vector<AutData> enumerate_aut(const HolContext& ctx);

}  // namespace holomorphy
