#include "holomorphy/automorphisms.hpp"

#include <sstream>

#include "holomorphy/numtheory.hpp"

namespace holomorphy {

AutData make_aut(const HolContext& ctx, std::int64_t c, std::int64_t j) {
  const HolElem reduced = ctx.elem(c, j);
  return {reduced.a, reduced.b};
}

HolElem apply(const HolContext& ctx, const AutData& alpha, const HolElem& g) {
  // alpha(x)^a = x^(a k^j)
  const std::uint64_t image_a = ctx.conjugate_by_y_power(
      static_cast<std::uint64_t>(g.a), static_cast<std::uint64_t>(alpha.j));
  // alpha(y)^b = (x^c y)^b
  const HolElem image_y_part =
      ctx.power(ctx.elem(alpha.c, 1), static_cast<std::uint64_t>(g.b));
  return ctx.mul(ctx.elem(static_cast<std::int64_t>(image_a), 0),
                 image_y_part);
}

AutData compose(const HolContext& ctx, const AutData& alpha,
                const AutData& beta) {
  const std::uint64_t twisted = ctx.conjugate_by_y_power(
      static_cast<std::uint64_t>(beta.c), static_cast<std::uint64_t>(alpha.j));
  return make_aut(ctx, alpha.c + static_cast<std::int64_t>(twisted),
                  alpha.j + beta.j);
}

HolElem psi(const HolContext& ctx, const AutData& alpha) {
  return ctx.elem(alpha.c, alpha.j);
}

AutData psi_inverse(const HolContext& ctx, const HolElem& g) {
  return make_aut(ctx, g.a, g.b);
}

VerificationOutcome validate_automorphism(const HolContext& ctx,
                                          const AutData& alpha) {
  const HolElem image_x =
      ctx.elem(static_cast<std::int64_t>(ctx.conjugate_by_y_power(
                   1, static_cast<std::uint64_t>(alpha.j))),
               0);
  if (ctx.element_order(image_x) != ctx.n()) {
    std::ostringstream os;
    os << "image of x has order " << ctx.element_order(image_x)
       << ", expected " << ctx.n();
    return {false, os.str()};
  }

  const HolElem image_y = ctx.elem(alpha.c, 1);
  if (ctx.power(image_y, ctx.phi()) != ctx.identity()) {
    return {false, "image of y does not have exponent phi"};
  }

  // Conjugation by the image of y must raise every power of the image of
  // x to the k-th power, mirroring the defining relation y x y^-1 = x^k.
  const HolElem image_y_inv = ctx.inverse(image_y);
  for (std::uint64_t i = 0; i < ctx.n(); ++i) {
    const HolElem xi = ctx.elem(static_cast<std::int64_t>(i), 0);
    const HolElem lhs =
        ctx.mul(image_y, ctx.mul(apply(ctx, alpha, xi), image_y_inv));
    const HolElem rhs = apply(
        ctx, alpha,
        ctx.elem(static_cast<std::int64_t>(
                     ctx.conjugate_by_y_power(i, 1)),
                 0));
    if (lhs != rhs) {
      std::ostringstream os;
      os << "conjugation mismatch at x^" << i;
      return {false, os.str()};
    }
  }
  return {true, ""};
}

AutData inner_automorphism(const HolContext& ctx, const HolElem& g) {
  const HolElem g_inv = ctx.inverse(g);
  const HolElem conj_x = ctx.mul(g, ctx.mul(ctx.x(), g_inv));
  const HolElem conj_y = ctx.mul(g, ctx.mul(ctx.y(), g_inv));
  if (conj_x.b != 0) {
    throw ConsistencyError("inner_automorphism: conjugate of x left <x>");
  }
  if (conj_y.b != 1) {
    throw ConsistencyError(
        "inner_automorphism: conjugate of y is not x^c y");
  }
  // j is read off from the power of x that conjugation turned x into.
  const AutData out = make_aut(ctx, conj_y.a, g.b);
  if (ctx.conjugate_by_y_power(1, static_cast<std::uint64_t>(out.j)) !=
      static_cast<std::uint64_t>(conj_x.a)) {
    throw ConsistencyError(
        "inner_automorphism: x-image disagrees with k^j");
  }
  return out;
}

std::vector<AutData> enumerate_aut(const HolContext& ctx) {
  std::vector<AutData> out;
  out.reserve(ctx.group_order());
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(ctx.n()); ++c) {
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(ctx.phi()); ++j) {
      out.push_back({c, j});
    }
  }
  return out;
}

}  // namespace holomorphy
