#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "holomorphy/automorphisms.hpp"
#include "holomorphy/holomorph.hpp"
#include "holomorphy/numtheory.hpp"
#include "holomorphy/rng.hpp"

using namespace holomorphy;

namespace {

// Maximal-order units for the small contexts we sweep exhaustively.
const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>>
    kAdmissibleK{{6, {5}}, {10, {3, 7}}, {18, {5, 11}}};

}  // namespace

TEST_CASE("make_aut reduces parameters into range") {
  const HolContext ctx = HolContext::make(18);
  CHECK(make_aut(ctx, -1, -1) == AutData{17, 5});
  CHECK(make_aut(ctx, 18, 6) == AutData{0, 0});
  CHECK(make_aut(ctx, 20, 7) == AutData{2, 1});
}

TEST_CASE("apply matches pinned examples") {
  const HolContext ctx = HolContext::make(18);
  CHECK(apply(ctx, {0, 1}, {1, 0}) == HolElem{5, 0});
  CHECK(apply(ctx, {2, 0}, {0, 1}) == HolElem{2, 1});
  CHECK(apply(ctx, {0, 0}, {4, 3}) == HolElem{4, 3});
  // x -> x^(k^j) on powers of x, y -> x^c y.
  CHECK(apply(ctx, {7, 2}, {1, 0}) == HolElem{7, 0});  // 5^2 = 25 = 7 mod 18
  CHECK(apply(ctx, {7, 2}, {0, 1}) == HolElem{7, 1});
}

TEST_CASE("the identity parameters fix every element") {
  for (std::uint64_t n : {6ull, 10ull, 18ull}) {
    const HolContext ctx = HolContext::make(n);
    for (const HolElem& g : ctx.elements()) {
      CHECK(apply(ctx, {0, 0}, g) == g);
    }
  }
}

TEST_CASE("compose matches pinned examples") {
  const HolContext ctx18 = HolContext::make(18);
  CHECK(compose(ctx18, {2, 1}, {3, 2}) == AutData{17, 3});
  const HolContext ctx6 = HolContext::make(6);
  CHECK(compose(ctx6, {1, 1}, {1, 1}) == AutData{0, 0});
}

TEST_CASE("compose agrees with pointwise composition") {
  // Exhaustive over every (alpha, beta, g) for the smallest context.
  const HolContext ctx6 = HolContext::make(6);
  const std::vector<AutData> auts6 = enumerate_aut(ctx6);
  for (const AutData& a : auts6) {
    for (const AutData& b : auts6) {
      const AutData ab = compose(ctx6, a, b);
      for (const HolElem& g : ctx6.elements()) {
        CHECK(apply(ctx6, ab, g) == apply(ctx6, a, apply(ctx6, b, g)));
      }
    }
  }
  // Every pair at n = 18, spot-checked on the generators and their product.
  const HolContext ctx = HolContext::make(18);
  const std::vector<AutData> auts = enumerate_aut(ctx);
  const std::vector<HolElem> probes{ctx.x(), ctx.y(), ctx.mul(ctx.x(), ctx.y())};
  for (const AutData& a : auts) {
    for (const AutData& b : auts) {
      const AutData ab = compose(ctx, a, b);
      for (const HolElem& g : probes) {
        CHECK(apply(ctx, ab, g) == apply(ctx, a, apply(ctx, b, g)));
      }
    }
  }
}

TEST_CASE("psi and psi_inverse are mutually inverse transcriptions") {
  for (std::uint64_t n : {6ull, 10ull, 18ull}) {
    const HolContext ctx = HolContext::make(n);
    for (const AutData& alpha : enumerate_aut(ctx)) {
      const HolElem g = psi(ctx, alpha);
      CHECK(g == HolElem{alpha.c, alpha.j});
      CHECK(psi_inverse(ctx, g) == alpha);
    }
    for (const HolElem& g : ctx.elements()) {
      CHECK(psi(ctx, psi_inverse(ctx, g)) == g);
    }
  }
}

TEST_CASE("psi transcribes composition into the group law") {
  for (const auto& [n, ks] : kAdmissibleK) {
    for (std::uint64_t k : ks) {
      const HolContext ctx = HolContext::make(n, k);
      const std::vector<AutData> auts = enumerate_aut(ctx);
      for (const AutData& a : auts) {
        for (const AutData& b : auts) {
          CHECK(psi(ctx, compose(ctx, a, b)) ==
                ctx.mul(psi(ctx, a), psi(ctx, b)));
        }
      }
    }
  }
}

TEST_CASE("psi is a bijection onto the group") {
  for (const auto& [n, ks] : kAdmissibleK) {
    for (std::uint64_t k : ks) {
      const HolContext ctx = HolContext::make(n, k);
      std::vector<HolElem> images;
      for (const AutData& alpha : enumerate_aut(ctx)) {
        images.push_back(psi(ctx, alpha));
      }
      std::sort(images.begin(), images.end());
      CHECK(images == ctx.elements());
    }
  }
}

TEST_CASE("validate_automorphism accepts every parameter pair") {
  const HolContext ctx18 = HolContext::make(18);
  CHECK(validate_automorphism(ctx18, {7, 2}).ok);
  CHECK(validate_automorphism(ctx18, {0, 0}).ok);
  CHECK(validate_automorphism(ctx18, {0, 0}).witness.empty());
  for (const auto& [n, ks] : kAdmissibleK) {
    for (std::uint64_t k : ks) {
      const HolContext ctx = HolContext::make(n, k);
      for (const AutData& alpha : enumerate_aut(ctx)) {
        const VerificationOutcome outcome = validate_automorphism(ctx, alpha);
        CHECK(outcome.ok);
      }
    }
  }
}

TEST_CASE("apply preserves multiplication") {
  for (std::uint64_t n : {6ull, 10ull}) {
    const HolContext ctx = HolContext::make(n);
    const std::vector<HolElem> all = ctx.elements();
    for (const AutData& alpha : enumerate_aut(ctx)) {
      for (const HolElem& g : all) {
        for (const HolElem& h : all) {
          CHECK(apply(ctx, alpha, ctx.mul(g, h)) ==
                ctx.mul(apply(ctx, alpha, g), apply(ctx, alpha, h)));
        }
      }
    }
  }
  const HolContext ctx = HolContext::make(18);
  SplitMix64 rng(11);
  const std::vector<AutData> auts = enumerate_aut(ctx);
  for (int t = 0; t < 20000; ++t) {
    const AutData alpha = auts[rng.below(auts.size())];
    const HolElem g = ctx.element_at(rng.below(ctx.group_order()));
    const HolElem h = ctx.element_at(rng.below(ctx.group_order()));
    CHECK(apply(ctx, alpha, ctx.mul(g, h)) ==
          ctx.mul(apply(ctx, alpha, g), apply(ctx, alpha, h)));
  }
}

TEST_CASE("inner_automorphism matches pinned examples") {
  const HolContext ctx = HolContext::make(18);
  CHECK(inner_automorphism(ctx, {1, 0}) == AutData{14, 0});
  CHECK(inner_automorphism(ctx, {0, 1}) == AutData{0, 1});
  CHECK(inner_automorphism(ctx, ctx.identity()) == AutData{0, 0});
  CHECK(inner_automorphism(ctx, {9, 0}) == AutData{0, 0});  // central
}

TEST_CASE("inner_automorphism is conjugation") {
  for (std::uint64_t n : {6ull, 10ull}) {
    const HolContext ctx = HolContext::make(n);
    for (const HolElem& g : ctx.elements()) {
      const AutData inn = inner_automorphism(ctx, g);
      for (const HolElem& h : ctx.elements()) {
        CHECK(apply(ctx, inn, h) ==
              ctx.mul(g, ctx.mul(h, ctx.inverse(g))));
      }
    }
  }
  const HolContext ctx = HolContext::make(18);
  SplitMix64 rng(13);
  for (int t = 0; t < 20000; ++t) {
    const HolElem g = ctx.element_at(rng.below(ctx.group_order()));
    const HolElem h = ctx.element_at(rng.below(ctx.group_order()));
    CHECK(apply(ctx, inner_automorphism(ctx, g), h) ==
          ctx.mul(g, ctx.mul(h, ctx.inverse(g))));
  }
}

TEST_CASE("inner_automorphism is a homomorphism with kernel the center") {
  for (std::uint64_t n : {6ull, 10ull, 18ull}) {
    const HolContext ctx = HolContext::make(n);
    const std::vector<HolElem> all = ctx.elements();
    for (const HolElem& g : all) {
      for (const HolElem& h : all) {
        CHECK(inner_automorphism(ctx, ctx.mul(g, h)) ==
              compose(ctx, inner_automorphism(ctx, g),
                      inner_automorphism(ctx, h)));
      }
    }
    std::vector<HolElem> kernel;
    for (const HolElem& g : all) {
      if (inner_automorphism(ctx, g) == AutData{0, 0}) {
        kernel.push_back(g);
      }
    }
    CHECK(kernel == ctx.center());
  }
}

TEST_CASE("enumerate_aut lists all parameter pairs in order") {
  CHECK(enumerate_aut(HolContext::make(6)).size() == 12);
  CHECK(enumerate_aut(HolContext::make(18)).size() == 108);
  CHECK(enumerate_aut(HolContext::make(50)).size() == 1000);

  const HolContext ctx = HolContext::make(18);
  const std::vector<AutData> auts = enumerate_aut(ctx);
  CHECK(auts.front() == AutData{0, 0});
  CHECK(auts[1] == AutData{0, 1});
  CHECK(auts[6] == AutData{1, 0});
  CHECK(auts.back() == AutData{17, 5});
  CHECK(std::is_sorted(auts.begin(), auts.end()));
  const std::set<AutData> dedup(auts.begin(), auts.end());
  CHECK(dedup.size() == auts.size());
}
