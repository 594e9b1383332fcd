#include "holomorphy/holomorph.hpp"

#include <numeric>
#include <sstream>

#include "holomorphy/numtheory.hpp"

namespace holomorphy {

HolContext::HolContext(std::uint64_t n, std::uint64_t p, std::uint32_t e,
                       std::uint64_t phi, std::uint64_t k)
    : n_(n), p_(p), e_(e), phi_(phi), k_(k) {
  k_pows_.resize(phi_);
  std::uint64_t acc = 1;
  for (std::uint64_t b = 0; b < phi_; ++b) {
    k_pows_[b] = acc;
    acc = mod_mul(acc, k_, n_);
  }
}

HolContext HolContext::make(std::uint64_t n, std::optional<std::uint64_t> k) {
  const auto pp = twice_odd_prime_power(n);
  if (!pp) {
    std::string detail;
    if (n >= 1 && n <= kFactorizeBound) {
      detail = " = " + format_factorization(factorize(n));
    }
    throw ShapeError("make_context: n = " + std::to_string(n) + detail +
                     " is not of the form 2 * p^e with p an odd prime");
  }
  std::uint64_t phi = pp->prime - 1;
  for (std::uint32_t i = 1; i < pp->exponent; ++i) phi *= pp->prime;

  std::uint64_t gen;
  if (k) {
    if (*k <= 1 || *k >= n) {
      throw GeneratorError("make_context: k = " + std::to_string(*k) +
                           " is outside (1, " + std::to_string(n) + ")");
    }
    if (std::gcd(*k, n) != 1) {
      throw GeneratorError("make_context: k = " + std::to_string(*k) +
                           " is not a unit mod " + std::to_string(n));
    }
    if (multiplicative_order(*k, n) != phi) {
      throw GeneratorError("make_context: k = " + std::to_string(*k) +
                           " has order " +
                           std::to_string(multiplicative_order(*k, n)) +
                           " mod " + std::to_string(n) + ", expected " +
                           std::to_string(phi));
    }
    gen = *k;
  } else {
    gen = least_primitive_root(n);
  }
  return HolContext(n, pp->prime, pp->exponent, phi, gen);
}

HolElem HolContext::elem(std::int64_t a, std::int64_t b) const {
  const auto sn = static_cast<std::int64_t>(n_);
  const auto sphi = static_cast<std::int64_t>(phi_);
  return {((a % sn) + sn) % sn, ((b % sphi) + sphi) % sphi};
}

HolElem HolContext::mul(const HolElem& g, const HolElem& h) const {
  const std::uint64_t twisted =
      mod_mul(static_cast<std::uint64_t>(h.a), k_pows_[g.b], n_);
  return {static_cast<std::int64_t>(
              (static_cast<std::uint64_t>(g.a) + twisted) % n_),
          static_cast<std::int64_t>(
              (static_cast<std::uint64_t>(g.b) + h.b) % phi_)};
}

HolElem HolContext::inverse(const HolElem& g) const {
  const std::uint64_t b_inv = (phi_ - static_cast<std::uint64_t>(g.b)) % phi_;
  // k^-b as k^(phi - b)
  const std::uint64_t a_inv =
      (n_ - mod_mul(static_cast<std::uint64_t>(g.a), k_pows_[b_inv], n_)) % n_;
  return {static_cast<std::int64_t>(a_inv), static_cast<std::int64_t>(b_inv)};
}

std::uint64_t HolContext::conjugate_by_y_power(std::uint64_t a,
                                               std::uint64_t b) const {
  return mod_mul(a % n_, mod_pow(static_cast<std::int64_t>(k_), b, n_), n_);
}

HolElem HolContext::power(const HolElem& g, std::uint64_t m) const {
  const std::uint64_t kb = k_pows_[g.b];
  std::uint64_t sum = 0;
  std::uint64_t term = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    sum = (sum + term) % n_;
    term = mod_mul(term, kb, n_);
  }
  const std::uint64_t a = mod_mul(static_cast<std::uint64_t>(g.a), sum, n_);
  const std::uint64_t b =
      mod_mul(static_cast<std::uint64_t>(g.b), m % phi_, phi_);
  return {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)};
}

std::uint64_t HolContext::element_order(const HolElem& g) const {
  HolElem acc = g;
  std::uint64_t t = 1;
  while (acc != identity()) {
    acc = mul(acc, g);
    ++t;
  }
  return t;
}

std::vector<HolElem> HolContext::center() const {
  std::vector<HolElem> out;
  const std::vector<HolElem> all = elements();
  for (const HolElem& g : all) {
    bool central = true;
    for (const HolElem& h : all) {
      if (mul(g, h) != mul(h, g)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(g);
  }
  return out;
}

std::vector<HolElem> HolContext::elements() const {
  std::vector<HolElem> out;
  out.reserve(n_ * phi_);
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(n_); ++a) {
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(phi_); ++b) {
      out.push_back({a, b});
    }
  }
  return out;
}

std::size_t HolContext::index_of(const HolElem& g) const {
  return static_cast<std::size_t>(g.a) * phi_ + static_cast<std::size_t>(g.b);
}

HolElem HolContext::element_at(std::size_t index) const {
  return {static_cast<std::int64_t>(index / phi_),
          static_cast<std::int64_t>(index % phi_)};
}

std::string HolContext::format(const HolElem& g) const {
  if (g.a == 0 && g.b == 0) return "1";
  std::ostringstream os;
  if (g.a > 0) {
    os << "x";
    if (g.a > 1) os << "^" << g.a;
  }
  if (g.b > 0) {
    if (g.a > 0) os << " ";
    os << "y";
    if (g.b > 1) os << "^" << g.b;
  }
  return os.str();
}

}  // namespace holomorphy
