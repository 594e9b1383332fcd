#include "holomorphy/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace holomorphy {

Factorization factorize(std::uint64_t m) {
  if (m == 0 || m > kFactorizeBound) {
    throw std::out_of_range("factorize: argument must be in [1, 2^32], got " +
                            std::to_string(m));
  }
  Factorization out;
  auto strip = [&](std::uint64_t d) {
    std::uint32_t mult = 0;
    while (m % d == 0) {
      m /= d;
      ++mult;
    }
    if (mult > 0) out.push_back({d, mult});
  };
  strip(2);
  for (std::uint64_t d = 3; d * d <= m; d += 2) strip(d);
  if (m > 1) out.push_back({m, 1});
  return out;
}

std::string format_factorization(const Factorization& f) {
  if (f.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) os << " * ";
    os << f[i].prime;
    if (f[i].exponent > 1) os << "^" << f[i].exponent;
  }
  return os.str();
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m < 2) {
    throw std::domain_error("mod_pow: modulus must be >= 2, got " +
                            std::to_string(m));
  }
  std::int64_t reduced =
      base % static_cast<std::int64_t>(m);
  if (reduced < 0) reduced += static_cast<std::int64_t>(m);
  std::uint64_t acc = 1;
  std::uint64_t sq = static_cast<std::uint64_t>(reduced);
  while (exp > 0) {
    if (exp & 1) acc = mod_mul(acc, sq, m);
    sq = mod_mul(sq, sq, m);
    exp >>= 1;
  }
  return acc;
}

std::uint64_t totient(std::uint64_t m) {
  std::uint64_t out = 1;
  for (const auto& [prime, exponent] : factorize(m)) {
    out *= prime - 1;
    for (std::uint32_t i = 1; i < exponent; ++i) out *= prime;
  }
  return out;
}

std::vector<std::uint64_t> divisors_ascending(std::uint64_t m) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [prime, exponent] : factorize(m)) {
    const std::size_t existing = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t i = 0; i < exponent; ++i) {
      pk *= prime;
      for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t m) {
  if (m < 2) {
    throw std::domain_error("multiplicative_order: modulus must be >= 2");
  }
  k %= m;
  if (std::gcd(k, m) != 1) {
    throw NotAUnitError("multiplicative_order: " + std::to_string(k) +
                        " is not a unit mod " + std::to_string(m));
  }
  for (std::uint64_t d : divisors_ascending(totient(m))) {
    if (mod_pow(static_cast<std::int64_t>(k), d, m) == 1) return d;
  }
  // Euler's theorem guarantees the loop returns.
  throw std::logic_error("multiplicative_order: no exponent found");
}

std::optional<PrimePower> twice_odd_prime_power(std::uint64_t m) {
  if (m < 6 || m % 2 != 0) return std::nullopt;
  Factorization f = factorize(m);
  if (f.size() != 2) return std::nullopt;
  if (f[0] != PrimePower{2, 1}) return std::nullopt;
  return f[1];
}

namespace {

ShapeError shape_error(std::uint64_t m) {
  std::string detail =
      m >= 1 && m <= kFactorizeBound
          ? " = " + format_factorization(factorize(m))
          : "";
  return ShapeError(std::to_string(m) + detail +
                    " is not of the form 2 * p^e with p an odd prime");
}

}  // namespace

std::uint64_t least_primitive_root(std::uint64_t m) {
  if (!twice_odd_prime_power(m)) throw shape_error(m);
  const std::uint64_t phi = totient(m);
  for (std::uint64_t k = 2; k < m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    if (multiplicative_order(k, m) == phi) return k;
  }
  // Unit groups mod 2 * p^e are cyclic, so a generator exists.
  throw std::logic_error("least_primitive_root: no generator found");
}

bool lemma23_holds(std::uint64_t k, std::uint64_t p, std::uint32_t e) {
  if (p < 3 || factorize(p) != Factorization{{p, 1}}) {
    throw std::domain_error("lemma23_holds: p = " + std::to_string(p) +
                            " is not an odd prime");
  }
  if (e == 0) throw std::domain_error("lemma23_holds: e must be >= 1");
  if (k % p != 1) {
    throw std::domain_error("lemma23_holds: k = " + std::to_string(k) +
                            " is not congruent to 1 mod " + std::to_string(p));
  }
  std::uint64_t pe = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (pe > (1ull << 62) / p) {
      throw std::domain_error("lemma23_holds: p^e does not fit");
    }
    pe *= p;
  }
  return mod_pow(static_cast<std::int64_t>(k % pe), pe / p, pe) == 1;
}

Lemma24Result lemma24_check(std::uint64_t k, std::uint64_t n) {
  const auto pp = twice_odd_prime_power(n);
  if (!pp) throw shape_error(n);
  k %= n;
  if (std::gcd(k, n) != 1) {
    throw NotAUnitError("lemma24_check: " + std::to_string(k) +
                        " is not a unit mod " + std::to_string(n));
  }
  const std::uint64_t phi = totient(n);
  if (multiplicative_order(k, n) != phi) {
    throw GeneratorError("lemma24_check: " + std::to_string(k) +
                         " does not have maximal order mod " +
                         std::to_string(n));
  }
  // k != 1 here because phi >= 2 for every valid n.
  Lemma24Result out;
  out.p_divides_km1 = (k - 1) % pp->prime == 0;
  out.gcd_n_km1 = std::gcd(n, k - 1);
  std::uint64_t acc = 0;
  std::uint64_t term = 1;
  for (std::uint64_t i = 0; i < phi; ++i) {
    acc = (acc + term) % n;
    term = mod_mul(term, k, n);
  }
  out.geom_sum_mod_n = acc;
  return out;
}

UnitGroupDecomposition unit_group_decomposition(std::uint64_t n) {
  if (n == 0 || n > kFactorizeBound) {
    throw std::domain_error("unit_group_decomposition: n out of range");
  }
  UnitGroupDecomposition out;
  if (n <= 2) return out;  // trivial unit group

  // CRT lift: v mod q^a, 1 mod everything else.
  auto lift = [&](std::uint64_t v, std::uint64_t qa) {
    const std::uint64_t rest = n / qa;
    if (rest == 1) return v % n;
    for (std::uint64_t u = v;; u += qa) {
      if (u % rest == 1) return u % n;
    }
  };

  for (const auto& [prime, exponent] : factorize(n)) {
    std::uint64_t qa = 1;
    for (std::uint32_t i = 0; i < exponent; ++i) qa *= prime;
    if (prime == 2) {
      if (exponent == 1) continue;  // contributes nothing
      out.generators.push_back(lift(qa - 1, qa));
      if (exponent >= 3) out.generators.push_back(lift(5, qa));
    } else {
      // Least generator of the cyclic unit group mod an odd prime power.
      const std::uint64_t local_phi = qa / prime * (prime - 1);
      std::uint64_t g = 0;
      for (std::uint64_t t = 2; t < qa; ++t) {
        if (std::gcd(t, qa) != 1) continue;
        if (multiplicative_order(t, qa) == local_phi) {
          g = t;
          break;
        }
      }
      if (g == 0) throw std::logic_error("no primitive root mod " +
                                         std::to_string(qa));
      out.generators.push_back(lift(g, qa));
    }
  }

  std::uint64_t product = 1;
  for (std::uint64_t g : out.generators) {
    out.orders.push_back(multiplicative_order(g, n));
    product *= out.orders.back();
  }
  if (product != totient(n)) {
    throw ConsistencyError("unit_group_decomposition: orders multiply to " +
                           std::to_string(product) + ", expected totient " +
                           std::to_string(totient(n)));
  }

  // The mixed-radix products must be pairwise distinct (and therefore
  // cover the whole unit group, by the count above).
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> digits(out.generators.size(), 0);
  for (std::uint64_t count = 0; count < product; ++count) {
    std::uint64_t value = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      value = mod_mul(value, mod_pow(static_cast<std::int64_t>(
                                         out.generators[i]),
                                     digits[i], n),
                      n);
    }
    if (!seen.insert(value).second) {
      throw ConsistencyError(
          "unit_group_decomposition: factors are not independent mod " +
          std::to_string(n));
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < out.orders[i]) break;
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace holomorphy
