#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holomorphy/errors.hpp"

namespace holomorphy {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with primes strictly ascending; empty for m == 1.
using Factorization = std::vector<PrimePower>;

// Largest input factorize() accepts.
inline constexpr std::uint64_t kFactorizeBound = 1ull << 32;

// Trial-division factorization. Throws std::out_of_range for m == 0 or
// m > kFactorizeBound.
Factorization factorize(std::uint64_t m);

// "2^2 * 3" style rendering; "1" for an empty factorization.
std::string format_factorization(const Factorization& f);

// (a * b) mod m without intermediate overflow. Requires m >= 1.
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// base^exp mod m, result in [0, m). Negative bases are reduced first.
// Throws std::domain_error if m < 2.
std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, std::uint64_t m);

// Euler totient, from factorize(m).
std::uint64_t totient(std::uint64_t m);

// Divisors of m in ascending order.
std::vector<std::uint64_t> divisors_ascending(std::uint64_t m);

// Least t >= 1 with k^t == 1 (mod m). k is taken mod m.
// Throws NotAUnitError if gcd(k, m) != 1, std::domain_error if m < 2.
std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t m);

// {p, e} when m == 2 * p^e with p an odd prime, nullopt otherwise.
std::optional<PrimePower> twice_odd_prime_power(std::uint64_t m);

// Least k with 1 < k < m and multiplicative_order(k, m) == totient(m).
// Requires m == 2 * p^e (such m always have one); throws ShapeError otherwise.
std::uint64_t least_primitive_root(std::uint64_t m);

// Whether k^(p^(e-1)) == 1 (mod p^e). Requires p an odd prime, e >= 1,
// k == 1 (mod p), and p^e representable; throws std::domain_error otherwise.
bool lemma23_holds(std::uint64_t k, std::uint64_t p, std::uint32_t e);

struct Lemma24Result {
  bool p_divides_km1 = false;       // does p divide k - 1
  std::uint64_t gcd_n_km1 = 0;      // gcd(n, k - 1)
  std::uint64_t geom_sum_mod_n = 0; // 1 + k + ... + k^(phi(n)-1) mod n
  friend bool operator==(const Lemma24Result&, const Lemma24Result&) = default;
};

// Reports the three quantities above for n == 2 * p^e and k a unit of
// maximal order mod n. The geometric sum is accumulated term by term.
// Throws ShapeError for bad n, NotAUnitError / GeneratorError for bad k.
Lemma24Result lemma24_check(std::uint64_t k, std::uint64_t n);

// Direct-product decomposition of the unit group mod n: one cyclic factor
// per generator, product of the orders == totient(n). Factors appear in
// ascending order of the prime powers of n they come from (for 2^a with
// a >= 3, the order-2 factor generated by -1 precedes the one generated
// by 5). Intended for small n; verified exhaustively on construction.
struct UnitGroupDecomposition {
  std::vector<std::uint64_t> generators;
  std::vector<std::uint64_t> orders;
};
UnitGroupDecomposition unit_group_decomposition(std::uint64_t n);

}  // namespace holomorphy
