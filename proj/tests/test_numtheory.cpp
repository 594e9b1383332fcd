#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "holomorphy/numtheory.hpp"

using namespace holomorphy;

namespace {

// Slow reference: multiply out base exp times.
std::uint64_t pow_mod_reference(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  for (std::uint64_t i = 0; i < exp; ++i) acc = acc * (base % m) % m;
  return acc;
}

// Slow reference: count residues coprime to m.
std::uint64_t totient_reference(std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t count = 0;
  for (std::uint64_t r = 1; r < m; ++r) {
    if (std::gcd(r, m) == 1) ++count;
  }
  return count;
}

bool is_prime_reference(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("factorize matches pinned examples") {
  CHECK(factorize(18) == Factorization{{2, 1}, {3, 2}});
  CHECK(factorize(54) == Factorization{{2, 1}, {3, 3}});
  CHECK(factorize(1) == Factorization{});
  CHECK(factorize(2) == Factorization{{2, 1}});
  CHECK(factorize(97) == Factorization{{97, 1}});
  CHECK(factorize(1ull << 32) == Factorization{{2, 32}});
}

TEST_CASE("factorize output is sorted, prime, and reconstructs the input") {
  for (std::uint64_t m = 1; m <= 2000; ++m) {
    const Factorization f = factorize(m);
    std::uint64_t product = 1;
    std::uint64_t last_prime = 0;
    for (const auto& [prime, exponent] : f) {
      CHECK(prime > last_prime);
      CHECK(is_prime_reference(prime));
      CHECK(exponent >= 1);
      for (std::uint32_t i = 0; i < exponent; ++i) product *= prime;
      last_prime = prime;
    }
    CHECK(product == m);
  }
}

TEST_CASE("factorize rejects out-of-range input") {
  CHECK_THROWS_AS(factorize(0), std::out_of_range);
  CHECK_THROWS_AS(factorize((1ull << 32) + 1), std::out_of_range);
}

TEST_CASE("format_factorization") {
  CHECK(format_factorization(factorize(12)) == "2^2 * 3");
  CHECK(format_factorization(factorize(18)) == "2 * 3^2");
  CHECK(format_factorization(factorize(7)) == "7");
  CHECK(format_factorization({}) == "1");
}

TEST_CASE("mod_pow matches pinned examples") {
  CHECK(mod_pow(5, 3, 18) == 17);
  CHECK(mod_pow(4, 3, 9) == 1);
  CHECK(mod_pow(5, 0, 18) == 1);
}

TEST_CASE("mod_pow agrees with the slow reference") {
  for (std::uint64_t m : {2ull, 7ull, 18ull, 50ull, 97ull}) {
    for (std::uint64_t base = 0; base < m; ++base) {
      for (std::uint64_t exp = 0; exp <= 40; ++exp) {
        CHECK(mod_pow(static_cast<std::int64_t>(base), exp, m) ==
              pow_mod_reference(base, exp, m));
      }
    }
  }
}

TEST_CASE("mod_pow reduces negative bases") {
  CHECK(mod_pow(-1, 3, 18) == 17);
  CHECK(mod_pow(-1, 2, 18) == 1);
  CHECK(mod_pow(-13, 1, 18) == 5);
}

TEST_CASE("mod_pow rejects modulus below 2") {
  CHECK_THROWS_AS(mod_pow(3, 4, 1), std::domain_error);
  CHECK_THROWS_AS(mod_pow(3, 4, 0), std::domain_error);
}

TEST_CASE("totient matches pinned examples and the coprime count") {
  CHECK(totient(18) == 6);
  CHECK(totient(50) == 20);
  for (std::uint64_t m = 1; m <= 10000; ++m) {
    CHECK(totient(m) == totient_reference(m));
  }
}

TEST_CASE("divisors_ascending") {
  CHECK(divisors_ascending(18) ==
        std::vector<std::uint64_t>{1, 2, 3, 6, 9, 18});
  CHECK(divisors_ascending(1) == std::vector<std::uint64_t>{1});
  for (std::uint64_t m : {12ull, 36ull, 210ull}) {
    const auto divs = divisors_ascending(m);
    CHECK(std::is_sorted(divs.begin(), divs.end()));
    for (std::uint64_t d : divs) CHECK(m % d == 0);
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= m; ++d) {
      if (m % d == 0) ++count;
    }
    CHECK(divs.size() == count);
  }
}

TEST_CASE("multiplicative_order matches pinned examples") {
  CHECK(multiplicative_order(5, 18) == 6);
  CHECK(multiplicative_order(7, 18) == 3);
  CHECK(multiplicative_order(1, 18) == 1);
  CHECK(multiplicative_order(17, 18) == 2);
}

TEST_CASE("multiplicative_order is the least annihilating exponent") {
  for (std::uint64_t m = 2; m <= 300; ++m) {
    for (std::uint64_t k = 1; k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      const std::uint64_t order = multiplicative_order(k, m);
      CHECK(totient(m) % order == 0);
      CHECK(pow_mod_reference(k, order, m) == 1);
      for (std::uint64_t t = 1; t < order; ++t) {
        CHECK(pow_mod_reference(k, t, m) != 1);
      }
    }
  }
}

TEST_CASE("multiplicative_order rejects non-units") {
  CHECK_THROWS_AS(multiplicative_order(6, 18), NotAUnitError);
  CHECK_THROWS_AS(multiplicative_order(0, 18), NotAUnitError);
  CHECK_THROWS_AS(multiplicative_order(3, 1), std::domain_error);
}

TEST_CASE("twice_odd_prime_power recognizes the shape") {
  CHECK(twice_odd_prime_power(18) == PrimePower{3, 2});
  CHECK(twice_odd_prime_power(6) == PrimePower{3, 1});
  CHECK(twice_odd_prime_power(50) == PrimePower{5, 2});
  CHECK_FALSE(twice_odd_prime_power(12).has_value());
  CHECK_FALSE(twice_odd_prime_power(2).has_value());
  CHECK_FALSE(twice_odd_prime_power(9).has_value());
  CHECK_FALSE(twice_odd_prime_power(4).has_value());
  CHECK_FALSE(twice_odd_prime_power(0).has_value());
  CHECK_FALSE(twice_odd_prime_power(1).has_value());
  CHECK_FALSE(twice_odd_prime_power(60).has_value());
}

TEST_CASE("least_primitive_root matches pinned examples") {
  CHECK(least_primitive_root(6) == 5);
  CHECK(least_primitive_root(18) == 5);
  CHECK(least_primitive_root(10) == 3);
}

TEST_CASE("least_primitive_root returns the least maximal-order unit") {
  for (std::uint64_t m = 6; m <= 1000; m += 2) {
    if (!twice_odd_prime_power(m)) continue;
    const std::uint64_t k = least_primitive_root(m);
    CHECK(std::gcd(k, m) == 1);
    CHECK(multiplicative_order(k, m) == totient(m));
    for (std::uint64_t smaller = 2; smaller < k; ++smaller) {
      if (std::gcd(smaller, m) != 1) continue;
      CHECK(multiplicative_order(smaller, m) != totient(m));
    }
  }
}

TEST_CASE("least_primitive_root rejects other shapes") {
  CHECK_THROWS_AS(least_primitive_root(12), ShapeError);
  CHECK_THROWS_AS(least_primitive_root(9), ShapeError);
  CHECK_THROWS_AS(least_primitive_root(8), ShapeError);
  CHECK_THROWS_AS(least_primitive_root(0), ShapeError);
  CHECK_THROWS_AS(least_primitive_root(1), ShapeError);
}

TEST_CASE("lemma23_holds across the full sweep") {
  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull}) {
    std::uint64_t pe = 1;
    for (std::uint32_t e = 1; e <= 4; ++e) {
      pe *= p;
      for (std::uint64_t k = 1; k < pe; k += p) {
        CHECK(lemma23_holds(k, p, e));
        // Independent route for the same congruence.
        CHECK(pow_mod_reference(k, pe / p, pe) == 1);
      }
    }
  }
}

TEST_CASE("lemma23_holds validates its preconditions") {
  CHECK_THROWS_AS(lemma23_holds(2, 3, 2), std::domain_error);   // k != 1 mod p
  CHECK_THROWS_AS(lemma23_holds(1, 2, 2), std::domain_error);   // p even
  CHECK_THROWS_AS(lemma23_holds(1, 9, 2), std::domain_error);   // p not prime
  CHECK_THROWS_AS(lemma23_holds(1, 3, 0), std::domain_error);   // e == 0
}

TEST_CASE("lemma24_check matches pinned examples") {
  CHECK(lemma24_check(5, 6) == Lemma24Result{false, 2, 0});
  CHECK(lemma24_check(5, 18) == Lemma24Result{false, 2, 0});
  CHECK(lemma24_check(3, 10) == Lemma24Result{false, 2, 0});
}

TEST_CASE("lemma24_check across every context up to 500") {
  std::uint64_t contexts = 0;
  for (std::uint64_t n = 6; n <= 500; n += 2) {
    const auto pp = twice_odd_prime_power(n);
    if (!pp) continue;
    ++contexts;
    const std::uint64_t phi = totient(n);
    for (std::uint64_t k = 2; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      if (multiplicative_order(k, n) != phi) continue;
      CHECK(lemma24_check(k, n) == Lemma24Result{false, 2, 0});
      // Same sum, computed the slow way.
      std::uint64_t slow = 0;
      for (std::uint64_t i = 0; i < phi; ++i) {
        slow = (slow + pow_mod_reference(k, i, n)) % n;
      }
      CHECK(slow == 0);
      CHECK(std::gcd(n, k - 1) == 2);
      CHECK((k - 1) % pp->prime != 0);
    }
  }
  CHECK(contexts > 20);  // the sweep actually covered the range
}

TEST_CASE("lemma24_check validates its preconditions") {
  CHECK_THROWS_AS(lemma24_check(4, 18), NotAUnitError);
  CHECK_THROWS_AS(lemma24_check(7, 18), GeneratorError);  // order 3, not 6
  CHECK_THROWS_AS(lemma24_check(1, 18), GeneratorError);
  CHECK_THROWS_AS(lemma24_check(5, 12), ShapeError);
}

TEST_CASE("unit_group_decomposition spans the unit group independently") {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const UnitGroupDecomposition dec = unit_group_decomposition(n);
    REQUIRE(dec.generators.size() == dec.orders.size());
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < dec.generators.size(); ++i) {
      CHECK(multiplicative_order(dec.generators[i], n) == dec.orders[i]);
      product *= dec.orders[i];
    }
    CHECK(product == totient(n));

    // Every unit is reached exactly once by the mixed-radix products.
    std::set<std::uint64_t> units;
    for (std::uint64_t u = 1; u < n; ++u) {
      if (std::gcd(u, n) == 1) units.insert(u);
    }
    std::set<std::uint64_t> produced;
    std::vector<std::uint64_t> digits(dec.generators.size(), 0);
    for (std::uint64_t count = 0; count < product; ++count) {
      std::uint64_t value = 1 % n;
      for (std::size_t i = 0; i < digits.size(); ++i) {
        for (std::uint64_t t = 0; t < digits[i]; ++t) {
          value = value * dec.generators[i] % n;
        }
      }
      CHECK(produced.insert(value).second);
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < dec.orders[i]) break;
        digits[i] = 0;
      }
    }
    CHECK(produced == units);
  }
}

TEST_CASE("unit_group_decomposition handles the even prime-power cases") {
  // mod 8 the units need two generators: -1 and 5
  const UnitGroupDecomposition mod8 = unit_group_decomposition(8);
  CHECK(mod8.generators == std::vector<std::uint64_t>{7, 5});
  CHECK(mod8.orders == std::vector<std::uint64_t>{2, 2});

  // mod 15 the units are Z4 x Z2 (no single generator exists)
  const UnitGroupDecomposition mod15 = unit_group_decomposition(15);
  CHECK(mod15.orders == std::vector<std::uint64_t>{2, 4});

  // cyclic cases come back as a single factor
  CHECK(unit_group_decomposition(18).orders ==
        std::vector<std::uint64_t>{6});
  CHECK(unit_group_decomposition(9).orders ==
        std::vector<std::uint64_t>{6});
}
