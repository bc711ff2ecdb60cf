#pragma once

#include "heis/automorphism.hpp"
#include "heis/element.hpp"
#include "heis/gl2.hpp"

#include <cstdint>
#include <random>

namespace heis {

/**
 * Seeded generator of random test values.
 *
 * Coordinates and central offsets are uniform in [-10^9, 10^9]. Matrices are
 * evaluations of random words of length 0..20 whose letters are uniform over
 * rho, tau, kappa, with rho/tau exponents uniform in [-3,3] minus {0} and
 * kappa exponent 1, so every sample lies in GL(2,Z) by construction.
 */
class sampler {
public:
  static constexpr std::int64_t coordinate_bound = 1'000'000'000;
  static constexpr std::size_t max_word_length = 20;

  explicit sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi)
  {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  integer coordinate(std::int64_t bound = coordinate_bound) { return uniform(-bound, bound); }

  element any_element(std::int64_t bound = coordinate_bound)
  {
    return {coordinate(bound), coordinate(bound), coordinate(bound)};
  }

  inner_vector any_vector(std::int64_t bound = coordinate_bound)
  {
    return {coordinate(bound), coordinate(bound)};
  }

  generator_word any_word(std::size_t max_length = max_word_length)
  {
    auto length = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_length)));
    generator_word w;
    for (std::size_t i = 0; i < length; ++i) {
      switch (uniform(0, 2)) {
      case 0:
        w.push_back(symbol::rho, nonzero_exponent());
        break;
      case 1:
        w.push_back(symbol::tau, nonzero_exponent());
        break;
      default:
        w.push_back(symbol::kappa, 1);
      }
    }
    return w;
  }

  gl2_matrix any_matrix() { return eval_word(any_word()); }

  automorphism any_automorphism() { return {any_matrix(), coordinate(), coordinate()}; }

  std::mt19937_64 &engine() { return rng_; }

private:
  std::int64_t nonzero_exponent()
  {
    std::int64_t e = uniform(1, 3);
    return uniform(0, 1) != 0 ? e : -e;
  }

  std::mt19937_64 rng_;
};

} // namespace heis
