#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equindex/cohomology.hpp"
#include "equindex/kernels.hpp"
#include "test_support.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace equindex;

TEST_CASE("parallel convolution matches the serial reference") {
#ifdef _OPENMP
  omp_set_num_threads(4);
#endif
  std::mt19937_64 rng(0xc0ffee);
  for (int trial = 0; trial < 40; ++trial) {
    const int na = std::uniform_int_distribution<int>(1, 200)(rng);
    const int nb = std::uniform_int_distribution<int>(1, 200)(rng);
    std::vector<Integer> a, b;
    for (int i = 0; i < na; ++i) a.push_back(test::random_integer(rng, -1000, 1000));
    for (int i = 0; i < nb; ++i) b.push_back(test::random_integer(rng, -1000, 1000));
    const std::size_t out_len = std::uniform_int_distribution<std::size_t>(0, na + nb - 1)(rng);
    const Integer zero = 0;
    const auto serial = kernels::convolve_serial<Integer>(a, b, out_len, zero);
    CHECK(serial == kernels::convolve_parallel<Integer>(a, b, out_len, zero));
    CHECK(serial == kernels::convolve<Integer>(a, b, out_len, zero));
  }
}

TEST_CASE("parallel convolution over CohClass coefficients") {
  std::mt19937_64 rng(99);
  std::vector<CohClass> a, b;
  for (int i = 0; i < 70; ++i) a.push_back(test::random_class(rng, 2));
  for (int i = 0; i < 60; ++i) b.push_back(test::random_class(rng, 2));
  const auto zero = CohClass::zero(2);
  CHECK(kernels::convolve_serial<CohClass>(a, b, 129, zero) ==
        kernels::convolve_parallel<CohClass>(a, b, 129, zero));
}

TEST_CASE("degenerate inputs") {
  const Integer zero = 0;
  std::vector<Integer> a{1, 2, 3}, empty;
  CHECK(kernels::convolve_serial<Integer>(a, empty, 3, zero) == std::vector<Integer>(3, 0));
  CHECK(kernels::convolve_parallel<Integer>(empty, a, 2, zero) == std::vector<Integer>(2, 0));
  CHECK(kernels::convolve_serial<Integer>(a, a, 0, zero).empty());
  // Output longer than the full product is zero-padded.
  CHECK(kernels::convolve_serial<Integer>(a, std::vector<Integer>{1}, 5, zero) ==
        std::vector<Integer>{1, 2, 3, 0, 0});
}
