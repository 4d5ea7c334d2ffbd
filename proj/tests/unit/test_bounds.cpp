#include <cmath>

#include "doctest.h"
#include "reference.hpp"
#include "specalloc/bounds.hpp"
#include "specalloc/oracle.hpp"
#include "specalloc/scengen.hpp"

using namespace specalloc;

namespace {

GenConfig geometric(std::uint64_t seed, std::size_t n, double alpha = 4.0) {
  GenConfig cfg;
  cfg.user_count = n;
  cfg.channel_universe = 2;
  cfg.channel_set_mode = ChannelSetMode::equal;
  cfg.sinr_targets_db = {6.0};
  cfg.pathloss_exponent = alpha;
  cfg.density = 1.0 / 100.0;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("constants") {
  CHECK(necessary_constant(4.0) == 10.0);
  CHECK(approximation_constant(4.0) == 10.0);
  CHECK(necessary_constant(2.0) == 5.0);
  CHECK(approximation_constant(2.0) == 3.0);
  CHECK(necessary_constant(3.0) == 9.0);
  CHECK(approximation_constant(3.0) == 7.0);
}

TEST_CASE("preconditions are enforced") {
  CHECK_NOTHROW(require_bound_preconditions(generate(geometric(1, 5)), 4.0));
  CHECK_THROWS_AS(require_bound_preconditions(generate(geometric(1, 5)), 3.0), std::invalid_argument);

  GenConfig mixed = geometric(1, 5);
  mixed.sinr_targets_db = {0.0, 12.0};
  mixed.seed = 3;
  CHECK_THROWS_AS(require_bound_preconditions(generate(mixed), 4.0), std::invalid_argument);

  GenConfig sets = geometric(1, 5);
  sets.channel_set_mode = ChannelSetMode::uniform;
  sets.channel_universe = 6;
  CHECK_THROWS_AS(require_bound_preconditions(generate(sets), 4.0), std::invalid_argument);

  Scenario s = generate(geometric(2, 4));
  s.gain(0, 1) *= 1.5;
  CHECK_THROWS_AS(necessary_check(s, BinaryVector(4, 1), 4.0), std::invalid_argument);
}

TEST_CASE("sufficient vectors pass the necessary constraint") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Scenario s = generate(geometric(seed, 7));
    const BqcProblem p = build_equal(s);
    for (std::uint64_t m = 0; m < 128; ++m) {
      const BinaryVector x = ref::mask_to_vector(m, 7);
      if (ref::bqc_feasible(p, x)) CHECK(necessary_check(s, x, 4.0));
    }
  }
}

TEST_CASE("optimal allocations pass the necessary constraint") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Scenario s = generate(geometric(seed, 6));
    // Every successful allocation, not only the reported optimum.
    ref::for_each_allocation(s, [&](const Allocation& a) {
      if (!ref::successful(s, a)) return;
      BinaryVector x(6);
      for (std::size_t i = 0; i < 6; ++i) x[i] = a.transmitting(i);
      CHECK(necessary_check(s, x, 4.0));
    });
  }
}

TEST_CASE("peeling yields nested sets that satisfy their constraint") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Scenario s = generate(geometric(seed, 8));
    std::vector<std::size_t> all{0, 1, 2, 3, 4, 5, 6, 7};
    const auto ln = peel_to_constraint(s, all, 10.0);
    const auto ls = peel_to_constraint(s, ln, 1.0);
    CHECK(ls.size() <= ln.size());
    for (std::size_t i : ls) CHECK(std::find(ln.begin(), ln.end(), i) != ln.end());
    BinaryVector x(8, 0);
    for (std::size_t i : ls) x[i] = 1;
    CHECK(ref::bqc_feasible(build_equal(s), x));
  }
}

TEST_CASE("approximation gap report") {
  const Scenario one = generate(geometric(4, 1));
  const BoundReport r1 = approx_gap_check(one, 4.0);
  CHECK(r1.opt_exact == 1.0);
  CHECK(r1.opt_bqc == 1.0);
  CHECK(r1.holds_approx);

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Scenario s = generate(geometric(seed, 2 + seed % 6));
    const BoundReport r = approx_gap_check(s, 4.0);
    CHECK(r.constant_c == 10.0);
    CHECK(r.prop4_lhs == doctest::Approx(r.opt_exact / 10.0 - 1.0));
    CHECK(r.holds_approx);
    CHECK(r.holds_necessary_constant);
    CHECK(r.optimum_passes_necessary);
    CHECK(r.sufficient_count <= r.necessary_count);
    CHECK(r.holds_set_bound);
    CHECK(r.opt_bqc <= r.opt_exact + 1e-9);
  }
}

TEST_CASE("smaller pathloss exponents") {
  for (double alpha : {2.0, 3.0}) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const Scenario s = generate(geometric(seed, 6, alpha));
      const BoundReport r = approx_gap_check(s, alpha);
      CHECK(r.constant_c == necessary_constant(alpha));
      CHECK(r.approx_constant == approximation_constant(alpha));
      CHECK(r.sufficient_count <= r.necessary_count);
    }
  }
}
