#include <doctest.h>

#include "culab/corpus.hpp"
#include "culab/harness.hpp"
#include "culab/search.hpp"

using namespace culab;

TEST_CASE("the harness is clean on the corpus") {
  for (const auto& m : corpus()) {
    const auto h = run_harness(m.model, Scale::whole(m.model));
    CHECK_MESSAGE(h.ok(), m.name << "\n" << harness_text(h));
  }
}

TEST_CASE("the harness is clean on all models up to size 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& m : enumerate_models(n)) {
      const auto h = run_harness(m, Scale::whole(m));
      CHECK_MESSAGE(h.ok(), harness_text(h));
    }
  }
}

TEST_CASE("the harness reports checks") {
  const auto z = zero_inf();
  const auto h = run_harness(z, Scale::whole(z));
  CHECK_FALSE(h.checks.empty());
  std::size_t checked = 0;
  for (const auto& c : h.checks) checked += c.checked;
  CHECK(checked > 0);
  CHECK(harness_json(h).contains("checks"));
}
