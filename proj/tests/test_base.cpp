#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "grcohom/semigroup.hpp"
#include "grcohom/module.hpp"

using namespace grcohom;

TEST_CASE("smoke") {
  auto q = AffineSemigroup::build({{1,0},{0,1}});
  CHECK(q->num_facets() == 2);
  CHECK(q->saturated());
  CHECK(q->membership({3,4}));
  CHECK(!q->membership({-1,0}));
}
