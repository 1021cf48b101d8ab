#include <doctest.h>

#include <set>

#include "swg/classify.hpp"
#include "swg/switching.hpp"
#include "oracles.hpp"

using namespace swg;

namespace {

Graph pad(const Graph& g, int n) { return disjoint_union(g, empty_graph(n - g.order())); }

}  // namespace

TEST_CASE("mu sequence by induction") {
  Catalog cat = base_catalog();
  CHECK(cat.types.size() == 1);
  std::vector<std::size_t> expected{1, 1, 2, 3, 7, 16};
  for (int n = 2; n <= 6; ++n) {
    cat = enumerate_types_inductive(n, cat);
    CHECK(cat.types.size() == expected[n - 1]);
  }
}

TEST_CASE("mu sequence by transversal") {
  CHECK(enumerate_types_transversal(3).types.size() == 2);
  CHECK(enumerate_types_transversal(4).types.size() == 3);
  CHECK(enumerate_types_transversal(5).types.size() == 7);
  CHECK(enumerate_types_transversal(6).types.size() == 16);
  CHECK_THROWS_AS(enumerate_types_transversal(8), std::invalid_argument);
}

TEST_CASE("methods agree") {
  for (int n = 1; n <= 6; ++n) {
    Catalog a = build_catalog(n, Method::Inductive);
    Catalog b = build_catalog(n, Method::Transversal);
    REQUIRE(a.types.size() == b.types.size());
    for (std::size_t i = 0; i < a.types.size(); ++i)
      CHECK(a.types[i].key == b.types[i].key);
  }
}

TEST_CASE("catalog(6) carries the sixteen standard names") {
  Catalog cat = build_catalog(6);
  std::set<std::string> names;
  for (const TypeRecord& t : cat.types) {
    CHECK(switch_iso_key(t.representative, 6) == t.key);  // representative invariant
    names.insert(t.name);
  }
  for (const NamedGraph& ng : named_types(6))
    CHECK(names.count(ng.name) == 1);
  CHECK(names.size() == 16);
}

TEST_CASE("switch_class_count") {
  CHECK(switch_class_count(6) == 1024);
  CHECK(switch_class_count(2) == 1);
  CHECK(switch_class_count(5) == 64);
  CHECK(count_switch_classes_exhaustive(5) == 64);
  CHECK_THROWS_AS(switch_class_count(0), std::invalid_argument);
  CHECK_THROWS_AS(switch_class_count(13), std::overflow_error);
}

TEST_CASE("type_of") {
  Catalog cat = build_catalog(6);
  CHECK(type_of(complement(cycle(6)), cat).name == "C_4^6");
  CHECK(type_of(disjoint_union(cycle(3), path(3)), cat).name == "co(L_2^6)");
  CHECK(type_of(pad(disjoint_union(cycle(3), path(2)), 6), cat).name == "co(L_3^6)");
  CHECK_THROWS_AS(type_of(path(5), cat), std::invalid_argument);
}

TEST_CASE("profiles of named types") {
  CHECK(profile_of(pad(complete(3), 6)).k4 == 3);
  CHECK(profile_of(pad(complete(3), 6)).n4 == 3);
  CHECK(profile_of(complement(pad(path(3), 6))).k3 == 14);
  CHECK(profile_of(pad(cycle(5), 6)).k4 == 0);
  CHECK(profile_of(pad(cycle(5), 6)).n4 == 0);
}

TEST_CASE("profile columns sum to the subset counts") {
  Catalog cat = build_catalog(6);
  for (const TypeRecord& t : cat.types) {
    CHECK(t.profile.k3 + t.profile.n3 == 20);
    CHECK(t.profile.k4 + t.profile.n4 + t.profile.l4 == 15);
  }
}

TEST_CASE("inductive step rejects a mismatched previous catalog") {
  Catalog cat3 = build_catalog(3);
  CHECK_THROWS_AS(enumerate_types_inductive(5, cat3), std::invalid_argument);
}

TEST_CASE("documented discrepancy: only one type on two vertices") {
  // The two-vertex complete and empty graphs are switch-equivalent, so the
  // classification has a single type there.
  CHECK(switch_equivalent(complete(2), empty_graph(2)).has_value());
  CHECK(mu(2) == 1);
}
