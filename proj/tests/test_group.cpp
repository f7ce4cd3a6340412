#include <doctest.h>

#include "fixtures.hpp"
#include "levikit/group.hpp"

using namespace levikit;
using namespace levikit::testing;

TEST_CASE("cyclic group table") {
  GroupPtr c4 = cyclic_group(4);
  CHECK(c4->order() == 4);
  CHECK(c4->identity() == 0);
  CHECK(c4->mul(1, 3) == 0);
  CHECK(c4->mul(2, 3) == 1);
  CHECK(c4->inv(1) == 3);
  CHECK(c4->inv(2) == 2);
  CHECK(c4->index_of("a2") == 2);
  CHECK(c4->index_of("zz") == -1);
  CHECK(c4->is_abelian());
  CHECK_FALSE(s3()->is_abelian());
}

TEST_CASE("table validation failures") {
  // identity present, inverses present, associativity broken:
  // (a*a)*b = b but a*(a*b) = a.
  CHECK_THROWS_WITH_AS(
      group_from_table({"e", "a", "b"},
                       {{"e", "a", "b"}, {"a", "e", "e"}, {"b", "e", "a"}}),
      doctest::Contains("!="), Error);
  try {
    group_from_table({"e", "a", "b"},
                     {{"e", "a", "b"}, {"a", "e", "e"}, {"b", "e", "a"}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAssociative);
  }

  try {
    group_from_table({"a", "b"}, {{"a", "a"}, {"a", "a"}});
    FAIL("expected NoIdentity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoIdentity);
  }

  // associative monoid, but 'a' is idempotent and non-invertible
  try {
    group_from_table({"e", "a"}, {{"e", "a"}, {"a", "a"}});
    FAIL("expected NoInverse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoInverse);
  }

  try {
    group_from_table({"e", "e"}, {{"e", "e"}, {"e", "e"}});
    FAIL("expected DuplicateName");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateName);
  }

  try {
    group_from_table({"e", "a"}, {{"e", "a"}});
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("identity located anywhere in the table") {
  // C2 written with the identity second.
  GroupPtr g = group_from_table({"a", "e"}, {{"e", "a"}, {"a", "e"}});
  CHECK(g->identity() == 1);
  CHECK(g->inv(0) == 0);
}

TEST_CASE("subgroup closure") {
  GroupPtr c4 = cyclic_group(4);
  CHECK(subgroup_closure(c4, {2}).members == std::vector<Elem>{0, 2});
  CHECK(subgroup_closure(c4, {}).members == std::vector<Elem>{0});
  CHECK(subgroup_closure(c4, {1}).members == std::vector<Elem>{0, 1, 2, 3});

  GroupPtr c6 = cyclic_group(6);
  CHECK(subgroup_closure(c6, {2}).members == std::vector<Elem>{0, 2, 4});

  GroupPtr g = s3();
  CHECK(subgroup_closure(g, {1}).order() == 2);
  CHECK(subgroup_closure(g, {4}).order() == 3);
  CHECK(subgroup_closure(g, {1, 2}).order() == 6);
}

TEST_CASE("transversals: identity coset first, least element elsewhere") {
  GroupPtr c4 = cyclic_group(4);
  Subgroup h = subgroup_closure(c4, {2});
  CosetTransversal t = left_transversal(c4, h);
  CHECK(t.reps == std::vector<Elem>{0, 1});
  for (Elem g = 0; g < 4; ++g) {
    auto [rep, member] = t.factor(g);
    CHECK(c4->mul(rep, member) == g);
    CHECK(h.contains(member));
  }
  CHECK(t.rep_of(3) == 1);
  CHECK(t.contains_rep(1));
  CHECK_FALSE(t.contains_rep(2));

  GroupPtr g6 = s3();
  Subgroup h2 = subgroup_closure(g6, {1});  // {id, (12)}
  CosetTransversal lt = left_transversal(g6, h2);
  CHECK(lt.reps.size() == 3);
  CHECK(lt.reps[0] == g6->identity());
  for (Elem g = 0; g < 6; ++g) {
    auto [rep, member] = lt.factor(g);
    CHECK(g6->mul(rep, member) == g);
    CHECK(h2.contains(member));
  }
  CosetTransversal rt = right_transversal(g6, h2);
  for (Elem g = 0; g < 6; ++g) {
    auto [rep, member] = rt.factor(g);
    CHECK(g6->mul(member, rep) == g);
    CHECK(h2.contains(member));
  }
}

TEST_CASE("partial homomorphisms") {
  GroupPtr c4 = cyclic_group(4);
  PartialHom h = partial_hom(c4, c4, {2}, {2});
  CHECK(h.domain.members == std::vector<Elem>{0, 2});
  CHECK(h.image.members == std::vector<Elem>{0, 2});
  CHECK(h.is_iso);
  CHECK(h.apply(2) == 2);
  CHECK(h.apply(0) == 0);
  CHECK(h.apply_inverse(2) == 2);
  CHECK_THROWS_AS(h.apply(1), Error);

  // x -> 2x on C4: a homomorphism but not injective.
  PartialHom dbl = partial_hom(c4, c4, {1}, {2});
  CHECK(dbl.domain.order() == 4);
  CHECK(dbl.image.members == std::vector<Elem>{0, 2});
  CHECK_FALSE(dbl.is_iso);
  CHECK_THROWS_AS(dbl.apply_inverse(2), Error);

  // order 2 generator sent to an order 3 element is not a homomorphism
  GroupPtr g = s3();
  try {
    partial_hom(g, g, {1}, {4});
    FAIL("expected NotAHomomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAHomomorphism);
  }

  PartialHom id = identity_hom(c4, subgroup_closure(c4, {2}));
  CHECK(id.is_iso);
  CHECK(id.apply(2) == 2);
}

TEST_CASE("collapse hom onto the trivial group") {
  GroupPtr c2 = cyclic_group(2);
  GroupPtr t = trivial_group();
  PartialHom h = partial_hom(c2, t, {1}, {0});
  CHECK(h.domain.order() == 2);
  CHECK(h.image.order() == 1);
  CHECK_FALSE(h.is_iso);
}

TEST_CASE("minimal generating sets and generator words") {
  GroupPtr c4 = cyclic_group(4);
  Subgroup whole = subgroup_closure(c4, {1});
  CHECK(minimal_generating_set(c4, whole) == std::vector<Elem>{1});
  CHECK(minimal_generating_set(c4, subgroup_closure(c4, {2})) == std::vector<Elem>{2});
  CHECK(minimal_generating_set(c4, subgroup_closure(c4, {})).empty());

  GroupPtr g = s3();
  auto gens = minimal_generating_set(g, subgroup_closure(g, {1, 2}));
  CHECK(gens.size() == 2);

  CHECK(word_in_generators(c4, {1}, 3) == std::vector<int>{0, 0, 0});
  CHECK(word_in_generators(c4, {1, 3}, 3) == std::vector<int>{1});
  CHECK(word_in_generators(c4, {1}, 0).empty());
  // every word multiplies back to its element
  for (Elem x = 0; x < g->order(); ++x) {
    Elem acc = g->identity();
    for (int i : word_in_generators(g, gens, x)) acc = g->mul(acc, gens[i]);
    CHECK(acc == x);
  }
  CHECK_THROWS_AS(word_in_generators(c4, {2}, 1), Error);
}
