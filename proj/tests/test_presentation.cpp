#include <random>

#include "budr/errors.hpp"
#include "budr/presentation.hpp"
#include "doctest.h"

using namespace budr;
using BasisPath = Presentation::BasisPath;

TEST_CASE("arrow layout") {
  auto q2 = Presentation::get(2);
  CHECK(q2->num_arrows() == 3);
  CHECK(q2->arrow(0).name == "a1");
  CHECK(q2->arrow(0).src == 0);
  CHECK(q2->arrow(0).tgt == 1);
  CHECK(q2->arrow(1).name == "a2");
  CHECK(q2->arrow(1).src == 1);
  CHECK(q2->arrow(1).tgt == 0);
  CHECK(q2->arrow(2).name == "d");
  CHECK(q2->arrow(2).src == 1);
  CHECK(q2->arrow(2).tgt == 1);

  auto q1 = Presentation::get(1);
  CHECK(q1->num_arrows() == 2);
  auto q5 = Presentation::get(5);
  CHECK(q5->num_arrows() == 6);
  CHECK_THROWS_AS(Presentation(0), std::invalid_argument);
}

TEST_CASE("e=3 relation scheme") {
  auto q = Presentation::get(3);
  const auto& rels = q->relations();
  // binomial, two mixed zeros, two over-length zeros
  REQUIRE(rels.size() == 5);
  CHECK(rels[0].lhs == q->cycle_word(2, 6));
  CHECK(rels[0].rhs == std::vector<int>{3, 3});
  CHECK(rels[1].lhs == std::vector<int>{3, 2});  // a3 after d
  CHECK(rels[1].rhs.empty());
  CHECK(rels[2].lhs == std::vector<int>{1, 3});  // d after a2
  CHECK(rels[2].rhs.empty());
  CHECK(rels[3].lhs.size() == 7);
}

TEST_CASE("e=1 relation scheme") {
  auto q = Presentation::get(1);
  const auto& rels = q->relations();
  REQUIRE(rels.size() == 3);
  CHECK(rels[0].lhs == std::vector<int>{1, 0});
  CHECK(rels[1].lhs == std::vector<int>{0, 1});
  CHECK(rels[2].lhs == std::vector<int>{0, 0});
  CHECK(rels[2].rhs == std::vector<int>{1, 1});
}

TEST_CASE("normal form: rewriting examples") {
  auto q = Presentation::get(3);
  const int d = q->delta_index();

  // delta^2 rewrites to the socle path C^2 of P_3
  auto nf = q->path_normal_form({d, d});
  REQUIRE(nf.has_value());
  CHECK(nf->start == 2);
  CHECK(nf->len == 6);
  CHECK(!nf->is_delta);
  CHECK(q->is_socle_path(*nf));

  // mixed zero: a3 after d
  CHECK(!q->path_normal_form({d, 2}).has_value());
  // d after a2
  CHECK(!q->path_normal_form({1, d}).has_value());
  // delta^3 = 0
  CHECK(!q->path_normal_form({d, d, d}).has_value());
  // over-length alpha path
  CHECK(!q->path_normal_form(q->cycle_word(0, 7)).has_value());
  CHECK(q->path_normal_form(q->cycle_word(0, 6)).has_value());

  CHECK_THROWS_AS(q->path_normal_form({0, 0}), NotComposableError);
}

TEST_CASE("normal form is idempotent and respects the defining relations") {
  std::mt19937 rng(2024);
  for (int e = 1; e <= 6; ++e) {
    auto q = Presentation::get(e);
    // both sides of every relation normalize identically
    for (const auto& rel : q->relations()) {
      auto lhs = q->path_normal_form(rel.lhs);
      if (rel.rhs.empty()) {
        CHECK(!lhs.has_value());
      } else {
        auto rhs = q->path_normal_form(rel.rhs);
        REQUIRE(lhs.has_value());
        REQUIRE(rhs.has_value());
        CHECK(*lhs == *rhs);
      }
    }
    // random composable words: normalize twice == normalize once
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> word;
      int v = static_cast<int>(rng() % e);
      for (int len = 1 + static_cast<int>(rng() % (2 * e + 2)); len > 0; --len) {
        // continue with any arrow out of v
        std::vector<int> outs;
        for (int a = 0; a < q->num_arrows(); ++a)
          if (q->arrow(a).src == v) outs.push_back(a);
        int a = outs[rng() % outs.size()];
        word.push_back(a);
        v = q->arrow(a).tgt;
      }
      auto nf = q->path_normal_form(word);
      if (nf) {
        auto again = q->path_normal_form(q->word_of(*nf));
        REQUIRE(again.has_value());
        CHECK(*again == *nf);
      }
    }
  }
}

TEST_CASE("path basis dimensions") {
  for (int e = 1; e <= 6; ++e) {
    auto q = Presentation::get(e);
    PathBasis pb = compute_path_basis(*q);
    for (int i = 0; i < e - 1; ++i) CHECK(pb.projective_dims[i] == 2 * e + 1);
    CHECK(pb.projective_dims[e - 1] == 2 * e + 2);
    int expected = e == 1 ? 4 : (e - 1) * (2 * e + 1) + 2 * e + 2;
    CHECK(pb.algebra_dim == expected);
  }
  // spec'd instances
  CHECK(compute_path_basis(*Presentation::get(2)).algebra_dim == 11);
  auto pb3 = compute_path_basis(*Presentation::get(3));
  CHECK(pb3.projective_dims == std::vector<int>{7, 7, 8});
}

TEST_CASE("P_e vertex-e basis is ordered top arm, delta, socle") {
  auto q = Presentation::get(3);
  PathBasis pb = compute_path_basis(*q);
  std::vector<BasisPath> at_e;
  for (const auto& entry : pb.projective_basis[2])
    if (entry.end_vertex == 2) at_e.push_back(entry.path);
  REQUIRE(at_e.size() == 4);
  CHECK(at_e[0] == BasisPath{2, 0, false});   // b_{e,1}
  CHECK(at_e[1] == BasisPath{2, 3, false});   // b_{e,2} = C
  CHECK(at_e[2] == BasisPath{2, 1, true});    // b_{e,3} = d
  CHECK(at_e[3] == BasisPath{2, 6, false});   // b_{e,4} = C^2, the socle
}
