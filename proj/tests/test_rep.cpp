#include <random>

#include "budr/errors.hpp"
#include "budr/rep.hpp"
#include "doctest.h"

using namespace budr;
using BasisPath = Presentation::BasisPath;

namespace {

StringWord parse_word(const Presentation& q, const std::string& s) {
  return ModuleSpec::parse(q, "str:" + s).word;
}

}  // namespace

TEST_CASE("simples") {
  PrimeScope scope(7);
  auto q = Presentation::get(3);
  Rep s3 = simple_module(q, 2);
  CHECK(s3.dims == std::vector<int>{0, 0, 1});
  CHECK(satisfies_relations(s3));

  auto q1 = Presentation::get(1);
  Rep s1 = simple_module(q1, 0);
  CHECK(s1.dims == std::vector<int>{1});
  CHECK(is_zero(s1.arr[0]));
  CHECK(is_zero(s1.arr[1]));
  CHECK_THROWS_AS(simple_module(q, 5), BadVertexError);
}

TEST_CASE("projectives have the paper's dimension vectors") {
  PrimeScope scope(7);
  auto q = Presentation::get(3);
  Rep p3 = projective_module(q, 2);
  CHECK(p3.dims == std::vector<int>{2, 2, 4});
  CHECK(p3.total_dim() == 8);
  Rep p1 = projective_module(q, 0);
  CHECK(p1.dims == std::vector<int>{3, 2, 2});
  CHECK(p1.total_dim() == 7);

  auto q1 = Presentation::get(1);
  CHECK(projective_module(q1, 0).dims == std::vector<int>{4});
}

TEST_CASE("string modules") {
  PrimeScope scope(7);
  auto q = Presentation::get(3);

  Rep m = string_module(q, parse_word(*q, "a1*a3*d~"));
  CHECK(m.dims == std::vector<int>{1, 1, 2});

  CHECK_THROWS_AS(string_module(q, parse_word(*q, "d*d")), InvalidStringError);
  // immediate backtrack
  CHECK_THROWS_AS(string_module(q, parse_word(*q, "a1*a1~")),
                  InvalidStringError);
  // socle-length direct run
  CHECK_THROWS_AS(string_module(q, ModuleSpec::parse(*q, "str:a3*a2*a1*a3*a2*a1").word),
                  InvalidStringError);

  auto q2 = Presentation::get(2);
  Rep w = string_module(q2, parse_word(*q2, "a1*a2"));
  CHECK(w.dims == std::vector<int>{1, 2});

  // empty word: explicit base vertex
  Rep s = build_module(q, "str@2:");
  CHECK(s.dims == std::vector<int>{0, 1, 0});
}

TEST_CASE("band modules") {
  PrimeScope scope(7);
  auto q = Presentation::get(3);
  Rep b = band_module(q, 1, Fp(2));
  CHECK(b.dims == std::vector<int>{1, 1, 2});
  // delta in (top, socle) ordering
  CHECK(b.arr[3](0, 0) == Fp(0));
  CHECK(b.arr[3](1, 0) == Fp(2));
  CHECK(b.arr[3](0, 1) == Fp(0));
  CHECK(b.arr[3](1, 1) == Fp(0));

  CHECK(band_module(q, 2, Fp(3)).total_dim() == 8);
  CHECK_THROWS_AS(band_module(q, 1, Fp(0)), ZeroLambdaError);

  // mixed zero acts as zero on the band
  Rep b2 = band_module(q, 1, Fp(5));
  CHECK(is_zero(act_path(b2, {3, 2})));  // a3 after d

  auto q1 = Presentation::get(1);
  Rep be1 = band_module(q1, 2, Fp(3));
  CHECK(be1.dims == std::vector<int>{4});
}

TEST_CASE("act_path: relation instances") {
  PrimeScope scope(7);
  auto q = Presentation::get(3);
  Rep pe = projective_module(q, 2);
  Mat dd = act_path(pe, {3, 3});
  Mat cc = act_path(pe, q->cycle_word(2, 6));
  CHECK(equal(dd, cc));
  CHECK(!is_zero(dd));

  Rep s = simple_module(q, 1);
  for (int a = 0; a < q->num_arrows(); ++a) CHECK(is_zero(s.arr[a]));
  CHECK_THROWS_AS(act_path(pe, std::vector<int>{0, 0}), NotComposableError);
}

TEST_CASE("direct sums") {
  PrimeScope scope(7);
  auto q = Presentation::get(3);
  Rep s1 = simple_module(q, 0), s2 = simple_module(q, 1);
  Rep sum = direct_sum(s1, s2);
  CHECK(sum.dims == std::vector<int>{1, 1, 0});
  Rep z = zero_module(q);
  Rep sum2 = direct_sum(band_module(q, 1, Fp(2)), z);
  CHECK(sum2.total_dim() == 4);
  CHECK(sum.total_dim() == s1.total_dim() + s2.total_dim());
}

TEST_CASE("module spec grammar round-trips") {
  PrimeScope scope(7);
  auto q = Presentation::get(3);
  for (const char* s : {"S(1)", "P(3)", "str:a1*a3*d~", "band:2,3"}) {
    ModuleSpec spec = ModuleSpec::parse(*q, s);
    CHECK(spec.to_string(*q) == s);
  }
  CHECK_THROWS_AS(ModuleSpec::parse(*q, "S(9)"), ParseError);
  CHECK_THROWS_AS(ModuleSpec::parse(*q, "str:a1*zz"), ParseError);
  CHECK_THROWS_AS(ModuleSpec::parse(*q, "str:"), ParseError);
  CHECK_THROWS_AS(ModuleSpec::parse(*q, "blob"), ParseError);

  // canonicalization folds a word with its reverse-inverse
  ModuleSpec a = ModuleSpec::parse(*q, "str:a1");
  CHECK(canonical_spec(*q, a) == "str:a1");
  ModuleSpec b = ModuleSpec::parse(*q, "str:a1~");
  CHECK(canonical_spec(*q, b) == "str:a1");
}

TEST_CASE("dim M(w) = letters + 1; dim B(n,l) = n(e+1)") {
  PrimeScope scope(5);
  for (int e : {1, 2, 3, 4}) {
    auto q = Presentation::get(e);
    for (const StringWord& w : enumerate_strings(*q, 8)) {
      Rep m = string_module(q, w);
      CHECK(m.total_dim() == static_cast<int>(w.letters.size()) + 1);
    }
    for (int n : {1, 2, 3}) {
      CHECK(band_module(q, n, Fp(2)).total_dim() == n * (e + 1));
    }
  }
}

TEST_CASE("string words survive reversal (module iso checked in hom tests)") {
  PrimeScope scope(7);
  auto q = Presentation::get(4);
  auto words = enumerate_strings(*q, 6);
  CHECK(!words.empty());
  for (const auto& w : words) {
    StringWord rev = w.reversed_inverted();
    CHECK(string_word_defect(*q, rev).empty());
    Rep a = string_module(q, w);
    Rep b = string_module(q, rev);
    CHECK(a.total_dim() == b.total_dim());
  }
}

TEST_CASE("transcribing the paper's P_e and band bases: the maps r1, r2, s1, s2") {
  PrimeScope scope(7);
  for (int e : {2, 3, 4}) {
    auto q = Presentation::get(e);
    const Fp lambda(2);
    PathBasis pb = compute_path_basis(*q);
    Rep pe = projective_module(q, e - 1);
    Rep band = band_module(q, 1, lambda);

    // b_{e,1} = empty path, b_{e,2} = C, b_{e,3} = d, b_{e,4} = C^2; on
    // vertex i < e the pair b_{i,1}, b_{i,2} are the alpha-paths of length
    // i and e+i out of vertex e.
    auto bpos = [&](int i, int j) -> std::pair<int, int> {
      // returns (vertex, position) of b_{i,j}, both 0-based vertex
      if (i == e) {
        BasisPath p;
        if (j == 1) p = {e - 1, 0, false};
        if (j == 2) p = {e - 1, e, false};
        if (j == 3) p = {e - 1, 1, true};
        if (j == 4) p = {e - 1, 2 * e, false};
        return {e - 1, projective_basis_position(*q, pb, e - 1, p)};
      }
      BasisPath p{e - 1, j == 1 ? i : e + i, false};
      return {i - 1, projective_basis_position(*q, pb, e - 1, p)};
    };
    // c_i basis of B(1,lambda): vertex i (i < e) holds c_i at position 0;
    // vertex e holds c_e at 0 (top) and c_{e+1} at 1 (socle).

    auto zero_tuple = [&](const Rep& src, const Rep& tgt) {
      std::vector<Mat> f;
      for (int v = 0; v < e; ++v)
        f.push_back(Mat::Zero(tgt.dims[v], src.dims[v]));
      return f;
    };

    // r1 : B -> P_e
    auto r1 = zero_tuple(band, pe);
    r1[e - 1](bpos(e, 2).second, 0) = Fp(1);
    r1[e - 1](bpos(e, 3).second, 0) = lambda;
    r1[e - 1](bpos(e, 4).second, 1) = Fp(1);
    for (int i = 1; i <= e - 1; ++i) r1[i - 1](bpos(i, 2).second, 0) = Fp(1);
    // r2 : B -> P_e
    auto r2 = zero_tuple(band, pe);
    r2[e - 1](bpos(e, 4).second, 0) = Fp(1);
    // s1 : P_e -> B
    auto s1 = zero_tuple(pe, band);
    s1[e - 1](0, bpos(e, 1).second) = Fp(1);
    s1[e - 1](1, bpos(e, 2).second) = Fp(1);
    s1[e - 1](1, bpos(e, 3).second) = lambda;
    for (int i = 1; i <= e - 1; ++i) s1[i - 1](0, bpos(i, 1).second) = Fp(1);
    // s2 : P_e -> B
    auto s2 = zero_tuple(pe, band);
    s2[e - 1](1, bpos(e, 1).second) = Fp(1);

    auto is_hom = [&](const std::vector<Mat>& f, const Rep& src,
                      const Rep& tgt) {
      for (int a = 0; a < q->num_arrows(); ++a) {
        const auto& ar = q->arrow(a);
        if (!equal(f[ar.tgt] * src.arr[a], tgt.arr[a] * f[ar.src]))
          return false;
      }
      return true;
    };
    CHECK(is_hom(r1, band, pe));
    CHECK(is_hom(r2, band, pe));
    CHECK(is_hom(s1, pe, band));
    CHECK(is_hom(s2, pe, band));

    // s1 . r1 sends c_e to (lambda^2 + 1) c_{e+1}, everything else to zero
    Mat comp = s1[e - 1] * r1[e - 1];
    Mat expect = Mat::Zero(2, 2);
    expect(1, 0) = lambda * lambda + Fp(1);
    CHECK(equal(comp, expect));
    for (int i = 0; i < e - 1; ++i) CHECK(is_zero(s1[i] * r1[i]));
  }
}
