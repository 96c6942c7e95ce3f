#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "klr/repchar.hpp"

using namespace klr;

namespace {

Word make_word(std::initializer_list<int> letters) {
  return Word(std::vector<int>(letters));
}

std::vector<Weight> weights_up_to(const Quiver& q, int h) {
  std::vector<Weight> out;
  Weight cur = Weight::zero(q.size());
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == q.size()) {
      if (cur.ht() >= 1) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.c[i] = v;
      self(self, i + 1, left - v);
    }
    cur.c[i] = 0;
  };
  rec(rec, 0, h);
  return out;
}

}  // namespace

TEST_CASE("word classes") {
  Quiver a3 = Quiver::type_a(3);
  auto cls = word_class(a3, make_word({1, 2, 0}));  // 231
  CHECK(cls == std::set<Word>{make_word({1, 2, 0}), make_word({1, 0, 2})});
  CHECK(word_class(a3, make_word({0, 1, 2})) ==
        std::set<Word>{make_word({0, 1, 2})});
  Quiver a2 = Quiver::type_a(2);
  CHECK(word_class(a2, make_word({0, 1})) == std::set<Word>{make_word({0, 1})});
}

TEST_CASE("homogeneity conditions") {
  Quiver a2 = Quiver::type_a(2);
  CHECK(!is_homogeneous(a2, make_word({0, 0})));
  CHECK(!is_homogeneous(a2, make_word({0, 1, 0})));  // 121 with a1.a2 = -1
  Quiver a3 = Quiver::type_a(3);
  CHECK(is_homogeneous(a3, make_word({1, 2, 0})));  // 231
  CHECK(is_homogeneous(a3, make_word({0, 1, 2})));
  Quiver aff = Quiver::kronecker();
  CHECK(is_homogeneous(aff, make_word({0, 1})));  // a0.a1 = -2, not -1
  CHECK(!is_homogeneous(aff, make_word({0, 0})));
}

TEST_CASE("homogeneous modules") {
  Quiver a2 = Quiver::type_a(2);
  HomogeneousModule l12 = build_homogeneous(a2, make_word({0, 1}));
  CHECK(l12.dim() == 1);
  Character c12;
  c12.add(make_word({0, 1}), LaurentPoly(1));
  CHECK(l12.character() == c12);

  Quiver a3 = Quiver::type_a(3);
  HomogeneousModule l231 = build_homogeneous(a3, make_word({1, 2, 0}));
  CHECK(l231.dim() == 2);
  Character c231;
  c231.add(make_word({1, 2, 0}), LaurentPoly(1));
  c231.add(make_word({1, 0, 2}), LaurentPoly(1));
  CHECK(l231.character() == c231);

  Quiver aff = Quiver::kronecker();
  HomogeneousModule l01 = build_homogeneous(aff, make_word({0, 1}));
  CHECK(l01.dim() == 1);

  CHECK_THROWS_AS(build_homogeneous(a2, make_word({0, 0})), error);
  CHECK_THROWS_AS(build_homogeneous(a2, make_word({0, 1, 0})), error);
}

TEST_CASE("homogeneous module relations verified over D4 too") {
  Quiver d4 = Quiver::type_d(4);
  // a multiplicity-free word over D4 is homogeneous iff its class passes
  // both conditions; build a few and let the machine verification run
  for (const auto& w :
       {make_word({0, 1, 2}), make_word({2, 1, 3}), make_word({0, 1, 3})}) {
    if (is_homogeneous(d4, w)) {
      HomogeneousModule m = build_homogeneous(d4, w);
      CHECK(m.dim() >= 1);
    }
  }
}

TEST_CASE("cuspidal characters") {
  Quiver a2 = Quiver::type_a(2);
  ShuffleContext ctx(a2);
  ConvexOrder ord = convex_order(a2, {1, 2, 1});
  Character c = cuspidal_character(ctx, Weight({1, 1}), ord);
  Character expect;
  expect.add(make_word({0, 1}), LaurentPoly(1));
  CHECK(c == expect);
  Character c1 = cuspidal_character(ctx, Weight({1, 0}), ord);
  Character e1;
  e1.add(make_word({0}), LaurentPoly(1));
  CHECK(c1 == e1);

  Quiver a3 = Quiver::type_a(3);
  ShuffleContext ctx3(a3);
  ConvexOrder o3 = convex_order(a3, lex_least_w0(a3));
  Character c123 = cuspidal_character(ctx3, Weight({1, 1, 1}), o3);
  Character e123;
  e123.add(make_word({0, 1, 2}), LaurentPoly(1));
  CHECK(c123 == e123);
}

TEST_CASE("cuspidal classes are homogeneous segments in type A") {
  Quiver a3 = Quiver::type_a(3);
  ShuffleContext ctx(a3);
  ConvexOrder ord = convex_order(a3, lex_least_w0(a3));
  for (const auto& root : ord.roots) {
    Character c = cuspidal_character(ctx, root, ord);
    REQUIRE(c.coeffs.size() >= 1);
    const Word& w = c.coeffs.begin()->first;
    REQUIRE(is_homogeneous(a3, w));
    CHECK(build_homogeneous(a3, w).character() == c);
  }
}

TEST_CASE("proper standard characters") {
  Quiver a2 = Quiver::type_a(2);
  ShuffleContext ctx(a2);
  ConvexOrder ord = convex_order(a2, {1, 2, 1});
  KostantPartition lam{{Weight({0, 1}), Weight({1, 0})}};
  Character ch = proper_standard_character(ctx, lam, ord);
  Character expect;
  expect.add(make_word({1, 0}), LaurentPoly(1));
  expect.add(make_word({0, 1}), LaurentPoly::q(1));
  CHECK(ch == expect);
  // single part: the cuspidal itself
  KostantPartition single{{Weight({1, 1})}};
  CHECK(proper_standard_character(ctx, single, ord) ==
        cuspidal_character(ctx, Weight({1, 1}), ord));

  // A3: shuffle 3 o 2 o 1 has lowest term 321
  Quiver a3 = Quiver::type_a(3);
  ShuffleContext ctx3(a3);
  ConvexOrder o3 = convex_order(a3, lex_least_w0(a3));
  KostantPartition rev{
      {Weight({0, 0, 1}), Weight({0, 1, 0}), Weight({1, 0, 0})}};
  Character c3 = proper_standard_character(ctx3, rev, o3);
  CHECK(c3.coeffs.at(make_word({2, 1, 0})).is_one());

  // equality with the dual PBW character across blocks
  for (const auto& alpha : weights_up_to(a3, 4)) {
    for (const auto& lam2 : kostant_partitions(alpha, o3)) {
      CHECK(proper_standard_character(ctx3, lam2, o3) ==
            dual_pbw(ctx3, lam2, o3).character());
    }
  }
}

TEST_CASE("decompose") {
  Quiver a2 = Quiver::type_a(2);
  ShuffleContext ctx(a2);
  ConvexOrder ord = convex_order(a2, {1, 2, 1});
  KostantPartition single{{Weight({1, 1})}};
  KostantPartition pair{{Weight({0, 1}), Weight({1, 0})}};
  Character ch = proper_standard_character(ctx, pair, ord);
  auto row = decompose(ctx, ch, Weight({1, 1}), ord);
  REQUIRE(row.size() == 2);
  CHECK(row.at(pair).is_one());
  CHECK(row.at(single) == LaurentPoly::q(1));
  // cuspidal decomposes as the unit vector
  auto unit = decompose(ctx, cuspidal_character(ctx, Weight({1, 1}), ord),
                        Weight({1, 1}), ord);
  REQUIRE(unit.size() == 1);
  CHECK(unit.at(single).is_one());
  // inconsistent input rejected
  Character junk;
  junk.add(make_word({0, 1}), LaurentPoly(1));
  junk.add(make_word({1, 0}), LaurentPoly::q(3));
  // {12 + q^3 21} is not a combination of {12} and {21 } with the same
  // coefficient space? it is: c1 = 1, c2 = q^3. use a genuinely
  // inconsistent one: word with wrong weight is rejected earlier, so use
  // the A3 block where characters span a proper subspace
  Quiver a3 = Quiver::type_a(3);
  ShuffleContext ctx3(a3);
  ConvexOrder o3 = convex_order(a3, lex_least_w0(a3));
  PbwBasis basis = make_pbw_basis(ctx3, Weight({1, 1, 1}), o3);
  CanonicalBasis cb = canonical_basis(ctx3, basis);
  auto duals = dual_canonical_basis(basis, cb.p);
  Character bad;
  bad.add(make_word({1, 0, 2}), LaurentPoly(1));  // half of the 213+231 class
  CHECK_THROWS_AS(decompose_with(duals, bad), error);
  // and the A3 rows match the p-matrix
  for (const auto& lam : basis.kps) {
    Character c = proper_standard_character(ctx3, lam, o3);
    auto r = decompose_with(duals, c);
    for (const auto& mu : basis.kps) {
      LaurentPoly expect = cb.p.at(lam, mu);
      LaurentPoly got = r.count(mu) ? r.at(mu) : LaurentPoly();
      CHECK(got == expect);
    }
  }
}

TEST_CASE("decomposition rows are unitriangular with positive entries") {
  Quiver a2 = Quiver::type_a(2);
  ShuffleContext ctx(a2);
  ConvexOrder ord = convex_order(a2, {1, 2, 1});
  for (const auto& alpha : weights_up_to(a2, 4)) {
    PbwBasis basis = make_pbw_basis(ctx, alpha, ord);
    CanonicalBasis cb = canonical_basis(ctx, basis);
    auto duals = dual_canonical_basis(basis, cb.p);
    for (const auto& lam : basis.kps) {
      auto row = decompose_with(duals,
                                proper_standard_character(ctx, lam, ord));
      CHECK(row.at(lam).is_one());
      for (const auto& [mu, c] : row) {
        if (mu == lam) continue;
        CHECK(bilex_less(ord, mu, lam));
        CHECK(c.in_q_zq());
        CHECK(c.nonneg_coeffs());
      }
    }
  }
}

TEST_CASE("parity") {
  Quiver a2 = Quiver::type_a(2);
  Character good;
  good.add(make_word({0, 1}), LaurentPoly(1));
  good.add(make_word({1, 0}), LaurentPoly::q(1));
  CHECK(parity_check(a2, good));
  Character badch;
  badch.add(make_word({0, 1}), LaurentPoly(1));
  badch.add(make_word({1, 0}), LaurentPoly::q(2));
  CHECK(!parity_check(a2, badch));
  CHECK(parity_check(a2, Character{}));
  // dual canonical characters pass the parity check
  Quiver a3 = Quiver::type_a(3);
  ShuffleContext ctx(a3);
  ConvexOrder ord = convex_order(a3, lex_least_w0(a3));
  for (const auto& alpha : weights_up_to(a3, 3)) {
    PbwBasis basis = make_pbw_basis(ctx, alpha, ord);
    CanonicalBasis cb = canonical_basis(ctx, basis);
    for (const auto& [lam, el] : dual_canonical_basis(basis, cb.p))
      CHECK(parity_check(a3, el.character()));
  }
}

TEST_CASE("multiplicity-free A3 duals are homogeneous module characters") {
  Quiver a3 = Quiver::type_a(3);
  ShuffleContext ctx(a3);
  ConvexOrder ord = convex_order(a3, lex_least_w0(a3));
  Weight alpha({1, 1, 1});
  PbwBasis basis = make_pbw_basis(ctx, alpha, ord);
  CanonicalBasis cb = canonical_basis(ctx, basis);
  for (const auto& [lam, el] : dual_canonical_basis(basis, cb.p)) {
    Character ch = el.character();
    const Word& rep = ch.coeffs.begin()->first;
    REQUIRE(is_homogeneous(a3, rep));
    CHECK(build_homogeneous(a3, rep).character() == ch);
  }
}

TEST_CASE("segment labels") {
  Quiver a3 = Quiver::type_a(3);
  CHECK(segment_label(a3, Weight({1, 1, 1})) == "[1,3]");
  CHECK(segment_label(a3, Weight({0, 1, 0})) == "[2,2]");
  KostantPartition lam{{Weight({0, 1, 1}), Weight({1, 0, 0})}};
  CHECK(multisegment_label(a3, lam) == "[2,3]+[1,1]");
  CHECK(segment_label(Quiver::type_d(4), Weight({1, 1, 1, 1})) == "");
}
