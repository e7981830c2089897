#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kostant/root_system.hpp"

using namespace kostant;

namespace {

Vec sr(int rank, std::initializer_list<std::pair<int, Rational>> terms) {
  Vec v(Basis::SimpleRoot, rank);
  for (auto& [i, x] : terms) v[i] = x;
  return v;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2).sign() == -1);
  CHECK(Rational::parse("-7/3") == Rational(-7, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(6, 3).as_integer() == 2);
  CHECK_THROWS(Rational(1, 2).as_integer());
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(INT64_MAX) * Rational(INT64_MAX));
}

TEST_CASE("root counts") {
  CHECK(generate_roots(LieType::G2, 2).all_roots.size() == 12);
  CHECK(generate_roots(LieType::F4, 4).all_roots.size() == 48);
  CHECK(generate_roots(LieType::E6, 6).all_roots.size() == 72);
  CHECK(generate_roots(LieType::E7, 7).all_roots.size() == 126);
  CHECK(generate_roots(LieType::E8, 8).all_roots.size() == 240);
  for (int n = 1; n <= 8; ++n) {
    CHECK(generate_roots(LieType::A, n).all_roots.size() == std::size_t(n) * (n + 1));
    CHECK(generate_roots(LieType::B, n).all_roots.size() == 2 * std::size_t(n) * n);
    CHECK(generate_roots(LieType::C, n).all_roots.size() == 2 * std::size_t(n) * n);
    if (n >= 2) CHECK(generate_roots(LieType::D, n).all_roots.size() == 2 * std::size_t(n) * (n - 1));
    CHECK(generate_roots(LieType::GL, n).all_roots.size() == std::size_t(n) * (n - 1));
  }
  CHECK_THROWS(generate_roots(LieType::D, 1));
  CHECK_THROWS(generate_roots(LieType::E6, 5));
}

TEST_CASE("closure properties") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D, LieType::G2, LieType::F4}) {
    int n = (t == LieType::G2) ? 2 : (t == LieType::F4) ? 4 : 3;
    RootSystem rs = generate_roots(t, n);
    CHECK(rs.positive_roots.size() * 2 == rs.all_roots.size());
    for (const Vec& a : rs.all_roots) {
      CHECK(rs.is_root(-a));
      // reflection closure: s_b(a) is a root for every root b
      for (const Vec& b : rs.simple_roots) {
        Vec img = a - rs.pairing(a, b) * b;
        CHECK(rs.is_root(img));
      }
    }
  }
}

TEST_CASE("cartan matrices") {
  RootSystem g2 = generate_roots(LieType::G2, 2);
  CHECK(g2.cartan[0][0] == Rational(2));
  CHECK(g2.cartan[0][1] == Rational(-1));
  CHECK(g2.cartan[1][0] == Rational(-3));
  RootSystem f4 = generate_roots(LieType::F4, 4);
  CHECK(f4.cartan[1][2] == Rational(-2));  // long over short coroot
  CHECK(f4.cartan[2][1] == Rational(-1));
  RootSystem b3 = generate_roots(LieType::B, 3);
  CHECK(b3.cartan[1][2] == Rational(-2));
  CHECK(b3.cartan[2][1] == Rational(-1));
  RootSystem c3 = generate_roots(LieType::C, 3);
  CHECK(c3.cartan[1][2] == Rational(-1));
  CHECK(c3.cartan[2][1] == Rational(-2));
}

TEST_CASE("fundamental weights pair to identity") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D, LieType::G2,
                    LieType::F4, LieType::E6, LieType::E7}) {
    int n = (t == LieType::G2)   ? 2
            : (t == LieType::F4) ? 4
            : (t == LieType::E6) ? 6
            : (t == LieType::E7) ? 7
                                 : 4;
    RootSystem rs = generate_roots(t, n);
    auto ws = fundamental_weights(rs);
    REQUIRE(ws.size() == rs.simple_roots.size());
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = 0; j < ws.size(); ++j)
        CHECK(rs.pairing(rs.to_native(ws[i]), rs.simple_roots[j]) ==
              Rational(i == j ? 1 : 0));
  }
}

TEST_CASE("specific fundamental weights") {
  RootSystem a1 = generate_roots(LieType::A, 1);
  CHECK(fundamental_weights(a1)[0] == sr(1, {{0, Rational(1, 2)}}));

  RootSystem c3 = generate_roots(LieType::C, 3);
  CHECK(fundamental_weights(c3)[2] ==
        sr(3, {{0, Rational(1)}, {1, Rational(2)}, {2, Rational(3, 2)}}));

  RootSystem e7 = generate_roots(LieType::E7, 7);
  Vec w7 = fundamental_weights(e7)[6];
  for (std::size_t i = 0; i < w7.size(); ++i) CHECK(w7[i].sign() > 0);
}

TEST_CASE("weyl dimension formula") {
  RootSystem a1 = generate_roots(LieType::A, 1);
  CHECK(weyl_dimension(a1, fundamental_weights(a1)[0]) == 2);
  CHECK(weyl_dimension(a1, Vec(Basis::SimpleRoot, 1)) == 1);

  RootSystem c3 = generate_roots(LieType::C, 3);
  CHECK(weyl_dimension(c3, fundamental_weights(c3)[2]) == 14);

  RootSystem e7 = generate_roots(LieType::E7, 7);
  CHECK(weyl_dimension(e7, fundamental_weights(e7)[6]) == 56);

  // adjoint: highest weight = highest root, dim = #roots + rank
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D, LieType::G2}) {
    int n = (t == LieType::G2) ? 2 : 3;
    if (t == LieType::D) n = 4;
    RootSystem rs = generate_roots(t, n);
    CHECK(weyl_dimension(rs, rs.highest_root) ==
          std::int64_t(rs.all_roots.size()) + rs.rank);
  }
  CHECK_THROWS(weyl_dimension(a1, -a1.highest_root));
}

TEST_CASE("weyl groups") {
  WeylGroup a1 = weyl_group(LieType::A, 1);
  CHECK(a1.elements.size() == 2);

  WeylGroup a2 = weyl_group(LieType::A, 2);
  CHECK(a2.elements.size() == 6);
  int plus = 0, minus = 0;
  for (int s : a2.signs) (s == 1 ? plus : minus)++;
  CHECK(plus == 3);
  CHECK(minus == 3);

  CHECK(weyl_group(LieType::B, 2).elements.size() == 8);
  CHECK(weyl_group(LieType::D, 3).elements.size() == 24);
  CHECK(weyl_group(LieType::G2, 2).elements.size() == 12);
  CHECK(weyl_group(LieType::GL, 3).elements.size() == 6);

  CHECK(weyl_order(LieType::E8, 8) == 696729600);
  CHECK(weyl_order(LieType::F4, 4) == 1152);
  CHECK_THROWS(weyl_group(LieType::E7, 7));  // over the default cap

  // group elements permute the roots
  RootSystem b2 = generate_roots(LieType::B, 2);
  for (const Matrix& w : weyl_group(LieType::B, 2).elements) {
    for (const Vec& a : b2.all_roots) {
      Vec img(b2.basis, b2.dim);
      for (int r = 0; r < b2.dim; ++r)
        for (int c = 0; c < b2.dim; ++c) img[r] += w[r][c] * a[c];
      CHECK(b2.is_root(img));
    }
  }
}

TEST_CASE("extended diagram splits") {
  RootSystem f4 = generate_roots(LieType::F4, 4);
  ExtendedDiagramSplit sf = extended_diagram_remove_adjacent(f4);
  CHECK(sf.removed_node == 1);
  CHECK(sf.c_type == LieType::C);
  CHECK(sf.c_rank == 3);
  CHECK(sf.c_simple_roots[0] == f4.simple_roots[3]);
  CHECK(sf.c_simple_roots[1] == f4.simple_roots[2]);
  CHECK(sf.c_simple_roots[2] == f4.simple_roots[1]);
  CHECK(sf.linked_beta_index == 3);
  CHECK(sf.alpha0 == -f4.highest_root);

  ExtendedDiagramSplit se6 = extended_diagram_remove_adjacent(generate_roots(LieType::E6, 6));
  CHECK(se6.removed_node == 2);
  CHECK(se6.c_type == LieType::A);
  CHECK(se6.c_rank == 5);
  CHECK(se6.linked_beta_index == 3);

  ExtendedDiagramSplit se7 = extended_diagram_remove_adjacent(generate_roots(LieType::E7, 7));
  CHECK(se7.c_type == LieType::D);
  CHECK(se7.c_rank == 6);
  CHECK(se7.linked_beta_index == 6);

  ExtendedDiagramSplit se8 = extended_diagram_remove_adjacent(generate_roots(LieType::E8, 8));
  CHECK(se8.removed_node == 8);
  CHECK(se8.c_type == LieType::E7);
  CHECK(se8.linked_beta_index == 7);

  CHECK_THROWS(extended_diagram_remove_adjacent(generate_roots(LieType::A, 3)));
}

TEST_CASE("linear algebra helpers") {
  Matrix m = {{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  Matrix inv = invert(m);
  CHECK(inv[0][0] == Rational(1));
  CHECK(inv[0][1] == Rational(-1));
  CHECK_THROWS(invert(Matrix{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}));

  Vec t(Basis::Delta, {Rational(2), Rational(0), Rational(4)});
  Vec v(Basis::Delta, {Rational(1), Rational(0), Rational(2)});
  CHECK(positive_ratio(t, v) == Rational(2));
  CHECK(positive_ratio(-t, v) == Rational(0));
  CHECK(positive_ratio(t, Vec(Basis::Delta, {Rational(1), Rational(1), Rational(2)})) ==
        Rational(0));
}
