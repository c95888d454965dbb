#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qsym/cubic.hpp"
#include "qsym/superpotential.hpp"

using namespace qsym;

namespace {

Matrix<Rational> mat2(Rational a, Rational b, Rational c, Rational d) {
  Matrix<Rational> m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix<Rational> quantum_plane(long q) { return mat2(0, 1, Rational(q), 0); }

}  // namespace

TEST_SUITE("superpotential") {
  TEST_CASE("nondegeneracy") {
    CHECK_FALSE(is_nondegenerate(Tensor<Rational>::basis(2, {0, 0})));
    CHECK(is_nondegenerate(poly_superpotential<Rational>(3).tensor));
    CHECK(is_nondegenerate(m2_pack(quantum_plane(2)).tensor));
    Tensor<Rational> singular(2, 2);
    singular.add({0, 0}, 1);
    singular.add({0, 1}, 1);
    singular.add({1, 0}, 1);
    singular.add({1, 1}, 1);
    CHECK_FALSE(is_nondegenerate(singular));
    CHECK_THROWS_AS(find_twist(singular), Degenerate);
  }

  TEST_CASE("m = 2 twist satisfies the defining equation") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const Index n = trial % 2 == 0 ? 2 : 3;
      const Matrix<Rational> e = oracle::random_invertible(rng, n, -3, 3);
      const TwistedSuperpotential<Rational> sp = m2_pack(e);
      const auto p = find_twist(sp.tensor);
      REQUIRE(p.has_value());
      CHECK(*p == sp.twist);
      CHECK(apply_on_factor(cyclic_shift(sp.tensor), *p, 1) == sp.tensor);
      // P = E E^{-T}, independently from the cofactor inverse.
      CHECK(*p == Matrix<Rational>(e * oracle::inverse(e).transpose()));
      CHECK(m2_unpack(sp) == e);
      CHECK(is_L_traceable(sp, 2));
    }
  }

  TEST_CASE("quantum plane twist") {
    for (long q : {2L, 3L, 5L}) {
      const auto sp = m2_pack(quantum_plane(q));
      CHECK(sp.twist == mat2(Rational(1, q), 0, 0, Rational(q)));
      CHECK(nakayama_matrix(sp, 2) == mat2(-Rational(q), 0, 0, -Rational(1, q)));
    }
  }

  TEST_CASE("twist of the antisymmetrizer and of symmetric cubics is the identity") {
    CHECK(find_twist(poly_superpotential<Rational>(3).tensor) == identity<Rational>(3));
    std::mt19937 rng(29);
    int found = 0;
    for (int trial = 0; trial < 20; ++trial) {
      CubicForm<Rational> f;
      f.dim = 3;
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
          for (int k = j; k < 3; ++k) f.add({i, j, k}, oracle::rnd(rng, -3, 3));
      const Tensor<Rational> t = symmetrize(f);
      if (!is_nondegenerate(t)) continue;
      ++found;
      CHECK(find_twist(t) == identity<Rational>(3));
      CHECK(is_cy_shape(t, 3));
    }
    CHECK(found > 10);
  }

  TEST_CASE("non-twisted tensor") {
    // e1 e1 e1 + e2 e1 e2: nondegenerate, but phi(s) has a different first flattening.
    Tensor<Rational> u(3, 2);
    u.add({0, 0, 0}, 1);
    u.add({1, 0, 1}, 1);
    REQUIRE(is_nondegenerate(u));
    CHECK_FALSE(find_twist(u).has_value());
    CHECK_THROWS_AS(make_superpotential(u), NotTwisted);
  }

  TEST_CASE("relations") {
    const auto fp = poly_superpotential<Rational>(3);
    CHECK(relations(fp, 3) == Subspace<Rational>::span(fp.tensor));
    const auto r2 = relations(fp, 2);
    CHECK(r2.rank() == 3);
    Tensor<Rational> c(2, 3);
    c.add({0, 1}, 1);
    c.add({1, 0}, -1);
    CHECK(r2.contains(c.to_vector()));
    const Matrix<Rational> e = mat2(1, 2, 3, 5);
    const auto sp = m2_pack(e);
    CHECK(relations(sp, 2) == Subspace<Rational>::span(sp.tensor));
  }

  TEST_CASE("traceability") {
    const auto fp = poly_superpotential<Rational>(3);
    CHECK(is_L_traceable(fp, 2));
    CHECK(is_L_traceable(fp, 3));
    const auto r = relations(fp, 2);
    CHECK(subspace_intersect(embed_padded(r, 0, 1), embed_padded(r, 1, 0)).rank() == 1);
  }

  TEST_CASE("CY shape") {
    CHECK(is_cy_shape(w_ijk<Rational>(0, 1, 2), 3));
    CHECK(is_cy_shape(poly_superpotential<Rational>(3), 3));
    CHECK_FALSE(is_cy_shape(m2_pack(mat2(1, 2, 3, 5)).tensor, 2));
    CHECK(is_cy_shape(m2_pack(mat2(0, 1, -1, 0)).tensor, 2));
    CHECK(nakayama_matrix(poly_superpotential<Rational>(3), 3) == identity<Rational>(3));
    CHECK(nakayama_matrix(poly_superpotential<Rational>(3), 2) == Matrix<Rational>(-identity<Rational>(3)));
  }

  TEST_CASE("quantum dimensions") {
    for (long q : {2L, 3L, 5L}) {
      const auto sp = m2_pack(quantum_plane(q));
      const Rational expect = Rational(q) + Rational(1, q);
      CHECK(qdim_subspace(Subspace<Rational>::full(2, 1), sp.twist) == expect);
      CHECK(qdim_trace(sp.twist) == expect);
      CHECK(m2_trace_invariant(quantum_plane(q)) == expect);
    }
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      const auto sp = m2_pack(oracle::random_invertible(rng, 2, -3, 3));
      const Rational t1 = qdim_trace(sp.twist);
      for (int n = 1; n <= 3; ++n) {
        Rational pw(1);
        for (int k = 0; k < n; ++k) pw *= t1;
        CHECK(qdim_subspace(Subspace<Rational>::full(2, n), sp.twist) == pw);
      }
    }
    // P = I: qdim is the dimension.
    const auto r = relations(poly_superpotential<Rational>(3), 2);
    CHECK(qdim_subspace(r, identity<Rational>(3)) == Rational(3));
    CHECK(qdim_subspace(r, Matrix<Rational>(-identity<Rational>(3))) == Rational(3));
    // A subspace that is not twist-stable.
    const Subspace<Rational> line = Subspace<Rational>::span(Tensor<Rational>::basis(2, {0}) + Tensor<Rational>::basis(2, {1}));
    CHECK_THROWS_AS(qdim_subspace(line, m2_pack(quantum_plane(2)).twist), NotStable);
  }

  TEST_CASE("W sequence") {
    const auto alg = make_algebra(poly_superpotential<Rational>(3), 2);
    const auto w = w_sequence(alg, 5);
    std::vector<Index> dims;
    for (const auto& s : w) dims.push_back(s.rank());
    CHECK(dims == std::vector<Index>{1, 3, 3, 1, 0, 0});
    CHECK(w[2] == alg.relations);
    CHECK_THROWS_AS(w_sequence(alg, 4, 64), SizeLimit);
  }

  TEST_CASE("quantum Hilbert series") {
    const auto fp = quantum_hilbert_series(make_algebra(poly_superpotential<Rational>(3), 2), 3, 8);
    for (int n = 0; n <= 8; ++n) CHECK(fp.coeffs[static_cast<std::size_t>(n)] == Rational(static_cast<long>(oracle::poly3_dim(n))));
    const auto id = quantum_hilbert_series(make_algebra(m2_pack(identity<Rational>(2)), 2), 2, 6);
    for (int n = 0; n <= 6; ++n) CHECK(id.coeffs[static_cast<std::size_t>(n)] == Rational(n + 1));
    // m = 2: 1 / (1 - c t + t^2) with c = q + 1/q.
    const Rational c = Rational(2) + Rational(1, 2);
    const auto qp = quantum_hilbert_series(make_algebra(m2_pack(quantum_plane(2)), 2), 2, 6);
    std::vector<Rational> expect{Rational(1), c};
    for (int n = 2; n <= 6; ++n) expect.push_back(c * expect[static_cast<std::size_t>(n - 1)] - expect[static_cast<std::size_t>(n - 2)]);
    for (int n = 0; n <= 6; ++n) CHECK(qp.coeffs[static_cast<std::size_t>(n)] == expect[static_cast<std::size_t>(n)]);
  }

  TEST_CASE("m = 2 quantum series depends only on the trace invariant") {
    // E and a basis conjugate g E g^T share tr(E^{-1} E^T).
    std::mt19937 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix<Rational> e = oracle::random_invertible(rng, 2, -3, 3);
      const Matrix<Rational> g = oracle::random_invertible(rng, 2, -2, 2);
      const Matrix<Rational> f = g * e * g.transpose();
      CHECK(oracle::m2_invariant(e) == oracle::m2_invariant(f));
      const auto a = quantum_hilbert_series(make_algebra(m2_pack(e), 2), 2, 6);
      const auto b = quantum_hilbert_series(make_algebra(m2_pack(f), 2), 2, 6);
      CHECK(a.coeffs == b.coeffs);
    }
  }
}
