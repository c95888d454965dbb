#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qsym/cubic.hpp"
#include "qsym/io.hpp"
#include "qsym/ncgb.hpp"
#include "qsym/presentation.hpp"

using namespace qsym;

namespace {

using Q = Rational;

NcPoly<Q> poly(const MonomialOrder& order, std::vector<std::pair<GenWord, long>> terms) {
  PolyBuilder<Q> b;
  for (auto& [w, c] : terms) b.add(w, Q(c));
  return b.finish(order);
}

Presentation<Q> free_presentation(int ngens, std::vector<NcPoly<Q>> rels) {
  Presentation<Q> p;
  for (int i = 0; i < ngens; ++i) p.gens.push_back(std::string(1, static_cast<char>('x' + i)));
  p.order = MonomialOrder::natural(ngens);
  p.relations = std::move(rels);
  return p;
}

Presentation<Q> f_poly_algebra() { return build_algebra(make_algebra(poly_superpotential<Q>(3), 2)); }

Matrix<Q> mat2(Q a, Q b, Q c, Q d) {
  Matrix<Q> m(2, 2);
  m << a, b, c, d;
  return m;
}

constexpr int x = 0, y = 1, z = 2;

}  // namespace

TEST_SUITE("ncgb") {
  TEST_CASE("reduce") {
    const MonomialOrder o = MonomialOrder::natural(2);
    const auto comm = poly(o, {{{x, y}, 1}, {{y, x}, -1}});
    CHECK(reduce(comm, {comm}, o).is_zero());
    CHECK(reduce(poly(o, {{{x, y, x}, 1}}), {comm}, o) == poly(o, {{{y, x, x}, 1}}));
    CHECK(reduce(NcPoly<Q>::constant(Q(1)), {comm}, o) == NcPoly<Q>::constant(Q(1)));
    CHECK(reduce(NcPoly<Q>::constant(Q(1)), {}, o) == NcPoly<Q>::constant(Q(1)));
  }

  TEST_CASE("overlaps") {
    const MonomialOrder o = MonomialOrder::natural(3);
    const auto xx = poly(o, {{{x, x}, 1}});
    const auto self = overlaps(xx, xx, o);
    REQUIRE(self.size() == 1);
    CHECK(self[0].is_zero());
    const auto fxy = poly(o, {{{x, y}, 1}, {{y, x}, -1}});
    const auto gyz = poly(o, {{{y, z}, 1}, {{z, y}, -1}});
    const auto fxz = poly(o, {{{x, z}, 1}, {{z, x}, -1}});
    const auto s = overlaps(fxy, gyz, o);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == poly(o, {{{x, z, y}, 1}, {{y, x, z}, -1}}));
    CHECK(reduce(s[0], {fxy, gyz, fxz}, o).is_zero());
    CHECK(overlaps(xx, poly(o, {{{y, y}, 1}}), o).empty());
    // Inclusion: lead(g) inside lead(f).
    const auto inc = overlaps(poly(o, {{{x, y, z}, 1}, {{z, z, z}, -1}}), poly(o, {{{y}, 1}, {{z}, -1}}), o);
    REQUIRE(inc.size() == 1);
    CHECK(inc[0] == poly(o, {{{x, z, z}, 1}, {{z, z, z}, -1}}));
  }

  TEST_CASE("complete: the unit ideal") {
    const MonomialOrder o = MonomialOrder::natural(1);
    const auto pres = free_presentation(1, {poly(o, {{{0}, 1}}), poly(o, {{{0}, 1}, {{}, -1}})});
    const auto st = complete(pres, 3);
    REQUIRE(st.basis.size() == 1);
    CHECK(st.basis[0] == NcPoly<Q>::constant(Q(1)));
    const Verdict v = verdict(st, FieldSpec::rationals());
    CHECK(v.status == VerdictStatus::ZeroCertified);
    CHECK(v.witness_degree == 1);
    CHECK(v.field == "Q");
  }

  TEST_CASE("complete: commutative polynomial ring") {
    const auto pres = f_poly_algebra();
    const auto st = complete(pres, 6);
    CHECK(st.queue_empty);
    CHECK(st.basis.size() == 3);
    for (const auto& g : st.basis) {
      CHECK(g.size() == 2);
      CHECK(g.degree() == 2);
    }
    CHECK(verdict(st, FieldSpec::rationals()).status == VerdictStatus::NonzeroCertified);
    const auto h = truncated_hilbert(st, 3, 6);
    for (int n = 0; n <= 6; ++n) CHECK(h[static_cast<std::size_t>(n)] == oracle::poly3_dim(n));
    // P = I and d = 3: the quantum series is the Hilbert function.
    const auto qs = quantum_hilbert_series(make_algebra(poly_superpotential<Q>(3), 2), 3, 6);
    for (int n = 0; n <= 6; ++n) CHECK(qs.coeffs[static_cast<std::size_t>(n)] == Q(static_cast<long>(h[static_cast<std::size_t>(n)])));
  }

  TEST_CASE("truncated Hilbert function") {
    const auto free2 = complete(free_presentation(2, {}), 3);
    CHECK(truncated_hilbert(free2, 2, 3) == std::vector<std::uint64_t>{1, 2, 4, 8});
    const MonomialOrder o = MonomialOrder::natural(1);
    const auto sq = complete(free_presentation(1, {poly(o, {{{0, 0}, 1}})}), 3);
    CHECK(truncated_hilbert(sq, 1, 3) == std::vector<std::uint64_t>{1, 1, 0, 0});
    const auto unit = complete(free_presentation(1, {poly(o, {{{0}, 1}, {{}, -1}})}), 2);
    CHECK_THROWS_AS(truncated_hilbert(unit, 1, 2), Inhomogeneous);
    // xyx = yxy has an infinite Groebner basis in this order.
    const MonomialOrder o2 = MonomialOrder::natural(2);
    const auto braid = complete(free_presentation(2, {poly(o2, {{{x, y, x}, 1}, {{y, x, y}, -1}})}), 5);
    REQUIRE_FALSE(braid.queue_empty);
    CHECK(verdict(braid, FieldSpec::rationals()).status == VerdictStatus::Inconclusive);
    CHECK_THROWS_AS(truncated_hilbert(braid, 2, 8), InsufficientDegree);
    CHECK(truncated_hilbert(braid, 2, 3) == std::vector<std::uint64_t>{1, 2, 4, 7});
  }

  TEST_CASE("bound below the relation degree is rejected") {
    CHECK_THROWS_AS(complete(f_poly_algebra(), 1), std::invalid_argument);
  }

  TEST_CASE("determinism") {
    const auto pres = build_SL2_reduced(mat2(1, 2, 0, 1), mat2(1, 2, 0, 1));
    const auto a = complete(pres, 6);
    const auto b = complete(pres, 6);
    CHECK(a.basis == b.basis);
    Json ja = gbstate_to_json(a, pres.gens), jb = gbstate_to_json(b, pres.gens);
    ja["stats"].erase("seconds");
    jb["stats"].erase("seconds");
    CHECK(ja.dump() == jb.dump());
  }

  TEST_CASE("zero verdicts are monotone in the bound") {
    // tr(E^{-1} E^T) = 2 for I and q + 1/q = 5/2 for the quantum plane.
    const auto pres = build_SL2_reduced(identity<Q>(2), mat2(0, 1, 2, 0));
    int witness = -1;
    for (int bound : {4, 5, 6, 8}) {
      const Verdict v = verdict(complete(pres, bound), FieldSpec::rationals());
      REQUIRE(v.status == VerdictStatus::ZeroCertified);
      if (witness < 0) witness = v.witness_degree;
      CHECK(v.witness_degree == witness);
    }
  }

  TEST_CASE("m = 2 oracle sample") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix<Q> e = oracle::random_invertible(rng, 2, -3, 3);
      const Matrix<Q> f = trial % 2 == 0 ? oracle::random_invertible(rng, 2, -3, 3)
                                         : Matrix<Q>(oracle::random_invertible(rng, 2, -1, 1) * e *
                                                     oracle::random_invertible(rng, 2, -1, 1).transpose());
      const Verdict v = verdict(complete(build_SL2_reduced(e, f), 6), FieldSpec::rationals());
      const bool differ = oracle::m2_invariant(e) != oracle::m2_invariant(f);
      CHECK((v.status == VerdictStatus::ZeroCertified) == differ);
    }
  }

  TEST_CASE("zero over Q implies zero over F_p") {
    const auto pres = build_SL2_reduced(identity<Q>(2), mat2(0, 1, 3, 0));
    REQUIRE(verdict(complete(pres, 6), FieldSpec::rationals()).status == VerdictStatus::ZeroCertified);
    for (std::uint32_t p : {101u, 32003u}) {
      ZpScope scope(p);
      const auto pz = presentation_cast<Zp>(pres);
      CHECK(verdict(complete(pz, 6), FieldSpec::prime(p)).status == VerdictStatus::ZeroCertified);
    }
  }

  TEST_CASE("checkpoint round trip and resume") {
    const auto pres = build_SL2_reduced(mat2(1, 2, 0, 1), mat2(1, 2, 0, 1));
    const auto low = complete(pres, 4);
    REQUIRE_FALSE(low.has_constant());
    const Json j = gbstate_to_json(low, pres.gens);
    const auto back = gbstate_from_json<Q>(Json::parse(j.dump()));
    CHECK(back.basis == low.basis);
    CHECK(back.order == low.order);
    CHECK(back.processed_degree == low.processed_degree);
    CHECK(back.queue_empty == low.queue_empty);
    CHECK(gbstate_to_json(back, pres.gens) == j);
    const auto resumed = resume(back, pres.ngens(), 7);
    const auto fresh = complete(pres, 7);
    CHECK(resumed.basis == fresh.basis);
    CHECK(resumed.queue_empty == fresh.queue_empty);
    CHECK(verdict(resumed, FieldSpec::rationals()).status == verdict(fresh, FieldSpec::rationals()).status);
  }

  TEST_CASE("resume continues an unfinished completion") {
    const MonomialOrder o = MonomialOrder::natural(2);
    const auto braid = free_presentation(2, {poly(o, {{{x, y, x}, 1}, {{y, x, y}, -1}})});
    const auto low = complete(braid, 4);
    REQUIRE_FALSE(low.queue_empty);
    const auto back = gbstate_from_json<Q>(Json::parse(gbstate_to_json(low, braid.gens).dump()));
    const auto resumed = resume(back, 2, 8);
    const auto fresh = complete(braid, 8);
    CHECK(resumed.basis == fresh.basis);
    CHECK(resumed.processed_degree == fresh.processed_degree);
    CHECK(truncated_hilbert(resumed, 2, 8) == truncated_hilbert(fresh, 2, 8));
  }

  TEST_CASE("budget is reported distinctly") {
    const auto fp = poly_superpotential<Q>(3);
    CompleteOptions opts;
    opts.budget.max_reduction_steps = 50;
    const auto st = complete(build_GL(fp, fp), 8, opts);
    CHECK(st.stop == StopReason::BudgetExceeded);
    CHECK(verdict(st, FieldSpec::rationals()).status == VerdictStatus::BudgetExceeded);
  }

  TEST_CASE("verdict JSON") {
    const auto pres = build_SL2_reduced(identity<Q>(2), mat2(0, 1, 2, 0));
    const Verdict v = verdict(complete(pres, 6), FieldSpec::rationals());
    const Json j = verdict_to_json(v);
    CHECK(j.at("status") == "zero");
    CHECK(j.at("bound") == 6);
    CHECK(j.at("field") == "Q");
    const Verdict back = verdict_from_json(j);
    CHECK(back.status == v.status);
    CHECK(back.witness_degree == v.witness_degree);
    CHECK(back.order == v.order);
  }
}
