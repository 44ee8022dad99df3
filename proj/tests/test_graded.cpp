#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quiverkit/ade.hpp"
#include "quiverkit/error.hpp"
#include "quiverkit/graded.hpp"
#include "support.hpp"

using namespace quiverkit;

namespace {

using Dims = std::vector<long long>;

GradedPresentation truncated_loop() {
  return GradedPresentation({"o"}, {{"x", 0, 0, 1}}, {{{Rational(1), {0, 0}}}});
}

GradedPresentation parallel_arrows_identified() {
  return GradedPresentation({"s", "t"}, {{"a", 0, 1, 1}, {"b", 0, 1, 1}},
                            {{{Rational(1), {0}}, {Rational(-1), {1}}}});
}

HilbertTruncation with_dims(Dims d) { return {std::move(d), std::nullopt}; }

// Random quiver on up to three vertices plus random homogeneous relations of
// degree 2 and 3 with small integer coefficients.
GradedPresentation random_presentation(testkit::Rng& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 3);
  const std::size_t n = size(rng);
  const GradedPresentation free = free_path_algebra(testkit::random_quiver(rng, n, 1));
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
  std::uniform_int_distribution<int> degree(2, 3);
  std::vector<Relation> relations;
  for (int k = 0; k < 3; ++k) {
    const std::size_t i = vertex(rng), j = vertex(rng);
    Relation r;
    for (const auto& [path, end] : testkit::paths_of_degree(free, i, degree(rng)))
      if (end == j) r.push_back({Rational(coef(rng)), path});
    relations.push_back(std::move(r));
  }
  return GradedPresentation(free.vertices(), free.arrows(), relations);
}

}  // namespace

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(GradedPresentation({}, {}, {}), Error);
  CHECK_THROWS_AS(GradedPresentation({"a", "a"}, {}, {}), Error);
  CHECK_THROWS_AS(GradedPresentation({"a"}, {{"x", 0, 0, 0}}, {}), Error);
  CHECK_THROWS_AS(GradedPresentation({"a"}, {{"x", 0, 1, 1}}, {}), Error);
  CHECK_THROWS_AS(GradedPresentation({"a"}, {{"x", 0, 0, 1}, {"x", 0, 0, 1}}, {}), Error);
  const std::vector<Arrow> arrows{{"a", 0, 1, 1}, {"b", 1, 0, 1}, {"c", 0, 1, 2}};
  const std::vector<std::string> vs{"p", "q"};
  CHECK_THROWS_AS(GradedPresentation(vs, arrows, {{{Rational(1), {}}}}), Error);
  CHECK_THROWS_AS(GradedPresentation(vs, arrows, {{{Rational(1), {0, 0}}}}), Error);
  CHECK_THROWS_AS(GradedPresentation(vs, arrows, {{{Rational(1), {0}}, {Rational(1), {2}}}}),
                  Error);
  CHECK_THROWS_AS(GradedPresentation(vs, arrows, {{{Rational(1), {0, 1}}, {Rational(1), {1, 0}}}}),
                  Error);

  // Like paths combine, zero relations vanish.
  const GradedPresentation p(vs, arrows,
                             {{{Rational(1), {0, 1}}, {Rational(-1), {0, 1}}},
                              {{Rational(1, 2), {0}}, {Rational(1, 2), {0}}}});
  REQUIRE(p.relations().size() == 1);
  CHECK(p.relations()[0].size() == 1);
  CHECK(p.relations()[0][0].coef == 1);
}

TEST_CASE("dimensions of small algebras") {
  const Quiver cycle({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(dim_piece(free_path_algebra(cycle), 1) == 3);
  CHECK(dim_piece(free_path_algebra(Quiver({{1, 2}, {0, 3}})), 1) == 6);
  CHECK(hilbert(truncated_loop(), 5).dims == Dims{1, 1, 0, 0, 0, 0});
  CHECK(hilbert(free_path_algebra(Quiver({{2}})), 4).dims == Dims{1, 2, 4, 8, 16});
  CHECK(dim_piece(free_path_algebra(cycle), 0) == 3);
  CHECK_THROWS_AS(dim_piece(truncated_loop(), -1), Error);
  CHECK_THROWS_AS(hilbert(truncated_loop(), -1), Error);
}

TEST_CASE("per-pair counts sum to the totals") {
  const auto h = hilbert(preprojective(make_ade(AdeFamily::ATilde, 2)), 5);
  REQUIRE(h.per_pair.has_value());
  for (std::size_t m = 0; m <= 5; ++m) {
    long long sum = 0;
    for (const auto& row : *h.per_pair)
      for (const auto& cell : row) sum += cell[m];
    CHECK(sum == h.dims[m]);
  }
}

TEST_CASE("preprojective algebras") {
  const GradedPresentation single = preprojective(Quiver({{0}}));
  CHECK(single.arrows().empty());
  CHECK(single.relations().empty());
  CHECK(hilbert(single, 4).dims == Dims{1, 0, 0, 0, 0});

  const GradedPresentation a1 = preprojective(make_ade(AdeFamily::ATilde, 1));
  CHECK(a1.vertex_count() == 2);
  CHECK(a1.arrows().size() == 4);
  CHECK(a1.relations().size() == 2);
  CHECK(hilbert(a1, 8).dims == Dims{2, 4, 6, 8, 10, 12, 14, 16, 18});

  CHECK(hilbert(preprojective(Quiver({{0, 1}, {1, 0}})), 4).dims == Dims{2, 2, 0, 0, 0});
  CHECK(hilbert(preprojective(make_ade(AdeFamily::ATilde, 2)), 6).dims ==
        Dims{3, 6, 9, 12, 15, 18, 21});
  // A_3 path: finite dimensional.
  CHECK(hilbert(preprojective(Quiver({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}})), 5).dims ==
        Dims{3, 4, 3, 0, 0, 0});

  CHECK_THROWS_WITH_AS(preprojective(Quiver({{0, 1}, {0, 0}})), "not a graph", Error);
}

TEST_CASE("Gabriel quivers") {
  const Quiver cycle({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(gabriel_quiver(free_path_algebra(cycle)) == cycle);
  CHECK(gabriel_quiver(preprojective(make_ade(AdeFamily::ATilde, 1))) == Quiver({{0, 2}, {2, 0}}));
  CHECK(gabriel_quiver(parallel_arrows_identified()) == Quiver({{0, 1}, {0, 0}}));
  CHECK(gabriel_quiver(free_path_algebra(cycle)).labels() == free_path_algebra(cycle).vertices());
  CHECK_THROWS_WITH_AS(gabriel_quiver(free_path_algebra(cycle, 2)), "non-standard presentation",
                       Error);
}

TEST_CASE("standardness") {
  const GradedPresentation p = preprojective(make_ade(AdeFamily::ATilde, 1));
  CHECK(is_standard(p));
  CHECK_FALSE(is_standard(p.with_degrees(std::vector<int>(4, 2))));
  CHECK_FALSE(is_standard(free_path_algebra(Quiver({{1}}), 3)));
  CHECK(is_standard(GradedPresentation({"only"}, {}, {})));
}

TEST_CASE("re-grading keeps relations homogeneous only when degrees allow it") {
  const GradedPresentation p = preprojective(make_ade(AdeFamily::ATilde, 1));
  const auto regraded = p.with_degrees(std::vector<int>(4, 2));
  CHECK(hilbert(regraded, 6).dims == Dims{2, 0, 4, 0, 6, 0, 8});
  CHECK_THROWS_AS(p.with_degrees({1, 2, 1, 1}), Error);
}

TEST_CASE("growth estimates") {
  CHECK(gk_estimate(with_dims(Dims(21, 1))).value ==
        doctest::Approx(std::log(21.0) / std::log(20.0)).epsilon(1e-12));
  CHECK(gk_estimate(with_dims(Dims(21, 1))).value == doctest::Approx(1.01628).epsilon(1e-5));

  Dims linear;
  for (long long j = 0; j <= 20; ++j) linear.push_back(j + 1);
  CHECK(gk_estimate(with_dims(linear)).value == doctest::Approx(1.81672).epsilon(1e-5));

  const auto zero = gk_estimate(with_dims(Dims(6, 0)));
  CHECK(zero.degenerate);
  CHECK(zero.value == 0.0);
  CHECK_THROWS_AS(gk_estimate(with_dims(Dims(4, 1))), Error);

  const auto seq = gk_estimate_sequence(with_dims(linear));
  REQUIRE(seq.size() == 19);
  CHECK(seq.front() == doctest::Approx(std::log(6.0) / std::log(2.0)));
  CHECK(seq.back() == doctest::Approx(gk_estimate(with_dims(linear)).value));
}

TEST_CASE("growth of extended Dynkin preprojective algebras") {
  for (int n : {1, 2}) {
    const auto est = gk_estimate(hilbert(preprojective(make_ade(AdeFamily::ATilde, n)), 15));
    CHECK(est.value >= 1.6);
    CHECK(est.value <= 2.4);
  }
}

TEST_CASE("spanning-set guard") {
  const GradedPresentation wide = free_path_algebra(Quiver({{4}}));
  CHECK(dim_piece(wide, 8) == 65536);
  CHECK_THROWS_AS(dim_piece(wide, 10), Error);
}

TEST_CASE("property: dimensions agree with a brute-force span of p r q") {
  testkit::Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const GradedPresentation p = random_presentation(rng);
    const auto h = hilbert(p, 4);
    for (int m = 0; m <= 4; ++m) CHECK(h.dims[m] == testkit::brute_dim(p, m));
  }
  for (const Quiver& g : {make_ade(AdeFamily::ATilde, 1), make_ade(AdeFamily::ATilde, 2),
                          make_ade(AdeFamily::LTilde, 1), make_ade(AdeFamily::DLTilde, 2)}) {
    const GradedPresentation p = preprojective(g);
    const auto h = hilbert(p, 5);
    for (int m = 0; m <= 5; ++m) CHECK(h.dims[m] == testkit::brute_dim(p, m));
  }
}

TEST_CASE("property: dropping a relation never shrinks a piece") {
  testkit::Rng rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    const GradedPresentation p = random_presentation(rng);
    const auto full = hilbert(p, 5).dims;
    for (std::size_t r = 0; r < p.relations().size(); ++r) {
      const auto fewer = hilbert(p.without_relation(r), 5).dims;
      for (std::size_t m = 0; m < full.size(); ++m) CHECK(fewer[m] >= full[m]);
    }
  }
}

TEST_CASE("property: Gabriel quiver of a free path algebra is the quiver") {
  for (std::size_t n = 1; n <= 2; ++n)
    for (const Quiver& q : testkit::all_quivers(n, 2)) CHECK(gabriel_quiver(free_path_algebra(q)) == q);
  testkit::Rng rng(63);
  for (int trial = 0; trial < 200; ++trial) {
    const Quiver q = testkit::random_quiver(rng, 3 + trial % 2, 2);
    CHECK(gabriel_quiver(free_path_algebra(q)) == q);
  }
}

TEST_CASE("property: Gabriel quiver of a preprojective algebra is the doubled graph") {
  for (const Quiver& g : {make_ade(AdeFamily::ATilde, 1), make_ade(AdeFamily::ATilde, 2),
                          Quiver({{0, 1}, {1, 0}}), make_ade(AdeFamily::LTilde, 2)}) {
    QuiverBuilder doubled(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) doubled.at(i, j) = i == j ? 2 * g(i, i) : g(i, j);
    CHECK(gabriel_quiver(preprojective(g)) == doubled.build());
  }
}

TEST_CASE("property: standard exactly when every arrow has degree 1") {
  testkit::Rng rng(64);
  std::uniform_int_distribution<int> deg(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const GradedPresentation free = free_path_algebra(testkit::random_quiver(rng, 2, 1));
    std::vector<int> degrees;
    bool all_one = true;
    for (std::size_t a = 0; a < free.arrows().size(); ++a) {
      degrees.push_back(deg(rng));
      all_one = all_one && degrees.back() == 1;
    }
    CHECK(is_standard(free.with_degrees(degrees)) == all_one);
  }
}
