#include "polyfrenet/metric.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace polyfrenet;

namespace {

CoordVector vec(std::initializer_list<double> xs) {
  CoordVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

BilinearForm form_of(const DiagonalMetric& g) {
  return [g](const CoordVector& a, const CoordVector& b) { return inner_product(a, b, g); };
}

CoordVector random_integer_vector(testing::Gen& gen, int m) {
  CoordVector v(m);
  for (int i = 0; i < m; ++i) v[i] = gen.integer(-3, 3);
  return v;
}

}  // namespace

TEST_SUITE("metric") {
  TEST_CASE("inner product on small examples") {
    CHECK(inner_product(vec({1, 0}), vec({1, 0}), {2, 1}) == -1.0);
    CHECK(inner_product(vec({1, 1}), vec({1, 1}), {2, 1}) == 0.0);
    CHECK(inner_product(vec({1, 1, 2}), vec({1, -1, 1}), {3, 2}) == 2.0);
  }

  TEST_CASE("gram-schmidt examples") {
    const DiagonalMetric g{2, 1};
    auto out = gram_schmidt_nondegenerate({vec({1, 0}), vec({1, 1})}, g);
    REQUIRE(out.frame.size() == 2);
    CHECK(out.frame[0].isApprox(vec({1, 0})));
    CHECK(out.frame[1].isApprox(vec({0, 1})));
    CHECK(out.eps == std::vector<int>{-1, 1});

    auto same = gram_schmidt_nondegenerate({vec({0, 1}), vec({1, 0})}, g);
    CHECK(same.frame[0] == vec({0, 1}));
    CHECK(same.frame[1] == vec({1, 0}));
    CHECK(same.eps == std::vector<int>{1, -1});

    CHECK_THROWS_AS(gram_schmidt_nondegenerate({vec({1, 1}), vec({0, 1})}, g), DegenerateSpanError);
  }

  TEST_CASE("signature validation") {
    CHECK(validate_signature({{1, 1, -1}, 1, 3}).accepted);
    const auto bad = validate_signature({{-1, -1, 1}, 1, 3});
    CHECK_FALSE(bad.accepted);
    CHECK_FALSE(bad.violation.empty());
    CHECK(validate_signature({{1, 1, -1, 1, 1}, 1, 5}).accepted);
    CHECK_FALSE(validate_signature({{1, 1, 1}, 1, 3}).accepted);  // three positives need m - t >= 3
    CHECK_FALSE(validate_signature({{1, -1}, 0, 2}).accepted);
    CHECK_THROWS_AS(require_valid({{1, 1, 1, 1}, 1, 3}), std::invalid_argument);

    const auto minimal = Signature::minimal_for({1, 1, 1});
    CHECK(minimal.ambient_index == 1);
    CHECK(minimal.ambient_dim == 4);
    CHECK(validate_signature(minimal).accepted);
  }

  TEST_CASE("inner product is symmetric and bilinear on integer vectors") {
    testing::Gen gen(11);
    for (int trial = 0; trial < 500; ++trial) {
      const int m = gen.integer(2, 6);
      const DiagonalMetric g{m, gen.integer(1, m - 1)};
      const auto x = random_integer_vector(gen, m), y = random_integer_vector(gen, m), z = random_integer_vector(gen, m);
      const double a = gen.integer(-5, 5), b = gen.integer(-5, 5);
      CHECK(inner_product(x, y, g) == inner_product(y, x, g));
      CHECK(inner_product(a * x + b * z, y, g) == a * inner_product(x, y, g) + b * inner_product(z, y, g));
    }
  }

  TEST_CASE("gram-schmidt output is orthonormal and spans the input flag") {
    testing::Gen gen(12);
    int accepted = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const int m = gen.integer(2, 6);
      const DiagonalMetric g{m, gen.integer(1, m - 1)};
      const int k = gen.integer(1, m);
      std::vector<CoordVector> in;
      for (int i = 0; i < k; ++i) in.push_back(random_integer_vector(gen, m));
      OrthonormalFrame out;
      try {
        out = gram_schmidt_nondegenerate(in, g);
      } catch (const DegenerateSpanError&) {
        continue;
      }
      ++accepted;
      CHECK(orthonormality_defect(out.frame, out.eps, form_of(g)) < 1e-12);
      for (int i = 0; i < k; ++i) {
        CoordVector rebuilt = CoordVector::Zero(m);
        for (int j = 0; j <= i; ++j) rebuilt += out.eps[j] * inner_product(in[i], out.frame[j], g) * out.frame[j];
        CHECK((rebuilt - in[i]).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
    CHECK(accepted > 300);
  }
}
