#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace germlab;

namespace {

MapGerm form(const std::string& name) {
  if (name == "hyp+1") return normal_forms::sigma20_hyp(1);
  if (name == "hyp-1") return normal_forms::sigma20_hyp(-1);
  int e1 = name[4] == '+' ? 1 : -1;
  int e2 = name[6] == '+' ? 1 : -1;
  return normal_forms::sigma20_elli(e1, e2);
}

Poly x(int i) { return Poly::variable(4, i); }

}  // namespace

TEST(Sigma20, ValuesMatchOracle) {
  for (const auto& [name, v] : oracle::data()["sigma20"].items()) {
    SCOPED_TRACE(name);
    auto f = form(name);
    EXPECT_EQ(analyze(f).lambda, oracle::poly(v["lambda"], 4));
    auto r = classify_sigma20(f);
    EXPECT_EQ(r.hess_det, oracle::rat(v["hess_det"]));
    EXPECT_EQ(r.big_det, oracle::rat(v["big_det"]));
    EXPECT_EQ(r.trace, oracle::rat(v["trace"]));
  }
}

TEST(Sigma20, HyperbolicReferenceValues) {
  auto r = classify_sigma20(normal_forms::sigma20_hyp(1));
  EXPECT_EQ(r.hess_det, Rat(-16));
  EXPECT_EQ(r.big_det, Rat(-4));
  EXPECT_EQ(r.kind, UmbilicKind::hyp);
}

TEST(Sigma20, NormalFormsKeepTheirSigns) {
  for (int e1 : {1, -1}) {
    auto r = classify_sigma20(normal_forms::sigma20_hyp(e1));
    EXPECT_EQ(r.label, make_label(Family::sigma20_hyp, 4, 4, {e1, 0}));
    for (int e2 : {1, -1}) {
      auto s = classify_sigma20(normal_forms::sigma20_elli(e1, e2));
      EXPECT_EQ(s.kind, UmbilicKind::elli);
      EXPECT_EQ(s.label, make_label(Family::sigma20_elli, 4, 4, {e1, e2}));
    }
  }
}

TEST(Sigma20, TargetNormalizationIsOrientationPreserving) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    auto B = oracle::random_orientation_preserving(4, rng);
    auto f = linear_change(normal_forms::sigma20_elli(1, -1), RatMatrix::identity(4), B);
    auto [g, b] = target_normalize(f);
    EXPECT_GT(b.det(), 0);
    auto j0 = jacobian(g).at_origin();
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(j0(i, j), 0);
  }
}

TEST(Sigma20, DegenerateAndWrongRank) {
  MapGerm flat(4, {x(0) * x(0), x(1) * x(1), x(2), x(3)});
  try {
    classify_sigma20(flat);
    ADD_FAILURE() << "expected degenerate";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate);
    EXPECT_NE(std::string(e.what()).find("not stable"), std::string::npos);
  }
  EXPECT_THROW(classify_sigma20(normal_forms::morin(2, 4, 1, 1)), Error);
  EXPECT_THROW(classify_sigma20(normal_forms::morin(2, 2, 1, 1)), Error);
}

TEST(Classify, DispatchSigma20) {
  auto c = classify(normal_forms::sigma20_hyp(-1));
  EXPECT_EQ(c.classifier, "sigma20");
  EXPECT_EQ(c.label.text(), "sigma20-hyp eps1=-1");
}
