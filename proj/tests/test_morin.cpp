#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace germlab;

namespace {
Poly x(int n, int i) { return Poly::variable(n, i); }
}  // namespace

// Criteria values at 0 against the sympy derivation of every normal form
// f^k_(e1,e2), n <= 6.
TEST(Morin, CriteriaMatchOracle) {
  for (const auto& row : oracle::data()["morin"]) {
    int k = row["k"], n = row["n"], e1 = row["e1"], e2 = row["e2"];
    SCOPED_TRACE("k=" + std::to_string(k) + " n=" + std::to_string(n) + " e=(" + std::to_string(e1) + "," +
                 std::to_string(e2) + ")");
    auto r = recognize_morin(normal_forms::morin(k, n, e1, e2));
    ASSERT_EQ(r.status, MorinStatus::morin);
    EXPECT_EQ(r.k, row["k"].get<int>());
    EXPECT_EQ(oracle::lookup(r.criteria, "eta^" + std::to_string(k) + " lambda"),
              row["eta_k_lambda"].get<std::string>());
    if (k == n) {
      EXPECT_EQ(oracle::lookup(r.criteria, "det grad(lambda..eta^" + std::to_string(n - 1) + " lambda)"),
                row["grad_det"].get<std::string>());
    } else {
      EXPECT_EQ(oracle::lookup(r.criteria, "rank d(lambda..eta^" + std::to_string(k - 1) + " lambda)"),
                std::to_string(row["grad_rank"].get<int>()));
    }
    if (n == 1) {
      EXPECT_EQ(oracle::lookup(r.criteria, "eta^2 f1"), row["eta_eta_f1"].get<std::string>());
    }
  }
}

TEST(Morin, SignIdentitiesForKEqualsN) {
  for (int n = 2; n <= 6; ++n)
    for (int e1 : {1, -1})
      for (int e2 : {1, -1}) {
        auto r = recognize_morin(normal_forms::morin(n, n, e1, e2));
        EXPECT_EQ(r.eta_k_lambda_sign, e1 * e2);
        int expect = (n % 2 == 1 ? 1 : -1) * (n % 2 ? e1 : 1) * ((n + 1) % 2 ? e2 : 1);
        ASSERT_TRUE(r.grad_det_sign);
        EXPECT_EQ(*r.grad_det_sign, expect) << "n=" << n;
      }
}

TEST(Morin, NamesAndFamilies) {
  EXPECT_EQ(recognize_morin(normal_forms::morin(1, 1, 1)).label.text(), "fold eps1=+1");
  EXPECT_EQ(recognize_morin(normal_forms::morin(1, 3, 1)).label.text(), "fold");
  EXPECT_EQ(recognize_morin(normal_forms::morin(2, 2, 1, 1)).label.text(), "cusp eps1=+1");
  EXPECT_EQ(recognize_morin(normal_forms::morin(4, 4, -1, -1)).label.text(), "butterfly eps1=-1 eps2=-1");
  EXPECT_EQ(recognize_morin(normal_forms::morin(5, 5, 1, 1)).label.name(), "morin-5");
}

TEST(Morin, NormalFormsAreFixedPoints) {
  // Each label's normal form classifies to the same label.
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
          auto l = isotopy_class(normal_forms::morin(k, n, e1, e2));
          EXPECT_EQ(isotopy_class(l.normal_form), l) << l.text();
        }
}

TEST(Morin, ClassCounts) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      std::set<ClassLabel> labels;
      for (int e1 : {1, -1})
        for (int e2 : {1, -1}) labels.insert(isotopy_class(normal_forms::morin(k, n, e1, e2)));
      EXPECT_EQ(static_cast<int>(labels.size()), morin_class_count(k, n)) << "k=" << k << " n=" << n;
    }
  EXPECT_EQ(morin_class_count(4, 4), 4);
  EXPECT_EQ(morin_class_count(3, 5), 1);
}

TEST(Morin, RegularAndFailures) {
  auto r = recognize_morin(normal_forms::identity(3, 3));
  EXPECT_EQ(r.status, MorinStatus::regular);
  EXPECT_EQ(r.label.family, Family::regular);

  MapGerm corank2(2, {x(2, 0) * x(2, 0), x(2, 1) * x(2, 1)});
  EXPECT_EQ(try_recognize_morin(corank2).status, MorinStatus::not_corank_one);
  try {
    recognize_morin(corank2);
    ADD_FAILURE() << "expected not_corank_one";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_corank_one);
  }

  // lips: lambda has a critical point, rank condition fails
  auto lips = try_recognize_morin(normal_forms::lips(1));
  EXPECT_EQ(lips.status, MorinStatus::degenerate);
  EXPECT_THROW(recognize_morin(normal_forms::lips(1)), Error);

  // (x1^4, x2): eta^j lambda vanishes for j <= 2
  MapGerm flat(2, {x(2, 0).pow(4), x(2, 1)});
  EXPECT_EQ(try_recognize_morin(flat).status, MorinStatus::degenerate);

  EXPECT_THROW(recognize_morin(normal_forms::whitney_umbrella()), Error);
  EXPECT_THROW(morin_invariants(normal_forms::morin(2, 3, 1, 1), 3), Error);
  EXPECT_EQ(morin_invariants(normal_forms::morin(2, 3, 1, 1), 2).k, 2);
}

TEST(Morin, EtaReversalAndRescalingKeepInvariant) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
          auto f = normal_forms::morin(k, n, e1, e2);
          auto base = recognize_morin(f);
          auto eta = null_field(f).eta;
          auto rev = recognize_morin_with(f, -eta);
          VecField scaled;
          for (const auto& c : eta.components) scaled.components.push_back(c * Rat(7, 3));
          auto sc = recognize_morin_with(f, scaled);
          EXPECT_EQ(rev.label, base.label);
          EXPECT_EQ(sc.label, base.label);
          EXPECT_EQ(rev.invariant, base.invariant);
        }
}

TEST(Morin, NullFieldMustLieInKernel) {
  auto f = normal_forms::morin(2, 2, 1, 1);
  EXPECT_THROW(recognize_morin_with(f, VecField::constant(2, {Rat(0), Rat(1)})), Error);
  EXPECT_THROW(recognize_morin_with(f, VecField::constant(2, {Rat(0), Rat(0)})), Error);
}

TEST(Morin, InvariantShapes) {
  EXPECT_EQ(morin_invariant_for(3, 5, 1, std::nullopt, std::nullopt).kind, InvariantKind::none);
  EXPECT_EQ(morin_invariant_for(2, 5, -1, std::nullopt, std::nullopt).values, std::vector<int>{-1});
  EXPECT_EQ(morin_invariant_for(4, 4, 1, -1, std::nullopt).kind, InvariantKind::pair);
  EXPECT_EQ(morin_invariant_for(5, 5, 1, -1, std::nullopt).kind, InvariantKind::grad_det);
  EXPECT_EQ(morin_invariant_for(6, 6, 1, -1, std::nullopt).kind, InvariantKind::eta_k_lambda);
  EXPECT_EQ(morin_invariant_for(3, 3, -1, -1, std::nullopt).values, std::vector<int>{1});
  EXPECT_THROW(morin_invariant_for(3, 3, 1, std::nullopt, std::nullopt), Error);
}

TEST(Morin, RingDetMatchesRational) {
  std::vector<std::vector<Rat>> m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  RatMatrix r{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  EXPECT_EQ(detail::ring_det(m, Rat(0), Rat(1)), r.det());
}
