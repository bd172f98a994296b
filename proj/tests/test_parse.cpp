#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracle.hpp"

using namespace germlab;

namespace {

ParseError parse_error_of(const std::string& text) {
  try {
    parse_map(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseError(0, 0, "");
}

Poly x(int n, int i) { return Poly::variable(n, i); }

}  // namespace

TEST(Parse, CuspWithHeader) {
  auto f = parse_map("vars: x1,x2 | x1^3 + x1*x2 ; x2");
  EXPECT_EQ(f, normal_forms::morin(2, 2, 1, 1));
  EXPECT_EQ(f.names(), (std::vector<std::string>{"x1", "x2"}));
}

TEST(Parse, InferredVariables) {
  auto f = parse_map("x1^3 + x1*x2 ; x2");
  EXPECT_EQ(f.src_dim(), 2);
  auto g = parse_map("x3 ; x1");  // x1..x3 all present in the source
  EXPECT_EQ(g.src_dim(), 3);
  auto h = parse_map("b*a ; a");
  EXPECT_EQ(h.names(), (std::vector<std::string>{"a", "b"}));
}

TEST(Parse, MultilineFileFormat) {
  auto f = parse_map("# comment\nvars: u, v\n  u^2   # trailing comment\n ; v\n");
  EXPECT_EQ(f.src_dim(), 2);
  EXPECT_EQ(f[0], x(2, 0) * x(2, 0));
}

TEST(Parse, Precedence) {
  auto p = parse_poly("-x^2", {"x"});
  EXPECT_EQ(p, -(x(1, 0) * x(1, 0)));
  EXPECT_EQ(parse_poly("2*x^3/1", {"x"}), x(1, 0).pow(3) * Rat(2));
  EXPECT_EQ(parse_poly("1/2*x - -x", {"x"}), x(1, 0) * Rat(3, 2));
  EXPECT_EQ(parse_poly("(x + 1)^2 - 1", {"x"}), x(1, 0) * x(1, 0) + x(1, 0) * Rat(2));
  EXPECT_EQ(parse_poly("x - x*3 + 2*x", {"x"}), Poly(1));
}

TEST(Parse, ConstantTermRejectedWithSpan) {
  auto e = parse_error_of("vars: x1,x2 | x1^2 + 1 ; x2");
  EXPECT_NE(e.detail().find("nonzero constant term"), std::string::npos);
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 15);
  auto e2 = parse_error_of("vars: x1, x2\nx1^2 ;\n  x2 + 3");
  EXPECT_EQ(e2.line(), 3);
  EXPECT_EQ(e2.column(), 3);
}

TEST(Parse, NonIntegerExponent) {
  auto e = parse_error_of("vars: x1,x2 | x1^(1/2) ; x2");
  EXPECT_NE(e.detail().find("exponent"), std::string::npos);
  EXPECT_EQ(e.column(), 18);
  parse_error_of("vars: x1 | x1^-1");
  parse_error_of("vars: x1 | x1^256");
  parse_error_of("vars: x1 | x1^2^2");
}

TEST(Parse, SyntaxErrors) {
  parse_error_of("vars: x1 | x2");                 // unknown identifier
  parse_error_of("vars: x1,x1 | x1");              // duplicate
  parse_error_of("vars: x1 | x1 x1");              // implicit product
  parse_error_of("vars: x1 | (x1");                // unbalanced
  parse_error_of("vars: x1 | x1 ;");               // empty component
  parse_error_of("vars: x1 | 1.5*x1");             // float literal
  parse_error_of("vars: x1 | x1/0");               // zero denominator
  parse_error_of("");                              // nothing
  parse_error_of("vars: a,b,c,d,e,f,g,h,i | a");   // too many variables
  parse_error_of("vars: x | x^200 * x^100");       // degree overflow
  parse_error_of("vars: x | " + std::string(1000, '(') + "x" + std::string(1000, ')'));
}

TEST(Parse, RenderRoundTrip) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    std::string text = corpus::random_germ_text(rng);
    MapGerm f;
    try {
      f = parse_map(text);
    } catch (const ParseError& e) {
      FAIL() << text << ": " << e.what();
    }
    auto g = parse_map(render_map(f));
    EXPECT_EQ(f, g) << text;
    EXPECT_EQ(render_map(g), render_map(f));
  }
}

TEST(Parse, FuzzNeverCrashes) {
  std::mt19937_64 rng(32);
  const std::string alphabet = "x1234567890y+-*/^()[];|:,. \n#vars\t\xff\x01";
  std::uniform_int_distribution<int> len(0, 48), pick(0, static_cast<int>(alphabet.size()) - 1), byte(0, 255),
      mode(0, 1);
  int ok = 0, errors = 0;
  for (int i = 0; i < 20000; ++i) {
    std::string s;
    int n = len(rng);
    bool raw = mode(rng) == 0;
    for (int k = 0; k < n; ++k)
      s.push_back(raw ? static_cast<char>(byte(rng)) : alphabet[static_cast<std::size_t>(pick(rng))]);
    try {
      parse_map(s);
      ++ok;
    } catch (const Error&) {
      ++errors;
    }
  }
  EXPECT_EQ(ok + errors, 20000);
}
