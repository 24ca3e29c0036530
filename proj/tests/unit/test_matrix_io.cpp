#include <gtest/gtest.h>

#include <sstream>

#include "kpos/matrix_io.hpp"

using namespace kpos;

namespace {
std::vector<SymMatrix> parse(const std::string& s) {
  std::istringstream in(s);
  return read_matrices(in);
}

std::size_t error_line(const std::string& s) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST(MatrixIo, TextSingleAndMultipleBlocks) {
  const auto one = parse("2\n2 1\n1 2\n");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (SymMatrix{{2, 1}, {1, 2}}));
  const auto two = parse("1\n5\n\n2\n1 0\n0 1\n");
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[1], SymMatrix::identity(2));
}

TEST(MatrixIo, JsonObjectArrayAndLines) {
  EXPECT_EQ(parse(R"({"n":2,"rows":[[1,0],[0,3]]})").size(), 1u);
  EXPECT_EQ(parse(R"([{"n":1,"rows":[[1]]},{"n":1,"rows":[[2]]}])").size(), 2u);
  const auto lines = parse("{\"n\":1,\"rows\":[[1]]}\n{\"n\":1,\"rows\":[[4]]}\n");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1](0, 0), 4.0);
}

TEST(MatrixIo, FirstByteDetectionSkipsWhitespace) {
  EXPECT_EQ(parse("   \n  {\"n\":1,\"rows\":[[1]]}").size(), 1u);
  EXPECT_EQ(parse("\n\n1\n7\n").size(), 1u);
}

TEST(MatrixIo, MalformedInputReportsLine) {
  EXPECT_EQ(error_line("2\n1 2\n3 1\n"), 3u);
  EXPECT_EQ(error_line("2\n1 2\n2\n"), 3u);
  EXPECT_GT(error_line("2\n1 x\n2 1\n"), 0u);
  EXPECT_GT(error_line("{\"n\":2,\"rows\":[[1,0]]}"), 0u);
  EXPECT_THROW(parse("{oops"), ParseError);
  EXPECT_THROW(parse("2\n1 nan\nnan 1\n"), ParseError);
}

TEST(MatrixIo, RoundTripsAtFullPrecision) {
  const SymMatrix a{{0.1, 1.0 / 3.0}, {1.0 / 3.0, -2e-17}};
  EXPECT_EQ(parse(matrix_to_text(a))[0], a);
  EXPECT_EQ(parse(matrix_to_json(a).dump())[0], a);
  EXPECT_EQ(matrix_to_json(a)["n"], 2);
}
