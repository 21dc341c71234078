// Copyright 2026 The quantakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "quantakit/errors.hpp"
#include "quantakit/label.hpp"

namespace quantakit {
namespace {

TEST(Label, ParsePrintRoundTrip) {
  for (const char* s : {"0", "1", "*", "q7", "(0,1)", "[]", "[0,1,1]",
                        "([1,0],1)", "i1(0)", "i2((1,[0]))", "((0,1),[])"}) {
    EXPECT_EQ(Label::parse(s).str(), s);
  }
}

TEST(Label, WhitespaceIsIgnored) {
  EXPECT_EQ(Label::parse(" ( [ 0 , 1 ] , 0 ) "), Label::parse("([0,1],0)"));
}

TEST(Label, Structure) {
  Label l = Label::parse("([1,0],1)");
  EXPECT_EQ(l.kind(), Label::Kind::pair);
  ASSERT_EQ(l.first().items().size(), 2u);
  EXPECT_TRUE(l.first().items()[0].as_bit());
  EXPECT_TRUE(l.second().as_bit());
  EXPECT_EQ(Label::parse("i2(0)").inner(), Label::bit(false));
}

TEST(Label, MalformedInputIsRejected) {
  for (const char* s : {"", "(", "(0,1", "[0,,1]", "i3(0)", "(0,1))", "a b"}) {
    EXPECT_THROW(Label::parse(s), ParseError) << s;
  }
}

TEST(FinBasis, ProductIsRowMajor) {
  FinBasis p = FinBasis::product(FinBasis::bits(), FinBasis::bits());
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[1].str(), "(0,1)");
  EXPECT_EQ(p[2].str(), "(1,0)");
}

TEST(FinBasis, CoproductListsLeftThenRight) {
  FinBasis u = FinBasis::unit();
  FinBasis c = FinBasis::coproduct(u, FinBasis::bits());
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].str(), "i1(*)");
  EXPECT_EQ(c[2].str(), "i2(1)");
}

TEST(FinBasis, LookupAndDuplicates) {
  FinBasis b = FinBasis::bits();
  EXPECT_EQ(b.index_of(Label::bit(true)), 1u);
  EXPECT_FALSE(b.contains(Label::atom("2")));
  EXPECT_THROW(b.index_of(Label::atom("2")), UnknownLabel);
  EXPECT_THROW(FinBasis({Label::bit(false), Label::bit(false)}),
               std::invalid_argument);
}

}  // namespace
}  // namespace quantakit
