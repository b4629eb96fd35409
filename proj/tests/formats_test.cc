// Copyright 2026 The vbent Authors.
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

#include "vbent/formats.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "test_util.h"
#include "vbent/error.h"
#include "vbent/families.h"

namespace vbent {
namespace {

using testing::RandomFunction;

void ExpectParseError(std::string_view text, int line, int column, bool vectorial) {
  try {
    if (vectorial) {
      ParseVectorial(text);
    } else {
      ParseBoolean(text);
    }
    ADD_FAILURE() << "accepted: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(BooleanFormatTest, RoundTrip) {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 12; ++n) {
    const FieldSpec field = FieldSpec::Standard(n);
    const BooleanFunction f = RandomFunction(n, rng);
    const std::string text = FormatBoolean(f, field);
    const BooleanFile back = ParseBoolean(text);
    EXPECT_EQ(back.function, f);
    EXPECT_EQ(back.field, field);
    EXPECT_EQ(FormatBoolean(back.function, back.field), text);
    EXPECT_EQ(DetectKind(text), FileKind::kBoolean);
  }
}

TEST(BooleanFormatTest, Layout) {
  const FieldSpec field = FieldSpec::Standard(3);
  const BooleanFunction f = BooleanFunction::Tabulate(3, [](std::uint32_t x) { return x == 1 || x == 6; });
  EXPECT_EQ(FormatBoolean(f, field), "BF n=3 field=b\n24\n");
  EXPECT_EQ(ParseBoolean("BF n=3 field=b\n2 4\n").function, f);
  EXPECT_EQ(ParseBoolean("BF field=0xb n=3\n24").function, f);
}

TEST(BooleanFormatTest, Errors) {
  ExpectParseError("", 1, 1, false);
  ExpectParseError("BF n=3 field=b\n2", 2, 2, false);
  ExpectParseError("BF n=3 field=b\n245", 2, 3, false);
  ExpectParseError("BF n=3 field=b\n2g", 2, 2, false);
  ExpectParseError("BF n=3\n24", 1, 7, false);
  ExpectParseError("BF n=3 field=b colour=red\n24", 1, 16, false);
  ExpectParseError("BF n=3 field=7\n24", 1, 14, false);
  ExpectParseError("BF n=x field=b\n24", 1, 6, false);
  ExpectParseError("VF n=3 field=b\n24", 1, 1, false);
  ExpectParseError("BF n=1 field=3\n7", 2, 1, false);
}

TEST(VectorialFormatTest, RoundTrip) {
  const FieldSpec field = FieldSpec::Standard(6);
  const VectorialFunction g = NihoBase(field, 2);
  const std::string text = FormatVectorial(g, field);
  const VectorialFile back = ParseVectorial(text);
  EXPECT_EQ(back.function, g);
  EXPECT_EQ(back.field, field);
  EXPECT_EQ(DetectKind(text), FileKind::kVectorial);

  std::mt19937_64 rng(1);
  const BooleanFunction fs[] = {RandomFunction(6, rng), RandomFunction(6, rng)};
  const VectorialFunction h = Augment(g, fs, field);
  const std::string aug = FormatVectorial(h, field);
  EXPECT_EQ(aug.substr(0, aug.find('\n')), "VF n=6 m=3 t=2 field=43");
  EXPECT_EQ(ParseVectorial(aug).function, h);
}

TEST(VectorialFormatTest, Errors) {
  const FieldSpec field = FieldSpec::Standard(4);
  const std::string good = FormatVectorial(KasamiBase(field), field);
  EXPECT_NO_THROW(ParseVectorial(good));
  // Drop the last line.
  const std::string truncated = good.substr(0, good.rfind('\n', good.size() - 2) + 1);
  ExpectParseError(truncated, 17, 1, true);
  ExpectParseError(good + "0\n", 18, 1, true);
  ExpectParseError("VF n=4 m=2 t=0 field=13\n2\n", 2, 1, true);
  ExpectParseError("VF n=4 m=3 t=0 field=13\n0\n", 1, 10, true);
  ExpectParseError("VF n=2 m=1 t=1 field=7\n0.1\n1\n", 3, 1, true);
  ExpectParseError("VF n=2 m=1 t=1 field=7\n0.2\n", 2, 3, true);
}

TEST(FileTest, AtomicWriteAndRead) {
  const auto dir = std::filesystem::temp_directory_path() / "vbent_formats_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "f.bf").string();
  WriteTextFileAtomic(path, "first");
  WriteTextFileAtomic(path, "second");
  EXPECT_EQ(ReadTextFile(path), "second");
  EXPECT_THROW(ReadTextFile((dir / "missing").string()), Error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace vbent
