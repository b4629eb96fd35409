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

#ifndef VBENT_FORMATS_H_
#define VBENT_FORMATS_H_

// Text formats for truth tables ("BF") and lookup tables ("VF").
//
//   BF n=<n> field=<hex modulus>
//   <ceil(2^n / 4) hex digits; digit i holds f(4i + j) in bit j>
//
//   VF n=<n> m=<m> t=<t> field=<hex modulus>
//   <2^n lines, one per x ascending: "<hex>" or, when t > 0, "<hex>.<hex>">
//
// Whitespace inside the BF digit block is ignored.

#include <string>
#include <string_view>

#include "vbent/boolfun.h"
#include "vbent/gf2n.h"
#include "vbent/vectorial.h"

namespace vbent {

struct BooleanFile {
  FieldSpec field;
  BooleanFunction function;
};

struct VectorialFile {
  FieldSpec field;
  VectorialFunction function;
};

enum class FileKind { kBoolean, kVectorial };

std::string FormatBoolean(const BooleanFunction& f, const FieldSpec& field);
std::string FormatVectorial(const VectorialFunction& f, const FieldSpec& field);

// Throw ParseError with 1-based line and column.
BooleanFile ParseBoolean(std::string_view text);
VectorialFile ParseVectorial(std::string_view text);
FileKind DetectKind(std::string_view text);

std::string ReadTextFile(const std::string& path);
// Writes to a sibling temporary and renames it over `path`.
void WriteTextFileAtomic(const std::string& path, std::string_view contents);

}  // namespace vbent

#endif  // VBENT_FORMATS_H_
