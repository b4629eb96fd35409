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

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "vbent/error.h"

namespace vbent {
namespace {

constexpr char kDigits[] = "0123456789abcdef";

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string Hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

// Parses an unsigned hex number spanning all of `token`.
std::optional<std::uint64_t> ParseHex(std::string_view token) {
  if (token.size() >= 2 && token[0] == '0' && (token[1] == 'x' || token[1] == 'X')) {
    token.remove_prefix(2);
  }
  if (token.empty() || token.size() > 16) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : token) {
    const int d = HexValue(c);
    if (d < 0) return std::nullopt;
    v = (v << 4) | static_cast<std::uint64_t>(d);
  }
  return v;
}

std::optional<int> ParseInt(std::string_view token) {
  if (token.empty() || token.size() > 6) return std::nullopt;
  int v = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

struct HeaderField {
  std::string_view key;
  std::string_view value;
  std::size_t column;  // of the value
};

// "TAG k=v k=v ..." on the first line.
std::vector<HeaderField> ParseHeader(const Line& line, std::string_view tag) {
  std::vector<HeaderField> out;
  std::size_t pos = 0;
  bool first = true;
  const std::string_view s = line.text;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) break;
    std::size_t end = pos;
    while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
    const std::string_view token = s.substr(pos, end - pos);
    if (first) {
      if (token != tag) {
        throw ParseError("expected header tag " + std::string(tag), line.number, pos + 1);
      }
      first = false;
    } else {
      const std::size_t eq = token.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParseError("expected key=value in header", line.number, pos + 1);
      }
      out.push_back({token.substr(0, eq), token.substr(eq + 1), pos + eq + 2});
    }
    pos = end;
  }
  if (first) throw ParseError("expected header tag " + std::string(tag), line.number, 1);
  return out;
}

const HeaderField& Require(const std::vector<HeaderField>& fields, std::string_view key,
                           const Line& line) {
  for (const auto& f : fields) {
    if (f.key == key) return f;
  }
  throw ParseError("header is missing " + std::string(key) + "=", line.number,
                   line.text.size() + 1);
}

void RejectUnknown(const std::vector<HeaderField>& fields,
                   std::initializer_list<std::string_view> known, const Line& line) {
  for (const auto& f : fields) {
    bool ok = false;
    for (auto k : known) ok = ok || f.key == k;
    if (!ok) {
      throw ParseError("unknown header key " + std::string(f.key), line.number,
                       f.column - f.key.size() - 1);
    }
  }
}

int HeaderInt(const std::vector<HeaderField>& fields, std::string_view key, const Line& line,
              int lo, int hi) {
  const HeaderField& f = Require(fields, key, line);
  const auto v = ParseInt(f.value);
  if (!v || *v < lo || *v > hi) {
    throw ParseError(std::string(key) + " must be an integer in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]",
                     line.number, f.column);
  }
  return *v;
}

FieldSpec HeaderFieldSpec(const std::vector<HeaderField>& fields, int n, const Line& line) {
  const HeaderField& f = Require(fields, "field", line);
  const auto modulus = ParseHex(f.value);
  if (!modulus) throw ParseError("field must be a hex modulus", line.number, f.column);
  try {
    if (*modulus == StandardModulus(n)) return FieldSpec::Standard(n);
    return FieldSpec::WithModulus(n, *modulus);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), line.number, f.column);
  }
}

std::vector<Line> Lines(std::string_view text) {
  std::vector<Line> lines = SplitLines(text);
  if (lines.empty() || lines[0].text.empty()) {
    throw ParseError("empty input", 1, 1);
  }
  return lines;
}

}  // namespace

std::string FormatBoolean(const BooleanFunction& f, const FieldSpec& field) {
  if (f.n() != field.n()) throw InvalidArgument("function and field sizes differ");
  std::string out = "BF n=" + std::to_string(f.n()) + " field=" + Hex(field.modulus()) + "\n";
  const std::uint32_t digits = (f.size() + 3) / 4;
  for (std::uint32_t i = 0; i < digits; ++i) {
    unsigned d = 0;
    for (unsigned j = 0; j < 4; ++j) {
      const std::uint32_t x = 4 * i + j;
      if (x < f.size() && f(x)) d |= 1u << j;
    }
    out += kDigits[d];
    if ((i + 1) % 64 == 0 || i + 1 == digits) out += '\n';
  }
  return out;
}

BooleanFile ParseBoolean(std::string_view text) {
  const std::vector<Line> lines = Lines(text);
  const auto header = ParseHeader(lines[0], "BF");
  RejectUnknown(header, {"n", "field"}, lines[0]);
  const int n = HeaderInt(header, "n", lines[0], 1, kMaxFieldDegree);
  const FieldSpec field = HeaderFieldSpec(header, n, lines[0]);
  const std::uint32_t size = std::uint32_t{1} << n;
  const std::uint32_t expected = (size + 3) / 4;
  std::vector<std::uint64_t> words((size + 63) / 64, 0);
  std::uint32_t count = 0;
  std::size_t last_line = lines[0].number;
  std::size_t last_col = lines[0].text.size() + 1;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    for (std::size_t c = 0; c < line.text.size(); ++c) {
      const char ch = line.text[c];
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      const int d = HexValue(ch);
      if (d < 0) throw ParseError("expected a hex digit", line.number, c + 1);
      if (count >= expected) {
        throw ParseError("more than " + std::to_string(expected) + " hex digits", line.number,
                         c + 1);
      }
      for (unsigned j = 0; j < 4; ++j) {
        if (!((d >> j) & 1)) continue;
        const std::uint32_t x = 4 * count + j;
        if (x >= size) throw ParseError("digit sets bits past 2^n", line.number, c + 1);
        words[x / 64] |= std::uint64_t{1} << (x % 64);
      }
      ++count;
      last_line = line.number;
      last_col = c + 2;
    }
  }
  if (count < expected) {
    throw ParseError("truncated table: expected " + std::to_string(expected) +
                         " hex digits, got " + std::to_string(count),
                     last_line, last_col);
  }
  return {field, BooleanFunction::FromWords(n, std::move(words))};
}

std::string FormatVectorial(const VectorialFunction& f, const FieldSpec& field) {
  if (f.n() != field.n()) throw InvalidArgument("function and field sizes differ");
  std::string out = "VF n=" + std::to_string(f.n()) + " m=" + std::to_string(f.m()) +
                    " t=" + std::to_string(f.t()) + " field=" + Hex(field.modulus()) + "\n";
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    out += Hex(f.value(x));
    if (f.t() > 0) {
      out += '.';
      out += Hex(f.extra(x));
    }
    out += '\n';
  }
  return out;
}

VectorialFile ParseVectorial(std::string_view text) {
  const std::vector<Line> lines = Lines(text);
  const Line& head = lines[0];
  const auto header = ParseHeader(head, "VF");
  RejectUnknown(header, {"n", "m", "t", "field"}, head);
  const int n = HeaderInt(header, "n", head, 1, kMaxFieldDegree);
  const int m = HeaderInt(header, "m", head, 0, n);
  const int t = HeaderInt(header, "t", head, 0, VectorialFunction::kMaxExtraBits);
  const FieldSpec field = HeaderFieldSpec(header, n, head);
  if (m > 0 && n % m != 0) {
    throw ParseError("m must divide n", head.number, Require(header, "m", head).column);
  }
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<Elem> values;
  std::vector<std::uint32_t> extra;
  values.reserve(size);
  std::size_t last_line = head.number;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    std::size_t b = 0;
    std::size_t e = line.text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(line.text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(line.text[e - 1]))) --e;
    if (b == e) continue;
    if (values.size() == size) {
      throw ParseError("more than 2^n entries", line.number, b + 1);
    }
    const std::string_view entry = line.text.substr(b, e - b);
    const std::size_t dot = entry.find('.');
    if ((dot != std::string_view::npos) != (t > 0)) {
      throw ParseError(t > 0 ? "expected <value>.<bits>" : "unexpected '.' for t = 0",
                       line.number, b + 1);
    }
    const auto v = ParseHex(entry.substr(0, dot));
    if (!v || *v >= size || (m == 0 ? *v != 0 : !field.in_subfield(static_cast<Elem>(*v), m))) {
      throw ParseError("value is not an element of GF(2^" + std::to_string(m) + ")", line.number,
                       b + 1);
    }
    values.push_back(static_cast<Elem>(*v));
    if (t > 0) {
      const auto bits = ParseHex(entry.substr(dot + 1));
      if (!bits || (*bits >> t) != 0) {
        throw ParseError("appended bits must fit in t bits", line.number, b + dot + 2);
      }
      extra.push_back(static_cast<std::uint32_t>(*bits));
    }
    last_line = line.number;
  }
  if (values.size() < size) {
    throw ParseError("truncated table: expected " + std::to_string(size) + " entries, got " +
                         std::to_string(values.size()),
                     last_line + 1, 1);
  }
  return {field, VectorialFunction(field, m, std::move(values), t, std::move(extra))};
}

FileKind DetectKind(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  const std::string_view rest = text.substr(pos);
  if (rest.starts_with("BF")) return FileKind::kBoolean;
  if (rest.starts_with("VF")) return FileKind::kVectorial;
  throw ParseError("expected a BF or VF header", 1, pos + 1);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFileAtomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot rename onto " + path);
  }
}

}  // namespace vbent
