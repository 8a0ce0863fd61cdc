// Copyright 2026 The JobPulse Authors.
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

#ifndef JOBPULSE_IO_HPP_
#define JOBPULSE_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jobpulse {

// Splits one CSV line into fields. Double-quoted fields may contain commas
// and doubled quotes (""). Returns nothing on an unterminated quote.
std::optional<std::vector<std::string>> SplitCsvLine(std::string_view line);

// Quotes a field if it contains a comma, quote or line break.
std::string CsvEscape(std::string_view field);

// Accumulates CSV rows in memory; the text is written in one shot.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string> &header) { Row(header); }

  void Row(const std::vector<std::string> &fields);
  const std::string &str() const { return text_; }

 private:
  std::string text_;
};

// Reads a whole file. Throws IoError when it cannot be opened.
std::string ReadFile(const std::filesystem::path &path);

// Writes |contents| to a sibling temporary file and renames it over |path|,
// so readers never observe a partially written artifact.
void WriteFileAtomic(const std::filesystem::path &path, std::string_view contents);

// Lowercase hex SHA-256 of a byte string.
std::string Sha256Hex(std::string_view bytes);

// Plain-text table: first column left aligned, the rest right aligned,
// columns separated by two spaces, a dashed rule under the header.
std::string RenderTextTable(const std::vector<std::string> &header,
                            const std::vector<std::vector<std::string>> &rows);

// Strips trailing '\r' (CRLF input) and surrounding ASCII whitespace.
std::string_view TrimLine(std::string_view line);

}  // namespace jobpulse

#endif  // JOBPULSE_IO_HPP_
