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

#include "jobpulse/text.hpp"

#include <algorithm>

namespace jobpulse {

namespace {

bool IsWordByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

char Lower(unsigned char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c); }

}  // namespace

TokenSeq NormalizeText(std::string_view text) {
  TokenSeq tokens;
  std::string current;
  const std::size_t n = text.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (IsWordByte(c)) {
      current.push_back(Lower(c));
    } else if (c == '-' && !current.empty() && i + 1 < n && IsWordByte(static_cast<unsigned char>(text[i + 1]))) {
      current.push_back('-');
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string RenderTokens(std::span<const std::string> tokens) {
  std::string out;
  for (const auto &t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

TokenSeq BridgeHyphens(std::span<const std::string> tokens) {
  const bool any = std::any_of(tokens.begin(), tokens.end(),
                               [](const std::string &t) { return t.find('-') != std::string::npos; });
  if (!any) return {};
  TokenSeq out;
  out.reserve(tokens.size() + 4);
  for (const auto &t : tokens) {
    std::size_t start = 0;
    while (true) {
      const std::size_t dash = t.find('-', start);
      out.push_back(t.substr(start, dash - start));
      if (dash == std::string::npos) break;
      start = dash + 1;
    }
  }
  return out;
}

bool ContainsRun(std::span<const std::string> haystack, std::span<const std::string> needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

std::string TitleCase(std::string_view phrase) {
  std::string out(phrase);
  bool start = true;
  for (char &c : out) {
    if (start && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    start = (c == ' ' || c == '-');
  }
  return out;
}

}  // namespace jobpulse
