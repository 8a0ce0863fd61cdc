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

#ifndef JOBPULSE_TEXT_HPP_
#define JOBPULSE_TEXT_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jobpulse {

using TokenSeq = std::vector<std::string>;

// Splits free text into normalized tokens.
//
// ASCII letters are lowercased. Letters, digits and all non-ASCII bytes are
// word characters, so UTF-8 sequences pass through intact. A hyphen is kept
// only between two word characters ("rf-engineer"); every other character is
// a token boundary and runs of boundaries collapse.
TokenSeq NormalizeText(std::string_view text);

// Joins tokens with single spaces. NormalizeText(RenderTokens(t)) == t for
// any t produced by NormalizeText.
std::string RenderTokens(std::span<const std::string> tokens);

// The hyphen-bridged view of a token sequence: every intra-word hyphen
// becomes a token boundary, so ["rf-engineer"] yields ["rf", "engineer"].
// Returns an empty sequence when |tokens| contains no hyphen.
TokenSeq BridgeHyphens(std::span<const std::string> tokens);

// True iff |needle| occurs as a contiguous run inside |haystack|.
bool ContainsRun(std::span<const std::string> haystack, std::span<const std::string> needle);

// Title-cases each space separated word of an already normalized phrase;
// used to render synthetic titles and names.
std::string TitleCase(std::string_view phrase);

}  // namespace jobpulse

#endif  // JOBPULSE_TEXT_HPP_
