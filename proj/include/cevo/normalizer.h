// Copyright 2026 The CEVO Authors.
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

// Tokenization and lexicon-guided verb detection.
//
// Offsets are Unicode code points into the document, begin inclusive and end
// exclusive. Lemmatization is rule-based and filtered by the lexicon: every
// candidate base form is tried in order and the first lexicon hit wins. No
// part-of-speech tagger is involved, so a noun homograph of a lexicon verb
// ("a good cook") is reported unless the caller supplies POS hints.

#ifndef CEVO_NORMALIZER_H_
#define CEVO_NORMALIZER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cevo/ontology.h"

namespace cevo {

enum class PosHint { kVerb, kOther };

struct Token {
  std::string surface;
  size_t begin = 0;  // code points
  size_t end = 0;    // code points, exclusive
  std::optional<PosHint> pos_hint;

  bool operator==(const Token &) const = default;
};

// A main verb found in a document.
struct VerbOccurrence {
  std::string document_iri;
  std::string anchor;
  std::string lemma;
  size_t begin = 0;
  size_t end = 0;
  std::vector<ClassId> classes;

  // <document_iri>#char=<begin>,<end>
  std::string iri() const;

  bool operator==(const VerbOccurrence &) const = default;
};

// Splits a UTF-8 document into maximal runs of letters, digits and
// apostrophes (' and U+2019). Invalid UTF-8 bytes count as one code point
// each and act as separators.
std::vector<Token> tokenize(std::string_view document);

// Number of code points in a UTF-8 string, counted the way tokenize() does.
size_t code_point_length(std::string_view text);

// Candidate base forms, most specific first, duplicates removed. The
// lowercased surface is always the first candidate.
std::vector<std::string> lemma_candidates(std::string_view surface);

// For each token (VERB-hinted tokens only when a hint is present), the first
// lemma candidate found in the lexicon yields an occurrence carrying the
// verb's direct classes. `document_iri` is copied into the occurrences.
std::vector<VerbOccurrence> detect_verbs(const Lexicon &lexicon,
                                         const std::vector<Token> &tokens,
                                         std::string_view document_iri = {});

// POS sidecar: one `begin end TAG` line per token, TAG is VERB or OTHER;
// blank lines and `#` comments are ignored. Throws ParseError.
struct PosEntry {
  size_t begin;
  size_t end;
  PosHint tag;
};
std::vector<PosEntry> parse_pos_sidecar(std::string_view text);

// Sets pos_hint on tokens whose offsets match an entry exactly. Entries that
// match no token are ignored.
void apply_pos_hints(std::vector<Token> &tokens,
                     const std::vector<PosEntry> &entries);

}  // namespace cevo

#endif  // CEVO_NORMALIZER_H_
