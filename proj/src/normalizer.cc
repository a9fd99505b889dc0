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

#include "cevo/normalizer.h"

#include <algorithm>
#include <charconv>

namespace cevo {

namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one code point starting at text[pos]; advances pos. Malformed
// sequences consume a single byte and return kInvalid.
char32_t decode(std::string_view text, size_t &pos) {
  unsigned char b0 = static_cast<unsigned char>(text[pos]);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  size_t len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++pos;
    return kInvalid;
  }
  if (pos + len > text.size()) {
    ++pos;
    return kInvalid;
  }
  for (size_t i = 1; i < len; ++i) {
    unsigned char b = static_cast<unsigned char>(text[pos + i]);
    if ((b & 0xC0) != 0x80) {
      ++pos;
      return kInvalid;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return kInvalid;
  }
  pos += len;
  return cp;
}

bool is_word_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
           (cp >= '0' && cp <= '9') || cp == '\'';
  }
  if (cp == 0x2019) return true;  // right single quotation mark
  if (cp == kInvalid || cp == 0xFFFD) return false;
  // Whitespace, punctuation and symbol blocks; everything else outside ASCII
  // is treated as a letter.
  if (cp <= 0xBF) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp == 0x1680) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  if (cp >= 0xFE10 && cp <= 0xFE6F) return false;
  if ((cp >= 0xFF00 && cp <= 0xFF0F) || (cp >= 0xFF1A && cp <= 0xFF20) ||
      (cp >= 0xFF3B && cp <= 0xFF40) || (cp >= 0xFF5B && cp <= 0xFF65)) {
    return false;
  }
  if (cp >= 0x1F000 && cp <= 0x1FAFF) return false;
  return true;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_consonant(char c) {
  return c >= 'a' && c <= 'z' && c != 'a' && c != 'e' && c != 'i' &&
         c != 'o' && c != 'u';
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace

std::string VerbOccurrence::iri() const {
  return document_iri + "#char=" + std::to_string(begin) + "," +
         std::to_string(end);
}

size_t code_point_length(std::string_view text) {
  size_t n = 0;
  for (size_t pos = 0; pos < text.size(); ++n) decode(text, pos);
  return n;
}

std::vector<Token> tokenize(std::string_view document) {
  std::vector<Token> tokens;
  size_t pos = 0, cp_index = 0;
  size_t start_byte = 0, start_cp = 0;
  bool in_token = false;
  while (pos < document.size()) {
    size_t at = pos;
    bool word = is_word_char(decode(document, pos));
    if (word && !in_token) {
      in_token = true;
      start_byte = at;
      start_cp = cp_index;
    } else if (!word && in_token) {
      in_token = false;
      tokens.push_back({std::string(document.substr(start_byte, at - start_byte)),
                        start_cp, cp_index, std::nullopt});
    }
    ++cp_index;
  }
  if (in_token) {
    tokens.push_back({std::string(document.substr(start_byte)), start_cp,
                      cp_index, std::nullopt});
  }
  return tokens;
}

std::vector<std::string> lemma_candidates(std::string_view surface) {
  const std::string w = lower_ascii(surface);
  std::vector<std::string> out;
  auto add = [&](std::string c) {
    if (c.empty()) return;
    if (std::find(out.begin(), out.end(), c) == out.end()) {
      out.push_back(std::move(c));
    }
  };
  auto stem = [&](size_t strip) { return w.substr(0, w.size() - strip); };

  out.push_back(w);
  if (ends_with(w, "ies")) add(stem(3) + "y");
  if (ends_with(w, "es")) {
    add(stem(2));
    add(stem(2) + "e");
  }
  if (ends_with(w, "s")) add(stem(1));
  if (ends_with(w, "ied")) add(stem(3) + "y");
  if (ends_with(w, "ed")) {
    add(stem(2));
    add(stem(2) + "e");
  }
  // stopped -> stop, planning -> plan
  for (std::string_view suffix : {std::string_view("ed"), std::string_view("ing")}) {
    if (!ends_with(w, suffix)) continue;
    std::string s = stem(suffix.size());
    size_t n = s.size();
    if (n >= 3 && s[n - 1] == s[n - 2] && is_consonant(s[n - 1])) {
      add(s.substr(0, n - 1));
    }
  }
  if (ends_with(w, "ing")) {
    add(stem(3));
    add(stem(3) + "e");
  }
  // TODO: irregular forms (said, told, grew, built) need an exception table;
  // suffix rules never reach them.
  return out;
}

std::vector<VerbOccurrence> detect_verbs(const Lexicon &lexicon,
                                         const std::vector<Token> &tokens,
                                         std::string_view document_iri) {
  std::vector<VerbOccurrence> out;
  for (const Token &token : tokens) {
    if (token.pos_hint && *token.pos_hint != PosHint::kVerb) continue;
    for (const std::string &candidate : lemma_candidates(token.surface)) {
      if (!lexicon.has_verb(candidate)) continue;
      out.push_back({std::string(document_iri), token.surface, candidate,
                     token.begin, token.end,
                     lexicon.classes_of_verb(candidate, false)});
      break;
    }
  }
  return out;
}

std::vector<PosEntry> parse_pos_sidecar(std::string_view text) {
  std::vector<PosEntry> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++number;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string_view> fields;
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) fields.push_back(line.substr(start, i - start));
    }
    if (fields.empty()) continue;
    if (fields.size() != 3) {
      throw ParseError(number, "expected 'begin end TAG'");
    }
    auto number_of = [&](std::string_view f) {
      size_t v = 0;
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw ParseError(number, "not an offset: " + std::string(f));
      }
      return v;
    };
    PosEntry entry{number_of(fields[0]), number_of(fields[1]), PosHint::kOther};
    if (entry.end <= entry.begin) {
      throw ParseError(number, "end offset must exceed begin offset");
    }
    if (fields[2] == "VERB") {
      entry.tag = PosHint::kVerb;
    } else if (fields[2] != "OTHER") {
      throw ParseError(number, "unknown tag '" + std::string(fields[2]) +
                                   "' (expected VERB or OTHER)");
    }
    out.push_back(entry);
  }
  return out;
}

void apply_pos_hints(std::vector<Token> &tokens,
                     const std::vector<PosEntry> &entries) {
  for (const PosEntry &e : entries) {
    auto it = std::lower_bound(
        tokens.begin(), tokens.end(), e.begin,
        [](const Token &t, size_t begin) { return t.begin < begin; });
    if (it != tokens.end() && it->begin == e.begin && it->end == e.end) {
      it->pos_hint = e.tag;
    }
  }
}

}  // namespace cevo
