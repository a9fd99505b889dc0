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

// NIF stand-off annotation of main verbs.
//
// Every detected verb becomes a nif:String resource named
// <document>#char=<begin>,<end> that is typed directly with its event
// classes:
//
//   <http://example.org/tweet2#char=4,8> a nif:String , cevo:Communication ;
//       nif:anchorOf "says" ;
//       nif:beginIndex 4 ;
//       nif:endIndex 8 ;
//       nif:oliaCategory olia:MainVerb ;
//       nif:referenceContext <http://example.org/tweet2> .
//
// nif:referenceContext is not needed by the linker but makes the span
// resolvable against its document.

#ifndef CEVO_TEXT_ANNOTATOR_H_
#define CEVO_TEXT_ANNOTATOR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cevo/normalizer.h"
#include "cevo/ontology.h"
#include "cevo/rdf.h"

namespace cevo {

// tokenize -> apply_pos_hints -> detect_verbs. Throws RelativeIriError.
std::vector<VerbOccurrence> find_occurrences(
    const Lexicon &lexicon, std::string_view document_iri, std::string_view text,
    const std::optional<std::vector<PosEntry>> &pos_hints = std::nullopt);

// Adds the 6 + |classes| triples of one occurrence.
void add_occurrence(const Lexicon &lexicon, const VerbOccurrence &occurrence,
                    rdf::Graph &graph);

// Throws RelativeIriError when document_iri is not absolute.
rdf::Graph annotate_document(
    const Lexicon &lexicon, std::string_view document_iri, std::string_view text,
    const std::optional<std::vector<PosEntry>> &pos_hints = std::nullopt);

}  // namespace cevo

#endif  // CEVO_TEXT_ANNOTATOR_H_
