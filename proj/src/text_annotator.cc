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

#include "cevo/text_annotator.h"

#include <stdexcept>

#include "cevo/lexicon_io.h"

namespace cevo {

namespace {

void check_document_iri(std::string_view iri) {
  if (!rdf::is_absolute_iri(iri)) throw RelativeIriError(std::string(iri));
  try {
    rdf::Term::iri(std::string(iri));
  } catch (const std::invalid_argument &) {
    throw RelativeIriError(std::string(iri));
  }
}

}  // namespace

std::vector<VerbOccurrence> find_occurrences(
    const Lexicon &lexicon, std::string_view document_iri, std::string_view text,
    const std::optional<std::vector<PosEntry>> &pos_hints) {
  check_document_iri(document_iri);
  std::vector<Token> tokens = tokenize(text);
  if (pos_hints) apply_pos_hints(tokens, *pos_hints);
  return detect_verbs(lexicon, tokens, document_iri);
}

void add_occurrence(const Lexicon &lexicon, const VerbOccurrence &occ,
                    rdf::Graph &graph) {
  using namespace rdf::vocab;
  const std::string iri = occ.iri();
  graph.add(iri, kRdfType, kNifString);
  graph.add(iri, kNifBeginIndex, rdf::Term::integer(static_cast<long long>(occ.begin)));
  graph.add(iri, kNifEndIndex, rdf::Term::integer(static_cast<long long>(occ.end)));
  graph.add(iri, kNifAnchorOf, rdf::Term::literal(occ.anchor));
  graph.add(iri, kNifOliaCategory, kOliaMainVerb);
  graph.add(iri, kNifReferenceContext, occ.document_iri);
  for (const ClassId &c : occ.classes) {
    graph.add(iri, kRdfType, lexicon.class_iri(c));
  }
}

rdf::Graph annotate_document(const Lexicon &lexicon, std::string_view document_iri,
                             std::string_view text,
                             const std::optional<std::vector<PosEntry>> &pos_hints) {
  rdf::Graph graph = empty_graph_for(lexicon);
  for (const VerbOccurrence &occ :
       find_occurrences(lexicon, document_iri, text, pos_hints)) {
    add_occurrence(lexicon, occ, graph);
  }
  return graph;
}

}  // namespace cevo
