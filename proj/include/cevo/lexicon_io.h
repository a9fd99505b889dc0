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

// Reading and writing the line-oriented lexicon format, and exporting a
// lexicon as RDF.
//
//   # comment
//   base <http://eventontology.org/>
//   class Communication parents=Event label="communication" comment="..."
//   class Build parents=Creation_Transformation props="p1|p2"
//   verb cook classes=Build,Cooking
//
// Quoted values accept the escapes \" \\ \| \n \t. The root class Event is
// added automatically when a file does not declare it.

#ifndef CEVO_LEXICON_IO_H_
#define CEVO_LEXICON_IO_H_

#include <string>
#include <string_view>

#include "cevo/ontology.h"
#include "cevo/rdf.h"

namespace cevo {

// Syntax only: throws ParseError with the offending line. The result may
// still fail validate().
LexiconData parse_lexicon_data(std::string_view source);

// parse_lexicon_data() followed by Lexicon::build(). Throws ParseError or
// ValidationFailedError.
Lexicon parse_lexicon(std::string_view source);

// Dumps a lexicon in the lexicon format; parse_lexicon() reads it back to an
// equal lexicon.
std::string write_lexicon(const Lexicon &lexicon);

// The seed lexicon bundled with the library.
std::string_view seed_lexicon_source();
const Lexicon &seed_lexicon();

// Class declarations: owl:Class typing, rdfs:label, rdfs:comment (when
// present) and rdfs:subClassOf per parent, plus the MainVerb class and its
// equivalence with olia:MainVerb.
rdf::Graph export_schema_turtle(const Lexicon &lexicon);

// Verb individuals: each verb typed as MainVerb and as each of its direct
// classes.
rdf::Graph export_instances_turtle(const Lexicon &lexicon);

// Built-in prefixes, with `cevo` bound to the lexicon's namespace.
rdf::Graph empty_graph_for(const Lexicon &lexicon);

}  // namespace cevo

#endif  // CEVO_LEXICON_IO_H_
