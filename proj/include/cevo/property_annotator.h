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

// Web Annotation records that tag ontology properties with event classes.
//
// Bindings file, one binding per line (`#` comments, blank lines ignored):
//
//   <property-IRI> <ClassId> [annotation-IRI]
//
// IRIs may be wrapped in <...>. A leading built-in prefix label (dbo:spouse)
// is expanded. Missing annotation IRIs are generated as
// <base>annotation/<n>, n counting bindings from 1 in input order.

#ifndef CEVO_PROPERTY_ANNOTATOR_H_
#define CEVO_PROPERTY_ANNOTATOR_H_

#include <string>
#include <string_view>
#include <vector>

#include "cevo/ontology.h"
#include "cevo/rdf.h"

namespace cevo {

struct PropertyBinding {
  std::string annotation_iri;
  std::string property_iri;  // oa:hasTarget
  ClassId event_class;       // oa:hasBody

  bool operator==(const PropertyBinding &) const = default;
};

// Throws ParseError on malformed lines or duplicate annotation IRIs, and
// UnknownClassError (carrying the line) for classes missing from the lexicon.
// `base_iri` defaults to the lexicon's base IRI.
std::vector<PropertyBinding> parse_bindings(std::string_view text,
                                            const Lexicon &lexicon,
                                            std::string_view base_iri = {});

// Inverse of parse_bindings, with explicit annotation IRIs.
std::string write_bindings(const std::vector<PropertyBinding> &bindings);

// Three triples per binding: a oa:Annotation, oa:hasTarget, oa:hasBody.
rdf::Graph export_bindings_turtle(const Lexicon &lexicon,
                                  const std::vector<PropertyBinding> &bindings);

}  // namespace cevo

#endif  // CEVO_PROPERTY_ANNOTATOR_H_
