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

// Linking verb occurrences in text to ontology properties through shared
// event classes.
//
// An occurrence o links to a property p via class c when p is bound to c and
// c is one of o's classes or an ancestor of one (strict mode: one of o's
// classes). The root class never matches, since it would relate every verb
// to every property. A link's specificity is the depth of c, so links through
// more specific classes rank higher.

#ifndef CEVO_LINKER_H_
#define CEVO_LINKER_H_

#include <string>
#include <vector>

#include "cevo/error.h"
#include "cevo/ontology.h"
#include "cevo/rdf.h"

namespace cevo {

struct RelationLink {
  std::string occurrence_iri;
  std::string property_iri;
  ClassId via_class;
  int specificity = 0;

  auto operator<=>(const RelationLink &) const = default;
  bool operator==(const RelationLink &) const = default;
};

struct LinkOptions {
  // Per occurrence, keep only the links of maximal specificity.
  bool best_only = false;
  // Match direct classes only, not their ancestors.
  bool strict = false;
};

// Join inputs, as read back from annotation graphs.
struct TypedSpan {
  std::string iri;
  std::vector<ClassId> classes;
};
struct ClassBinding {
  std::string property_iri;
  ClassId event_class;
};

// The annotation or bindings graph does not have the expected shape.
class MalformedGraphError : public Error {
 public:
  MalformedGraphError(const std::string &subject, const std::string &reason)
      : Error("malformed graph at <" + subject + ">: " + reason),
        subject_(subject) {}
  const std::string &subject() const { return subject_; }

 private:
  std::string subject_;
};

// nif:String subjects with their event-class types. Every span needs at least
// one type in the lexicon namespace, and every such type must be a class of
// the lexicon. Throws MalformedGraphError naming the first offending subject
// in IRI order.
std::vector<TypedSpan> read_spans(const Lexicon &lexicon,
                                  const rdf::Graph &annotations);

// oa:Annotation subjects: at least one IRI oa:hasTarget and at least one
// oa:hasBody, each body a class of the lexicon. One binding per
// (target, body) pair.
std::vector<ClassBinding> read_bindings(const Lexicon &lexicon,
                                        const rdf::Graph &bindings);

// Output is ordered by occurrence IRI, then property IRI, then class.
std::vector<RelationLink> link(const Lexicon &lexicon,
                               const std::vector<TypedSpan> &spans,
                               const std::vector<ClassBinding> &bindings,
                               const LinkOptions &options = {});

std::vector<RelationLink> link(const Lexicon &lexicon,
                               const rdf::Graph &text_annotations,
                               const rdf::Graph &bindings,
                               const LinkOptions &options = {});

// ⟨occurrence, itsrdf:taIdentRef, property⟩ per link. With `wadm`, each
// distinct (occurrence, property) pair also gets an oa:Annotation targeting
// the occurrence with the property as body, named <base>link/<n>.
rdf::Graph export_links_turtle(const Lexicon &lexicon,
                               const std::vector<RelationLink> &links,
                               bool wadm = false);

}  // namespace cevo

#endif  // CEVO_LINKER_H_
