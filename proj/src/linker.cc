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

#include "cevo/linker.h"

#include <algorithm>
#include <map>
#include <set>

#include "cevo/lexicon_io.h"

namespace cevo {

namespace {

using rdf::Term;
using rdf::Triple;

// Objects grouped by predicate for every subject, built in one pass.
using SubjectIndex =
    std::map<std::string, std::map<std::string, std::vector<const Term *>>>;

SubjectIndex index_subjects(const rdf::Graph &graph) {
  SubjectIndex index;
  for (const Triple &t : graph.triples()) {
    index[t.subject.iri_value()][t.predicate.iri_value()].push_back(&t.object);
  }
  return index;
}

bool has_type(const std::map<std::string, std::vector<const Term *>> &props,
              const std::string &type) {
  auto it = props.find(rdf::vocab::kRdfType);
  if (it == props.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(), [&](const Term *t) {
    return t->is_iri() && t->iri_value() == type;
  });
}

// The class named by `iri` when it lies in the lexicon namespace.
std::optional<ClassId> class_in_namespace(const Lexicon &lexicon,
                                          const std::string &iri) {
  const std::string ns = lexicon.ns();
  if (iri.size() <= ns.size() || iri.compare(0, ns.size(), ns) != 0) {
    return std::nullopt;
  }
  return ClassId(iri.substr(ns.size()));
}

}  // namespace

std::vector<TypedSpan> read_spans(const Lexicon &lexicon,
                                  const rdf::Graph &annotations) {
  std::vector<TypedSpan> spans;
  for (const auto &[subject, props] : index_subjects(annotations)) {
    if (!has_type(props, rdf::vocab::kNifString)) continue;
    TypedSpan span{subject, {}};
    for (const Term *type : props.at(rdf::vocab::kRdfType)) {
      auto id = class_in_namespace(lexicon, type->iri_value());
      if (!id) continue;
      if (!lexicon.has_class(*id)) {
        throw MalformedGraphError(subject, "unknown event class " + id->str());
      }
      span.classes.push_back(*id);
    }
    if (span.classes.empty()) {
      throw MalformedGraphError(subject, "nif:String without an event class");
    }
    spans.push_back(std::move(span));
  }
  return spans;
}

std::vector<ClassBinding> read_bindings(const Lexicon &lexicon,
                                        const rdf::Graph &bindings) {
  std::vector<ClassBinding> out;
  for (const auto &[subject, props] : index_subjects(bindings)) {
    if (!has_type(props, rdf::vocab::kOaAnnotation)) continue;
    auto targets = props.find(rdf::vocab::kOaHasTarget);
    auto bodies = props.find(rdf::vocab::kOaHasBody);
    if (targets == props.end()) {
      throw MalformedGraphError(subject, "annotation without oa:hasTarget");
    }
    if (bodies == props.end()) {
      throw MalformedGraphError(subject, "annotation without oa:hasBody");
    }
    std::vector<ClassId> classes;
    for (const Term *body : bodies->second) {
      std::optional<ClassId> id;
      if (body->is_iri()) id = class_in_namespace(lexicon, body->iri_value());
      if (!id || !lexicon.has_class(*id)) {
        throw MalformedGraphError(subject, "oa:hasBody is not an event class");
      }
      classes.push_back(*id);
    }
    for (const Term *target : targets->second) {
      if (!target->is_iri()) {
        throw MalformedGraphError(subject, "oa:hasTarget is not an IRI");
      }
      for (const ClassId &c : classes) {
        out.push_back({target->iri_value(), c});
      }
    }
  }
  return out;
}

std::vector<RelationLink> link(const Lexicon &lexicon,
                               const std::vector<TypedSpan> &spans,
                               const std::vector<ClassBinding> &bindings,
                               const LinkOptions &options) {
  const ClassId root = root_class_id();
  std::map<ClassId, std::set<std::string>> properties_of;
  for (const ClassBinding &b : bindings) {
    properties_of[b.event_class].insert(b.property_iri);
  }

  std::set<RelationLink> links;
  for (const TypedSpan &span : spans) {
    std::set<ClassId> reachable(span.classes.begin(), span.classes.end());
    if (!options.strict) {
      for (const ClassId &c : span.classes) {
        for (const ClassId &a : lexicon.ancestors(c)) reachable.insert(a);
      }
    }
    reachable.erase(root);

    std::vector<RelationLink> found;
    for (const ClassId &c : reachable) {
      auto it = properties_of.find(c);
      if (it == properties_of.end()) continue;
      for (const std::string &p : it->second) {
        found.push_back({span.iri, p, c, lexicon.depth(c)});
      }
    }
    if (options.best_only && !found.empty()) {
      int best = 0;
      for (const RelationLink &l : found) best = std::max(best, l.specificity);
      std::erase_if(found, [&](const RelationLink &l) { return l.specificity != best; });
    }
    links.insert(found.begin(), found.end());
  }
  // RelationLink orders by occurrence, property, class, specificity.
  return {links.begin(), links.end()};
}

std::vector<RelationLink> link(const Lexicon &lexicon,
                               const rdf::Graph &text_annotations,
                               const rdf::Graph &bindings,
                               const LinkOptions &options) {
  return link(lexicon, read_spans(lexicon, text_annotations),
              read_bindings(lexicon, bindings), options);
}

rdf::Graph export_links_turtle(const Lexicon &lexicon,
                               const std::vector<RelationLink> &links,
                               bool wadm) {
  using namespace rdf::vocab;
  rdf::Graph g = empty_graph_for(lexicon);
  std::set<std::pair<std::string, std::string>> pairs;
  for (const RelationLink &l : links) {
    g.add(l.occurrence_iri, kItsrdfTaIdentRef, l.property_iri);
    pairs.emplace(l.occurrence_iri, l.property_iri);
  }
  if (wadm) {
    size_t n = 0;
    for (const auto &[occurrence, property] : pairs) {
      std::string ann = lexicon.base_iri() + "link/" + std::to_string(++n);
      g.add(ann, kRdfType, kOaAnnotation);
      g.add(ann, kOaHasTarget, occurrence);
      g.add(ann, kOaHasBody, property);
    }
  }
  return g;
}

}  // namespace cevo
