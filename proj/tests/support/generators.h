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

// Random inputs for property tests. Seeded, so every run sees the same cases.

#ifndef CEVO_TESTS_SUPPORT_GENERATORS_H_
#define CEVO_TESTS_SUPPORT_GENERATORS_H_

#include <random>
#include <string>
#include <vector>

#include "cevo/linker.h"
#include "cevo/ontology.h"
#include "cevo/rdf.h"

namespace cevo::testing {

using Rng = std::mt19937_64;

inline size_t uniform(Rng &rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

template <typename T>
const T &pick(Rng &rng, const std::vector<T> &items) {
  return items[uniform(rng, 0, items.size() - 1)];
}

inline std::string random_word(Rng &rng, size_t min_len, size_t max_len,
                               const std::string &alphabet) {
  std::string out;
  size_t n = uniform(rng, min_len, max_len);
  for (size_t i = 0; i < n; ++i) out += alphabet[uniform(rng, 0, alphabet.size() - 1)];
  return out;
}

// A valid DAG lexicon: class i draws 1..3 parents among the root and classes
// declared before it. Names are shuffled so lexicographic and declaration
// order differ. Verbs get 1..3 random classes.
inline LexiconData random_lexicon_data(Rng &rng, size_t num_classes,
                                       size_t num_verbs) {
  LexiconData data;
  data.classes.push_back(make_root_class());
  std::vector<std::string> names;
  std::set<std::string> used{"Event", "MainVerb"};
  while (names.size() < num_classes) {
    std::string name = "C" + random_word(rng, 1, 6, "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz_0123456789");
    if (used.insert(name).second) names.push_back(name);
  }
  std::vector<ClassId> declared{root_class_id()};
  for (const std::string &name : names) {
    EventClass cls;
    cls.id = ClassId(name);
    cls.label = "label of " + name;
    if (uniform(rng, 0, 2) == 0) cls.comment = "comment \"" + name + "\"";
    size_t parents = uniform(rng, 1, std::min<size_t>(3, declared.size()));
    for (size_t p = 0; p < parents; ++p) cls.parents.insert(pick(rng, declared));
    if (uniform(rng, 0, 3) == 0) cls.meaning_properties = {"p|1", "alternation"};
    declared.push_back(cls.id);
    data.classes.push_back(std::move(cls));
  }
  std::set<std::string> lemmas;
  while (data.verbs.size() < num_verbs) {
    std::string lemma = random_word(rng, 2, 10, "abcdefghijklmnopqrstuvwxyz");
    if (!lemmas.insert(lemma).second) continue;
    VerbEntry verb{lemma, {}};
    size_t n = uniform(rng, 1, 3);
    for (size_t i = 0; i < n; ++i) {
      // Any class but the root.
      verb.classes.insert(declared[uniform(rng, declared.size() > 1 ? 1 : 0,
                                           declared.size() - 1)]);
    }
    data.verbs.push_back(std::move(verb));
  }
  return data;
}

// Spans with unique IRIs and 1..3 classes (the root included occasionally),
// and bindings over a small property pool so properties collide.
struct LinkInstance {
  std::vector<TypedSpan> spans;
  std::vector<ClassBinding> bindings;
};

inline LinkInstance random_link_instance(Rng &rng, const LexiconData &data,
                                         size_t num_spans, size_t num_bindings) {
  std::vector<ClassId> ids;
  for (const EventClass &c : data.classes) ids.push_back(c.id);
  LinkInstance inst;
  for (size_t i = 0; i < num_spans; ++i) {
    TypedSpan span{"http://example.org/doc" + std::to_string(i % 7) +
                       "#char=" + std::to_string(i) + "," + std::to_string(i + 5),
                   {}};
    size_t n = uniform(rng, 1, 3);
    for (size_t k = 0; k < n; ++k) span.classes.push_back(pick(rng, ids));
    inst.spans.push_back(std::move(span));
  }
  for (size_t i = 0; i < num_bindings; ++i) {
    inst.bindings.push_back(
        {"http://dbpedia.org/ontology/p" + std::to_string(uniform(rng, 0, 20)),
         pick(rng, ids)});
  }
  return inst;
}

// Random graphs over a fixed prefix table. IRIs include locals that cannot
// be written as prefixed names; literals include quotes, backslashes,
// control characters and non-ASCII text.
inline rdf::Graph random_graph(Rng &rng, size_t max_triples) {
  static const std::vector<std::string> kNamespaces = {
      "http://eventontology.org/#", "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
      "http://dbpedia.org/ontology/", "http://example.org/", "urn:x-test:",
      "http://other.example.com/path/"};
  static const std::vector<std::string> kLiteralPieces = {
      "a", "Z", " ", "\"", "\\", "\n", "\t", "\r", "#", "@en", "'", "caf\xC3\xA9",
      "\xE6\x97\xA5\xE6\x9C\xAC", ";", ",", ".", "^^", "<x>", "42"};
  auto iri = [&]() {
    std::string local =
        random_word(rng, 0, 8, "abcXYZ019_-") +
        (uniform(rng, 0, 4) == 0 ? random_word(rng, 1, 3, "#,/.~:%=") : "");
    return pick(rng, kNamespaces) + local;
  };

  rdf::Graph g;
  g.set_prefix("cevo", "http://eventontology.org/#");
  g.set_prefix("rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#");
  g.set_prefix("dbo", "http://dbpedia.org/ontology/");
  g.set_prefix("exam", "http://example.org/");
  g.set_prefix("example", "http://example.org/");
  g.set_prefix("u", "urn:x-test:");

  size_t n = uniform(rng, 0, max_triples);
  for (size_t i = 0; i < n; ++i) {
    std::string predicate = uniform(rng, 0, 3) == 0 ? rdf::vocab::kRdfType : iri();
    rdf::Term object = rdf::Term::iri(iri());
    switch (uniform(rng, 0, 4)) {
      case 0: {
        std::string lex;
        size_t pieces = uniform(rng, 0, 5);
        for (size_t k = 0; k < pieces; ++k) lex += pick(rng, kLiteralPieces);
        object = rdf::Term::literal(lex);
        break;
      }
      case 1:
        object = rdf::Term::integer(static_cast<long long>(uniform(rng, 0, 2000)) - 1000);
        break;
      case 2:
        object = rdf::Term::typed_literal(random_word(rng, 0, 6, "0123456789-T:"),
                                          "http://www.w3.org/2001/XMLSchema#date");
        break;
      default:
        break;
    }
    g.add(rdf::Triple(rdf::Term::iri(iri()), rdf::Term::iri(predicate), object));
  }
  return g;
}

}  // namespace cevo::testing

#endif  // CEVO_TESTS_SUPPORT_GENERATORS_H_
