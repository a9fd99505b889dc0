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

// In-memory event hierarchy and verb lexicon.
//
// Event classes form a rooted DAG under the generic class `Event`: a class may
// have several parents, and a verb may belong to several classes (e.g. `cook`
// is both a creation/transformation and a change-of-state verb). A Lexicon is
// built from a LexiconData candidate, which may be invalid; validate()
// reports every violated invariant of a candidate, and Lexicon::build()
// refuses candidates with a non-empty report. Built lexicons are immutable
// and may be shared between threads.

#ifndef CEVO_ONTOLOGY_H_
#define CEVO_ONTOLOGY_H_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cevo/error.h"

namespace cevo {

inline constexpr std::string_view kDefaultBaseIri = "http://eventontology.org/";
inline constexpr std::string_view kRootClass = "Event";
inline constexpr std::string_view kRootLabel = "generic event";
inline constexpr std::string_view kRootComment = "something that happens";
// Local name of the class every verb individual is typed with. It is not part
// of the event hierarchy and may not be declared as an event class.
inline constexpr std::string_view kMainVerbClass = "MainVerb";

// Local name of an event class. Comparison is exact and case-sensitive.
struct ClassId {
  std::string local_name;

  ClassId() = default;
  explicit ClassId(std::string name) : local_name(std::move(name)) {}

  const std::string &str() const { return local_name; }
  auto operator<=>(const ClassId &) const = default;
  bool operator==(const ClassId &) const = default;
};

inline ClassId root_class_id() { return ClassId(std::string(kRootClass)); }

// Matches [A-Za-z_][A-Za-z0-9_]*.
bool is_valid_class_id(std::string_view id);
// Non-empty, no ASCII upper case, no whitespace, no characters that are
// illegal in an IRI.
bool is_valid_lemma(std::string_view lemma);

struct EventClass {
  ClassId id;
  std::string label;
  std::string comment;  // empty when absent
  std::set<ClassId> parents;
  // Alternation names ("material/product alternation", ...), opaque.
  std::vector<std::string> meaning_properties;

  bool operator==(const EventClass &) const = default;
};

struct VerbEntry {
  std::string lemma;
  std::set<ClassId> classes;

  bool operator==(const VerbEntry &) const = default;
};

// The root class with its fixed label and comment.
EventClass make_root_class();

// An unvalidated lexicon. Duplicates and dangling references are
// representable so that validate() can report them.
struct LexiconData {
  std::string base_iri = std::string(kDefaultBaseIri);
  std::vector<EventClass> classes;
  std::vector<VerbEntry> verbs;
};

struct Violation {
  enum class Kind {
    kInvalidBaseIri,
    kInvalidClassId,
    kReservedClassId,
    kDuplicateClass,
    kMissingRoot,
    kMalformedRoot,
    kDanglingParent,
    kCycle,
    kUnreachable,
    kInvalidLemma,
    kDuplicateVerb,
    kEmptyVerbClasses,
    kDanglingVerbClass,
    kLemmaClashesWithClass,
  };

  Kind kind;
  std::string subject;  // offending class id, lemma, or base IRI
  std::string message;  // one line, names the offender

  bool operator==(const Violation &) const = default;
};

std::string_view kind_name(Violation::Kind kind);

using ValidationReport = std::vector<Violation>;

// Lists every violated invariant; empty iff the candidate is a valid lexicon.
// Cycles are reported once per strongly connected component. Classes that are
// unreachable only because of an upstream cycle or dangling parent are not
// reported separately.
ValidationReport validate(const LexiconData &data);

class ValidationFailedError : public Error {
 public:
  explicit ValidationFailedError(ValidationReport report);
  const ValidationReport &report() const { return report_; }

 private:
  ValidationReport report_;
};

class Lexicon {
 public:
  // Throws ValidationFailedError when validate(data) is non-empty.
  static Lexicon build(LexiconData data);

  const std::string &base_iri() const { return base_iri_; }
  // Namespace event classes and verbs live in: base_iri() + "#".
  std::string ns() const { return base_iri_ + "#"; }
  std::string class_iri(const ClassId &id) const { return ns() + id.str(); }
  std::string verb_iri(const std::string &lemma) const { return ns() + lemma; }
  std::string main_verb_iri() const { return ns() + std::string(kMainVerbClass); }

  const std::map<ClassId, EventClass> &classes() const { return classes_; }
  using VerbMap = std::map<std::string, VerbEntry, std::less<>>;

  const VerbMap &verbs() const { return verbs_; }

  bool has_class(const ClassId &id) const { return classes_.count(id) > 0; }
  bool has_verb(std::string_view lemma) const;

  // Throws UnknownClassError / UnknownLemmaError.
  const EventClass &event_class(const ClassId &id) const;
  const VerbEntry &verb(std::string_view lemma) const;

  // Longest path length from the root; the root has depth 0.
  int depth(const ClassId &id) const;
  const std::set<ClassId> &children(const ClassId &id) const;

  // Direct classes, or with `transitive` their union with every ancestor
  // except the root. Sorted by local name.
  std::vector<ClassId> classes_of_verb(std::string_view lemma,
                                       bool transitive) const;

  // Lemmas whose direct classes contain `id`, or any descendant of `id` when
  // `include_subclasses` is set. Sorted.
  std::vector<std::string> verbs_of_class(const ClassId &id,
                                          bool include_subclasses) const;

  // Proper ancestors including the root, deepest first, ties by local name.
  std::vector<ClassId> ancestors(const ClassId &id) const;

  // The deepest common ancestor-or-self of a and b; ties by local name.
  ClassId deepest_common_class(const ClassId &a, const ClassId &b) const;

  // Candidate form of this lexicon (root included, classes and verbs in
  // id/lemma order). validate(to_data()) is always empty.
  LexiconData to_data() const;

 private:
  Lexicon() = default;

  std::set<ClassId> ancestors_or_self(const ClassId &id) const;
  std::set<ClassId> descendants_or_self(const ClassId &id) const;

  std::string base_iri_;
  std::map<ClassId, EventClass> classes_;
  VerbMap verbs_;
  std::map<ClassId, std::set<ClassId>> children_;
  std::map<ClassId, int> depth_;
};

// validate(lexicon.to_data()); always empty for a built lexicon.
ValidationReport validate(const Lexicon &lexicon);

}  // namespace cevo

#endif  // CEVO_ONTOLOGY_H_
