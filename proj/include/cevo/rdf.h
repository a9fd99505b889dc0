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

// Minimal RDF statement model: IRI and literal terms, triples, and a graph
// with set semantics plus a prefix table. Blank nodes, language tags and
// named graphs are deliberately absent.

#ifndef CEVO_RDF_H_
#define CEVO_RDF_H_

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cevo/error.h"

namespace cevo::rdf {

// Namespace IRIs of the built-in prefix table.
namespace ns {
inline constexpr std::string_view kCevo = "http://eventontology.org/#";
inline constexpr std::string_view kRdf =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kNif =
    "http://persistence.uni-leipzig.org/nlp2rdf/ontologies/nif-core#";
inline constexpr std::string_view kOa = "http://www.w3.org/ns/oa#";
inline constexpr std::string_view kOlia =
    "http://nachhalt.sfb632.uni-potsdam.de/owl/olia.owl#";
inline constexpr std::string_view kItsrdf = "http://www.w3.org/2005/11/its/rdf#";
inline constexpr std::string_view kDbo = "http://dbpedia.org/ontology/";
inline constexpr std::string_view kExample = "http://example.org/";
}  // namespace ns

// Full IRIs of the vocabulary terms the library emits.
namespace vocab {
inline const std::string kRdfType = std::string(ns::kRdf) + "type";
inline const std::string kRdfsLabel = std::string(ns::kRdfs) + "label";
inline const std::string kRdfsComment = std::string(ns::kRdfs) + "comment";
inline const std::string kRdfsSubClassOf = std::string(ns::kRdfs) + "subClassOf";
inline const std::string kOwlClass = std::string(ns::kOwl) + "Class";
inline const std::string kOwlEquivalentClass =
    std::string(ns::kOwl) + "equivalentClass";
inline const std::string kXsdInteger = std::string(ns::kXsd) + "integer";
inline const std::string kNifString = std::string(ns::kNif) + "String";
inline const std::string kNifBeginIndex = std::string(ns::kNif) + "beginIndex";
inline const std::string kNifEndIndex = std::string(ns::kNif) + "endIndex";
inline const std::string kNifAnchorOf = std::string(ns::kNif) + "anchorOf";
inline const std::string kNifOliaCategory =
    std::string(ns::kNif) + "oliaCategory";
inline const std::string kNifReferenceContext =
    std::string(ns::kNif) + "referenceContext";
inline const std::string kOliaMainVerb = std::string(ns::kOlia) + "MainVerb";
inline const std::string kOaAnnotation = std::string(ns::kOa) + "Annotation";
inline const std::string kOaHasTarget = std::string(ns::kOa) + "hasTarget";
inline const std::string kOaHasBody = std::string(ns::kOa) + "hasBody";
inline const std::string kItsrdfTaIdentRef =
    std::string(ns::kItsrdf) + "taIdentRef";
}  // namespace vocab

using PrefixMap = std::map<std::string, std::string>;

// cevo, rdf, rdfs, owl, xsd, nif, oa, olia, itsrdf, dbo, exam, example.
const PrefixMap &builtin_prefixes();

// True if `iri` starts with a URI scheme ("http:", "urn:", ...).
bool is_absolute_iri(std::string_view iri);

// True if `label` is usable as a Turtle prefix label (PN_PREFIX, ASCII subset;
// the empty label is allowed).
bool is_valid_prefix_label(std::string_view label);

struct Literal {
  std::string lexical;
  std::optional<std::string> datatype;  // absolute IRI when present

  auto operator<=>(const Literal &) const = default;
  bool operator==(const Literal &) const = default;
};

struct Iri {
  std::string value;

  auto operator<=>(const Iri &) const = default;
  bool operator==(const Iri &) const = default;
};

// An RDF term. IRIs order before literals.
class Term {
 public:
  // Throws std::invalid_argument on a relative IRI or one containing
  // characters Turtle cannot write inside <...>.
  static Term iri(std::string value);
  static Term literal(std::string lexical);
  static Term typed_literal(std::string lexical, std::string datatype);
  // xsd:integer literal; the lexical form must match -?[0-9]+.
  static Term integer(long long value);
  static Term integer(std::string lexical);

  bool is_iri() const { return std::holds_alternative<Iri>(value_); }
  bool is_literal() const { return std::holds_alternative<Literal>(value_); }
  bool is_integer() const;

  // Precondition: is_iri().
  const std::string &iri_value() const { return std::get<Iri>(value_).value; }
  // Precondition: is_literal().
  const Literal &literal_value() const { return std::get<Literal>(value_); }

  auto operator<=>(const Term &) const = default;
  bool operator==(const Term &) const = default;

 private:
  friend class Graph;
  // Orders before every valid term; used as a range-search sentinel.
  static Term min_sentinel() { return Term(Iri{}); }

  explicit Term(std::variant<Iri, Literal> v) : value_(std::move(v)) {}
  std::variant<Iri, Literal> value_;
};

struct Triple {
  // Throws std::invalid_argument unless subject and predicate are IRIs.
  Triple(Term s, Term p, Term o);

  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple &) const = default;
  bool operator==(const Triple &) const = default;
};

class Graph {
 public:
  Graph() = default;

  void add(Triple t) { triples_.insert(std::move(t)); }
  void add(const std::string &s, const std::string &p, Term o) {
    add(Triple(Term::iri(s), Term::iri(p), std::move(o)));
  }
  void add(const std::string &s, const std::string &p, const std::string &o) {
    add(s, p, Term::iri(o));
  }
  bool contains(const Triple &t) const { return triples_.count(t) > 0; }
  bool contains(const std::string &s, const std::string &p,
                const Term &o) const;

  // Set union of triples; prefixes of `other` are added unless the label is
  // already bound.
  void merge(const Graph &other);

  // Throws std::invalid_argument on an invalid label or relative namespace.
  void set_prefix(const std::string &label, const std::string &ns);
  void add_builtin_prefixes();

  const std::set<Triple> &triples() const { return triples_; }
  const PrefixMap &prefixes() const { return prefixes_; }
  size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  // Triples with the given subject (and predicate), in set order.
  std::vector<Triple> match(const std::string &subject) const;
  std::vector<Term> objects(const std::string &subject,
                            const std::string &predicate) const;
  // Subjects having ⟨s, rdf:type, type⟩, sorted.
  std::vector<std::string> subjects_of_type(const std::string &type) const;

  // Triple-set equality; prefixes are not compared.
  bool same_triples(const Graph &other) const {
    return triples_ == other.triples_;
  }

 private:
  std::set<Triple> triples_;
  PrefixMap prefixes_;
};

// Deterministic Turtle: @prefix headers sorted by label, then subject blocks
// sorted by IRI with rdf:type first (written `a`), remaining predicates by
// IRI, objects in term order joined with ` , `. Equal graphs produce
// byte-identical text.
std::string write_turtle(const Graph &graph);

// Any Turtle reader failure.
class TurtleError : public Error {
 public:
  TurtleError(int line, int column, const std::string &message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// The input is not Turtle.
class TurtleSyntaxError : public TurtleError {
 public:
  using TurtleError::TurtleError;
};

// The input is Turtle but uses a construct outside the supported subset
// (blank nodes, collections, language tags, @base, long strings, ...).
class TurtleUnsupportedError : public TurtleError {
 public:
  using TurtleError::TurtleError;
};

struct ParseOptions {
  // Resolve undeclared prefixes against builtin_prefixes(). Prefixes used
  // this way are recorded in the resulting graph's prefix table.
  bool builtin_prefixes = true;
};

Graph parse_turtle(std::string_view text, const ParseOptions &options = {});

}  // namespace cevo::rdf

#endif  // CEVO_RDF_H_
