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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cevo/rdf.h"
#include "support/generators.h"

namespace cevo::rdf {
namespace {

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in, "cannot open " << path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST_CASE("term construction rejects relative and malformed IRIs") {
  CHECK_THROWS_AS(Term::iri("relative/path"), std::invalid_argument);
  CHECK_THROWS_AS(Term::iri("http://x.org/a b"), std::invalid_argument);
  CHECK_THROWS_AS(Term::iri("http://x.org/<a>"), std::invalid_argument);
  CHECK_NOTHROW(Term::iri("urn:x:y"));
  CHECK(Term::integer(-7).is_integer());
  CHECK(Term::integer(-7).literal_value().lexical == "-7");
  CHECK(Term::iri("urn:a") < Term::literal("a"));
}

TEST_CASE("triples need IRI subject and predicate") {
  CHECK_THROWS(Triple(Term::literal("s"), Term::iri("urn:p"), Term::iri("urn:o")));
  CHECK_THROWS(Triple(Term::iri("urn:s"), Term::literal("p"), Term::iri("urn:o")));
}

TEST_CASE("writer groups predicates and objects per subject") {
  Graph g;
  g.set_prefix("ex", "http://example.org/");
  g.set_prefix("cevo", std::string(ns::kCevo));
  g.add("http://example.org/s", vocab::kRdfType, std::string(ns::kCevo) + "Build");
  g.add("http://example.org/s", vocab::kRdfType, vocab::kOwlClass);
  g.add("http://example.org/s", vocab::kRdfsLabel, Term::literal("say \"hi\"\n"));
  g.add("http://example.org/s", "http://example.org/n", Term::integer(3));
  g.add("http://example.org/a", "http://example.org/p", "http://example.org/x#y");
  std::string out = write_turtle(g);
  CHECK(out.find("@prefix cevo: <http://eventontology.org/#> .\n@prefix ex: <http://example.org/> .\n") == 0);
  CHECK(out.find("ex:s a cevo:Build , <http://www.w3.org/2002/07/owl#Class> ;") != std::string::npos);
  CHECK(out.find("ex:n 3") != std::string::npos);
  CHECK(out.find("\"say \\\"hi\\\"\\n\"") != std::string::npos);
  Graph back = parse_turtle(out);
  CHECK(back.same_triples(g));
}

TEST_CASE("the longer alias label wins for a shared namespace") {
  Graph g;
  g.set_prefix("exam", "http://example.org/");
  g.set_prefix("example", "http://example.org/");
  g.add("http://example.org/annotation1", vocab::kRdfType, vocab::kOaAnnotation);
  g.set_prefix("oa", std::string(ns::kOa));
  std::string out = write_turtle(g);
  CHECK(out.find("example:annotation1 a oa:Annotation .") != std::string::npos);
}

TEST_CASE("a WADM record parses to three triples") {
  Graph g = parse_turtle(slurp(CEVO_TEST_DATA_DIR "/turtle/03_wadm.ttl"));
  REQUIRE(g.size() == 3);
  const std::string subject = "http://example.org/annotation1";
  CHECK(g.contains(subject, vocab::kRdfType, Term::iri(vocab::kOaAnnotation)));
  CHECK(g.contains(subject, vocab::kOaHasTarget,
                   Term::iri("http://dbpedia.org/ontology/spouse")));
  CHECK(g.contains(subject, vocab::kOaHasBody,
                   Term::iri("http://eventontology.org/#Amalgamate")));
}

TEST_CASE("built-in prefixes can be switched off") {
  CHECK_THROWS_AS(parse_turtle("dbo:a dbo:b dbo:c .", ParseOptions{false}),
                  TurtleSyntaxError);
  CHECK(parse_turtle("dbo:a dbo:b dbo:c .").size() == 1);
}

TEST_CASE("errors carry positions") {
  try {
    parse_turtle("@prefix x: <http://x.org/> .\nx:a x:b");
    FAIL("expected a syntax error");
  } catch (const TurtleSyntaxError &e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 1);
  }
  CHECK_THROWS_AS(parse_turtle("<urn:a> <urn:b> \"x\"@en ."), TurtleUnsupportedError);
  CHECK_THROWS_AS(parse_turtle("<urn:a> <urn:b> _:b1 ."), TurtleUnsupportedError);
  CHECK_THROWS_AS(parse_turtle("<urn:a> <urn:b> <rel> ."), TurtleError);
  CHECK_THROWS_AS(parse_turtle("<urn:a> <urn:b> 1.5 ."), TurtleUnsupportedError);
}

TEST_CASE("corpus files parse as recorded in the manifest") {
  std::istringstream manifest(slurp(CEVO_TEST_DATA_DIR "/turtle/manifest.txt"));
  std::string line;
  int files = 0;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string name, expected;
    fields >> name >> expected;
    CAPTURE(name);
    std::string text = slurp(std::string(CEVO_TEST_DATA_DIR "/turtle/") + name);
    ++files;
    if (expected == "syntax") {
      CHECK_THROWS_AS(parse_turtle(text), TurtleSyntaxError);
    } else if (expected == "unsupported") {
      CHECK_THROWS_AS(parse_turtle(text), TurtleUnsupportedError);
    } else {
      Graph g = parse_turtle(text);
      CHECK(g.size() == std::stoul(expected));
      CHECK(parse_turtle(write_turtle(g)).same_triples(g));
    }
  }
  CHECK(files == 20);
}

TEST_CASE("property: parse(write(g)) has the triples of g") {
  testing::Rng rng(20260101);
  for (int i = 0; i < 1000; ++i) {
    Graph g = testing::random_graph(rng, 50);
    std::string text = write_turtle(g);
    CAPTURE(text);
    Graph back = parse_turtle(text, ParseOptions{false});
    REQUIRE(back.same_triples(g));
  }
}

TEST_CASE("property: writing is deterministic and insertion-order independent") {
  testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Graph g = testing::random_graph(rng, 30);
    std::vector<Triple> triples(g.triples().begin(), g.triples().end());
    std::shuffle(triples.begin(), triples.end(), rng);
    Graph h;
    for (const auto &[label, ns] : g.prefixes()) h.set_prefix(label, ns);
    for (const Triple &t : triples) h.add(t);
    REQUIRE(write_turtle(h) == write_turtle(g));
    REQUIRE(write_turtle(parse_turtle(write_turtle(g))) == write_turtle(g));
  }
}

}  // namespace
}  // namespace cevo::rdf
