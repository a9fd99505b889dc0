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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cevo/cli.h"
#include "cevo/lexicon_io.h"
#include "cevo/linker.h"
#include "cevo/property_annotator.h"
#include "cevo/text_annotator.h"

namespace cevo::cli {
namespace {

namespace fs = std::filesystem;

const std::string kData = CEVO_TEST_DATA_DIR "/cli/";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("cevo_cli_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string &name, const std::string &content) const {
    std::ofstream(path / name, std::ios::binary) << content;
    return (path / name).string();
  }
};

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run_cli({}).code == kExitEnvError);
  CHECK(run_cli({"frobnicate"}).code == kExitEnvError);
  CHECK(run_cli({"--seed-lexicon", "annotate", kData + "tweet3.txt"}).code == kExitEnvError);
  CHECK(run_cli({"--seed-lexicon", "export", "everything"}).code == kExitEnvError);
  Result help = run_cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("annotate") != std::string::npos);
}

TEST_CASE("validate") {
  Result r = run_cli({"--seed-lexicon", "validate"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "OK\n");

  r = run_cli({"validate", kData + "tiny.cevo"});
  CHECK(r.code == kExitOk);

  r = run_cli({"validate", kData + "faulty.cevo"});
  CHECK(r.code == kExitDataError);
  CHECK(r.out.find("dangling-parent: ") != std::string::npos);
  CHECK(r.out.find("dangling-verb-class: ") != std::string::npos);
  CHECK(r.out.find("Motion") != std::string::npos);

  CHECK(run_cli({"validate", kData + "syntax_error.cevo"}).code == kExitEnvError);
  CHECK(run_cli({"validate", kData + "missing.cevo"}).code == kExitEnvError);
  CHECK(run_cli({"validate"}).code == kExitEnvError);
  CHECK(run_cli({"--seed-lexicon", "validate", kData + "tiny.cevo"}).code == kExitEnvError);
}

TEST_CASE("a faulty lexicon is an environment error for other commands") {
  Result r = run_cli({"--lexicon", kData + "faulty.cevo", "export"});
  CHECK(r.code == kExitEnvError);
  CHECK(r.err.find("Motion") != std::string::npos);
}

TEST_CASE("export") {
  Result all = run_cli({"--seed-lexicon", "export"});
  REQUIRE(all.code == kExitOk);
  rdf::Graph g = rdf::parse_turtle(all.out);
  rdf::Graph want = export_schema_turtle(seed_lexicon());
  want.merge(export_instances_turtle(seed_lexicon()));
  CHECK(g.same_triples(want));

  // Global flags may follow the subcommand.
  Result schema = run_cli({"export", "schema", "--seed-lexicon"});
  REQUIRE(schema.code == kExitOk);
  CHECK(rdf::parse_turtle(schema.out).same_triples(export_schema_turtle(seed_lexicon())));

  Result tiny = run_cli({"--lexicon", kData + "tiny.cevo", "export", "instances"});
  REQUIRE(tiny.code == kExitOk);
  CHECK(tiny.out.find("cevo:whisper a cevo:MainVerb , cevo:Whisper .") != std::string::npos);
  CHECK(tiny.out.find("@prefix cevo: <http://example.org/onto/#> .") != std::string::npos);

  Result rebased = run_cli({"--seed-lexicon", "--base-iri", "http://x.org/", "export",
                            "instances"});
  REQUIRE(rebased.code == kExitOk);
  CHECK(rdf::parse_turtle(rebased.out)
            .contains("http://x.org/#say", rdf::vocab::kRdfType,
                      rdf::Term::iri("http://x.org/#Communication")));
  CHECK(run_cli({"--seed-lexicon", "--base-iri", "rel/", "export"}).code == kExitEnvError);
}

TEST_CASE("annotate") {
  Result r = run_cli({"--seed-lexicon", "annotate", kData + "tweet3.txt", "--iri",
                      "http://example.org/tweet3"});
  REQUIRE(r.code == kExitOk);
  rdf::Graph g = rdf::parse_turtle(r.out);
  CHECK(g.size() == 7);
  CHECK(g.same_triples(annotate_document(seed_lexicon(), "http://example.org/tweet3",
                                         "Rupert Murdoch and Jerry Hall marry\n")));

  CHECK(run_cli({"--seed-lexicon", "annotate", kData + "tweet3.txt", "--iri", "tweet3"})
            .code == kExitEnvError);
  CHECK(run_cli({"--seed-lexicon", "annotate", kData + "nope.txt", "--iri", "http://a/"})
            .code == kExitEnvError);
  CHECK(run_cli({"--seed-lexicon", "annotate", kData + "tweet3.txt", "--iri", "http://a/",
                 "--pos", kData + "syntax_error.cevo"})
            .code == kExitEnvError);

  TempDir tmp;
  std::string doc = tmp.file("doc.txt", "marry marry");
  r = run_cli({"--seed-lexicon", "annotate", doc, "--iri", "http://a/d", "--pos",
               kData + "pos_other.txt"});
  REQUIRE(r.code == kExitOk);
  // The sidecar tags the first token only.
  CHECK(rdf::parse_turtle(r.out).subjects_of_type(rdf::vocab::kNifString) ==
        std::vector<std::string>{"http://a/d#char=6,11"});
}

TEST_CASE("bind") {
  Result r = run_cli({"--seed-lexicon", "bind", kData + "spouse.bindings"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("example:annotation1 a oa:Annotation ;\n"
                   "    oa:hasBody cevo:Amalgamate ;\n"
                   "    oa:hasTarget dbo:spouse .\n") != std::string::npos);
  CHECK(rdf::parse_turtle(r.out).size() == 3);

  Result unknown = run_cli({"--seed-lexicon", "bind", kData + "unknown_class.bindings"});
  CHECK(unknown.code == kExitDataError);
  CHECK(unknown.err.find("Motion") != std::string::npos);
  CHECK(run_cli({"--seed-lexicon", "bind", kData + "tweet3.txt"}).code == kExitEnvError);
}

TEST_CASE("link, composed through files") {
  TempDir tmp;
  const std::string ann = (tmp.path / "ann.ttl").string();
  const std::string bnd = (tmp.path / "bind.ttl").string();
  REQUIRE(run_cli({"--seed-lexicon", "--out", ann, "annotate", kData + "tweet3.txt",
                   "--iri", "http://example.org/tweet3"})
              .code == kExitOk);
  REQUIRE(run_cli({"--seed-lexicon", "--out", bnd, "bind", kData + "spouse.bindings"})
              .code == kExitOk);

  Result r = run_cli({"--seed-lexicon", "link", ann, bnd});
  REQUIRE(r.code == kExitOk);
  rdf::Graph g = rdf::parse_turtle(r.out);
  REQUIRE(g.size() == 1);
  CHECK(g.contains("http://example.org/tweet3#char=30,35", rdf::vocab::kItsrdfTaIdentRef,
                   rdf::Term::iri("http://dbpedia.org/ontology/spouse")));

  // Same result as the library pipeline.
  const Lexicon &lex = seed_lexicon();
  auto links = link(lex,
                    annotate_document(lex, "http://example.org/tweet3",
                                      slurp(kData + "tweet3.txt")),
                    export_bindings_turtle(lex, parse_bindings(slurp(kData + "spouse.bindings"), lex)));
  CHECK(r.out == rdf::write_turtle(export_links_turtle(lex, links)));

  Result wadm = run_cli({"--seed-lexicon", "link", ann, bnd, "--wadm", "--best-only"});
  REQUIRE(wadm.code == kExitOk);
  CHECK(rdf::parse_turtle(wadm.out).size() == 4);

  std::string bad = tmp.file("bad.ttl", "<urn:a> <urn:b> .");
  CHECK(run_cli({"--seed-lexicon", "link", bad, bnd}).code == kExitEnvError);
  std::string untyped = tmp.file(
      "untyped.ttl", "<http://d#char=0,1> a nif:String .");
  CHECK(run_cli({"--seed-lexicon", "link", untyped, bnd}).code == kExitDataError);
}

TEST_CASE("query") {
  Result r = run_cli({"--seed-lexicon", "query", "classes-of", "cook"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "Build\nChange_of_the_state\nCooking\nCreation_Transformation\n");
  CHECK(run_cli({"--seed-lexicon", "query", "classes-of", "tell", "--transitive"}).out ==
        "Communication\nTransfer_Message\n");
  CHECK(run_cli({"--seed-lexicon", "query", "verbs-of", "Communication", "--subclasses"}).out ==
        "announce\ncomplain\nmention\nsay\ntell\n");
  CHECK(run_cli({"--seed-lexicon", "query", "verbs-of", "Communication"}).out ==
        "announce\nmention\nsay\n");
  CHECK(run_cli({"--seed-lexicon", "query", "lca", "Complain", "Complain"}).out ==
        "Complain\n");
  CHECK(run_cli({"--seed-lexicon", "query", "ancestors", "Complain"}).out ==
        "Communication\nEvent\n");
  CHECK(run_cli({"--seed-lexicon", "query", "lca", "Complain", "Transfer_Message"}).out ==
        "Communication\n");

  CHECK(run_cli({"--seed-lexicon", "query", "classes-of", "fly"}).code == kExitDataError);
  CHECK(run_cli({"--seed-lexicon", "query", "ancestors", "Motion"}).code == kExitDataError);
  CHECK(run_cli({"--seed-lexicon", "query", "lca", "Complain"}).code == kExitEnvError);
  CHECK(run_cli({"--seed-lexicon", "query", "siblings", "Complain"}).code == kExitEnvError);
}

TEST_CASE("--out writes the file and nothing to stdout") {
  TempDir tmp;
  const std::string path = (tmp.path / "out.txt").string();
  Result r = run_cli({"--seed-lexicon", "--out", path, "query", "ancestors", "Cooking"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(slurp(path) == "Change_of_the_state\nEvent\n");
  CHECK(run_cli({"--seed-lexicon", "--out", (tmp.path / "no/such/dir").string(), "validate"})
            .code == kExitEnvError);
}

}  // namespace
}  // namespace cevo::cli
