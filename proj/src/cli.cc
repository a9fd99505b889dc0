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

#include "cevo/cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "cevo/lexicon_io.h"
#include "cevo/linker.h"
#include "cevo/property_annotator.h"
#include "cevo/text_annotator.h"

namespace cevo::cli {

namespace {

// Carries an exit code out of a subcommand.
struct Exit {
  int code;
  std::string message;
};

struct Config {
  std::string lexicon_path;
  bool seed = false;
  std::string out_path;
  std::string base_iri;

  std::string validate_path;
  std::string export_which = "all";
  std::string doc_path;
  std::string doc_iri;
  std::string pos_path;
  std::string bindings_path;
  std::string annotations_path;
  bool best_only = false;
  bool strict = false;
  bool wadm = false;
  std::string query_mode;
  std::vector<std::string> query_args;
  bool transitive = false;
  bool subclasses = false;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kExitEnvError, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Exit{kExitEnvError, "cannot read " + path};
  return buf.str();
}

LexiconData load_lexicon_data(const Config &cfg, const std::string &path) {
  if (cfg.seed && !path.empty()) {
    throw Exit{kExitEnvError, "--seed-lexicon and a lexicon path are exclusive"};
  }
  if (!cfg.seed && path.empty()) {
    throw Exit{kExitEnvError, "no lexicon given (use --lexicon or --seed-lexicon)"};
  }
  std::string source = cfg.seed ? std::string(seed_lexicon_source()) : read_file(path);
  try {
    LexiconData data = parse_lexicon_data(source);
    if (!cfg.base_iri.empty()) data.base_iri = cfg.base_iri;
    return data;
  } catch (const ParseError &e) {
    throw Exit{kExitEnvError, (cfg.seed ? "seed lexicon" : path) + ": " + e.what()};
  }
}

Lexicon load_lexicon(const Config &cfg) {
  try {
    return Lexicon::build(load_lexicon_data(cfg, cfg.lexicon_path));
  } catch (const ValidationFailedError &e) {
    throw Exit{kExitEnvError, e.what()};
  }
}

rdf::Graph read_turtle_file(const std::string &path) {
  std::string text = read_file(path);
  try {
    return rdf::parse_turtle(text);
  } catch (const rdf::TurtleError &e) {
    throw Exit{kExitEnvError, path + ":" + e.what()};
  }
}

int cmd_validate(const Config &cfg, std::ostream &out) {
  const std::string &path =
      cfg.validate_path.empty() ? cfg.lexicon_path : cfg.validate_path;
  ValidationReport report = validate(load_lexicon_data(cfg, path));
  if (report.empty()) {
    out << "OK\n";
    return kExitOk;
  }
  for (const Violation &v : report) {
    out << kind_name(v.kind) << ": " << v.message << "\n";
  }
  return kExitDataError;
}

int cmd_export(const Config &cfg, std::ostream &out) {
  Lexicon lex = load_lexicon(cfg);
  rdf::Graph g = empty_graph_for(lex);
  if (cfg.export_which == "schema" || cfg.export_which == "all") {
    g.merge(export_schema_turtle(lex));
  }
  if (cfg.export_which == "instances" || cfg.export_which == "all") {
    g.merge(export_instances_turtle(lex));
  }
  out << rdf::write_turtle(g);
  return kExitOk;
}

int cmd_annotate(const Config &cfg, std::ostream &out) {
  Lexicon lex = load_lexicon(cfg);
  std::string text = read_file(cfg.doc_path);
  std::optional<std::vector<PosEntry>> hints;
  if (!cfg.pos_path.empty()) {
    try {
      hints = parse_pos_sidecar(read_file(cfg.pos_path));
    } catch (const ParseError &e) {
      throw Exit{kExitEnvError, cfg.pos_path + ": " + e.what()};
    }
  }
  try {
    out << rdf::write_turtle(annotate_document(lex, cfg.doc_iri, text, hints));
  } catch (const RelativeIriError &e) {
    throw Exit{kExitEnvError, e.what()};
  }
  return kExitOk;
}

int cmd_bind(const Config &cfg, std::ostream &out) {
  Lexicon lex = load_lexicon(cfg);
  std::string text = read_file(cfg.bindings_path);
  try {
    out << rdf::write_turtle(export_bindings_turtle(lex, parse_bindings(text, lex)));
  } catch (const UnknownClassError &e) {
    throw Exit{kExitDataError, cfg.bindings_path + ": " + e.what()};
  } catch (const ParseError &e) {
    throw Exit{kExitEnvError, cfg.bindings_path + ": " + e.what()};
  }
  return kExitOk;
}

int cmd_link(const Config &cfg, std::ostream &out) {
  Lexicon lex = load_lexicon(cfg);
  rdf::Graph annotations = read_turtle_file(cfg.annotations_path);
  rdf::Graph bindings = read_turtle_file(cfg.bindings_path);
  LinkOptions options{cfg.best_only, cfg.strict};
  try {
    out << rdf::write_turtle(export_links_turtle(
        lex, link(lex, annotations, bindings, options), cfg.wadm));
  } catch (const MalformedGraphError &e) {
    throw Exit{kExitDataError, e.what()};
  }
  return kExitOk;
}

int cmd_query(const Config &cfg, std::ostream &out) {
  Lexicon lex = load_lexicon(cfg);
  const auto &args = cfg.query_args;
  auto need = [&](size_t n) {
    if (args.size() != n) {
      throw Exit{kExitEnvError, "query " + cfg.query_mode + " takes " +
                                    std::to_string(n) + " argument(s)"};
    }
  };
  try {
    if (cfg.query_mode == "classes-of") {
      need(1);
      for (const ClassId &c : lex.classes_of_verb(args[0], cfg.transitive)) {
        out << c.str() << "\n";
      }
    } else if (cfg.query_mode == "verbs-of") {
      need(1);
      for (const std::string &v : lex.verbs_of_class(ClassId(args[0]), cfg.subclasses)) {
        out << v << "\n";
      }
    } else if (cfg.query_mode == "ancestors") {
      need(1);
      for (const ClassId &c : lex.ancestors(ClassId(args[0]))) out << c.str() << "\n";
    } else if (cfg.query_mode == "lca") {
      need(2);
      out << lex.deepest_common_class(ClassId(args[0]), ClassId(args[1])).str()
          << "\n";
    } else {
      throw Exit{kExitEnvError, "unknown query mode " + cfg.query_mode};
    }
  } catch (const UnknownLemmaError &e) {
    throw Exit{kExitDataError, e.what()};
  } catch (const UnknownClassError &e) {
    throw Exit{kExitDataError, e.what()};
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  Config cfg;
  CLI::App app{"Event-ontology lexicon, text annotation and relation linking",
               "cevo"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--lexicon", cfg.lexicon_path, "Lexicon file");
  app.add_flag("--seed-lexicon", cfg.seed, "Use the bundled seed lexicon");
  app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  app.add_option("--base-iri", cfg.base_iri, "Override the lexicon base IRI");

  auto *validate_cmd = app.add_subcommand("validate", "Check lexicon invariants");
  validate_cmd->add_option("path", cfg.validate_path, "Lexicon file (alternative to --lexicon)");

  auto *export_cmd = app.add_subcommand("export", "Export the ontology as Turtle");
  export_cmd->add_option("which", cfg.export_which, "schema, instances or all")
      ->check(CLI::IsMember({"schema", "instances", "all"}));

  auto *annotate_cmd = app.add_subcommand("annotate", "NIF-annotate main verbs in a text file");
  annotate_cmd->add_option("document", cfg.doc_path, "UTF-8 text file")->required();
  annotate_cmd->add_option("--iri", cfg.doc_iri, "Document IRI")->required();
  annotate_cmd->add_option("--pos", cfg.pos_path, "POS sidecar file (begin end TAG)");

  auto *bind_cmd = app.add_subcommand("bind", "Annotate ontology properties with event classes");
  bind_cmd->add_option("bindings", cfg.bindings_path, "Bindings file")->required();

  auto *link_cmd = app.add_subcommand("link", "Link text annotations to bound properties");
  link_cmd->add_option("annotations", cfg.annotations_path, "Turtle from `annotate`")->required();
  link_cmd->add_option("bindings", cfg.bindings_path, "Turtle from `bind`")->required();
  link_cmd->add_flag("--best-only", cfg.best_only, "Keep only the most specific links");
  link_cmd->add_flag("--strict", cfg.strict, "Match direct classes only");
  link_cmd->add_flag("--wadm", cfg.wadm, "Also emit oa:Annotation records");

  auto *query_cmd = app.add_subcommand("query", "Query the lexicon");
  query_cmd->add_option("mode", cfg.query_mode, "classes-of, verbs-of, ancestors or lca")
      ->required();
  query_cmd->add_option("args", cfg.query_args, "Lemma or class ids");
  query_cmd->add_flag("--transitive", cfg.transitive, "classes-of: include ancestors");
  query_cmd->add_flag("--subclasses", cfg.subclasses, "verbs-of: include subclasses");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "cevo: " << e.what() << "\n";
    return kExitEnvError;
  }

  std::ostringstream buffer;
  int code;
  try {
    if (*validate_cmd) code = cmd_validate(cfg, buffer);
    else if (*export_cmd) code = cmd_export(cfg, buffer);
    else if (*annotate_cmd) code = cmd_annotate(cfg, buffer);
    else if (*bind_cmd) code = cmd_bind(cfg, buffer);
    else if (*link_cmd) code = cmd_link(cfg, buffer);
    else code = cmd_query(cfg, buffer);
  } catch (const Exit &e) {
    err << "cevo: error: " << e.message << "\n";
    return e.code;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "cevo: error: cannot write " << cfg.out_path << "\n";
      return kExitEnvError;
    }
  }
  return code;
}

}  // namespace cevo::cli
