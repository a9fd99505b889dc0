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

#include "cevo/lexicon_io.h"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace cevo {

// Defined in the generated seed_lexicon_data.cc.
extern const char kSeedLexiconSource[];

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// One `key=value` or bare word on a directive line. `value` keeps escapes
// for quoted values so that props can split on unescaped '|'.
struct Field {
  std::string key;
  std::string value;
  bool quoted = false;
};

class LineScanner {
 public:
  LineScanner(std::string_view line, int number) : line_(line), number_(number) {}

  bool done() {
    skip_space();
    return pos_ >= line_.size() || line_[pos_] == '#';
  }

  std::string word() {
    skip_space();
    size_t start = pos_;
    while (pos_ < line_.size() && !is_space(line_[pos_])) ++pos_;
    return std::string(line_.substr(start, pos_ - start));
  }

  Field field() {
    skip_space();
    Field f;
    size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != '=' && !is_space(line_[pos_])) {
      ++pos_;
    }
    f.key = std::string(line_.substr(start, pos_ - start));
    if (pos_ >= line_.size() || line_[pos_] != '=') {
      throw ParseError(number_, "expected key=value, found '" + f.key + "'");
    }
    ++pos_;
    if (pos_ < line_.size() && line_[pos_] == '"') {
      f.quoted = true;
      ++pos_;
      while (true) {
        if (pos_ >= line_.size()) {
          throw ParseError(number_, "unterminated quoted value for " + f.key);
        }
        char c = line_[pos_];
        if (c == '"') break;
        if (c == '\\') {
          if (pos_ + 1 >= line_.size()) {
            throw ParseError(number_, "dangling escape in value for " + f.key);
          }
          f.value += c;
          ++pos_;
          c = line_[pos_];
        }
        f.value += c;
        ++pos_;
      }
      ++pos_;
      if (pos_ < line_.size() && !is_space(line_[pos_])) {
        throw ParseError(number_, "expected whitespace after quoted value");
      }
    } else {
      start = pos_;
      while (pos_ < line_.size() && !is_space(line_[pos_])) ++pos_;
      f.value = std::string(line_.substr(start, pos_ - start));
    }
    return f;
  }

  std::string unescape(std::string_view raw) const {
    std::string out;
    for (size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '\\') {
        out += raw[i];
        continue;
      }
      char e = raw[++i];
      switch (e) {
        case '"': case '\\': case '|': out += e; break;
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        default:
          throw ParseError(number_, std::string("unknown escape \\") + e);
      }
    }
    return out;
  }

  int number() const { return number_; }

 private:
  void skip_space() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }

  std::string_view line_;
  int number_;
  size_t pos_ = 0;
};

std::set<ClassId> split_ids(const std::string &value) {
  std::set<ClassId> out;
  std::stringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.insert(ClassId(item));
  }
  return out;
}

std::vector<std::string> split_props(const LineScanner &scan,
                                     const std::string &raw) {
  std::vector<std::string> out;
  std::string piece;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\\' && i + 1 < raw.size()) {
      piece += raw[i];
      piece += raw[++i];
    } else if (raw[i] == '|') {
      if (!piece.empty()) out.push_back(scan.unescape(piece));
      piece.clear();
    } else {
      piece += raw[i];
    }
  }
  if (!piece.empty()) out.push_back(scan.unescape(piece));
  return out;
}

std::string default_label(const std::string &id) {
  std::string out = id;
  for (char &c : out) {
    if (c == '_') c = ' ';
    else if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::map<std::string, Field> fields_of(LineScanner &scan,
                                       std::initializer_list<const char *> allowed) {
  std::map<std::string, Field> out;
  while (!scan.done()) {
    Field f = scan.field();
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char *k) { return f.key == k; })) {
      throw ParseError(scan.number(), "unknown key '" + f.key + "'");
    }
    std::string key = f.key;
    if (!out.emplace(key, std::move(f)).second) {
      throw ParseError(scan.number(), "duplicate key '" + key + "'");
    }
  }
  return out;
}

std::string quote(const std::string &s, bool escape_bar = false) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '|':
        out += escape_bar ? "\\|" : "|";
        break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string join_ids(const std::set<ClassId> &ids) {
  std::string out;
  for (const ClassId &id : ids) {
    if (!out.empty()) out += ',';
    out += id.str();
  }
  return out;
}

}  // namespace

LexiconData parse_lexicon_data(std::string_view source) {
  LexiconData data;
  bool have_base = false;
  int number = 0;
  size_t pos = 0;
  while (pos <= source.size()) {
    size_t eol = source.find('\n', pos);
    if (eol == std::string_view::npos) eol = source.size();
    std::string_view line = source.substr(pos, eol - pos);
    pos = eol + 1;
    ++number;

    LineScanner scan(line, number);
    if (scan.done()) continue;
    std::string directive = scan.word();

    if (directive == "base") {
      if (have_base) throw ParseError(number, "duplicate base directive");
      std::string iri = scan.word();
      if (iri.size() >= 2 && iri.front() == '<' && iri.back() == '>') {
        iri = iri.substr(1, iri.size() - 2);
      }
      if (iri.empty()) throw ParseError(number, "base directive needs an IRI");
      if (!scan.done()) throw ParseError(number, "unexpected text after base IRI");
      data.base_iri = iri;
      have_base = true;
    } else if (directive == "class") {
      std::string id = scan.word();
      if (id.empty() || id.find('=') != std::string::npos) {
        throw ParseError(number, "class directive needs an id");
      }
      auto fields = fields_of(scan, {"parents", "label", "comment", "props"});
      EventClass cls;
      cls.id = ClassId(id);
      if (auto it = fields.find("parents"); it != fields.end()) {
        cls.parents = split_ids(scan.unescape(it->second.value));
      }
      bool is_root = id == kRootClass;
      if (auto it = fields.find("label"); it != fields.end()) {
        cls.label = scan.unescape(it->second.value);
      } else {
        cls.label = is_root ? std::string(kRootLabel) : default_label(id);
      }
      if (auto it = fields.find("comment"); it != fields.end()) {
        cls.comment = scan.unescape(it->second.value);
      } else if (is_root) {
        cls.comment = std::string(kRootComment);
      }
      if (auto it = fields.find("props"); it != fields.end()) {
        cls.meaning_properties = split_props(scan, it->second.value);
      }
      data.classes.push_back(std::move(cls));
    } else if (directive == "verb") {
      std::string lemma = scan.word();
      if (lemma.empty() || lemma.find('=') != std::string::npos) {
        throw ParseError(number, "verb directive needs a lemma");
      }
      auto fields = fields_of(scan, {"classes"});
      VerbEntry verb;
      verb.lemma = lemma;
      if (auto it = fields.find("classes"); it != fields.end()) {
        verb.classes = split_ids(scan.unescape(it->second.value));
      }
      data.verbs.push_back(std::move(verb));
    } else {
      throw ParseError(number, "unknown directive '" + directive + "'");
    }
  }

  bool has_root = std::any_of(data.classes.begin(), data.classes.end(),
                              [](const EventClass &c) { return c.id.str() == kRootClass; });
  if (!has_root) data.classes.insert(data.classes.begin(), make_root_class());
  return data;
}

Lexicon parse_lexicon(std::string_view source) {
  return Lexicon::build(parse_lexicon_data(source));
}

std::string write_lexicon(const Lexicon &lexicon) {
  std::ostringstream out;
  out << "base <" << lexicon.base_iri() << ">\n\n";
  for (const auto &[id, cls] : lexicon.classes()) {
    if (id.str() == kRootClass) continue;
    out << "class " << id.str() << " parents=" << join_ids(cls.parents)
        << " label=" << quote(cls.label);
    if (!cls.comment.empty()) out << " comment=" << quote(cls.comment);
    if (!cls.meaning_properties.empty()) {
      out << " props=\"";
      for (size_t i = 0; i < cls.meaning_properties.size(); ++i) {
        std::string q = quote(cls.meaning_properties[i], /*escape_bar=*/true);
        out << (i ? "|" : "") << q.substr(1, q.size() - 2);
      }
      out << "\"";
    }
    out << "\n";
  }
  if (!lexicon.verbs().empty()) out << "\n";
  for (const auto &[lemma, verb] : lexicon.verbs()) {
    out << "verb " << lemma << " classes=" << join_ids(verb.classes) << "\n";
  }
  return out.str();
}

std::string_view seed_lexicon_source() { return kSeedLexiconSource; }

const Lexicon &seed_lexicon() {
  static const Lexicon kSeed = parse_lexicon(seed_lexicon_source());
  return kSeed;
}

rdf::Graph empty_graph_for(const Lexicon &lexicon) {
  rdf::Graph g;
  g.add_builtin_prefixes();
  g.set_prefix("cevo", lexicon.ns());
  return g;
}

rdf::Graph export_schema_turtle(const Lexicon &lexicon) {
  using namespace rdf::vocab;
  rdf::Graph g = empty_graph_for(lexicon);
  for (const auto &[id, cls] : lexicon.classes()) {
    std::string iri = lexicon.class_iri(id);
    g.add(iri, kRdfType, kOwlClass);
    g.add(iri, kRdfsLabel, rdf::Term::literal(cls.label));
    if (!cls.comment.empty()) {
      g.add(iri, kRdfsComment, rdf::Term::literal(cls.comment));
    }
    for (const ClassId &p : cls.parents) {
      g.add(iri, kRdfsSubClassOf, lexicon.class_iri(p));
    }
  }
  g.add(lexicon.main_verb_iri(), kRdfType, kOwlClass);
  g.add(lexicon.main_verb_iri(), kOwlEquivalentClass, kOliaMainVerb);
  return g;
}

rdf::Graph export_instances_turtle(const Lexicon &lexicon) {
  using namespace rdf::vocab;
  rdf::Graph g = empty_graph_for(lexicon);
  for (const auto &[lemma, verb] : lexicon.verbs()) {
    std::string iri = lexicon.verb_iri(lemma);
    g.add(iri, kRdfType, lexicon.main_verb_iri());
    for (const ClassId &c : verb.classes) {
      g.add(iri, kRdfType, lexicon.class_iri(c));
    }
  }
  return g;
}

}  // namespace cevo
