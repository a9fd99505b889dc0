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

#include "cevo/rdf.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cevo::rdf {

namespace {

bool is_alpha(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return is_alpha(c) || is_digit(c); }

bool is_integer_lexical(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), is_digit);
}

// Characters that may not appear inside an IRIREF without escaping.
bool is_iri_forbidden(unsigned char c) {
  if (c <= 0x20) return true;
  switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '^': case '`': case '\\':
      return true;
    default:
      return false;
  }
}

}  // namespace

const PrefixMap &builtin_prefixes() {
  static const PrefixMap kTable = {
      {"cevo", std::string(ns::kCevo)},     {"rdf", std::string(ns::kRdf)},
      {"rdfs", std::string(ns::kRdfs)},     {"owl", std::string(ns::kOwl)},
      {"xsd", std::string(ns::kXsd)},       {"nif", std::string(ns::kNif)},
      {"oa", std::string(ns::kOa)},         {"olia", std::string(ns::kOlia)},
      {"itsrdf", std::string(ns::kItsrdf)}, {"dbo", std::string(ns::kDbo)},
      {"exam", std::string(ns::kExample)},  {"example", std::string(ns::kExample)},
  };
  return kTable;
}

bool is_absolute_iri(std::string_view iri) {
  if (iri.empty() || !is_alpha(iri[0])) return false;
  for (size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!is_alnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return false;
}

bool is_valid_prefix_label(std::string_view label) {
  if (label.empty()) return true;
  if (!is_alpha(label.front()) || label.back() == '.') return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return is_alnum(c) || c == '_' || c == '-' || c == '.';
  });
}

// ---------------------------------------------------------------------------
// Terms and graphs.

Term Term::iri(std::string value) {
  if (!is_absolute_iri(value)) {
    throw std::invalid_argument("relative IRI: " + value);
  }
  for (unsigned char c : value) {
    if (is_iri_forbidden(c)) {
      throw std::invalid_argument("illegal character in IRI: " + value);
    }
  }
  return Term(Iri{std::move(value)});
}

Term Term::literal(std::string lexical) {
  return Term(Literal{std::move(lexical), std::nullopt});
}

Term Term::typed_literal(std::string lexical, std::string datatype) {
  Term dt = iri(std::move(datatype));
  if (dt.iri_value() == vocab::kXsdInteger && !is_integer_lexical(lexical)) {
    throw std::invalid_argument("not an integer: " + lexical);
  }
  return Term(Literal{std::move(lexical), dt.iri_value()});
}

Term Term::integer(long long value) {
  return typed_literal(std::to_string(value), vocab::kXsdInteger);
}

Term Term::integer(std::string lexical) {
  return typed_literal(std::move(lexical), vocab::kXsdInteger);
}

bool Term::is_integer() const {
  return is_literal() && literal_value().datatype == vocab::kXsdInteger;
}

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (!subject.is_iri()) throw std::invalid_argument("subject must be an IRI");
  if (!predicate.is_iri()) {
    throw std::invalid_argument("predicate must be an IRI");
  }
}

bool Graph::contains(const std::string &s, const std::string &p,
                     const Term &o) const {
  return contains(Triple(Term::iri(s), Term::iri(p), o));
}

void Graph::merge(const Graph &other) {
  triples_.insert(other.triples_.begin(), other.triples_.end());
  for (const auto &[label, ns] : other.prefixes_) prefixes_.emplace(label, ns);
}

void Graph::set_prefix(const std::string &label, const std::string &ns) {
  if (!is_valid_prefix_label(label)) {
    throw std::invalid_argument("invalid prefix label: " + label);
  }
  if (!is_absolute_iri(ns)) {
    throw std::invalid_argument("relative namespace IRI: " + ns);
  }
  prefixes_[label] = ns;
}

void Graph::add_builtin_prefixes() {
  for (const auto &[label, ns] : builtin_prefixes()) prefixes_[label] = ns;
}

std::vector<Triple> Graph::match(const std::string &subject) const {
  std::vector<Triple> out;
  Term s = Term::iri(subject);
  for (auto it = triples_.lower_bound(
           Triple(s, Term::min_sentinel(), Term::min_sentinel()));
       it != triples_.end() && it->subject == s; ++it) {
    out.push_back(*it);
  }
  return out;
}

std::vector<Term> Graph::objects(const std::string &subject,
                                 const std::string &predicate) const {
  std::vector<Term> out;
  for (const Triple &t : match(subject)) {
    if (t.predicate.iri_value() == predicate) out.push_back(t.object);
  }
  return out;
}

std::vector<std::string> Graph::subjects_of_type(const std::string &type) const {
  std::vector<std::string> out;
  for (const Triple &t : triples_) {
    if (t.predicate.iri_value() == vocab::kRdfType && t.object.is_iri() &&
        t.object.iri_value() == type) {
      out.push_back(t.subject.iri_value());
    }
  }
  return out;  // already sorted by subject
}

// ---------------------------------------------------------------------------
// Writer.

namespace {

// Conservative PN_LOCAL: [A-Za-z0-9_][A-Za-z0-9_-]* or empty.
bool is_writable_local(std::string_view local) {
  if (local.empty()) return true;
  if (!is_alnum(local[0]) && local[0] != '_') return false;
  return std::all_of(local.begin(), local.end(),
                     [](char c) { return is_alnum(c) || c == '_' || c == '-'; });
}

class TurtleWriter {
 public:
  explicit TurtleWriter(const PrefixMap &prefixes) : prefixes_(prefixes) {}

  std::string iri(const std::string &value) const {
    const std::string *best_label = nullptr;
    size_t best_len = 0;
    for (const auto &[label, ns] : prefixes_) {
      if (value.size() < ns.size() || value.compare(0, ns.size(), ns) != 0) {
        continue;
      }
      if (!is_writable_local(std::string_view(value).substr(ns.size()))) {
        continue;
      }
      // Longest namespace wins; among aliases, the longer label.
      if (best_label == nullptr || ns.size() > best_len ||
          (ns.size() == best_len && label.size() > best_label->size())) {
        best_label = &label;
        best_len = ns.size();
      }
    }
    if (best_label != nullptr) {
      return *best_label + ":" + value.substr(best_len);
    }
    return "<" + value + ">";
  }

  std::string term(const Term &t) const {
    if (t.is_iri()) return iri(t.iri_value());
    const Literal &lit = t.literal_value();
    if (lit.datatype == vocab::kXsdInteger && is_integer_lexical(lit.lexical)) {
      return lit.lexical;
    }
    std::string out = quote(lit.lexical);
    if (lit.datatype) out += "^^" + iri(*lit.datatype);
    return out;
  }

  static std::string quote(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
      }
    }
    out += '"';
    return out;
  }

 private:
  const PrefixMap &prefixes_;
};

}  // namespace

std::string write_turtle(const Graph &graph) {
  TurtleWriter w(graph.prefixes());
  std::ostringstream out;
  for (const auto &[label, ns] : graph.prefixes()) {
    out << "@prefix " << label << ": <" << ns << "> .\n";
  }

  const auto &triples = graph.triples();
  auto it = triples.begin();
  while (it != triples.end()) {
    const Term &subject = it->subject;
    // Group objects per predicate, rdf:type first.
    std::vector<std::pair<std::string, std::vector<const Term *>>> groups;
    for (; it != triples.end() && it->subject == subject; ++it) {
      const std::string &p = it->predicate.iri_value();
      if (groups.empty() || groups.back().first != p) groups.push_back({p, {}});
      groups.back().second.push_back(&it->object);
    }
    std::stable_partition(groups.begin(), groups.end(), [](const auto &g) {
      return g.first == vocab::kRdfType;
    });

    out << "\n" << w.term(subject);
    for (size_t g = 0; g < groups.size(); ++g) {
      if (g > 0) out << " ;\n   ";
      const auto &[p, objects] = groups[g];
      out << " " << (p == vocab::kRdfType ? std::string("a") : w.iri(p));
      for (size_t o = 0; o < objects.size(); ++o) {
        out << (o == 0 ? " " : " , ") << w.term(*objects[o]);
      }
    }
    out << " .\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Reader.

namespace {

enum class Tok {
  kIri,       // <...>
  kPname,     // prefix:local
  kString,    // "..." or '...'
  kInteger,
  kA,         // the `a` keyword
  kPrefixDirective,
  kDatatypeMark,  // ^^
  kDot,
  kSemicolon,
  kComma,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;    // IRI body, string value, integer lexical, pname local
  std::string prefix;  // pname prefix
  int line;
  int column;
};

std::string describe(const Token &t) {
  switch (t.kind) {
    case Tok::kIri: return "IRI <" + t.text + ">";
    case Tok::kPname: return "prefixed name " + t.prefix + ":" + t.text;
    case Tok::kString: return "string literal";
    case Tok::kInteger: return "integer " + t.text;
    case Tok::kA: return "'a'";
    case Tok::kPrefixDirective: return "@prefix";
    case Tok::kDatatypeMark: return "'^^'";
    case Tok::kDot: return "'.'";
    case Tok::kSemicolon: return "';'";
    case Tok::kComma: return "','";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

void append_utf8(std::string &out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::kEnd, "", "", line, col};
    char c = text_[pos_];
    auto simple = [&](Tok kind, size_t len) {
      advance(len);
      return Token{kind, "", "", line, col};
    };

    switch (c) {
      case '.': return simple(Tok::kDot, 1);
      case ';': return simple(Tok::kSemicolon, 1);
      case ',': return simple(Tok::kComma, 1);
      case '<': return lex_iri(line, col);
      case '"':
      case '\'':
        return lex_string(line, col);
      case '[':
      case ']':
        unsupported(line, col, "blank nodes are not supported");
      case '(':
      case ')':
        unsupported(line, col, "collections are not supported");
      case '{':
      case '}':
        unsupported(line, col, "graph blocks are not supported");
      case '@': return lex_directive(line, col);
      case '^':
        if (peek(1) == '^') return simple(Tok::kDatatypeMark, 2);
        syntax(line, col, "unexpected '^'");
      default:
        break;
    }
    if (c == '_' && peek(1) == ':') {
      unsupported(line, col, "blank nodes are not supported");
    }
    if (is_digit(c) || c == '-' || c == '+') return lex_number(line, col);
    return lex_name(line, col);
  }

  [[noreturn]] static void syntax(int line, int col, const std::string &msg) {
    throw TurtleSyntaxError(line, col, msg);
  }
  [[noreturn]] static void unsupported(int line, int col,
                                       const std::string &msg) {
    throw TurtleUnsupportedError(line, col, msg);
  }

 private:
  char peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance(size_t n = 1) {
    for (size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (c == '\n') {
        ++line_;
        col_ = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++col_;  // columns count code points
      }
    }
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  static bool is_delimiter(char c) {
    switch (c) {
      case '\0': case ' ': case '\t': case '\n': case '\r':
      case '<': case '"': case '\'': case ';': case ',': case '#':
      case '[': case '(': case ')': case ']':
        return true;
      default:
        return false;
    }
  }

  Token lex_iri(int line, int col) {
    advance();  // <
    std::string body;
    while (true) {
      if (pos_ >= text_.size() || peek() == '\n') {
        syntax(line, col, "unterminated IRI");
      }
      char c = peek();
      if (c == '>') break;
      if (c == '\\') unsupported(line_, col_, "escapes in IRIs are not supported");
      if (is_iri_forbidden(static_cast<unsigned char>(c))) {
        syntax(line_, col_, "illegal character in IRI");
      }
      body += c;
      advance();
    }
    advance();  // >
    return {Tok::kIri, body, "", line, col};
  }

  Token lex_string(int line, int col) {
    char quote = peek();
    if (peek(1) == quote && peek(2) == quote) {
      unsupported(line, col, "long string literals are not supported");
    }
    advance();
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || peek() == '\n' || peek() == '\r') {
        syntax(line, col, "unterminated string literal");
      }
      char c = peek();
      if (c == quote) break;
      if (c == '\\') {
        int eline = line_, ecol = col_;
        advance();
        char e = peek();
        advance();
        switch (e) {
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 't': value += '\t'; break;
          case 'b': value += '\b'; break;
          case 'f': value += '\f'; break;
          case 'u':
          case 'U': {
            size_t digits = e == 'u' ? 4 : 8;
            char32_t cp = 0;
            for (size_t i = 0; i < digits; ++i) {
              char h = peek();
              int v;
              if (is_digit(h)) v = h - '0';
              else if (h >= 'a' && h <= 'f') v = h - 'a' + 10;
              else if (h >= 'A' && h <= 'F') v = h - 'A' + 10;
              else syntax(eline, ecol, "bad unicode escape");
              cp = cp * 16 + static_cast<char32_t>(v);
              advance();
            }
            if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
              syntax(eline, ecol, "bad unicode escape");
            }
            append_utf8(value, cp);
            break;
          }
          default:
            syntax(eline, ecol, "unknown escape sequence");
        }
        continue;
      }
      value += c;
      advance();
    }
    advance();  // closing quote
    if (peek() == '@') {
      unsupported(line_, col_, "language tags are not supported");
    }
    return {Tok::kString, value, "", line, col};
  }

  Token lex_directive(int line, int col) {
    size_t start = pos_;
    advance();
    while (is_alpha(peek())) advance();
    std::string_view word = text_.substr(start, pos_ - start);
    if (word == "@prefix") return {Tok::kPrefixDirective, "", "", line, col};
    if (word == "@base") unsupported(line, col, "@base is not supported");
    syntax(line, col, "unknown directive " + std::string(word));
  }

  Token lex_number(int line, int col) {
    size_t start = pos_;
    if (peek() == '+') unsupported(line, col, "explicitly signed numbers are not supported");
    if (peek() == '-') advance();
    if (!is_digit(peek())) {
      if (peek() == '.') unsupported(line, col, "decimal literals are not supported");
      syntax(line, col, "malformed number");
    }
    while (is_digit(peek())) advance();
    if ((peek() == '.' && is_digit(peek(1))) || peek() == 'e' || peek() == 'E') {
      unsupported(line, col, "decimal and double literals are not supported");
    }
    if (!is_delimiter(peek()) && peek() != '.') {
      syntax(line, col, "malformed number");
    }
    return {Tok::kInteger, std::string(text_.substr(start, pos_ - start)), "",
            line, col};
  }

  static bool is_name_char(char c) {
    return is_alnum(c) || c == '_' || c == '-' || c == '.' ||
           static_cast<unsigned char>(c) >= 0x80;
  }

  Token lex_name(int line, int col) {
    size_t start = pos_;
    while (is_name_char(peek())) advance();
    // A trailing '.' terminates the statement rather than the name.
    while (pos_ > start && text_[pos_ - 1] == '.' && peek() != ':') {
      --pos_;
      --col_;
    }
    std::string prefix(text_.substr(start, pos_ - start));
    if (peek() != ':') {
      if (prefix == "a" && is_delimiter(peek())) {
        return {Tok::kA, "", "", line, col};
      }
      if (prefix == "true" || prefix == "false") {
        unsupported(line, col, "boolean literals are not supported");
      }
      std::string upper = prefix;
      std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
      if (upper == "PREFIX" || upper == "BASE") {
        unsupported(line, col, "SPARQL-style directives are not supported");
      }
      if (prefix.empty()) {
        syntax(line, col, std::string("unexpected character '") + peek() + "'");
      }
      syntax(line, col, "unexpected bare word '" + prefix + "'");
    }
    if (!is_valid_prefix_label(prefix)) {
      syntax(line, col, "invalid prefix label '" + prefix + "'");
    }
    advance();  // ':'
    size_t lstart = pos_;
    while (is_name_char(peek()) || peek() == ':' || peek() == '%') {
      if (peek() == '\\') break;
      advance();
    }
    if (peek() == '\\') {
      unsupported(line_, col_, "escapes in local names are not supported");
    }
    while (pos_ > lstart && text_[pos_ - 1] == '.') {
      --pos_;
      --col_;
    }
    std::string local(text_.substr(lstart, pos_ - lstart));
    if (!local.empty() && (local[0] == '-' || local[0] == '.')) {
      syntax(line, col, "invalid local name '" + local + "'");
    }
    return {Tok::kPname, local, prefix, line, col};
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Triples of one statement are collected unresolved and resolved at the
// closing '.', so grammar errors are reported before prefix errors.
class Parser {
 public:
  Parser(std::string_view text, const ParseOptions &options)
      : lexer_(text), options_(options) {
    advance();
  }

  Graph run() {
    while (tok_.kind != Tok::kEnd) {
      if (tok_.kind == Tok::kPrefixDirective) {
        prefix_directive();
      } else {
        statement();
      }
    }
    return std::move(graph_);
  }

 private:
  struct Pending {
    Token subject, predicate, object;
    std::optional<Token> datatype;
  };

  void advance() { tok_ = lexer_.next(); }

  [[noreturn]] void expected(const std::string &what) {
    Lexer::syntax(tok_.line, tok_.column,
                  "expected " + what + ", found " + describe(tok_));
  }

  void prefix_directive() {
    advance();
    if (tok_.kind != Tok::kPname || !tok_.text.empty()) {
      expected("prefix label");
    }
    std::string label = tok_.prefix;
    advance();
    if (tok_.kind != Tok::kIri) expected("namespace IRI");
    Token ns = tok_;
    advance();
    if (tok_.kind != Tok::kDot) expected("'.' after @prefix");
    advance();
    if (!is_absolute_iri(ns.text)) {
      Lexer::unsupported(ns.line, ns.column, "relative IRIs are not supported");
    }
    declared_[label] = ns.text;
    graph_.set_prefix(label, ns.text);
  }

  void statement() {
    if (tok_.kind != Tok::kIri && tok_.kind != Tok::kPname) expected("subject");
    Token subject = tok_;
    advance();
    std::vector<Pending> pending;
    while (true) {
      Token predicate = tok_;
      if (tok_.kind != Tok::kA && tok_.kind != Tok::kIri &&
          tok_.kind != Tok::kPname) {
        expected("predicate");
      }
      advance();
      while (true) {
        if (tok_.kind != Tok::kIri && tok_.kind != Tok::kPname &&
            tok_.kind != Tok::kString && tok_.kind != Tok::kInteger) {
          expected("object");
        }
        Pending p{subject, predicate, tok_, std::nullopt};
        advance();
        if (p.object.kind == Tok::kString && tok_.kind == Tok::kDatatypeMark) {
          advance();
          if (tok_.kind != Tok::kIri && tok_.kind != Tok::kPname) {
            expected("datatype IRI");
          }
          p.datatype = tok_;
          advance();
        }
        pending.push_back(std::move(p));
        if (tok_.kind != Tok::kComma) break;
        advance();
      }
      // `;` may repeat and may directly precede the final '.'.
      bool more = false;
      while (tok_.kind == Tok::kSemicolon) {
        advance();
        more = true;
      }
      if (!more || tok_.kind == Tok::kDot) break;
    }
    if (tok_.kind != Tok::kDot) expected("'.' at end of statement");
    advance();
    for (const Pending &p : pending) {
      graph_.add(Triple(resolve(p.subject), resolve(p.predicate),
                        object(p)));
    }
  }

  std::string resolve_iri(const Token &t) {
    std::string iri;
    if (t.kind == Tok::kIri) {
      if (!is_absolute_iri(t.text)) {
        Lexer::unsupported(t.line, t.column, "relative IRIs are not supported");
      }
      iri = t.text;
    } else {
      auto it = declared_.find(t.prefix);
      if (it != declared_.end()) {
        iri = it->second + t.text;
      } else {
        auto b = builtin_prefixes().find(t.prefix);
        if (!options_.builtin_prefixes || b == builtin_prefixes().end()) {
          Lexer::syntax(t.line, t.column, "undeclared prefix '" + t.prefix + "'");
        }
        graph_.set_prefix(b->first, b->second);
        declared_[b->first] = b->second;
        iri = b->second + t.text;
      }
    }
    return iri;
  }

  Term resolve(const Token &t) {
    if (t.kind == Tok::kA) return Term::iri(vocab::kRdfType);
    std::string iri = resolve_iri(t);
    try {
      return Term::iri(iri);
    } catch (const std::invalid_argument &e) {
      Lexer::syntax(t.line, t.column, e.what());
    }
  }

  Term object(const Pending &p) {
    const Token &o = p.object;
    switch (o.kind) {
      case Tok::kString:
        if (p.datatype) {
          Term dt = resolve(*p.datatype);
          try {
            return Term::typed_literal(o.text, dt.iri_value());
          } catch (const std::invalid_argument &e) {
            Lexer::syntax(o.line, o.column, e.what());
          }
        }
        return Term::literal(o.text);
      case Tok::kInteger:
        return Term::integer(o.text);
      default:
        return resolve(o);
    }
  }

  Lexer lexer_;
  const ParseOptions &options_;
  Token tok_;
  PrefixMap declared_;
  Graph graph_;
};

}  // namespace

Graph parse_turtle(std::string_view text, const ParseOptions &options) {
  return Parser(text, options).run();
}

}  // namespace cevo::rdf
