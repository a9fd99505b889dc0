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

#include "cevo/ontology.h"

#include <algorithm>
#include <deque>
#include <functional>

#include "cevo/rdf.h"

namespace cevo {

namespace {

bool is_id_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool is_id_char(char c) { return is_id_start(c) || (c >= '0' && c <= '9'); }

std::string join(const std::set<ClassId> &ids, const char *sep) {
  std::string out;
  for (const ClassId &id : ids) {
    if (!out.empty()) out += sep;
    out += id.str();
  }
  return out;
}

// Tarjan's strongly connected components over the parent relation. Returns
// the components that contain a cycle (size > 1, or a self loop).
std::vector<std::set<ClassId>> cyclic_components(
    const std::map<ClassId, const EventClass *> &index) {
  std::map<ClassId, int> order, low;
  std::set<ClassId> on_stack;
  std::vector<ClassId> stack;
  std::vector<std::set<ClassId>> out;
  int counter = 0;

  std::function<void(const ClassId &)> visit = [&](const ClassId &v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    for (const ClassId &w : index.at(v)->parents) {
      if (!index.count(w)) continue;
      if (!order.count(w)) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack.count(w)) {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (low[v] != order[v]) return;
    std::set<ClassId> component;
    ClassId w;
    do {
      w = stack.back();
      stack.pop_back();
      on_stack.erase(w);
      component.insert(w);
    } while (w != v);
    bool self_loop = index.at(v)->parents.count(v) > 0;
    if (component.size() > 1 || self_loop) out.push_back(std::move(component));
  };

  for (const auto &[id, cls] : index) {
    if (!order.count(id)) visit(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_valid_class_id(std::string_view id) {
  return !id.empty() && is_id_start(id[0]) &&
         std::all_of(id.begin(), id.end(), is_id_char);
}

bool is_valid_lemma(std::string_view lemma) {
  if (lemma.empty()) return false;
  for (unsigned char c : lemma) {
    if (c >= 'A' && c <= 'Z') return false;
    if (c <= 0x20 || c == 0x7F) return false;
    switch (c) {
      case '<': case '>': case '"': case '{': case '}': case '|':
      case '^': case '`': case '\\': case '#':
        return false;
      default:
        break;
    }
  }
  return true;
}

EventClass make_root_class() {
  return EventClass{root_class_id(), std::string(kRootLabel),
                    std::string(kRootComment), {}, {}};
}

std::string_view kind_name(Violation::Kind kind) {
  using K = Violation::Kind;
  switch (kind) {
    case K::kInvalidBaseIri: return "invalid-base-iri";
    case K::kInvalidClassId: return "invalid-class-id";
    case K::kReservedClassId: return "reserved-class-id";
    case K::kDuplicateClass: return "duplicate-class";
    case K::kMissingRoot: return "missing-root";
    case K::kMalformedRoot: return "malformed-root";
    case K::kDanglingParent: return "dangling-parent";
    case K::kCycle: return "cycle";
    case K::kUnreachable: return "unreachable";
    case K::kInvalidLemma: return "invalid-lemma";
    case K::kDuplicateVerb: return "duplicate-verb";
    case K::kEmptyVerbClasses: return "empty-verb-classes";
    case K::kDanglingVerbClass: return "dangling-verb-class";
    case K::kLemmaClashesWithClass: return "lemma-clashes-with-class";
  }
  return "unknown";
}

ValidationReport validate(const LexiconData &data) {
  using K = Violation::Kind;
  ValidationReport report;
  auto add = [&](K kind, const std::string &subject, std::string message) {
    report.push_back({kind, subject, std::move(message)});
  };

  if (!rdf::is_absolute_iri(data.base_iri) ||
      data.base_iri.find('#') != std::string::npos) {
    add(K::kInvalidBaseIri, data.base_iri,
        "base IRI '" + data.base_iri + "' must be absolute and contain no '#'");
  } else {
    try {
      rdf::Term::iri(data.base_iri);
    } catch (const std::invalid_argument &) {
      add(K::kInvalidBaseIri, data.base_iri,
          "base IRI '" + data.base_iri + "' contains illegal characters");
    }
  }

  // Classes. The first declaration of an id wins for structural checks.
  std::map<ClassId, const EventClass *> index;
  for (const EventClass &cls : data.classes) {
    const std::string &id = cls.id.str();
    if (!is_valid_class_id(id)) {
      add(K::kInvalidClassId, id, "class id '" + id + "' is not an identifier");
    }
    if (id == kMainVerbClass) {
      add(K::kReservedClassId, id,
          "class id '" + id + "' is reserved for the main-verb class");
    }
    if (!index.emplace(cls.id, &cls).second) {
      add(K::kDuplicateClass, id, "class '" + id + "' is declared more than once");
    }
  }

  const ClassId root = root_class_id();
  auto root_it = index.find(root);
  if (root_it == index.end()) {
    add(K::kMissingRoot, root.str(), "root class 'Event' is missing");
  } else {
    const EventClass &r = *root_it->second;
    if (!r.parents.empty()) {
      add(K::kMalformedRoot, root.str(), "root class 'Event' must have no parents");
    }
    if (r.label != kRootLabel || r.comment != kRootComment) {
      add(K::kMalformedRoot, root.str(),
          "root class 'Event' must be labelled 'generic event' with comment "
          "'something that happens'");
    }
  }

  std::set<ClassId> broken;  // classes whose own parent links are unusable
  for (const auto &[id, cls] : index) {
    for (const ClassId &p : cls->parents) {
      if (!index.count(p)) {
        add(K::kDanglingParent, id.str(),
            "class '" + id.str() + "' has undeclared parent '" + p.str() + "'");
        broken.insert(id);
      }
    }
  }

  for (const auto &component : cyclic_components(index)) {
    add(K::kCycle, component.begin()->str(),
        "subclass cycle through " + join(component, ", "));
    broken.insert(component.begin(), component.end());
  }

  for (const auto &[id, cls] : index) {
    if (id != root && cls->parents.empty()) {
      add(K::kUnreachable, id.str(),
          "class '" + id.str() + "' has no parent and is not reachable from Event");
      broken.insert(id);
    }
  }

  // Anything else that is unreachable and not downstream of a reported
  // problem. With the checks above this should never trigger.
  if (root_it != index.end()) {
    std::map<ClassId, std::vector<ClassId>> children;
    for (const auto &[id, cls] : index) {
      for (const ClassId &p : cls->parents) children[p].push_back(id);
    }
    std::set<ClassId> reached{root};
    std::deque<ClassId> queue{root};
    while (!queue.empty()) {
      ClassId c = queue.front();
      queue.pop_front();
      for (const ClassId &child : children[c]) {
        if (reached.insert(child).second) queue.push_back(child);
      }
    }
    for (const auto &[id, cls] : index) {
      if (reached.count(id)) continue;
      // Explained if some ancestor-or-self is already broken.
      std::set<ClassId> seen{id};
      std::deque<ClassId> up{id};
      bool explained = false;
      while (!up.empty() && !explained) {
        ClassId c = up.front();
        up.pop_front();
        if (broken.count(c)) {
          explained = true;
          break;
        }
        auto it = index.find(c);
        if (it == index.end()) continue;
        for (const ClassId &p : it->second->parents) {
          if (seen.insert(p).second) up.push_back(p);
        }
      }
      if (!explained) {
        add(K::kUnreachable, id.str(),
            "class '" + id.str() + "' is not reachable from Event");
      }
    }
  }

  // Verbs.
  std::set<std::string> lemmas;
  for (const VerbEntry &verb : data.verbs) {
    const std::string &lemma = verb.lemma;
    if (!is_valid_lemma(lemma)) {
      add(K::kInvalidLemma, lemma,
          "lemma '" + lemma + "' must be non-empty, lower case and contain no "
          "whitespace");
    }
    if (!lemmas.insert(lemma).second) {
      add(K::kDuplicateVerb, lemma, "verb '" + lemma + "' is declared more than once");
    }
    if (verb.classes.empty()) {
      add(K::kEmptyVerbClasses, lemma, "verb '" + lemma + "' has no classes");
    }
    for (const ClassId &c : verb.classes) {
      if (!index.count(c)) {
        add(K::kDanglingVerbClass, lemma,
            "verb '" + lemma + "' references undeclared class '" + c.str() + "'");
      }
    }
    if (index.count(ClassId(lemma)) || lemma == kMainVerbClass) {
      add(K::kLemmaClashesWithClass, lemma,
          "verb '" + lemma + "' has the same IRI as a class");
    }
  }
  return report;
}

namespace {

std::string summarize(const ValidationReport &report) {
  std::string out = "lexicon is invalid";
  for (const Violation &v : report) out += "\n  " + v.message;
  return out;
}

}  // namespace

ValidationFailedError::ValidationFailedError(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

Lexicon Lexicon::build(LexiconData data) {
  ValidationReport report = validate(data);
  if (!report.empty()) throw ValidationFailedError(std::move(report));

  Lexicon lex;
  lex.base_iri_ = std::move(data.base_iri);
  for (EventClass &cls : data.classes) {
    ClassId id = cls.id;
    lex.classes_.emplace(id, std::move(cls));
    lex.children_[id];
  }
  for (const auto &[id, cls] : lex.classes_) {
    for (const ClassId &p : cls.parents) lex.children_[p].insert(id);
  }
  for (VerbEntry &verb : data.verbs) {
    std::string lemma = verb.lemma;
    lex.verbs_.emplace(std::move(lemma), std::move(verb));
  }

  // Longest-path depth in topological order from the root.
  std::map<ClassId, size_t> pending;
  for (const auto &[id, cls] : lex.classes_) pending[id] = cls.parents.size();
  const ClassId root = root_class_id();
  std::deque<ClassId> ready{root};
  lex.depth_[root] = 0;
  while (!ready.empty()) {
    ClassId c = ready.front();
    ready.pop_front();
    for (const ClassId &child : lex.children_.at(c)) {
      int d = lex.depth_[c] + 1;
      auto [it, inserted] = lex.depth_.emplace(child, d);
      if (!inserted) it->second = std::max(it->second, d);
      if (--pending[child] == 0) ready.push_back(child);
    }
  }
  return lex;
}

bool Lexicon::has_verb(std::string_view lemma) const {
  return verbs_.find(lemma) != verbs_.end();
}

const EventClass &Lexicon::event_class(const ClassId &id) const {
  auto it = classes_.find(id);
  if (it == classes_.end()) throw UnknownClassError(id.str());
  return it->second;
}

const VerbEntry &Lexicon::verb(std::string_view lemma) const {
  auto it = verbs_.find(lemma);
  if (it == verbs_.end()) throw UnknownLemmaError(std::string(lemma));
  return it->second;
}

int Lexicon::depth(const ClassId &id) const {
  auto it = depth_.find(id);
  if (it == depth_.end()) throw UnknownClassError(id.str());
  return it->second;
}

const std::set<ClassId> &Lexicon::children(const ClassId &id) const {
  auto it = children_.find(id);
  if (it == children_.end()) throw UnknownClassError(id.str());
  return it->second;
}

std::set<ClassId> Lexicon::ancestors_or_self(const ClassId &id) const {
  std::set<ClassId> out{id};
  std::deque<ClassId> queue{id};
  while (!queue.empty()) {
    ClassId c = queue.front();
    queue.pop_front();
    for (const ClassId &p : event_class(c).parents) {
      if (out.insert(p).second) queue.push_back(p);
    }
  }
  return out;
}

std::set<ClassId> Lexicon::descendants_or_self(const ClassId &id) const {
  std::set<ClassId> out{id};
  std::deque<ClassId> queue{id};
  while (!queue.empty()) {
    ClassId c = queue.front();
    queue.pop_front();
    for (const ClassId &child : children(c)) {
      if (out.insert(child).second) queue.push_back(child);
    }
  }
  return out;
}

std::vector<ClassId> Lexicon::classes_of_verb(std::string_view lemma,
                                              bool transitive) const {
  const VerbEntry &entry = verb(lemma);
  if (!transitive) return {entry.classes.begin(), entry.classes.end()};
  std::set<ClassId> closure;
  for (const ClassId &c : entry.classes) {
    closure.merge(ancestors_or_self(c));
  }
  closure.erase(root_class_id());
  return {closure.begin(), closure.end()};
}

std::vector<std::string> Lexicon::verbs_of_class(const ClassId &id,
                                                 bool include_subclasses) const {
  event_class(id);  // existence check
  std::set<ClassId> targets =
      include_subclasses ? descendants_or_self(id) : std::set<ClassId>{id};
  std::vector<std::string> out;
  for (const auto &[lemma, entry] : verbs_) {
    bool hit = std::any_of(entry.classes.begin(), entry.classes.end(),
                           [&](const ClassId &c) { return targets.count(c); });
    if (hit) out.push_back(lemma);
  }
  return out;
}

std::vector<ClassId> Lexicon::ancestors(const ClassId &id) const {
  std::set<ClassId> all = ancestors_or_self(id);
  all.erase(id);
  std::vector<ClassId> out(all.begin(), all.end());
  std::stable_sort(out.begin(), out.end(), [&](const ClassId &a, const ClassId &b) {
    return depth(a) > depth(b);
  });
  return out;
}

ClassId Lexicon::deepest_common_class(const ClassId &a, const ClassId &b) const {
  std::set<ClassId> left = ancestors_or_self(a);
  std::set<ClassId> right = ancestors_or_self(b);
  const ClassId *best = nullptr;
  for (const ClassId &c : left) {
    if (!right.count(c)) continue;
    // Iteration is in name order, so only strictly deeper classes replace.
    if (best == nullptr || depth(c) > depth(*best)) best = &c;
  }
  return *best;  // the root is always common
}

LexiconData Lexicon::to_data() const {
  LexiconData data;
  data.base_iri = base_iri_;
  for (const auto &[id, cls] : classes_) data.classes.push_back(cls);
  for (const auto &[lemma, entry] : verbs_) data.verbs.push_back(entry);
  return data;
}

ValidationReport validate(const Lexicon &lexicon) {
  return validate(lexicon.to_data());
}

}  // namespace cevo
