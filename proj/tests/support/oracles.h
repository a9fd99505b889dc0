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

// Brute-force reference implementations. They work on the raw LexiconData
// parent lists and never call into Lexicon queries.

#ifndef CEVO_TESTS_SUPPORT_ORACLES_H_
#define CEVO_TESTS_SUPPORT_ORACLES_H_

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cevo/linker.h"
#include "cevo/ontology.h"

namespace cevo::testing {

// Ancestor-or-self sets by fixed-point iteration.
inline std::map<std::string, std::set<std::string>> closure_oracle(
    const LexiconData &data) {
  std::map<std::string, std::set<std::string>> up;
  for (const EventClass &c : data.classes) {
    up[c.id.str()].insert(c.id.str());
    for (const ClassId &p : c.parents) up[c.id.str()].insert(p.str());
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto &[id, set] : up) {
      std::set<std::string> next = set;
      for (const std::string &a : set) next.insert(up[a].begin(), up[a].end());
      if (next.size() != set.size()) {
        set = std::move(next);
        changed = true;
      }
    }
  }
  return up;
}

// Longest root path by repeated relaxation.
inline std::map<std::string, int> depth_oracle(const LexiconData &data) {
  std::map<std::string, int> depth;
  for (const EventClass &c : data.classes) depth[c.id.str()] = 0;
  for (size_t round = 0; round <= data.classes.size(); ++round) {
    for (const EventClass &c : data.classes) {
      for (const ClassId &p : c.parents) {
        depth[c.id.str()] = std::max(depth[c.id.str()], depth[p.str()] + 1);
      }
    }
  }
  return depth;
}

// The match rule applied literally: every (span, property, class) triple.
inline std::vector<RelationLink> link_oracle(const LexiconData &data,
                                             const std::vector<TypedSpan> &spans,
                                             const std::vector<ClassBinding> &bindings,
                                             bool best_only, bool strict) {
  auto up = closure_oracle(data);
  auto depth = depth_oracle(data);
  std::set<std::string> properties;
  for (const ClassBinding &b : bindings) properties.insert(b.property_iri);

  std::vector<RelationLink> out;
  for (const TypedSpan &span : spans) {
    std::vector<RelationLink> mine;
    for (const std::string &p : properties) {
      for (const EventClass &c : data.classes) {
        const std::string &id = c.id.str();
        if (id == "Event") continue;
        bool bound = false;
        for (const ClassBinding &b : bindings) {
          if (b.property_iri == p && b.event_class.str() == id) bound = true;
        }
        if (!bound) continue;
        bool member = false;
        for (const ClassId &direct : span.classes) {
          if (direct.str() == id) member = true;
          if (!strict && up[direct.str()].count(id)) member = true;
        }
        if (member) mine.push_back({span.iri, p, c.id, depth[id]});
      }
    }
    if (best_only) {
      int best = -1;
      for (const RelationLink &l : mine) best = std::max(best, l.specificity);
      std::vector<RelationLink> kept;
      for (const RelationLink &l : mine) {
        if (l.specificity == best) kept.push_back(l);
      }
      mine = kept;
    }
    out.insert(out.end(), mine.begin(), mine.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cevo::testing

#endif  // CEVO_TESTS_SUPPORT_ORACLES_H_
