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

#include "cevo/property_annotator.h"

#include <set>
#include <sstream>
#include <stdexcept>

#include "cevo/lexicon_io.h"

namespace cevo {

namespace {

std::string expand_iri(std::string token, int line) {
  if (token.size() >= 2 && token.front() == '<' && token.back() == '>') {
    token = token.substr(1, token.size() - 2);
  } else if (auto colon = token.find(':'); colon != std::string::npos) {
    auto it = rdf::builtin_prefixes().find(token.substr(0, colon));
    if (it != rdf::builtin_prefixes().end() &&
        token.compare(colon, 3, "://") != 0) {
      token = it->second + token.substr(colon + 1);
    }
  }
  try {
    return rdf::Term::iri(token).iri_value();
  } catch (const std::invalid_argument &e) {
    throw ParseError(line, std::string("bad IRI: ") + e.what());
  }
}

}  // namespace

std::vector<PropertyBinding> parse_bindings(std::string_view text,
                                            const Lexicon &lexicon,
                                            std::string_view base_iri) {
  std::string base = base_iri.empty() ? lexicon.base_iri() : std::string(base_iri);
  std::vector<PropertyBinding> out;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      // '#' only starts a comment at the beginning of a field.
      if (hash == 0 || line[hash - 1] == ' ' || line[hash - 1] == '\t') {
        line.resize(hash);
      }
    }
    std::istringstream fields(line);
    std::vector<std::string> parts;
    for (std::string f; fields >> f;) parts.push_back(f);
    if (parts.empty()) continue;
    if (parts.size() < 2 || parts.size() > 3) {
      throw ParseError(number, "expected '<property-IRI> <ClassId> [annotation-IRI]'");
    }
    PropertyBinding binding;
    binding.property_iri = expand_iri(parts[0], number);
    binding.event_class = ClassId(parts[1]);
    if (!lexicon.has_class(binding.event_class)) {
      throw UnknownClassError(number, parts[1]);
    }
    binding.annotation_iri =
        parts.size() == 3 ? expand_iri(parts[2], number)
                          : base + "annotation/" + std::to_string(out.size() + 1);
    if (!seen.insert(binding.annotation_iri).second) {
      throw ParseError(number, "duplicate annotation IRI " + binding.annotation_iri);
    }
    out.push_back(std::move(binding));
  }
  return out;
}

std::string write_bindings(const std::vector<PropertyBinding> &bindings) {
  std::string out;
  for (const PropertyBinding &b : bindings) {
    out += "<" + b.property_iri + "> " + b.event_class.str() + " <" +
           b.annotation_iri + ">\n";
  }
  return out;
}

rdf::Graph export_bindings_turtle(const Lexicon &lexicon,
                                  const std::vector<PropertyBinding> &bindings) {
  using namespace rdf::vocab;
  rdf::Graph g = empty_graph_for(lexicon);
  for (const PropertyBinding &b : bindings) {
    g.add(b.annotation_iri, kRdfType, kOaAnnotation);
    g.add(b.annotation_iri, kOaHasTarget, b.property_iri);
    g.add(b.annotation_iri, kOaHasBody, lexicon.class_iri(b.event_class));
  }
  return g;
}

}  // namespace cevo
