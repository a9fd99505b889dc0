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

#ifndef CEVO_ERROR_H_
#define CEVO_ERROR_H_

#include <stdexcept>
#include <string>

namespace cevo {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A line-oriented input (lexicon file, bindings file, POS sidecar) could not
// be parsed. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string &reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  int line() const { return line_; }
  const std::string &reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

class UnknownLemmaError : public Error {
 public:
  explicit UnknownLemmaError(const std::string &lemma)
      : Error("unknown lemma: " + lemma), lemma_(lemma) {}
  const std::string &lemma() const { return lemma_; }

 private:
  std::string lemma_;
};

class UnknownClassError : public Error {
 public:
  explicit UnknownClassError(const std::string &id)
      : Error("unknown class: " + id), id_(id) {}
  UnknownClassError(int line, const std::string &id)
      : Error("line " + std::to_string(line) + ": unknown class: " + id),
        id_(id),
        line_(line) {}

  const std::string &id() const { return id_; }
  // 0 when the error is not tied to an input line.
  int line() const { return line_; }

 private:
  std::string id_;
  int line_ = 0;
};

class RelativeIriError : public Error {
 public:
  explicit RelativeIriError(const std::string &iri)
      : Error("IRI is not absolute: " + iri), iri_(iri) {}
  const std::string &iri() const { return iri_; }

 private:
  std::string iri_;
};

}  // namespace cevo

#endif  // CEVO_ERROR_H_
