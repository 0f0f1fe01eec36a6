// Copyright 2026 The Paraug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARAUG_ERRORS_HPP_
#define PARAUG_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace paraug {

// Every library failure carries a stable machine-readable code alongside the
// human-readable message; the CLI surfaces the code in its JSON error output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Malformed or inconsistent input data. Maps to CLI exit code 2.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure (missing file, unwritable destination). Exit 3.
class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("io", message) {}
};

class LineCountMismatchError : public FormatError {
 public:
  explicit LineCountMismatchError(const std::string& message)
      : FormatError("line-count-mismatch", message) {}
};

class EncodingError : public FormatError {
 public:
  explicit EncodingError(const std::string& message)
      : FormatError("invalid-utf8", message) {}
};

class MalformedLinkError : public FormatError {
 public:
  explicit MalformedLinkError(const std::string& message)
      : FormatError("malformed-link", message) {}
};

class OutOfRangeLinkError : public FormatError {
 public:
  explicit OutOfRangeLinkError(const std::string& message)
      : FormatError("out-of-range-link", message) {}
};

class MalformedRowError : public FormatError {
 public:
  explicit MalformedRowError(const std::string& message)
      : FormatError("malformed-row", message) {}
};

class HeaderMismatchError : public FormatError {
 public:
  explicit HeaderMismatchError(const std::string& message)
      : FormatError("header-mismatch", message) {}
};

class MalformedVectorError : public FormatError {
 public:
  explicit MalformedVectorError(const std::string& message)
      : FormatError("malformed-vector", message) {}
};

class TagMismatchError : public FormatError {
 public:
  explicit TagMismatchError(const std::string& message)
      : FormatError("tag-mismatch", message) {}
};

class KTooLargeError : public FormatError {
 public:
  explicit KTooLargeError(const std::string& message)
      : FormatError("k-too-large", message) {}
};

class EmptyDictionaryError : public FormatError {
 public:
  explicit EmptyDictionaryError(const std::string& message)
      : FormatError("empty-dictionary", message) {}
};

class EmptyThesaurusError : public FormatError {
 public:
  explicit EmptyThesaurusError(const std::string& message)
      : FormatError("empty-thesaurus", message) {}
};

class EmptyEmbeddingsError : public FormatError {
 public:
  explicit EmptyEmbeddingsError(const std::string& message)
      : FormatError("empty-embeddings", message) {}
};

class LengthMismatchError : public FormatError {
 public:
  explicit LengthMismatchError(const std::string& message)
      : FormatError("length-mismatch", message) {}
};

class EmptyInputError : public FormatError {
 public:
  explicit EmptyInputError(const std::string& message)
      : FormatError("empty-input", message) {}
};

class EmptyReferenceError : public FormatError {
 public:
  explicit EmptyReferenceError(const std::string& message)
      : FormatError("empty-reference", message) {}
};

class OutOfRangeError : public FormatError {
 public:
  explicit OutOfRangeError(const std::string& message)
      : FormatError("out-of-range", message) {}
};

}  // namespace paraug

#endif  // PARAUG_ERRORS_HPP_
