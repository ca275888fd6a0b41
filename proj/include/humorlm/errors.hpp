// errors.hpp
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace humorlm {

// Base of every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// I/O or decoding failure while reading a corpus; carries the 1-based line
// number when known (0 = not line-specific, e.g. an unreadable path).
class IngestError : public Error {
 public:
  explicit IngestError(const std::string& what, std::size_t line = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A tweet TSV line (or a labeled set as a whole) that violates the format.
class MalformedRecord : public Error {
 public:
  MalformedRecord(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit MalformedRecord(const std::string& what) : Error(what), line_(0) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateId : public Error {
  using Error::Error;
};

class EmptyCorpus : public Error {
  using Error::Error;
};

class UnknownId : public Error {
  using Error::Error;
};

class EmptyInput : public Error {
  using Error::Error;
};

class ArpaParseError : public Error {
 public:
  ArpaParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ArpaParseError(const std::string& what) : Error(what), line_(0) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ArpaCountMismatch : public Error {
  using Error::Error;
};

class SamePair : public Error {
  using Error::Error;
};

class EmptySet : public Error {
  using Error::Error;
};

class NoPairs : public Error {
  using Error::Error;
};

class PartitionMismatch : public Error {
  using Error::Error;
};

}  // namespace humorlm
