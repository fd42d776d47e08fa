#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sisa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened.
class FileError : public Error {
 public:
  explicit FileError(const std::string& path)
      : Error("cannot open file: " + path), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Malformed input line. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A sentence whose head relation is not a single-rooted tree.
// sentence_index() is 0-based.
class StructuralError : public Error {
 public:
  StructuralError(std::size_t sentence_index, const std::string& what)
      : Error("sentence " + std::to_string(sentence_index + 1) + ": " + what),
        sentence_index_(sentence_index) {}
  std::size_t sentence_index() const noexcept { return sentence_index_; }

 private:
  std::size_t sentence_index_;
};

// A numeric value outside its admissible range.
class RangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Invalid rule configuration. rule() names the offending block.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& rule, const std::string& what)
      : Error("rule '" + rule + "': " + what), rule_(rule) {}
  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

// Caller misuse: mixing lexicon scales, empty inputs, mismatched reports.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace sisa
