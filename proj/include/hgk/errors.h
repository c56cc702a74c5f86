// Copyright 2026 The HGK Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HGK_ERRORS_H_
#define HGK_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgk {

// A required input (labels, attributes, hash mode) is missing or unsuitable.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A mandatory dataset file could not be opened.
class IngestionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed content in a dataset file. Carries the offending location.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& file, std::size_t line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// A model could not be trained on the given data.
class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force oracle refused an input exceeding its tractability caps.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& cap, std::size_t limit, std::size_t actual)
      : std::runtime_error(cap + " exceeded: " + std::to_string(actual) +
                           " > " + std::to_string(limit)),
        cap_(cap) {}

  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

}  // namespace hgk

#endif  // HGK_ERRORS_H_
