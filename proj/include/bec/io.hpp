#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "bec/instance.hpp"

namespace bec {

// Raised for malformed files; `line` is 1-based and also baked into the
// message as "<path>:<line>: <what>".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, int line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Instance text format (LF line endings, '#' comment lines ignored):
//   bec 1
//   <input_count> <output_count> <edge_count>
//   <input_index> <output_index> <bound>     (edge_count lines, ids in order)
BecInstance read_instance(const std::filesystem::path& path);
void write_instance(const BecInstance& g, const std::filesystem::path& path,
                    const std::vector<std::string>& comments = {});

// Coloring text format:
//   becc 1
//   <edge_count>
//   <color or ->                             (one line per edge id)
Coloring read_coloring(const std::filesystem::path& path);
void write_coloring(const Coloring& c, const std::filesystem::path& path);

}  // namespace bec
