#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "coverideal/hypergraph.hpp"

namespace coverideal::cli {

/// Input rejected by the hypergraph file reader; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

/// Hypergraph file format:
///   # comment (also allowed after any directive)
///   n <vertex count>
///   e <v1> <v2> ...     one edge per line, 1-based vertex labels
/// The `n` line must come first; edges are optional. Nested edges are reduced
/// to the inclusion-minimal ones.
Hypergraph read_hypergraph(std::istream& in, const std::string& source);

Hypergraph read_hypergraph_file(const std::string& path);

/// Canonical text form; parsing it back reproduces the hypergraph.
std::string write_hypergraph(const Hypergraph& h);

}  // namespace coverideal::cli
