#pragma once

// Input formats and report serialization.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dgexcess/digraph.hpp"
#include "dgexcess/report.hpp"

namespace dgexcess {

enum class InputFormat { edgelist, adjmatrix };

/// Throws std::invalid_argument for anything but "edgelist" / "adjmatrix".
InputFormat parse_format(const std::string& name);
std::string to_string(InputFormat f);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  /// 1-based; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// edgelist: "n m" then m lines "u v" (arc u -> v, 0-based).
/// adjmatrix: "n" then n rows of n entries 0/1 (row u, column v = arc u -> v).
/// '#' starts a comment in both. Throws ParseError.
Digraph parse_text(const std::string& text, InputFormat format);
Digraph parse_input(const std::string& path, InputFormat format);

/// Reads the whole file; throws ParseError(0, ...) when it cannot be opened.
std::string read_file(const std::string& path);

/// Edgelist text that parse_text reads back to the same digraph.
std::string write_edgelist(const Digraph& g);

enum class ReportFormat { json, text };

std::string report_json(const AnalysisReport& r);
std::string report_text(const AnalysisReport& r);
void emit_report(const AnalysisReport& r, ReportFormat format, std::ostream& out);

}  // namespace dgexcess
