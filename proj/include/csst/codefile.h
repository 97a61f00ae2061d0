#ifndef CSST_CODEFILE_H
#define CSST_CODEFILE_H

#include <string>

#include "csst/code.h"

namespace csst {

/// A code as stored on disk.
///
/// Text form, one item per line, '#' starts a comment:
///
///   name 622
///   n 6
///   kind css
///   x + 111111
///   z - 110000
///   logical_x 110000
///   logical_z 100001
///
/// Stabilizer files use "kind stabilizer" and "g <sign> <x bits> <z bits>"
/// for sign * E(x,z); their logicals take the same "<sign> <x> <z>" form.
/// Bit i of a string is qubit i + 1. A file whose first non-blank character
/// is '{' is read as JSON with the same fields.
struct CodeFile {
  enum class Kind { kStabilizer, kCss };

  Kind kind = Kind::kCss;
  /// Meaningful when kind is kCss.
  CssCode css;
  /// Always filled; the CSS code's stabilizer form for kCss.
  StabilizerCode stabilizer;

  static CodeFile from_css(CssCode code);
  static CodeFile from_stabilizer(StabilizerCode code);

  const std::string &name() const { return stabilizer.name(); }
  size_t n() const { return stabilizer.n(); }
};

/// Throws std::invalid_argument with the line number on malformed input.
CodeFile parse_code_file(const std::string &text);
std::string to_text(const CodeFile &file);
std::string to_json(const CodeFile &file);

/// Reads a file, or builds a catalog code when no such file exists and the
/// argument is a catalog name.
CodeFile load_code(const std::string &path_or_name);
/// JSON when the path ends in ".json", text otherwise.
void save_code(const CodeFile &file, const std::string &path);

}  // namespace csst

#endif
