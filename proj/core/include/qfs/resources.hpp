#pragma once

#include <string>
#include <vector>

namespace qfs {

// Directory holding the vendored resource files (stopwords, abbreviations,
// Porter vectors). Resolution order: the QFS_FORGE_RESOURCES environment
// variable, then the compiled-in defaults. Throws MissingFileError when no
// candidate exists.
std::string resource_dir();

// Reads a UTF-8 one-entry-per-line file; drops empty lines and '#' comments.
std::vector<std::string> load_line_file(const std::string& path);

}  // namespace qfs
