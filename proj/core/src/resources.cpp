#include "qfs/resources.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qfs/errors.hpp"

#ifndef QFS_SOURCE_RESOURCE_DIR
#define QFS_SOURCE_RESOURCE_DIR ""
#endif
#ifndef QFS_INSTALL_RESOURCE_DIR
#define QFS_INSTALL_RESOURCE_DIR ""
#endif

namespace qfs {

std::string resource_dir() {
  std::vector<std::string> candidates;
  if (const char* env = std::getenv("QFS_FORGE_RESOURCES")) candidates.emplace_back(env);
  if (*QFS_SOURCE_RESOURCE_DIR) candidates.emplace_back(QFS_SOURCE_RESOURCE_DIR);
  if (*QFS_INSTALL_RESOURCE_DIR) candidates.emplace_back(QFS_INSTALL_RESOURCE_DIR);
  for (const auto& dir : candidates) {
    std::error_code ec;
    if (std::filesystem::is_directory(dir, ec)) return dir;
  }
  std::string tried;
  for (const auto& dir : candidates) tried += " " + dir;
  throw MissingFileError("resource directory not found; tried:" + tried +
                         " (set QFS_FORGE_RESOURCES)");
}

std::vector<std::string> load_line_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError("cannot open resource file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace qfs
