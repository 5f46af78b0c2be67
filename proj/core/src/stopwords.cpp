#include <string>
#include <unordered_set>

#include "qfs/resources.hpp"
#include "qfs/text.hpp"

namespace qfs {

namespace {

const std::unordered_set<std::string>& stopword_set() {
  static const std::unordered_set<std::string> words = [] {
    std::unordered_set<std::string> s;
    for (auto& line : load_line_file(resource_dir() + "/stopwords_smart.txt")) s.insert(line);
    return s;
  }();
  return words;
}

}  // namespace

bool is_stopword(const std::string& token) { return stopword_set().count(token) > 0; }

}  // namespace qfs
