#include <cctype>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "qfs/text.hpp"

namespace qfs {

namespace {

std::string ascii_lower(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

// Tags whose end marks a paragraph-level break in the extracted text.
const std::unordered_set<std::string>& block_tags() {
  static const std::unordered_set<std::string> tags = {
      "p",  "div", "li", "ul", "ol", "tr",    "table",      "h1",     "h2",      "h3",
      "h4", "h5",  "h6", "dd", "dt", "aside", "blockquote", "figure", "section", "article"};
  return tags;
}

void append_codepoint(std::string& out, unsigned long cp) {
  if (cp == 0 || cp > 0x10FFFF) return;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Decodes one entity starting at the '&' in text[i]; returns the position
// just past it, or i + 1 with a literal '&' emitted when malformed.
std::size_t decode_entity(const std::string& text, std::size_t i, std::string& out) {
  static const std::unordered_map<std::string, std::string> named = {
      {"amp", "&"},   {"lt", "<"},      {"gt", ">"},      {"quot", "\""},
      {"apos", "'"},  {"nbsp", " "},    {"ndash", "\xE2\x80\x93"},
      {"mdash", "\xE2\x80\x94"},        {"hellip", "\xE2\x80\xA6"},
      {"rsquo", "\xE2\x80\x99"},        {"lsquo", "\xE2\x80\x98"},
      {"rdquo", "\xE2\x80\x9D"},        {"ldquo", "\xE2\x80\x9C"}};
  std::size_t semi = text.find(';', i + 1);
  if (semi == std::string::npos || semi - i > 12) {
    out += '&';
    return i + 1;
  }
  std::string body = text.substr(i + 1, semi - i - 1);
  if (!body.empty() && body[0] == '#') {
    bool hex = body.size() > 1 && (body[1] == 'x' || body[1] == 'X');
    std::string digits = body.substr(hex ? 2 : 1);
    if (digits.empty()) {
      out += '&';
      return i + 1;
    }
    unsigned long cp = 0;
    for (char c : digits) {
      int v;
      if (c >= '0' && c <= '9')
        v = c - '0';
      else if (hex && c >= 'a' && c <= 'f')
        v = c - 'a' + 10;
      else if (hex && c >= 'A' && c <= 'F')
        v = c - 'A' + 10;
      else {
        out += '&';
        return i + 1;
      }
      cp = cp * (hex ? 16 : 10) + static_cast<unsigned long>(v);
      if (cp > 0x10FFFF) break;
    }
    append_codepoint(out, cp);
    return semi + 1;
  }
  auto it = named.find(ascii_lower(body));
  if (it == named.end()) {
    out += '&';
    return i + 1;
  }
  out += it->second;
  return semi + 1;
}

// Name of the tag whose '<' is at i, lowercased, without the leading '/'.
std::string tag_name(const std::string& text, std::size_t i) {
  std::size_t p = i + 1;
  if (p < text.size() && text[p] == '/') ++p;
  std::size_t start = p;
  while (p < text.size() && (std::isalnum(static_cast<unsigned char>(text[p])) != 0)) ++p;
  return ascii_lower(text.substr(start, p - start));
}

}  // namespace

std::string html_to_text(const std::string& html) {
  std::string out;
  out.reserve(html.size());
  const std::size_t n = html.size();
  std::size_t i = 0;
  while (i < n) {
    char c = html[i];
    if (c == '<') {
      if (html.compare(i, 4, "<!--") == 0) {
        std::size_t end = html.find("-->", i + 4);
        i = end == std::string::npos ? n : end + 3;
        continue;
      }
      std::string name = tag_name(html, i);
      if (name == "script" || name == "style") {
        std::string close = "</" + name;
        std::size_t end = i;
        while (true) {
          end = html.find('<', end + 1);
          if (end == std::string::npos) {
            end = n;
            break;
          }
          if (ascii_lower(html.substr(end, close.size())) == close) {
            end = html.find('>', end);
            end = end == std::string::npos ? n : end + 1;
            break;
          }
        }
        i = end;
        continue;
      }
      std::size_t close = html.find('>', i + 1);
      if (close == std::string::npos) {
        out += c;
        ++i;
        continue;
      }
      if (name == "br")
        out += '\n';
      else if (block_tags().count(name) > 0)
        out += "\n\n";
      i = close + 1;
      continue;
    }
    if (c == '&') {
      i = decode_entity(html, i, out);
      continue;
    }
    out += c;
    ++i;
  }
  return out;
}

}  // namespace qfs
