#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wikibert/util.hpp"

// Intermediate corpus formats shared by all stages.
//
// docs format:       one paragraph per line, blank line between documents,
//                    each document introduced by `# doc_id=<n> title=<t>`.
// sentences format:  same framing, one sentence per line with tokens
//                    separated by single spaces.

namespace wikibert {

inline std::string escape_title(std::string_view title) {
  std::string out;
  out.reserve(title.size());
  for (char c : title) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string unescape_title(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      const char n = s[++i];
      if (n == 't') out.push_back('\t');
      else if (n == 'n') out.push_back('\n');
      else out.push_back(n);
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

struct DocHeader {
  int64_t doc_id = 0;
  std::string title;
};

inline std::string format_doc_header(const DocHeader& h) {
  return "# doc_id=" + std::to_string(h.doc_id) + " title=" + escape_title(h.title);
}

inline std::optional<DocHeader> parse_doc_header(std::string_view line) {
  constexpr std::string_view prefix = "# doc_id=";
  if (line.substr(0, prefix.size()) != prefix) return std::nullopt;
  const size_t title_at = line.find(" title=", prefix.size());
  if (title_at == std::string_view::npos) return std::nullopt;
  DocHeader h;
  try {
    h.doc_id = std::stoll(std::string(line.substr(prefix.size(), title_at - prefix.size())));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  h.title = unescape_title(line.substr(title_at + 7));
  return h;
}

// One document in either format; `lines` holds paragraphs or sentences.
struct TextDoc {
  int64_t doc_id = 0;
  std::string title;
  std::vector<std::string> lines;
};

class TextFormatWriter {
 public:
  explicit TextFormatWriter(std::ostream& out) : out_(out) {}

  void begin_doc(const DocHeader& h) {
    if (!first_) out_ << '\n';
    first_ = false;
    out_ << format_doc_header(h) << '\n';
  }

  void line(std::string_view text) { out_ << text << '\n'; }

 private:
  std::ostream& out_;
  bool first_ = true;
};

class TextFormatReader {
 public:
  explicit TextFormatReader(std::istream& in) : in_(in) {}

  bool next(TextDoc& doc) {
    doc.lines.clear();
    std::string line;
    if (!pending_) {
      bool found = false;
      while (std::getline(in_, line)) {
        strip_cr(line);
        if (trim(line).empty()) continue;
        auto h = parse_doc_header(line);
        if (!h) throw std::runtime_error("expected document header, got: " + line);
        pending_ = h;
        found = true;
        break;
      }
      if (!found) return false;
    }
    doc.doc_id = pending_->doc_id;
    doc.title = pending_->title;
    pending_.reset();
    while (std::getline(in_, line)) {
      strip_cr(line);
      if (auto h = parse_doc_header(line)) {
        pending_ = h;
        break;
      }
      if (trim(line).empty()) continue;
      doc.lines.push_back(line);
    }
    return true;
  }

 private:
  static void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
  }

  std::istream& in_;
  std::optional<DocHeader> pending_;
};

}  // namespace wikibert
