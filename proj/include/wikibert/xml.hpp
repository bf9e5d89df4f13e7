#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wikibert/byte_source.hpp"

// Streaming pull parser sized for MediaWiki export dumps: elements,
// attributes, character data, comments, CDATA, processing instructions,
// the five predefined entities and numeric references. No DTD support.

namespace wikibert::xml {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t offset, std::string element, bool truncated)
      : std::runtime_error(msg + " at byte " + std::to_string(offset) + " in <" +
                           (element.empty() ? std::string("document root") : element) + ">"),
        byte_offset(offset),
        element(std::move(element)),
        truncated(truncated) {}

  size_t byte_offset;
  std::string element;
  bool truncated;
};

enum class EventType { kStartElement, kEndElement, kText, kEnd };

struct Attribute {
  std::string name;
  std::string value;
};

struct Event {
  EventType type = EventType::kEnd;
  std::string name;
  std::vector<Attribute> attrs;
  std::string text;
};

class PullParser {
 public:
  explicit PullParser(ByteSource& src) : src_(src) {}

  size_t byte_offset() const { return offset_; }

  // Fills `ev` with the next event; returns false once the input is fully
  // consumed (after which `ev.type` is kEnd).
  bool next(Event& ev) {
    ev.attrs.clear();
    ev.text.clear();
    ev.name.clear();
    if (!pending_end_.empty()) {
      ev.type = EventType::kEndElement;
      ev.name = std::move(pending_end_);
      pending_end_.clear();
      return true;
    }
    while (true) {
      int c = peek();
      if (c < 0) {
        if (!stack_.empty())
          throw ParseError("truncated stream: unclosed element", offset_, stack_.back(), true);
        ev.type = EventType::kEnd;
        return false;
      }
      if (c != '<') {
        read_text(ev.text);
        if (!stack_.empty()) {
          ev.type = EventType::kText;
          return true;
        }
        for (char ch : ev.text) {
          if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r')
            throw ParseError("text outside of root element", offset_, "", false);
        }
        ev.text.clear();
        continue;
      }
      get();  // consume '<'
      c = peek();
      if (c < 0) throw truncated("unterminated tag");
      if (c == '!') {
        get();
        if (auto cdata = bang_construct()) {
          if (!stack_.empty()) {
            ev.type = EventType::kText;
            ev.text = std::move(*cdata);
            return true;
          }
        }
        continue;
      }
      if (c == '?') {
        get();
        skip_until("?>");
        continue;
      }
      if (c == '/') {
        get();
        ev.name = read_name();
        skip_ws();
        expect('>');
        if (stack_.empty() || stack_.back() != ev.name)
          throw ParseError("mismatched end tag </" + ev.name + ">", offset_,
                           stack_.empty() ? "" : stack_.back(), false);
        stack_.pop_back();
        ev.type = EventType::kEndElement;
        return true;
      }
      // Start tag.
      ev.name = read_name();
      while (true) {
        skip_ws();
        c = peek();
        if (c < 0) throw truncated("unterminated start tag");
        if (c == '>') {
          get();
          stack_.push_back(ev.name);
          ev.type = EventType::kStartElement;
          return true;
        }
        if (c == '/') {
          get();
          expect('>');
          stack_.push_back(ev.name);
          pending_end_ = ev.name;
          ev.type = EventType::kStartElement;
          return true;
        }
        Attribute attr;
        attr.name = read_name();
        skip_ws();
        expect('=');
        skip_ws();
        const int quote = get();
        if (quote != '"' && quote != '\'')
          throw ParseError("attribute value must be quoted", offset_, ev.name, false);
        while (true) {
          const int v = get();
          if (v < 0) throw truncated("unterminated attribute value");
          if (v == quote) break;
          if (v == '&')
            decode_entity(attr.value);
          else
            attr.value.push_back(static_cast<char>(v));
        }
        ev.attrs.push_back(std::move(attr));
      }
    }
  }

 private:
  ParseError truncated(const std::string& what) const {
    return ParseError("truncated stream: " + what, offset_,
                      stack_.empty() ? "" : stack_.back(), true);
  }

  void read_text(std::string& out) {
    while (true) {
      const int c = peek();
      if (c < 0 || c == '<') return;
      get();
      if (c == '&')
        decode_entity(out);
      else
        out.push_back(static_cast<char>(c));
    }
  }

  // '&' already consumed; appends the decoded character(s).
  void decode_entity(std::string& out) {
    std::string name;
    while (true) {
      const int c = get();
      if (c < 0) throw truncated("unterminated entity reference");
      if (c == ';') break;
      name.push_back(static_cast<char>(c));
      if (name.size() > 12)
        throw ParseError("malformed entity reference '&" + name + "'", offset_,
                         stack_.empty() ? "" : stack_.back(), false);
    }
    if (name == "amp") out.push_back('&');
    else if (name == "lt") out.push_back('<');
    else if (name == "gt") out.push_back('>');
    else if (name == "quot") out.push_back('"');
    else if (name == "apos") out.push_back('\'');
    else if (!name.empty() && name[0] == '#') {
      char32_t cp = 0;
      try {
        cp = static_cast<char32_t>(
            name[1] == 'x' || name[1] == 'X'
                ? std::stoul(name.substr(2), nullptr, 16)
                : std::stoul(name.substr(1), nullptr, 10));
      } catch (const std::exception&) {
        throw ParseError("malformed character reference '&" + name + "'", offset_,
                         stack_.empty() ? "" : stack_.back(), false);
      }
      append_cp(out, cp);
    } else {
      throw ParseError("unknown entity '&" + name + ";'", offset_,
                       stack_.empty() ? "" : stack_.back(), false);
    }
  }

  static void append_cp(std::string& out, char32_t cp) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }

  // After "<!": comment, CDATA or DOCTYPE-like construct. Returns CDATA
  // content verbatim; comments and DOCTYPE are skipped.
  std::optional<std::string> bang_construct() {
    if (peek() == '-') {
      get();
      expect('-');
      skip_until("-->");
      return std::nullopt;
    }
    if (peek() == '[') {
      std::string marker;
      for (int i = 0; i < 7 && peek() >= 0; ++i) marker.push_back(static_cast<char>(get()));
      if (marker != "[CDATA[")
        throw ParseError("unsupported <![ construct", offset_,
                         stack_.empty() ? "" : stack_.back(), false);
      std::string content;
      size_t matched = 0;
      const std::string_view end = "]]>";
      while (matched < end.size()) {
        const int c = get();
        if (c < 0) throw truncated("unterminated CDATA section");
        if (static_cast<char>(c) == end[matched]) {
          ++matched;
        } else {
          content.append(end.substr(0, matched));
          matched = (static_cast<char>(c) == end[0]) ? 1 : 0;
          if (!matched) content.push_back(static_cast<char>(c));
        }
      }
      return content;
    }
    // DOCTYPE and friends: skip to the closing '>' (no nested brackets in
    // export dumps).
    while (true) {
      const int c = get();
      if (c < 0) throw truncated("unterminated <! construct");
      if (c == '>') return std::nullopt;
    }
  }

  void skip_until(std::string_view end) {
    size_t matched = 0;
    while (matched < end.size()) {
      const int c = get();
      if (c < 0) throw truncated("unterminated construct");
      if (static_cast<char>(c) == end[matched]) {
        ++matched;
      } else {
        matched = (static_cast<char>(c) == end[0]) ? 1 : 0;
      }
    }
  }

  std::string read_name() {
    std::string name;
    while (true) {
      const int c = peek();
      if (c < 0) throw truncated("unterminated name");
      const char ch = static_cast<char>(c);
      const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                      (ch >= '0' && ch <= '9') || ch == '_' || ch == '-' ||
                      ch == ':' || ch == '.';
      if (!ok) break;
      name.push_back(ch);
      get();
    }
    if (name.empty())
      throw ParseError("expected a name", offset_, stack_.empty() ? "" : stack_.back(), false);
    return name;
  }

  void skip_ws() {
    while (true) {
      const int c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
        get();
      else
        return;
    }
  }

  void expect(char want) {
    const int c = get();
    if (c < 0) throw truncated(std::string("expected '") + want + "'");
    if (static_cast<char>(c) != want)
      throw ParseError(std::string("expected '") + want + "'", offset_,
                       stack_.empty() ? "" : stack_.back(), false);
  }

  int get() {
    const int c = peek();
    if (c >= 0) {
      ++pos_;
      ++offset_;
    }
    return c;
  }

  int peek() {
    if (pos_ >= len_) {
      len_ = src_.read(buf_, sizeof(buf_));
      pos_ = 0;
      if (len_ == 0) return -1;
    }
    return static_cast<unsigned char>(buf_[pos_]);
  }

  ByteSource& src_;
  char buf_[1 << 16];
  size_t pos_ = 0;
  size_t len_ = 0;
  size_t offset_ = 0;
  std::vector<std::string> stack_;
  std::string pending_end_;
};

}  // namespace wikibert::xml
