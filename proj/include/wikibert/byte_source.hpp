#pragma once

#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <zlib.h>

namespace wikibert {

// Pluggable byte stream front-end so dump readers never care whether the
// input is raw or compressed.
class ByteSource {
 public:
  virtual ~ByteSource() = default;
  // Returns bytes read; 0 means end of stream.
  virtual size_t read(char* buf, size_t n) = 0;
};

class FileSource final : public ByteSource {
 public:
  explicit FileSource(const std::string& path) : file_(std::fopen(path.c_str(), "rb")) {
    if (!file_) throw std::runtime_error("cannot open input file: " + path);
  }
  ~FileSource() override {
    if (file_) std::fclose(file_);
  }
  FileSource(const FileSource&) = delete;
  FileSource& operator=(const FileSource&) = delete;

  size_t read(char* buf, size_t n) override { return std::fread(buf, 1, n, file_); }

 private:
  std::FILE* file_;
};

class MemorySource final : public ByteSource {
 public:
  explicit MemorySource(std::string data) : data_(std::move(data)) {}

  size_t read(char* buf, size_t n) override {
    const size_t avail = data_.size() - pos_;
    const size_t take = n < avail ? n : avail;
    std::memcpy(buf, data_.data() + pos_, take);
    pos_ += take;
    return take;
  }

 private:
  std::string data_;
  size_t pos_ = 0;
};

// zlib inflate wrapper; accepts gzip or zlib framing (windowBits 15+32).
class GzipSource final : public ByteSource {
 public:
  explicit GzipSource(std::unique_ptr<ByteSource> inner) : inner_(std::move(inner)) {
    stream_.zalloc = Z_NULL;
    stream_.zfree = Z_NULL;
    stream_.opaque = Z_NULL;
    stream_.next_in = Z_NULL;
    stream_.avail_in = 0;
    if (inflateInit2(&stream_, 15 + 32) != Z_OK)
      throw std::runtime_error("inflateInit failed");
  }
  ~GzipSource() override { inflateEnd(&stream_); }
  GzipSource(const GzipSource&) = delete;
  GzipSource& operator=(const GzipSource&) = delete;

  size_t read(char* buf, size_t n) override {
    if (finished_) return 0;
    stream_.next_out = reinterpret_cast<Bytef*>(buf);
    stream_.avail_out = static_cast<uInt>(n);
    while (stream_.avail_out > 0) {
      if (stream_.avail_in == 0) {
        const size_t got = inner_->read(inbuf_, sizeof(inbuf_));
        if (got == 0) {
          if (stream_.avail_out == n)
            throw std::runtime_error("truncated compressed stream");
          break;
        }
        stream_.next_in = reinterpret_cast<Bytef*>(inbuf_);
        stream_.avail_in = static_cast<uInt>(got);
      }
      const int rc = inflate(&stream_, Z_NO_FLUSH);
      if (rc == Z_STREAM_END) {
        finished_ = true;
        break;
      }
      if (rc != Z_OK) throw std::runtime_error("corrupt compressed stream");
    }
    return n - stream_.avail_out;
  }

 private:
  std::unique_ptr<ByteSource> inner_;
  z_stream stream_{};
  char inbuf_[1 << 16];
  bool finished_ = false;
};

inline std::unique_ptr<ByteSource> open_input(const std::string& path) {
  auto file = std::make_unique<FileSource>(path);
  if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".gz") == 0)
    return std::make_unique<GzipSource>(std::move(file));
  return file;
}

}  // namespace wikibert
