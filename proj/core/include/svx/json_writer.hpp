#pragma once

#include <charconv>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace svx {

/// Minimal JSON value with deterministic serialization: keys emitted in
/// sorted order, doubles at 17 significant digits, locale-free. Reports
/// must be byte-stable across runs, which rules out printf-locale and
/// unordered maps.
class Json {
 public:
  Json() : v_(nullptr) {}
  Json(std::nullptr_t) : v_(nullptr) {}
  Json(bool b) : v_(b) {}
  Json(double d) : v_(d) {}
  Json(int i) : v_(static_cast<long long>(i)) {}
  Json(long long i) : v_(i) {}
  Json(const char* s) : v_(std::string(s)) {}
  Json(std::string s) : v_(std::move(s)) {}
  Json(std::vector<Json> arr) : v_(std::move(arr)) {}
  Json(std::map<std::string, Json> obj) : v_(std::move(obj)) {}

  static Json array() { return Json(std::vector<Json>{}); }
  static Json object() { return Json(std::map<std::string, Json>{}); }

  Json& operator[](const std::string& key) {
    return std::get<std::map<std::string, Json>>(v_)[key];
  }
  void push_back(Json j) { std::get<std::vector<Json>>(v_).push_back(std::move(j)); }

  std::string dump() const {
    std::string out;
    write(out);
    return out;
  }

 private:
  using Object = std::map<std::string, Json>;
  using Array = std::vector<Json>;
  std::variant<std::nullptr_t, bool, long long, double, std::string, Array, Object> v_;

  static void escape(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    out += '"';
  }

  void write(std::string& out) const {
    if (std::holds_alternative<std::nullptr_t>(v_)) {
      out += "null";
    } else if (auto* b = std::get_if<bool>(&v_)) {
      out += *b ? "true" : "false";
    } else if (auto* i = std::get_if<long long>(&v_)) {
      out += std::to_string(*i);
    } else if (auto* d = std::get_if<double>(&v_)) {
      char buf[40];
      auto r = std::to_chars(buf, buf + sizeof buf, *d, std::chars_format::general, 17);
      out.append(buf, r.ptr);
    } else if (auto* s = std::get_if<std::string>(&v_)) {
      escape(*s, out);
    } else if (auto* a = std::get_if<Array>(&v_)) {
      out += '[';
      for (size_t k = 0; k < a->size(); ++k) {
        if (k) out += ',';
        (*a)[k].write(out);
      }
      out += ']';
    } else {
      const Object& o = std::get<Object>(v_);
      out += '{';
      bool first = true;
      for (const auto& [key, val] : o) {
        if (!first) out += ',';
        first = false;
        escape(key, out);
        out += ':';
        val.write(out);
      }
      out += '}';
    }
  }
};

}  // namespace svx
