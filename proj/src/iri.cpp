#include "qualcube/iri.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace qualcube::iri {

namespace {

bool is_scheme_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
         c == '.';
}

// Splits an IRI into scheme, authority (without leading //), path, query
// (with '?'), fragment (with '#'). Missing parts are nullopt.
struct Parts {
  std::optional<std::string> scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

Parts split(std::string_view s) {
  Parts p;
  auto hash = s.find('#');
  if (hash != std::string_view::npos) {
    p.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  auto q = s.find('?');
  if (q != std::string_view::npos) {
    p.query = std::string(s.substr(q + 1));
    s = s.substr(0, q);
  }
  if (!s.empty() && std::isalpha(static_cast<unsigned char>(s[0]))) {
    std::size_t i = 1;
    while (i < s.size() && is_scheme_char(s[i])) ++i;
    if (i < s.size() && s[i] == ':') {
      p.scheme = std::string(s.substr(0, i));
      s = s.substr(i + 1);
    }
  }
  if (s.size() >= 2 && s[0] == '/' && s[1] == '/') {
    s = s.substr(2);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
      p.authority = std::string(s);
      s = {};
    } else {
      p.authority = std::string(s.substr(0, slash));
      s = s.substr(slash);
    }
  }
  p.path = std::string(s);
  return p;
}

std::string remove_dot_segments(std::string_view path) {
  std::vector<std::string_view> out;
  bool absolute = !path.empty() && path[0] == '/';
  bool trailing_slash = false;
  std::size_t i = 0;
  while (i < path.size()) {
    while (i < path.size() && path[i] == '/') ++i;
    std::size_t start = i;
    while (i < path.size() && path[i] != '/') ++i;
    std::string_view seg = path.substr(start, i - start);
    if (seg == "." || seg.empty()) {
      trailing_slash = true;
      continue;
    }
    if (seg == "..") {
      if (!out.empty()) out.pop_back();
      trailing_slash = true;
      continue;
    }
    out.push_back(seg);
    trailing_slash = i < path.size();
  }
  std::string result;
  if (absolute) result += '/';
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k) result += '/';
    result += out[k];
  }
  if (trailing_slash && !out.empty()) result += '/';
  return result;
}

std::string recompose(const Parts& p) {
  std::string r;
  if (p.scheme) {
    r += *p.scheme;
    r += ':';
  }
  if (p.authority) {
    r += "//";
    r += *p.authority;
  }
  r += p.path;
  if (p.query) {
    r += '?';
    r += *p.query;
  }
  if (p.fragment) {
    r += '#';
    r += *p.fragment;
  }
  return r;
}

}  // namespace

bool is_absolute(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  std::size_t i = 1;
  while (i < s.size() && is_scheme_char(s[i])) ++i;
  return i < s.size() && s[i] == ':';
}

std::string authority_of(std::string_view s) {
  Parts p = split(s);
  if (!p.scheme || !p.authority) return {};
  std::string r = *p.scheme + "://" + *p.authority;
  std::transform(r.begin(), r.end(), r.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return r;
}

std::string local_name(std::string_view s) {
  auto pos = s.find_last_of("#/");
  if (pos != std::string_view::npos && pos + 1 < s.size()) {
    return std::string(s.substr(pos + 1));
  }
  if (pos == std::string_view::npos) {
    auto colon = s.find_last_of(':');
    if (colon != std::string_view::npos && colon + 1 < s.size()) {
      return std::string(s.substr(colon + 1));
    }
  }
  return std::string(s);
}

std::string resolve(std::string_view reference, std::string_view base) {
  Parts r = split(reference);
  if (r.scheme) {
    r.path = remove_dot_segments(r.path);
    return recompose(r);
  }
  Parts b = split(base);
  Parts t;
  t.scheme = b.scheme;
  if (r.authority) {
    t.authority = r.authority;
    t.path = remove_dot_segments(r.path);
    t.query = r.query;
  } else {
    t.authority = b.authority;
    if (r.path.empty()) {
      t.path = b.path;
      t.query = r.query ? r.query : b.query;
    } else if (r.path[0] == '/') {
      t.path = remove_dot_segments(r.path);
      t.query = r.query;
    } else {
      auto slash = b.path.find_last_of('/');
      std::string merged = slash == std::string::npos
                               ? (b.authority ? "/" + r.path : r.path)
                               : b.path.substr(0, slash + 1) + r.path;
      t.path = remove_dot_segments(merged);
      t.query = r.query;
    }
  }
  t.fragment = r.fragment;
  return recompose(t);
}

}  // namespace qualcube::iri
