#pragma once

#include <algorithm>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "quadrex/arith.hpp"

namespace quadrex::cli {

using json = nlohmann::ordered_json;

struct Output {
  json doc = json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string str(i64 v) { return std::to_string(v); }

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline json strs(const std::vector<i64>& v) {
  json a = json::array();
  for (i64 x : v) a.push_back(str(x));
  return a;
}

// Arrays become space-separated so a cell never contains a comma.
inline std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ' ';
      s += csv_cell(e);
    }
    return s;
  }
  return v.dump();
}

inline void emit(const Output& out, bool csv) {
  if (!csv) {
    std::cout << out.doc.dump(2) << '\n';
    return;
  }
  auto line = [](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
    std::cout << '\n';
  };
  if (!out.header.empty()) {
    line(out.header);
    for (const auto& r : out.rows) line(r);
    return;
  }
  line({"key", "value"});
  for (const auto& [k, v] : out.doc.items()) line({k, csv_cell(v)});
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads; results keep index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, int jobs, F fn) {
  std::vector<T> out(n);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failure(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
      } catch (...) {
        failure[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& f : failure)
    if (f) std::rethrow_exception(f);
  return out;
}

}  // namespace quadrex::cli
