// Copyright 2026 The qpke-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPKE_CLI_REPORT_HPP_
#define QPKE_CLI_REPORT_HPP_

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qpke/cli/config.hpp"
#include "qpke/errors.hpp"

namespace qpke::cli {

// Fixed-precision rendering so reports are byte-stable.
inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string fmt_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// One command's output: header records, a fixed column list and rows.
//
// text format:
//   qpke-report command=<name>
//   config <key>=<value>        one line per header record
//   row <col>=<value> ...       one line per row, columns in order
//   note <free text>            zero or more
//   status pass|fail
//
// csv format: "# key=value" header lines, then the column line, then rows.
// Cells never contain commas, quotes or spaces.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  bool passed = true;

  void add_row(std::vector<std::string> r) {
    if (r.size() != columns.size()) {
      throw Error("report row has " + std::to_string(r.size()) +
                  " cells, expected " + std::to_string(columns.size()));
    }
    rows.push_back(std::move(r));
  }

  std::string render(ReportFormat f) const {
    switch (f) {
      case ReportFormat::kTable:
        return render_table();
      case ReportFormat::kText:
        return render_text();
      case ReportFormat::kCsv:
        return render_csv();
    }
    return {};
  }

 private:
  const char* status() const { return passed ? "pass" : "fail"; }

  std::string render_text() const {
    std::ostringstream os;
    os << "qpke-report command=" << command << '\n';
    for (const auto& [k, v] : header) os << "config " << k << '=' << v << '\n';
    for (const auto& r : rows) {
      os << "row";
      for (std::size_t i = 0; i < columns.size(); ++i) {
        os << ' ' << columns[i] << '=' << r[i];
      }
      os << '\n';
    }
    for (const auto& n : notes) os << "note " << n << '\n';
    os << "status " << status() << '\n';
    return os.str();
  }

  std::string render_csv() const {
    std::ostringstream os;
    os << "# command=" << command << '\n';
    for (const auto& [k, v] : header) os << "# " << k << '=' << v << '\n';
    for (const auto& n : notes) os << "# note " << n << '\n';
    os << "# status=" << status() << '\n';
    auto line = [&os](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        os << (i ? "," : "") << cells[i];
      }
      os << '\n';
    };
    line(columns);
    for (const auto& r : rows) line(r);
    return os.str();
  }

  std::string render_table() const {
    std::ostringstream os;
    os << "qpke_lab " << command << '\n';
    std::size_t key_width = 0;
    for (const auto& h : header)
      key_width = std::max(key_width, h.first.size());
    for (const auto& [k, v] : header) {
      os << "  " << k << std::string(key_width - k.size(), ' ') << "  " << v
         << '\n';
    }
    os << '\n';
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
      width[i] = columns[i].size();
      for (const auto& r : rows) width[i] = std::max(width[i], r[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += "  ";
        s += cells[i] + std::string(width[i] - cells[i].size(), ' ');
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      os << s << '\n';
    };
    line(columns);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : rows) line(r);
    if (!notes.empty()) os << '\n';
    for (const auto& n : notes) os << "note: " << n << '\n';
    os << "\nstatus: " << status() << '\n';
    return os.str();
  }
};

inline Report make_report(std::string command, const ExperimentConfig& c,
                          std::vector<std::string> columns) {
  Report r;
  r.command = std::move(command);
  r.header = c.header();
  r.columns = std::move(columns);
  return r;
}

}  // namespace qpke::cli

#endif  // QPKE_CLI_REPORT_HPP_
