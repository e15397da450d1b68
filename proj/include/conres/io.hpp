#pragma once

// JSON, CSV and markdown encodings of polynomials and spectral tables.
// Polynomials are JSON arrays of [exponent, coefficient] pairs in ascending
// exponent order. Table block keys are multiindices written "a1,a2,...".

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"  // nlohmann/json, vendored

#include "conres/combinat.hpp"
#include "conres/poly.hpp"
#include "conres/resolution.hpp"

namespace conres::io {

inline constexpr const char* kVersion = "0.1.0";

using nlohmann::json;

template <class Var>
json poly_to_json(const Laurent<Var>& p) {
  json arr = json::array();
  for (auto [e, c] : p.terms()) arr.push_back(json::array({e, c}));
  return arr;
}

template <class Var>
Laurent<Var> poly_from_json(const json& j) {
  std::vector<std::pair<int, Coeff>> terms;
  for (const auto& pair : j) terms.emplace_back(pair.at(0).get<int>(), pair.at(1).get<Coeff>());
  return Laurent<Var>::from_terms(terms);
}

template <class Var>
std::string poly_to_csv(const Laurent<Var>& p) {
  std::string s = "exponent,coefficient\n";
  for (auto [e, c] : p.terms()) s += std::to_string(e) + "," + std::to_string(c) + "\n";
  return s;
}

inline std::string view_name(View v) { return v == View::homological ? "hom" : "cohom"; }

inline View parse_view(const std::string& s) {
  if (s == "hom") return View::homological;
  if (s == "cohom") return View::cohomological;
  throw DomainError("unknown view '" + s + "'");
}

/// A table as it appears in one view; the unit of serialization.
struct TableDocument {
  int n = 0;
  View view = View::homological;
  std::vector<ViewCell> cells;

  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

inline TableDocument make_document(const SpectralTable& table, View view) { return {table.n(), view, table.view(view)}; }

inline json table_to_json(const TableDocument& doc) {
  json cells = json::array();
  for (const auto& c : doc.cells) {
    json blocks = json::object();
    for (const auto& [A, r] : c.blocks) blocks[A.key()] = r;
    cells.push_back({{"p", c.p}, {"q", c.q}, {"rank", c.rank}, {"blocks", blocks}});
  }
  return {{"n", doc.n}, {"view", view_name(doc.view)}, {"cells", cells}};
}

inline TableDocument table_from_json(const json& j) {
  TableDocument doc;
  doc.n = j.at("n").get<int>();
  doc.view = parse_view(j.at("view").get<std::string>());
  for (const auto& c : j.at("cells")) {
    ViewCell vc;
    vc.p = c.at("p").get<int>();
    vc.q = c.at("q").get<int>();
    vc.rank = c.at("rank").get<Coeff>();
    for (const auto& [key, r] : c.at("blocks").items()) vc.blocks[MultiIndex::parse(key)] = r.get<Coeff>();
    doc.cells.push_back(std::move(vc));
  }
  return doc;
}

/// One row per (cell, block): p,q,block,rank. With total_degree the second
/// column is p + q, labelled i.
inline std::string table_to_csv(const TableDocument& doc, bool total_degree = false) {
  std::string s = std::string("p,") + (total_degree ? "i" : "q") + ",block,rank\n";
  for (const auto& c : doc.cells)
    for (const auto& [A, r] : c.blocks)
      s += std::to_string(c.p) + "," + std::to_string(total_degree ? c.p + c.q : c.q) + ",\"" + A.key() + "\"," +
           std::to_string(r) + "\n";
  return s;
}

inline TableDocument table_from_csv(const std::string& text, int n, View view, bool total_degree = false) {
  TableDocument doc{n, view, {}};
  std::map<std::pair<int, int>, ViewCell> cells;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto q1 = line.find('"'), q2 = line.rfind('"');
    if (q1 == std::string::npos || q2 == q1) throw DomainError("malformed csv row: " + line);
    std::istringstream head(line.substr(0, q1));
    std::string p_str, q_str;
    std::getline(head, p_str, ',');
    std::getline(head, q_str, ',');
    const int p = std::stoi(p_str);
    const int q = std::stoi(q_str) - (total_degree ? p : 0);
    const auto A = MultiIndex::parse(line.substr(q1 + 1, q2 - q1 - 1));
    const Coeff r = std::stoll(line.substr(q2 + 2));
    auto& cell = cells[{p, q}];
    cell.p = p;
    cell.q = q;
    cell.rank += r;
    cell.blocks[A] = r;
  }
  for (auto& [key, c] : cells) doc.cells.push_back(std::move(c));
  return doc;
}

/// Grid with rows by descending q (or i) and one column per p. A cell with
/// several blocks shows their ranks joined by " + ", in the order of the
/// legend.
inline std::string table_to_markdown(const TableDocument& doc, bool total_degree = false) {
  std::set<int> ps, rows;
  std::map<int, std::set<MultiIndex, std::greater<>>> blocks_in_column;
  std::map<std::pair<int, int>, const ViewCell*> at;
  for (const auto& c : doc.cells) {
    const int row = total_degree ? c.p + c.q : c.q;
    ps.insert(c.p);
    rows.insert(row);
    at[{c.p, row}] = &c;
    for (const auto& [A, r] : c.blocks) blocks_in_column[c.p].insert(A);
  }
  std::ostringstream os;
  os << "n = " << doc.n << ", " << (doc.view == View::homological ? "homological" : "cohomological") << " E^1\n\n";
  const char* row_label = total_degree ? "i" : "q";
  os << "| " << row_label << " \\ p |";
  for (int p : ps) os << ' ' << p << " |";
  os << "\n|---|";
  for (std::size_t k = 0; k < ps.size(); ++k) os << "---|";
  os << '\n';
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    os << "| " << *it << " |";
    for (int p : ps) {
      auto found = at.find({p, *it});
      std::string entry;
      if (found != at.end()) {
        const auto& blocks = found->second->blocks;
        bool first = true;
        for (const auto& A : blocks_in_column[p]) {
          auto b = blocks.find(A);
          if (b == blocks.end()) continue;
          if (!first) entry += " + ";
          entry += std::to_string(b->second);
          first = false;
        }
      }
      os << ' ' << entry << " |";
    }
    os << '\n';
  }
  os << '\n';
  for (const auto& [p, set] : blocks_in_column) {
    os << "p = " << p << ":";
    bool first = true;
    for (const auto& A : set) {
      os << (first ? " " : " + ") << "(" << A.key() << ")";
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

inline std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

inline json verify_to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"details", c.details}});
  return {{"n", r.n}, {"ok", r.ok()}, {"checks", checks}};
}

}  // namespace conres::io
