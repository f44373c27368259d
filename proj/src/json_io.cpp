#include "dualgroth/json_io.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "dualgroth/errors.hpp"

namespace dualgroth {

using nlohmann::json;

namespace {

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json shape_to_json(const SkewShape& shape) {
  return json{{"lambda", shape.lambda().parts()}, {"mu", shape.mu().parts()}};
}

SkewShape shape_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lambda")) throw ParseError("shape needs a lambda field");
  Partition lambda{int_list(j.at("lambda"), "lambda")};
  Partition mu;
  if (j.contains("mu")) mu = Partition{int_list(j.at("mu"), "mu")};
  return SkewShape(std::move(lambda), std::move(mu));
}

json filling_to_json(const Filling& f) {
  // Reconstruct the minimal skew-diagram description of the domain.
  std::map<int, Interval> rows;
  int max_row = 0;
  for (const auto& [cell, value] : f.items()) {
    auto [it, fresh] = rows.try_emplace(cell.row, Interval{cell.col, cell.col + 1});
    if (!fresh) {
      it->second.lo = std::min(it->second.lo, cell.col);
      it->second.hi = std::max(it->second.hi, cell.col + 1);
    }
    max_row = std::max(max_row, cell.row);
  }
  std::vector<int> lam(static_cast<std::size_t>(max_row), 0);
  std::vector<int> mu(static_cast<std::size_t>(max_row), 0);
  int prev_lam = 0;
  for (int r = max_row; r >= 1; --r) {
    auto it = rows.find(r);
    int hi = it != rows.end() ? it->second.hi - 1 : prev_lam;
    int lo = it != rows.end() ? it->second.lo - 1 : prev_lam;
    lam[static_cast<std::size_t>(r) - 1] = hi;
    mu[static_cast<std::size_t>(r) - 1] = lo;
    prev_lam = hi;
  }
  SkewShape shape;
  try {
    shape = SkewShape{Partition(lam), Partition(mu)};
  } catch (const Error&) {
    throw InvalidArgument("filling domain is not a skew diagram; cannot serialize");
  }
  if (shape.num_cells() != static_cast<long long>(f.size())) {
    throw InvalidArgument("filling domain is not a skew diagram; cannot serialize");
  }
  json out;
  out["shape"] = shape_to_json(shape);
  json jrows = json::array();
  for (int r = 1; r <= shape.num_rows(); ++r) {
    json row = json::array();
    for (int c = 1; c <= shape.lambda().part(r); ++c) {
      auto v = f.at({r, c});
      if (v) {
        row.push_back(*v);
      } else {
        row.push_back(nullptr);
      }
    }
    jrows.push_back(std::move(row));
  }
  out["rows"] = std::move(jrows);
  return out;
}

Filling filling_from_json(const json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("rows")) {
    throw ParseError("filling needs shape and rows fields");
  }
  SkewShape shape = shape_from_json(j.at("shape"));
  const json& jrows = j.at("rows");
  if (!jrows.is_array() || static_cast<int>(jrows.size()) != shape.num_rows()) {
    throw ParseError("rows must list one array per shape row");
  }
  std::vector<std::pair<Cell, int>> items;
  for (int r = 1; r <= shape.num_rows(); ++r) {
    const json& row = jrows[static_cast<std::size_t>(r) - 1];
    if (!row.is_array()) throw ParseError("each row must be an array");
    for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
      const json& v = row[static_cast<std::size_t>(c) - 1];
      if (v.is_null()) {
        if (shape.contains(r, c)) throw ParseError("null entry inside the shape");
        continue;
      }
      if (!v.is_number_integer()) throw ParseError("entries must be integers or null");
      if (!shape.contains(r, c)) throw ParseError("entry outside the shape");
      items.emplace_back(Cell{r, c}, v.get<int>());
    }
  }
  Filling f = Filling::from_pairs(std::move(items));
  if (f.size() != static_cast<std::size_t>(shape.num_cells())) {
    throw ParseError("missing entries for some cells of the shape");
  }
  return f;
}

json poly_to_json(const SparsePoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json term;
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
      term["c"] = static_cast<long long>(c);
    } else {
      term["c"] = c.str();  // decimal string fallback for huge coefficients
    }
    term["x"] = m.xexp.entries();
    term["t"] = m.texp.entries();
    terms.push_back(std::move(term));
  }
  return json{{"terms", std::move(terms)}};
}

SparsePoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw ParseError("polynomial needs a terms array");
  }
  SparsePoly p;
  for (const auto& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("c")) throw ParseError("term needs a coefficient");
    Int c;
    if (term.at("c").is_number_integer()) {
      c = term.at("c").get<long long>();
    } else if (term.at("c").is_string()) {
      c = Int(term.at("c").get<std::string>());
    } else {
      throw ParseError("coefficient must be an integer or decimal string");
    }
    WeakComposition xe{term.contains("x") ? int_list(term.at("x"), "x") : std::vector<int>{}};
    WeakComposition te{term.contains("t") ? int_list(term.at("t"), "t") : std::vector<int>{}};
    p.add_term({std::move(xe), std::move(te)}, c);
  }
  return p;
}

}  // namespace dualgroth
