#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "plethy/sparse.hpp"

namespace plethy {

/// A sparse matrix with its basis labels and exact entries rendered as text,
/// the form in which matrices are written to disk.
struct LabelledMatrix {
  using Column = std::vector<std::pair<std::size_t, std::string>>;

  std::string name;
  std::string ring;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<Column> columns;

  friend bool operator==(const LabelledMatrix&, const LabelledMatrix&) = default;
};

template <class E>
LabelledMatrix labelled(std::string name, std::string ring, const LinearMap<E>& m, std::vector<std::string> rows,
                        std::vector<std::string> cols) {
  if (rows.size() != m.rows() || cols.size() != m.cols()) throw InvalidArgument("label count does not match matrix shape");
  LabelledMatrix out{std::move(name), std::move(ring), std::move(rows), std::move(cols), {}};
  out.columns.reserve(m.cols());
  for (const auto& col : m.columns()) {
    LabelledMatrix::Column c;
    c.reserve(col.size());
    for (const auto& [r, v] : col) c.emplace_back(r, to_string(v));
    out.columns.push_back(std::move(c));
  }
  return out;
}

/// Labels of the basis of the Delta ambient space, "((i_1,...,i_N),j)".
std::vector<std::string> pair_labels(const Space& ambient);
/// Labels of the phi domain basis, "(s,(k_1,...,k_{N+1}))".
std::vector<std::string> domain_labels(const Space& domain);

/// Dense CSV: a header "label" followed by the column labels, then one row per
/// row label. Every field is quoted; zero entries are written as 0. A matrix
/// with no columns and no rows is the header line alone.
std::string to_csv(const LabelledMatrix& m);

/// {"format": "plethy-matrix", "name", "ring", "row_labels", "col_labels",
///  "columns": [[[row, "value"], ...], ...]}
std::string to_json(const LabelledMatrix& m);
/// Inverse of to_json. Throws InvalidArgument on malformed input.
LabelledMatrix matrix_from_json(const std::string& text);

}  // namespace plethy
