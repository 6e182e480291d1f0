#include "plethy/matrix_io.hpp"

#include <sstream>

#include "json.hpp"
#include "plethy/combinatorics.hpp"
#include "plethy/phi.hpp"

namespace plethy {

namespace {

constexpr const char* kFormatTag = "plethy-matrix";

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::vector<std::string> pair_labels(const Space& ambient) {
  std::vector<std::string> out;
  out.reserve(ambient.dim());
  const int d = ambient.factors()[0].degree();
  for (std::size_t idx = 0; idx < ambient.dim(); ++idx) {
    auto label = ambient.label(idx);
    int j = label.back();
    label.pop_back();
    out.push_back(IndexPair{MultiIndex(std::move(label), d), j}.to_string());
  }
  return out;
}

std::vector<std::string> domain_labels(const Space& domain) {
  std::vector<std::string> out;
  out.reserve(domain.dim());
  for (std::size_t idx = 0; idx < domain.dim(); ++idx) out.push_back(domain_label(domain, idx).to_string());
  return out;
}

std::string to_csv(const LabelledMatrix& m) {
  std::ostringstream os;
  os << quote("label");
  for (const auto& c : m.col_labels) os << ',' << quote(c);
  os << '\n';
  std::vector<std::vector<std::string>> dense(m.row_labels.size(), std::vector<std::string>(m.col_labels.size(), "0"));
  for (std::size_t c = 0; c < m.columns.size(); ++c)
    for (const auto& [r, v] : m.columns[c]) dense.at(r).at(c) = v;
  for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
    os << quote(m.row_labels[r]);
    for (const auto& v : dense[r]) os << ',' << quote(v);
    os << '\n';
  }
  return os.str();
}

std::string to_json(const LabelledMatrix& m) {
  using nlohmann::json;
  json cols = json::array();
  for (const auto& col : m.columns) {
    json c = json::array();
    for (const auto& [r, v] : col) c.push_back(json::array({r, v}));
    cols.push_back(std::move(c));
  }
  json doc{{"format", kFormatTag},  {"name", m.name},           {"ring", m.ring},
           {"rows", m.row_labels.size()}, {"cols", m.col_labels.size()}, {"row_labels", m.row_labels},
           {"col_labels", m.col_labels},  {"columns", std::move(cols)}};
  return doc.dump(1) + "\n";
}

LabelledMatrix matrix_from_json(const std::string& text) {
  using nlohmann::json;
  try {
    json doc = json::parse(text);
    if (doc.at("format") != kFormatTag) throw InvalidArgument("not a plethy matrix file");
    LabelledMatrix m;
    m.name = doc.at("name").get<std::string>();
    m.ring = doc.at("ring").get<std::string>();
    m.row_labels = doc.at("row_labels").get<std::vector<std::string>>();
    m.col_labels = doc.at("col_labels").get<std::vector<std::string>>();
    for (const auto& col : doc.at("columns")) {
      LabelledMatrix::Column c;
      for (const auto& e : col) {
        auto r = e.at(0).get<std::size_t>();
        if (r >= m.row_labels.size()) throw InvalidArgument("row index out of range");
        c.emplace_back(r, e.at(1).get<std::string>());
      }
      m.columns.push_back(std::move(c));
    }
    if (m.columns.size() != m.col_labels.size()) throw InvalidArgument("column count does not match labels");
    return m;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed matrix file: ") + e.what());
  }
}

}  // namespace plethy
