#include "centracover/io.hpp"

#include <fstream>

namespace centracover {

namespace {

using nlohmann::json;

std::string get_name(const json& doc) {
  if (doc.contains("name") && doc["name"].is_string()) {
    return doc["name"].get<std::string>();
  }
  return "unnamed";
}

}  // namespace

Group load_cayley_table(const json& doc) {
  if (!doc.is_object() || !doc.contains("table")) {
    throw Error(Error::Code::BadFormat, "expected an object with a \"table\" key");
  }
  if (!doc["table"].is_array()) {
    throw Error(Error::Code::BadFormat, "\"table\" must be an array of rows");
  }
  std::vector<std::vector<int>> table;
  for (const auto& row : doc["table"]) {
    if (!row.is_array()) {
      throw Error(Error::Code::BadFormat, "table rows must be arrays");
    }
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw Error(Error::Code::BadFormat, "table entries must be integers");
      }
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  if (doc.contains("order") &&
      doc["order"].get<std::size_t>() != table.size()) {
    throw Error(Error::Code::BadFormat,
                "\"order\" does not match the table size");
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    for (const auto& l : doc["labels"]) labels.push_back(l.get<std::string>());
  }
  return Group::from_table(get_name(doc), std::move(table), std::move(labels),
                           "cayley-file");
}

Group load_permutation_group(const json& doc, int closure_cap) {
  if (!doc.is_object() || !doc.contains("generators") || !doc.contains("degree")) {
    throw Error(Error::Code::BadFormat,
                "expected an object with \"degree\" and \"generators\" keys");
  }
  if (!doc["degree"].is_number_integer()) {
    throw Error(Error::Code::BadFormat, "\"degree\" must be an integer");
  }
  const int degree = doc["degree"].get<int>();
  std::vector<std::vector<int>> gens;
  for (const auto& gen : doc["generators"]) {
    std::vector<int> images;
    for (const auto& v : gen) images.push_back(v.get<int>());
    gens.push_back(std::move(images));
  }
  return Group::from_generators(get_name(doc), degree, gens, closure_cap);
}

Group load_group_document(const json& doc, int closure_cap) {
  if (doc.is_object() && doc.contains("table")) return load_cayley_table(doc);
  if (doc.is_object() && doc.contains("generators")) {
    return load_permutation_group(doc, closure_cap);
  }
  throw Error(Error::Code::BadFormat,
              "document has neither \"table\" nor \"generators\"");
}

Group load_group_file(const std::string& path, int closure_cap) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Error::Code::BadFormat, "cannot open " + path);
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(Error::Code::BadFormat,
                path + ": JSON parse error: " + e.what());
  }
  return load_group_document(doc, closure_cap);
}

nlohmann::ordered_json cayley_json(const Group& g) {
  nlohmann::ordered_json doc;
  doc["name"] = g.name();
  doc["order"] = g.order();
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (int i = 0; i < g.order(); ++i) labels.push_back(g.label(i));
  doc["labels"] = std::move(labels);
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (int i = 0; i < g.order(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < g.order(); ++j) row.push_back(g.at(i, j));
    table.push_back(std::move(row));
  }
  doc["table"] = std::move(table);
  return doc;
}

}  // namespace centracover
