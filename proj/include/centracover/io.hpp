#pragma once

#include <string>

#include <json.hpp>

#include "centracover/group.hpp"

namespace centracover {

/// Cayley document: {"name": str, "order": n, "labels": [n str],
/// "table": [[n x n 0-based indices]]}. Labels may be omitted.
Group load_cayley_table(const nlohmann::json& doc);

/// Permutation document: {"name": str, "degree": d,
/// "generators": [[d 0-based images], ...]}.
Group load_permutation_group(const nlohmann::json& doc,
                             int closure_cap = kDefaultClosureCap);

/// Dispatches on the presence of "table" vs "generators".
Group load_group_document(const nlohmann::json& doc,
                          int closure_cap = kDefaultClosureCap);

/// Reads and parses a JSON file; throws BadFormat on missing or
/// unparseable input.
Group load_group_file(const std::string& path,
                      int closure_cap = kDefaultClosureCap);

/// Emits the Cayley document for a group; round-trips through
/// load_cayley_table.
nlohmann::ordered_json cayley_json(const Group& g);

}  // namespace centracover
