#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ppcan/perm_group.hpp"

namespace ppcan {

/// Permutation of {0..degree-1} from 1-based cycle notation, e.g. "(1 2 3)(4 5)".
Perm parse_cycles(int degree, const std::string& cycles);

/// Built-in groups: trivial, C2, C3, C4, C2xC2, C6, S3, D8, Q8, A4, SL23, S4, C3xC3.
GroupPtr named_group(const std::string& name, int max_order = 512);
const std::vector<std::string>& named_group_names();

/// {"degree": n, "generators": [[1-based images], ...], "name": optional}
GroupPtr group_from_json(const nlohmann::json& doc, int max_order = 512);
nlohmann::json group_to_json(const Group& g);

}  // namespace ppcan
