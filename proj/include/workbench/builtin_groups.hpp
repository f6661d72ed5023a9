#pragma once

#include <string>
#include <vector>

#include "workbench/perm_group.hpp"

namespace wb {

// Builtin names: d8, d16, sd16, d<2m>, s<n>, a<n>, c<n>, psl27, pgl27,
// psl2q(<q>), pgl2q(<q>) for prime powers q <= 11, and direct products
// joined by 'x' such as "c2xs3".
PermGroup builtin_group(const std::string& name);
bool is_builtin_name(const std::string& name);
// The builtins exercised by the test suites.
const std::vector<std::string>& standard_builtins();
// A builtin name, or else a path to a generator file.
PermGroup load_group(const std::string& source);

}  // namespace wb
