#pragma once

#include <string>

#include "padic/test_function.hpp"

namespace padic {

// Interchange format:
//   {"p":2,"n":1,"l":-1,"N":1,"coeffs":[{"m":[1],"re":1.0,"im":0.0},...]}
// The writer emits index tuples sorted lexicographically and omits zeros.
std::string test_function_to_json(const TestFunction& phi);
TestFunction test_function_from_json(const std::string& text);

TestFunction read_test_function_file(const std::string& path);
void write_test_function_file(const std::string& path, const TestFunction& phi);

}  // namespace padic
