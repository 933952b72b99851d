#pragma once

#include <stdexcept>
#include <string>

namespace gnarsil {

/* Error taxonomy shared by the library and the command-line tool.
   Each class maps to one process exit code (see tools/gnarsil_main.cpp):
     parse_error               -> 2  (malformed input text / bad arguments)
     split_fail                -> 3  (gauge search exhausted every weight)
     resource_error            -> 4  (scan size above the configured budget)
     ring_orthogonality_error  -> 5  (ring construction inputs incompatible)
   Validation failures (e.g. non-commuting CSS checks) use validation_error
   and exit 1, the same code as a failed verify run. */

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

class split_fail : public std::runtime_error {
public:
    explicit split_fail(const std::string& what) : std::runtime_error(what) {}
};

class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

class ring_orthogonality_error : public std::runtime_error {
public:
    explicit ring_orthogonality_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gnarsil
