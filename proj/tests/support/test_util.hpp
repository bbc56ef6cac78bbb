#ifndef RDES_TESTS_TEST_UTIL_HPP_
#define RDES_TESTS_TEST_UTIL_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "rdes/model_io.hpp"

namespace rdes::test {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open " << path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string models_dir() { return RDES_MODELS_DIR; }

inline OpenDes load_plant(const std::string& name) {
    return parse_plant(read_file(models_dir() + "/" + name));
}

inline SpecTransducer load_spec(const std::string& name) {
    return parse_spec(read_file(models_dir() + "/" + name));
}

inline InputEvent in_ev(std::initializer_list<Name> names) {
    return InputEvent(std::vector<Name>(names));
}

inline OutputEvent out_ev(std::initializer_list<Name> names) {
    return OutputEvent(std::vector<Name>(names));
}

} // namespace rdes::test

#endif // RDES_TESTS_TEST_UTIL_HPP_
