#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hc/serialize.hpp"

#ifndef HC_GOLDEN_DIR
#define HC_GOLDEN_DIR "tests/golden"
#endif

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE_MESSAGE(is.good(), "missing golden file ", path);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("classification reports match the committed goldens") {
    for (int n = 1; n <= 4; ++n) {
        for (std::uint32_t p : {0u, 3u, 5u, 7u}) {
            std::string path = std::string(HC_GOLDEN_DIR) + "/classification_n" +
                               std::to_string(n) + "_p" + std::to_string(p) +
                               ".json";
            hc::Report rep = hc::verify_classification(n, p);
            CHECK_MESSAGE(hc::report_to_json(rep) == slurp(path), path);
        }
    }
}
