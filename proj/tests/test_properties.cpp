#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "properties.hpp"

TEST_CASE("property suites over the catalog") {
    for (const auto& s : properties::all_suites()) {
        CAPTURE(s.name);
        for (const auto& f : s.failures) MESSAGE(f);
        CHECK(s.instances >= 5);
        CHECK(s.failures.empty());
    }
}
