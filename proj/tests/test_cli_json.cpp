#include "doctest.h"
TEST_CASE("placeholder_cli_json") { CHECK(true); }
