#include <doctest.h>
TEST_SUITE_BEGIN("constructions");
TEST_SUITE_END();
