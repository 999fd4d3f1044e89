#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <string>

#include "orbit_euler.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  oe_string_free(s);
  return out;
}

struct Group {
  oe_group* g = nullptr;
  explicit Group(const char* spec) { REQUIRE(oe_group_create(spec, 0, &g) == OE_OK); }
  ~Group() { oe_group_destroy(g); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(oe_version()).size() > 0);
  CHECK(std::string(oe_status_name(OE_OK)) == "Ok");
  CHECK(std::string(oe_status_name(OE_CAP_EXCEEDED)) != "Unknown");
  CHECK(std::string(oe_status_name(static_cast<oe_status>(77))) == "Unknown");
  CHECK(oe_default_cap() == 4096);
}

TEST_CASE("group handles") {
  Group s4("S4");
  CHECK(oe_group_order(s4.g) == 24);
  CHECK(std::string(oe_group_spec(s4.g)) == "S4");
  uint32_t x = 99;
  CHECK(oe_group_multiply(s4.g, 0, 5, &x) == OE_OK);
  CHECK(x == 5);
  CHECK(oe_group_element_order(s4.g, 0, &x) == OE_OK);
  CHECK(x == 1);
  CHECK(oe_group_multiply(s4.g, 24, 0, &x) == OE_INVALID_ARGUMENT);
  CHECK(std::string(oe_last_error()).find("range") != std::string::npos);
  CHECK(oe_group_order(nullptr) == 0);
}

TEST_CASE("creation errors") {
  oe_group* g = reinterpret_cast<oe_group*>(0x1);
  CHECK(oe_group_create("Q8", 0, &g) == OE_PARSE_ERROR);
  CHECK(g == nullptr);
  CHECK(oe_group_create("S5", 100, &g) == OE_CAP_EXCEEDED);
  CHECK(oe_group_create(nullptr, 0, &g) == OE_NULL_ARGUMENT);
  CHECK(oe_group_create("S4", 0, nullptr) == OE_NULL_ARGUMENT);
  oe_group_destroy(nullptr);
}

TEST_CASE("counts") {
  Group s5("S5");
  for (auto m : {OE_COUNT_BRUTE, OE_COUNT_CYCLIC, OE_COUNT_EULER}) {
    uint64_t n = 0;
    CHECK(oe_count_p_singular(s5.g, 2, m, &n) == OE_OK);
    CHECK(n == 56);
  }
  uint64_t classes = 0;
  CHECK(oe_count_p_singular_classes(s5.g, 2, &classes) == OE_OK);
  CHECK(classes == 4);  // e, (12), (12)(34), (1234)
  uint64_t n = 0;
  CHECK(oe_count_p_singular_symmetric(5, 2, &n) == OE_OK);
  CHECK(n == 56);
  CHECK(oe_count_p_singular_classes(s5.g, 4, &classes) == OE_INVALID_ARGUMENT);
}

TEST_CASE("report through the C API") {
  Group s4("S4");
  char* out = nullptr;
  int passed = 0;
  REQUIRE(oe_report(s4.g, 2, OE_FORMAT_JSON, &out, &passed) == OE_OK);
  const auto doc = nlohmann::json::parse(take(out));
  CHECK(passed == 1);
  CHECK(doc["counts"]["brute"] == 16);
  CHECK(doc["modified_tom"] == nlohmann::json::parse("[[1,0],[3,1]]"));
}

TEST_CASE("verify through the C API") {
  Group s5("S5");
  char* detail = nullptr;
  int passed = -1;
  REQUIRE(oe_verify_group(s5.g, 2, OE_CHECK_DEFAULT | OE_CHECK_STEINBERG, &passed, &detail) == OE_OK);
  CHECK(passed == 0);
  const auto doc = nlohmann::json::parse(take(detail));
  CHECK(doc["checks"]["steinberg"]["passed"] == false);
  CHECK(doc["checks"]["frobenius"]["passed"] == true);
  CHECK(doc["checks"]["chiOG"]["passed"] == true);

  REQUIRE(oe_verify_group(s5.g, 2, OE_CHECK_DEFAULT, &passed, nullptr) == OE_OK);
  CHECK(passed == 1);
}

TEST_CASE("Lie verification through the C API") {
  Group k("GL(3,2)");
  char* out = nullptr;
  int passed = 0;
  REQUIRE(oe_verify_lie(k.g, 2, OE_FORMAT_TEXT, &out, &passed) == OE_OK);
  CHECK(take(out).find("gen_steinberg: pass") != std::string::npos);
  CHECK(passed == 1);
  Group s4("S4");
  CHECK(oe_verify_lie(s4.g, 2, OE_FORMAT_TEXT, &out, &passed) == OE_NOT_LIE_CATALOG);
  CHECK(out == nullptr);
}

TEST_CASE("identities through the C API") {
  char* out = nullptr;
  int passed = 0;
  REQUIRE(oe_qidentity(OE_QID_A, 5, 0, OE_FORMAT_TEXT, &out, &passed) == OE_OK);
  CHECK(take(out) == "A m=5: pass\n");
  CHECK(passed == 1);
  REQUIRE(oe_qidentity(OE_QID_2A_ODD, 3, 0, OE_FORMAT_JSON, &out, &passed) == OE_OK);
  CHECK(nlohmann::json::parse(take(out))["passed"] == true);
  CHECK(oe_qidentity(OE_QID_B, 1, 0, OE_FORMAT_TEXT, &out, &passed) == OE_INVALID_ARGUMENT);
  REQUIRE(oe_egf_p_singular(5, 2, &out) == OE_OK);
  CHECK(take(out) == "56");
  REQUIRE(oe_cross_char_class_count(2, 3, 2, &out) == OE_OK);
  CHECK(take(out) == "6");
  CHECK(oe_cross_char_class_count(2, 4, 2, &out) == OE_P_DIVIDES_Q);
}

TEST_CASE("catalog through the C API") {
  CHECK(oe_catalog_size() > 50);
  CHECK(oe_catalog_entry(oe_catalog_size()) == nullptr);
  uint64_t order = 0;
  CHECK(oe_catalog_order("GL(3,2)", &order) == OE_OK);
  CHECK(order == 168);
  CHECK(oe_catalog_order("nonsense", &order) == OE_PARSE_ERROR);
}
