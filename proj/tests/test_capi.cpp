#include <cstring>
#include <string>

#include "doctest.h"
#include "walkclass/walkclass.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  wc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse, classify and report through the C interface") {
  wc_model* m = nullptr;
  REQUIRE(wc_model_parse(R"({"d-1,0":"1/3","d0,-1":"1/3","d1,1":"1/3"})", &m) == WC_OK);
  char* canon = nullptr;
  REQUIRE(wc_model_canonical_json(m, &canon) == WC_OK);
  CHECK(take(canon).find("\"d1,1\":\"1/3\"") != std::string::npos);

  wc_options opts;
  wc_options_default(&opts);
  CHECK(opts.cap == 24);
  wc_report* r = nullptr;
  REQUIRE(wc_classify(m, "1/2", &opts, &r) == WC_OK);
  CHECK(wc_report_verdict(r) == WC_VERDICT_ALGEBRAIC);
  CHECK(wc_report_criterion(r) == 0);
  char* json = nullptr;
  REQUIRE(wc_report_json(r, &json) == WC_OK);
  CHECK(take(json).find("\"kind\": \"Algebraic\"") != std::string::npos);
  char* text = nullptr;
  REQUIRE(wc_report_text(r, &text) == WC_OK);
  CHECK(take(text).find("Algebraic") != std::string::npos);
  wc_report_free(r);

  char* out = nullptr;
  REQUIRE(wc_uniformize_json(m, "1/2", &out) == WC_OK);
  CHECK(take(out).find("\"tau_order\": 3") != std::string::npos);
  REQUIRE(wc_series_json(m, "1/2", 6, &out) == WC_OK);
  CHECK(take(out).find("\"2/27\"") != std::string::npos);
  REQUIRE(wc_orbit_sum_json(m, nullptr, nullptr, &out) == WC_OK);
  CHECK(take(out).find("\"Zero\"") != std::string::npos);
  REQUIRE(wc_critical_t_json(m, &out) == WC_OK);
  wc_string_free(out);
  wc_model_free(m);
}

TEST_CASE("errors map to status codes") {
  wc_model* m = nullptr;
  CHECK(wc_model_parse(R"({"d1,0":"-1/2"})", &m) == WC_ERR_NEGATIVE_WEIGHT);
  CHECK(std::strstr(wc_last_error(), "NegativeWeight") != nullptr);
  CHECK(wc_model_parse(R"({"d1,0":"x"})", &m) == WC_ERR_MALFORMED_RATIONAL);
  CHECK(wc_model_parse(R"({"q":1})", &m) == WC_ERR_MALFORMED_MODEL);
  CHECK(wc_model_parse(nullptr, &m) == WC_ERR_INVALID_ARGUMENT);
  CHECK(wc_model_load("/nonexistent/model.json", &m) == WC_ERR_IO);

  REQUIRE(wc_model_parse(R"({"d1,0":1,"d0,1":1,"d-1,0":1,"d0,-1":1})", &m) == WC_OK);
  wc_report* r = nullptr;
  CHECK(wc_classify(m, "3/2", nullptr, &r) == WC_ERR_INVALID_ARGUMENT);
  CHECK(wc_classify(m, "1/0", nullptr, &r) == WC_ERR_MALFORMED_RATIONAL);
  CHECK(r == nullptr);
  CHECK(std::string(wc_status_string(WC_ERR_IO)) == "i/o failure");
  REQUIRE(wc_classify(m, "1/2", nullptr, &r) == WC_OK);
  CHECK(wc_report_verdict(r) == WC_VERDICT_HOLONOMIC_NOT_ALGEBRAIC);
  CHECK(std::string(wc_last_error()).empty());
  wc_report_free(r);
  wc_model_free(m);
}
