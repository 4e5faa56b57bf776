#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "torusinv/io.hpp"
#include "torusinv/stdecomp.hpp"
#include "torusinv/verify.hpp"

using namespace torusinv;
using json = nlohmann::json;

TEST_CASE("label serialization") {
  CHECK(label_to_string(WeylClassLabel{{3, 2}, {1}, false}) == "3+2-1");
  CHECK(label_to_string(WeylClassLabel{{1, 1}, {}, false}) == "1+1");
  CHECK(label_to_string(WeylClassLabel{{}, {1, 1}, false}) == "-1-1");
  CHECK(label_to_string(WeylClassLabel{{2, 2}, {}, true}) == "2+2x");
}

TEST_CASE("label parsing") {
  WeylClassLabel l = label_from_string("3+2-1");
  CHECK(l.positive_parts == std::vector<int>{3, 2});
  CHECK(l.negative_parts == std::vector<int>{1});
  CHECK_FALSE(l.exceptional);
  CHECK(label_from_string("2+2x").exceptional);
  CHECK(label_from_string("-1-1").positive_parts.empty());
  CHECK(label_from_string("-1-1").negative_parts == std::vector<int>{1, 1});
  for (const char* bad : {"", "x", "1+", "+1", "1-", "1++1", "1--", "a", "1+0"})
    CHECK_THROWS_AS(label_from_string(bad), std::invalid_argument);
}

TEST_CASE("labels round trip for every class") {
  for (int n = 1; n <= 5; ++n) {
    for (long long q : {2LL, 3LL}) {
      for (const GroupSpec& spec : specs_for(n, q)) {
        for (const auto& label : enumerate_classes(spec)) {
          CHECK(label_from_string(label_to_string(label)) == label);
        }
      }
    }
  }
}

TEST_CASE("rationals survive a json round trip as integer pairs") {
  Rational r(-7, 12);
  json doc;
  std::ostringstream num, den;
  num << boost::multiprecision::numerator(r);
  den << boost::multiprecision::denominator(r);
  doc["num"] = num.str();
  doc["den"] = den.str();
  json parsed = json::parse(doc.dump());
  CHECK(parsed == doc);
  Rational back(boost::multiprecision::cpp_int(parsed["num"].get<std::string>()),
                boost::multiprecision::cpp_int(parsed["den"].get<std::string>()));
  CHECK(back == r);
}

TEST_CASE("verify cells serialize deterministically") {
  VerifyReport report = verify_theorem("pp3", 2, {2, 3});
  CHECK(report.all_pass());
  json doc = json::array();
  for (const auto& c : report.cells)
    doc.push_back({{"key", c.key}, {"expected", c.expected}, {"actual", c.actual}});
  json parsed = json::parse(doc.dump());
  CHECK(parsed == doc);
  // Sorted by key.
  for (size_t i = 1; i < report.cells.size(); ++i)
    CHECK(report.cells[i - 1].key <= report.cells[i].key);
}
