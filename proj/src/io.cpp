#include "torusinv/io.hpp"

#include <stdexcept>

namespace torusinv {

std::string label_to_string(const WeylClassLabel& label) {
  std::string s;
  for (size_t i = 0; i < label.positive_parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(label.positive_parts[i]);
  }
  for (int part : label.negative_parts) {
    s += '-';
    s += std::to_string(part);
  }
  if (label.exceptional) s += 'x';
  return s;
}

WeylClassLabel label_from_string(const std::string& s) {
  WeylClassLabel label;
  size_t i = 0;
  if (s.empty()) throw std::invalid_argument("empty class label");
  std::string body = s;
  if (body.back() == 'x') {
    label.exceptional = true;
    body.pop_back();
  }
  bool negative = false;
  bool expect_part = true;
  while (i < body.size()) {
    char c = body[i];
    if (c == '+') {
      if (negative || expect_part) throw std::invalid_argument("malformed class label: " + s);
      expect_part = true;
      ++i;
      continue;
    }
    if (c == '-') {
      if (expect_part && !(negative == false && label.positive_parts.empty() && i == 0))
        throw std::invalid_argument("malformed class label: " + s);
      negative = true;
      expect_part = true;
      ++i;
      continue;
    }
    if (!isdigit((unsigned char)c) || !expect_part)
      throw std::invalid_argument("malformed class label: " + s);
    size_t start = i;
    while (i < body.size() && isdigit((unsigned char)body[i])) ++i;
    int part = std::stoi(body.substr(start, i - start));
    if (part <= 0) throw std::invalid_argument("malformed class label: " + s);
    (negative ? label.negative_parts : label.positive_parts).push_back(part);
    expect_part = false;
  }
  if (expect_part) throw std::invalid_argument("malformed class label: " + s);
  return label;
}

}  // namespace torusinv
