#pragma once

#include <string>

#include "torusinv/weyl.hpp"

// Serialization of class labels: positive parts joined by '+', negative
// parts each appended as "-part", exceptional variant suffixed "x".
// Examples: "1+1", "3+2-1", "-2-1", "2+2x".

namespace torusinv {

std::string label_to_string(const WeylClassLabel& label);
WeylClassLabel label_from_string(const std::string& s);

}  // namespace torusinv
