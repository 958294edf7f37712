#pragma once

#include <string>
#include <vector>

namespace armload {

enum class Method { kBkp, kLbp, kHc, kMc };

const char* method_name(Method m);
Method parse_method(const std::string& name);  // "bkp" | "lbp" | "hc" | "mc"

// Fixed-length descriptor plus the extraction method that produced it.
struct FeatureVector {
    Method method = Method::kLbp;
    std::vector<double> values;
};

}  // namespace armload
