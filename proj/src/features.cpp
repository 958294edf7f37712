#include "armload/features.hpp"

#include "armload/error.hpp"

namespace armload {

const char* method_name(Method m) {
    switch (m) {
        case Method::kBkp: return "bkp";
        case Method::kLbp: return "lbp";
        case Method::kHc: return "hc";
        case Method::kMc: return "mc";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    if (name == "bkp") return Method::kBkp;
    if (name == "lbp") return Method::kLbp;
    if (name == "hc") return Method::kHc;
    if (name == "mc") return Method::kMc;
    throw UsageError("unknown feature method '" + name + "' (expected bkp, lbp, hc or mc)");
}

}  // namespace armload
