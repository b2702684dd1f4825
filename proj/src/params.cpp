#include "mtpv/params.hpp"

namespace mtpv {

const char* to_string(ParamGroup g) {
    switch (g) {
    case ParamGroup::Shared: return "shared";
    case ParamGroup::TaskClassification: return "task_classification";
    case ParamGroup::TaskAdr: return "task_adr";
    case ParamGroup::TaskIndication: return "task_indication";
    }
    return "?";
}

ParamGroup param_group_from_string(const std::string& s) {
    if (s == "shared") return ParamGroup::Shared;
    if (s == "task_classification") return ParamGroup::TaskClassification;
    if (s == "task_adr") return ParamGroup::TaskAdr;
    if (s == "task_indication") return ParamGroup::TaskIndication;
    throw ArgumentError("unknown parameter group: " + s);
}

void quantize_to_float(Matrix& m) {
    for (double& v : m.data) v = static_cast<double>(static_cast<float>(v));
}

} // namespace mtpv
