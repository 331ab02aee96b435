#include "realizability/report.hpp"

namespace realizability {

std::string describe(const TrackerReport& report) {
    std::string out = to_string(report.verdict.verdict());
    for (const Obligation& o : report.obligations) {
        if (o.verdict.is_holds()) continue;
        out += "; ";
        out += o.subject;
        out += ": ";
        out += to_string(o.verdict.verdict());
        if (!o.detail.empty()) {
            out += " (" + o.detail + ")";
        }
    }
    return out;
}

}  // namespace realizability
