#include "fixloc/report.hpp"

#include <sstream>

namespace fixloc {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Verified:
        return "Verified";
    case Verdict::Refuted:
        return "Refuted";
    case Verdict::Inapplicable:
        return "Inapplicable";
    }
    return "?";
}

Json to_json(const VerificationReport& report) {
    Json j;
    j["theorem"] = report.theorem;
    j["dataset"] = report.dataset;
    j["verdict"] = to_string(report.verdict);
    j["witnesses"] = report.witnesses;
    j["window"] = report.window;
    if (report.elapsed_ms)
        j["elapsed_ms"] = *report.elapsed_ms;
    else
        j["elapsed_ms"] = nullptr;
    return j;
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "[" << to_string(report.verdict) << "] " << report.theorem;
    if (!report.dataset.empty())
        os << " on " << report.dataset;
    if (report.elapsed_ms)
        os << " (" << *report.elapsed_ms << " ms)";
    os << "\n";
    std::istringstream lines(report.summary);
    std::string line;
    while (std::getline(lines, line))
        os << "  " << line << "\n";
    return os.str();
}

} // namespace fixloc
