#pragma once

#include "fixloc/dataset_io.hpp"

#include <optional>
#include <string>

namespace fixloc {

enum class Verdict { Verified, Refuted, Inapplicable };

const char* to_string(Verdict v);

// Outcome of one theorem check. Witness and window payloads carry exact
// numbers (JSON integers, or strings past 64 bits; rationals as "p/q").
struct VerificationReport {
    std::string theorem;
    std::string dataset;
    Verdict verdict = Verdict::Inapplicable;
    Json witnesses = Json::object();
    Json window = nullptr;
    std::optional<double> elapsed_ms;
    std::string summary;
};

// Keys in order: theorem, dataset, verdict, witnesses, window, elapsed_ms.
Json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

} // namespace fixloc
