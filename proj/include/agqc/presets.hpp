#pragma once

#include <string>
#include <vector>

#include "agqc/aut.hpp"

namespace agqc {

/// A ready-made curve + automorphism instance with recorded expected values.
struct ReproPreset {
    std::string id;
    std::string title;
    KummerCurve curve;
    Automorphism sigma;
};

std::vector<std::string> preset_ids();
ReproPreset make_preset(const std::string& id);  // invalid_argument on unknown id

struct ReproResult {
    bool pass = true;
    std::vector<std::string> lines;  // one "ok/FAIL what: expected vs got" per check
};

/// Recomputes the preset's instance and compares against its recorded values.
ReproResult run_reproduction(const std::string& id);

}  // namespace agqc
