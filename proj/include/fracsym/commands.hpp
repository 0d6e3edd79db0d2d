#pragma once

// Command implementations behind the CLI; returned reports are printed
// verbatim by the tool and reused directly by tests.

#include <optional>

#include "fracsym/report.hpp"
#include "fracsym/tensor_io.hpp"

namespace fracsym {

struct SimulateOptions {
    std::string lattice;  // "chain-N" or "WxH"
    std::string task;     // symmetry | reduce | embed | schmidt | sweep
    int m = 1;            // sweep only; other tasks read m from the input
    uint64_t seed = kDefaultSeed;
    bool allow_large = false;
};

RunReport cmd_check(const Document& doc);
RunReport cmd_normal_form(const TensorDocument& doc, const std::string& mode);
RunReport cmd_classify(int m, bool color_permutations, int threads);
RunReport cmd_simulate(const std::optional<Document>& doc, const SimulateOptions& opt);

}  // namespace fracsym
