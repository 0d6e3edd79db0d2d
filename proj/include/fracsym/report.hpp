#pragma once

// Deterministic run reports: ordered key/value lines, byte-identical for
// identical inputs and seed. Timings go to stderr, never into the report.

#include <cstdint>
#include <string>
#include <vector>

namespace fracsym {

inline constexpr const char* kToolVersion = "fracsym 0.1.0";
inline constexpr uint64_t kDefaultSeed = 0x5eed;

struct RunReport {
    std::vector<std::pair<std::string, std::string>> fields;
    int verdict_failures = 0;

    void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
    void add(const std::string& key, uint64_t value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add_bool(const std::string& key, bool v) { add(key, std::string(v ? "true" : "false")); }
    // Verdicts drive the exit status: 0 iff every verdict is positive.
    void add_verdict(const std::string& key, bool ok) {
        add_bool(key, ok);
        if (!ok) ++verdict_failures;
    }
    int exit_code() const { return verdict_failures ? 1 : 0; }
    std::string to_text() const {
        std::string out;
        for (auto& [k, v] : fields) out += k + " " + v + "\n";
        return out;
    }
};

uint64_t fnv1a64(const std::string& data);
std::string hex64(uint64_t v);

// Report skeleton: tool version, command name, input digest.
RunReport make_report(const std::string& command, const std::string& digest_payload);

}  // namespace fracsym
