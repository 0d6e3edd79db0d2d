#include "fracsym/report.hpp"

namespace fracsym {

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 15];
        v >>= 4;
    }
    return s;
}

RunReport make_report(const std::string& command, const std::string& digest_payload) {
    RunReport r;
    r.add("tool", std::string(kToolVersion));
    r.add("command", command);
    r.add("inputs-digest", hex64(fnv1a64(command + "\n" + digest_payload)));
    return r;
}

}  // namespace fracsym
