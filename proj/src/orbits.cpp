#include "fracsym/orbits.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "fracsym/tensor_codes.hpp"

namespace fracsym {

uint64_t OrbitCensus::irreducible_class_count() const {
    uint64_t n = 0;
    for (const OrbitInfo& o : orbits) n += o.irreducible ? 1 : 0;
    return n;
}

std::vector<uint64_t> OrbitCensus::orbit_sizes() const {
    std::vector<uint64_t> out;
    out.reserve(orbits.size());
    for (const OrbitInfo& o : orbits) out.push_back(o.size);
    return out;
}

namespace {

struct Bitmap {
    std::vector<uint64_t> w;
    explicit Bitmap(uint64_t bits) : w((bits + 63) / 64, 0) {}
    bool test_set(uint64_t i) {
        uint64_t m = 1ull << (i & 63);
        uint64_t old = w[i >> 6];
        w[i >> 6] |= m;
        return old & m;
    }
    bool test_set_atomic(uint64_t i) {
        uint64_t m = 1ull << (i & 63);
        std::atomic_ref<uint64_t> a(w[i >> 6]);
        return a.fetch_or(m, std::memory_order_relaxed) & m;
    }
};

std::vector<CodeMap> build_generators(const CodeDims& dims, bool color_permutations) {
    std::vector<CodeMap> gens;
    for (int index = 0; index < 3; ++index)
        for (const BitMatrix& g : gl_generators(dims.da))
            gens.push_back(code_map_for_matrix(dims, g, index));
    if (color_permutations) {
        gens.push_back(code_map_swap_ab(dims));
        gens.push_back(code_map_cycle_abc(dims));
    }
    return gens;
}

// Explore one orbit serially from a claimed seed.
OrbitInfo explore_serial(const CodeDims& dims, const std::vector<CodeMap>& gens, Bitmap& visited,
                         uint32_t seed, std::vector<uint32_t>& stack,
                         std::vector<int32_t>* orbit_id, int32_t id) {
    uint64_t size = 0;
    bool any_decomposable = false;
    stack.clear();
    stack.push_back(seed);
    while (!stack.empty()) {
        uint32_t c = stack.back();
        stack.pop_back();
        ++size;
        any_decomposable |= decomposable_code(dims, c);
        if (orbit_id) (*orbit_id)[c] = id;
        for (const CodeMap& g : gens) {
            uint32_t c2 = g.apply(c);
            if (!visited.test_set(c2)) stack.push_back(c2);
        }
    }
    return OrbitInfo{seed, size, !any_decomposable && seed != 0};
}

// Level-synchronous parallel orbit walk; membership and flags do not
// depend on scheduling because codes are claimed atomically exactly once.
OrbitInfo explore_parallel(const CodeDims& dims, const std::vector<CodeMap>& gens,
                           Bitmap& visited, uint32_t seed, int threads) {
    uint64_t size = 1;
    std::atomic<bool> any_decomposable{decomposable_code(dims, seed)};
    std::vector<uint32_t> frontier{seed};
    while (!frontier.empty()) {
        std::vector<std::vector<uint32_t>> nexts(threads);
        std::atomic<uint64_t> claimed{0};
        auto work = [&](int tid) {
            bool local_decomp = false;
            uint64_t local_claimed = 0;
            auto& next = nexts[tid];
            for (size_t i = tid; i < frontier.size(); i += threads) {
                uint32_t c = frontier[i];
                for (const CodeMap& g : gens) {
                    uint32_t c2 = g.apply(c);
                    if (visited.test_set_atomic(c2)) continue;
                    ++local_claimed;
                    local_decomp |= decomposable_code(dims, c2);
                    next.push_back(c2);
                }
            }
            claimed += local_claimed;
            if (local_decomp) any_decomposable = true;
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(work, t);
        work(0);
        for (auto& th : pool) th.join();
        size += claimed;
        std::vector<uint32_t> merged;
        for (auto& n : nexts) merged.insert(merged.end(), n.begin(), n.end());
        frontier = std::move(merged);
    }
    return OrbitInfo{seed, size, !any_decomposable && seed != 0};
}

}  // namespace

OrbitCensus classify_orbits(int m, bool color_permutations, int threads) {
    if (m < 1 || m > 3)
        throw std::invalid_argument("classify_orbits: m <= 3 (resource guard)");
    if (threads < 1) threads = 1;
    CodeDims dims{m, m, m};
    OrbitCensus census;
    census.m = m;
    census.color_permutations = color_permutations;
    census.code_count = dims.count();

    std::vector<CodeMap> gens = build_generators(dims, color_permutations);
    Bitmap visited(census.code_count);
    if (m <= 2 && threads <= 1) census.orbit_id.assign(census.code_count, -1);
    std::vector<uint32_t> stack;
    for (uint64_t seed = 0; seed < census.code_count; ++seed) {
        if (visited.test_set(seed)) continue;
        uint32_t s = static_cast<uint32_t>(seed);
        int32_t id = static_cast<int32_t>(census.orbits.size());
        OrbitInfo info =
            threads > 1
                ? explore_parallel(dims, gens, visited, s, threads)
                : explore_serial(dims, gens, visited, s, stack,
                                 census.orbit_id.empty() ? nullptr : &census.orbit_id, id);
        census.orbits.push_back(info);
    }
    return census;
}

}  // namespace fracsym
