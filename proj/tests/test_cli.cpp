#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fracsym/commands.hpp"
#include "fracsym/gf2.hpp"
#include "fracsym/orbits.hpp"

using namespace fracsym;

namespace {

const char* kUnionJackDoc =
    "tensor\n"
    "degree 3\n"
    "m 1\n"
    "entries 1\n"
    "0 0 0\n"
    "end\n";

const char* kTwoDisjointDoc =
    "tensor\n"
    "degree 3\n"
    "m 2\n"
    "entries 2\n"
    "0 0 0\n"
    "1 1 1\n"
    "end\n";

const char* kRank2Doc =
    "tensor\n"
    "degree 2\n"
    "m 3\n"
    "entries 3\n"
    "0 0\n"
    "0 1\n"
    "1 1\n"
    "end\n";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("documents round-trip byte-identically") {
    for (const char* text : {kUnionJackDoc, kTwoDisjointDoc, kRank2Doc}) {
        Document doc = parse_document(text);
        CHECK(serialize_document(doc) == text);
    }
    const char* cochain_text =
        "cochain\n"
        "degree 2\n"
        "m 1\n"
        "form inhomogeneous\n"
        "table 0001\n"
        "end\n";
    Document doc = parse_document(cochain_text);
    CHECK(serialize_document(doc) == cochain_text);
}

TEST_CASE("repository sample documents round-trip byte-identically") {
    for (const char* name :
         {"union_jack_m1.fst", "two_disjoint_m2.fst", "rank2_m3.fst", "cluster_cocycle.fst"}) {
        std::string text = read_file(std::string(FRACSYM_SAMPLES_DIR) + "/" + name);
        Document doc = parse_document(text);
        CHECK(serialize_document(doc) == text);
    }
}

TEST_CASE("random tensors survive the serialize/parse cycle") {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 1 + int(rng() % 3);
        BitTensor3 t(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) t.set(i, j, k, rng() & 1);
        TensorDocument doc = TensorDocument::from_tensor(t);
        Document back = parse_document(doc.serialize());
        CHECK(std::get<TensorDocument>(back).as_tensor() == t);
        CHECK(serialize_document(back) == doc.serialize());
    }
}

TEST_CASE("parse errors name the offending line") {
    try {
        parse_document("tensor\ndegree 3\nm 2\nentries 1\n0 0 7\nend\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 5);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_document(""), ParseError);
    CHECK_THROWS_AS(parse_document("tensor\ndegree 3\nm 2\nentries 2\n1 1 1\n0 0 0\nend\n"),
                    ParseError);  // unsorted entries
    CHECK_THROWS_AS(parse_document("tensor\ndegree 3\nm 2\nentries 1\n0 0 x\nend\n"), ParseError);
}

TEST_CASE("cmd_check: pinned examples") {
    RunReport uj = cmd_check(parse_document(kUnionJackDoc));
    CHECK(uj.exit_code() == 0);
    bool saw_cocycle = false, saw_ml = false;
    for (auto& [k, v] : uj.fields) {
        if (k == "cocycle") { saw_cocycle = true; CHECK(v == "true"); }
        if (k == "multilinear") { saw_ml = true; CHECK(v == "true"); }
    }
    CHECK(saw_cocycle);
    CHECK(saw_ml);

    RunReport trivial = cmd_check(parse_document("tensor\ndegree 3\nm 2\nentries 0\nend\n"));
    CHECK(trivial.exit_code() == 0);

    // A non-multilinear cochain: exit code reflects the failed verdict.
    RunReport bad = cmd_check(
        parse_document("cochain\ndegree 2\nm 1\nform inhomogeneous\ntable 0101\nend\n"));
    CHECK(bad.exit_code() == 1);

    // Homogeneous documents are accepted and converted before checking.
    RunReport hom = cmd_check(
        parse_document("cochain\ndegree 2\nm 1\nform homogeneous\ntable 0001\nend\n"));
    CHECK(hom.exit_code() == 0);
}

TEST_CASE("cmd_normal_form: pinned examples") {
    RunReport diag = cmd_normal_form(
        std::get<TensorDocument>(parse_document(kRank2Doc)), "diagonal");
    CHECK(diag.exit_code() == 0);
    for (auto& [k, v] : diag.fields)
        if (k == "r") CHECK(v == "2");

    RunReport dis = cmd_normal_form(
        std::get<TensorDocument>(parse_document(kTwoDisjointDoc)), "disjoint");
    CHECK(dis.exit_code() == 0);
    for (auto& [k, v] : dis.fields)
        if (k == "r") CHECK(v == "2");

    RunReport ed = cmd_normal_form(
        std::get<TensorDocument>(parse_document(kUnionJackDoc)), "edge-disjoint");
    CHECK(ed.exit_code() == 0);
    for (auto& [k, v] : ed.fields) {
        if (k == "shears") CHECK(v == "0");
        if (k == "gauge-a") CHECK(v == "1");
    }

    CHECK_THROWS(cmd_normal_form(std::get<TensorDocument>(parse_document(kRank2Doc)), "disjoint"));
    CHECK_THROWS(cmd_normal_form(std::get<TensorDocument>(parse_document(kUnionJackDoc)), "bogus"));
}

TEST_CASE("cmd_classify: pinned counts") {
    RunReport r1 = cmd_classify(1, kDefaultColorPermutations, 1);
    for (auto& [k, v] : r1.fields)
        if (k == "zeta3") CHECK(v == "1");
    RunReport r2 = cmd_classify(2, kDefaultColorPermutations, 1);
    for (auto& [k, v] : r2.fields)
        if (k == "zeta3") CHECK(v == "4");
    CHECK(r2.exit_code() == 0);
}

TEST_CASE("cmd_simulate: pinned examples") {
    SimulateOptions sym{"2x2", "symmetry", 1, kDefaultSeed, false};
    RunReport s = cmd_simulate(parse_document(kUnionJackDoc), sym);
    CHECK(s.exit_code() == 0);

    SimulateOptions red{"2x2", "reduce", 1, kDefaultSeed, false};
    RunReport r = cmd_simulate(parse_document(kTwoDisjointDoc), red);
    CHECK(r.exit_code() == 0);

    SimulateOptions emb{"2x2", "embed", 1, kDefaultSeed, false};
    RunReport e = cmd_simulate(parse_document(kUnionJackDoc), emb);
    CHECK(e.exit_code() == 0);

    SimulateOptions sch{"chain-6", "schmidt", 1, kDefaultSeed, false};
    RunReport c = cmd_simulate(parse_document(kRank2Doc), sch);
    CHECK(c.exit_code() == 0);

    SimulateOptions sw{"chain-4", "sweep", 1, kDefaultSeed, false};
    RunReport w = cmd_simulate(std::nullopt, sw);
    CHECK(w.exit_code() == 0);
}

TEST_CASE("identical invocations yield byte-identical reports") {
    auto run = [] {
        SimulateOptions red{"2x2", "reduce", 1, kDefaultSeed, false};
        return cmd_simulate(parse_document(kTwoDisjointDoc), red).to_text();
    };
    CHECK(run() == run());
    auto classify = [] { return cmd_classify(2, kDefaultColorPermutations, 1).to_text(); };
    CHECK(classify() == classify());
    // Thread count must not change the census report.
    CHECK(cmd_classify(2, kDefaultColorPermutations, 2).to_text() == classify());
}

TEST_CASE("size guard rejects oversized simulations") {
    // chain-14 with m=2 would need 28 qubits.
    const char* big =
        "tensor\n"
        "degree 2\n"
        "m 2\n"
        "entries 1\n"
        "0 0\n"
        "end\n";
    SimulateOptions opt{"chain-14", "schmidt", 1, kDefaultSeed, false};
    CHECK_THROWS(cmd_simulate(parse_document(big), opt));
}
