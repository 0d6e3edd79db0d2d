#include "fracsym/commands.hpp"

#include <sstream>

#include "fracsym/embedding.hpp"
#include "fracsym/gf2.hpp"
#include "fracsym/orbits.hpp"
#include "fracsym/reduction.hpp"
#include "fracsym/schmidt.hpp"
#include "fracsym/sweep.hpp"

namespace fracsym {

namespace {

std::string cells_text(const BitTensor3& t) {
    std::string s;
    for (auto [i, j, k] : t.cells()) {
        if (!s.empty()) s += ";";
        s += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
    }
    return s.empty() ? "-" : s;
}

std::string matrix_rows_text(const BitMatrix& m) {
    std::string s;
    for (int i = 0; i < m.rows(); ++i) {
        if (i) s += ";";
        for (int j = 0; j < m.cols(); ++j) s += m.get(i, j) ? '1' : '0';
    }
    return s;
}

Lattice parse_lattice_spec(const std::string& spec) {
    if (spec.rfind("chain-", 0) == 0) {
        int n = std::stoi(spec.substr(6));
        return build_chain(n);
    }
    auto x = spec.find('x');
    if (x == std::string::npos)
        throw std::invalid_argument("lattice spec: expected chain-N or WxH, got '" + spec + "'");
    int w = std::stoi(spec.substr(0, x));
    int h = std::stoi(spec.substr(x + 1));
    return build_union_jack(w, h);
}

Cochain doc_cochain(const Document& doc) {
    if (std::holds_alternative<CochainDocument>(doc))
        return std::get<CochainDocument>(doc).as_cochain();
    const TensorDocument& td = std::get<TensorDocument>(doc);
    if (!td.cubic()) throw std::invalid_argument("check: cochain view needs square/cubic dims");
    if (td.degree == 2) return MultilinearForm(td.as_matrix()).as_cochain();
    return MultilinearForm(td.as_tensor()).as_cochain();
}

}  // namespace

RunReport cmd_check(const Document& doc) {
    RunReport rep = make_report("check", serialize_document(doc));
    Cochain x = convert_form(doc_cochain(doc), CochainForm::inhomogeneous);
    rep.add("degree", x.degree());
    rep.add("m", x.m());
    rep.add_verdict("cocycle", is_cocycle(x));
    std::optional<MultilinearForm> ml =
        (x.degree() >= 1 && x.degree() <= 3) ? extract_multilinear(x) : std::nullopt;
    rep.add_verdict("multilinear", ml.has_value());
    if (ml) {
        switch (ml->degree()) {
            case 1: rep.add("components", ml->vec1().str()); break;
            case 2: rep.add("components", matrix_rows_text(ml->vec2())); break;
            default: rep.add("components", cells_text(ml->vec3())); break;
        }
    }
    return rep;
}

RunReport cmd_normal_form(const TensorDocument& doc, const std::string& mode) {
    RunReport rep = make_report("normal-form", serialize_document(Document(doc)) + mode);
    rep.add("mode", mode);
    if (mode == "diagonal") {
        if (doc.degree != 2)
            throw std::invalid_argument("normal-form: diagonal mode needs a degree-2 document");
        DiagonalForm f = diagonal_normal_form(doc.as_matrix());
        rep.add("r", f.r);
        rep.add("normal", matrix_rows_text(f.normal));
        rep.add("gauge-a", matrix_rows_text(f.gauge.a));
        rep.add("gauge-b", matrix_rows_text(f.gauge.b));
        rep.add_verdict("certified", gauge2(doc.as_matrix(), f.gauge) == f.normal);
    } else if (mode == "disjoint") {
        if (doc.degree != 3)
            throw std::invalid_argument("normal-form: disjoint mode needs a degree-3 document");
        BitTensor3 t = doc.as_tensor();
        DisjointDecomposition dec = disjoint_normal_form(t);
        rep.add("r", dec.r);
        BitTensor3 sum(t.dim_a(), t.dim_b(), t.dim_c());
        for (size_t b = 0; b < dec.blocks.size(); ++b) {
            rep.add("block-" + std::to_string(b), cells_text(dec.blocks[b]));
            sum.xor_with(dec.blocks[b]);
        }
        rep.add("gauge-a", matrix_rows_text(dec.gauge.a));
        rep.add("gauge-b", matrix_rows_text(dec.gauge.b));
        rep.add("gauge-c", matrix_rows_text(dec.gauge.c));
        rep.add_verdict("certified", gauge3(t, dec.gauge) == sum);
    } else if (mode == "edge-disjoint") {
        if (doc.degree != 3)
            throw std::invalid_argument("normal-form: edge-disjoint mode needs a degree-3 document");
        BitTensor3 t = doc.as_tensor();
        EdgeDisjointForm f = edge_disjoint_form(t);
        rep.add("fiducial", std::to_string(f.fiducial[0]) + "," + std::to_string(f.fiducial[1]) +
                                "," + std::to_string(f.fiducial[2]));
        rep.add("shears", f.shear_count);
        rep.add("tensor", cells_text(f.tensor));
        rep.add("gauge-a", matrix_rows_text(f.gauge.a));
        rep.add("gauge-b", matrix_rows_text(f.gauge.b));
        rep.add("gauge-c", matrix_rows_text(f.gauge.c));
        rep.add_verdict("certified", gauge3(t, f.gauge) == f.tensor);
    } else {
        throw std::invalid_argument("normal-form: unknown mode '" + mode + "'");
    }
    return rep;
}

RunReport cmd_classify(int m, bool color_permutations, int threads) {
    RunReport rep = make_report(
        "classify", std::to_string(m) + (color_permutations ? " perms" : " noperms"));
    OrbitCensus census = classify_orbits(m, color_permutations, threads);
    rep.add("m", m);
    rep.add_bool("color-permutations", census.color_permutations);
    rep.add("codes", census.code_count);
    rep.add("orbits", census.orbit_count());
    rep.add("zeta3", census.irreducible_class_count());
    uint64_t total = 0;
    std::string sizes;
    for (uint64_t s : census.orbit_sizes()) {
        total += s;
        if (!sizes.empty()) sizes += ",";
        sizes += std::to_string(s);
    }
    rep.add("orbit-sizes", sizes);
    rep.add_verdict("sizes-sum-to-codes", total == census.code_count);
    return rep;
}

RunReport cmd_simulate(const std::optional<Document>& doc, const SimulateOptions& opt) {
    std::string payload = (doc ? serialize_document(*doc) : std::string("-")) + "\n" +
                          opt.lattice + "\n" + opt.task + "\n" + std::to_string(opt.seed);
    RunReport rep = make_report("simulate", payload);
    rep.add("lattice", opt.lattice);
    rep.add("task", opt.task);
    rep.add("seed", opt.seed);
    Lattice lat = parse_lattice_spec(opt.lattice);

    int doc_m = opt.m;
    if (doc && std::holds_alternative<TensorDocument>(*doc))
        doc_m = std::get<TensorDocument>(*doc).dims[0];
    if (!opt.allow_large && static_cast<long>(lat.site_count()) * doc_m > kMaxSimQubits)
        throw std::invalid_argument(
            "simulate: size guard exceeded (N > 26 qubits); pass --allow-large to override");

    auto need_tensor = [&]() -> BitTensor3 {
        if (!doc || !std::holds_alternative<TensorDocument>(*doc))
            throw std::invalid_argument("simulate: this task needs a degree-3 tensor document");
        const TensorDocument& td = std::get<TensorDocument>(*doc);
        if (td.degree != 3) throw std::invalid_argument("simulate: this task needs degree 3");
        return td.as_tensor();
    };

    if (opt.task == "symmetry") {
        if (!doc || !std::holds_alternative<TensorDocument>(*doc))
            throw std::invalid_argument("simulate: symmetry task needs a tensor document");
        const TensorDocument& td = std::get<TensorDocument>(*doc);
        MultilinearForm f = td.degree == 2 ? MultilinearForm(td.as_matrix())
                                           : MultilinearForm(td.as_tensor());
        SignState st = build_state(lat, f, BuildConvention::plain);
        rep.add("qubits", st.qubit_count());
        bool all = true;
        int m = f.m();
        for (int c = 0; c < lat.degree; ++c)
            for (uint32_t g = 1; g < (1u << m); ++g)
                all = all &&
                      is_same_state(apply_fractional_symmetry(st, lat, static_cast<Color>(c), g), st);
        rep.add_verdict("all-invariant", all);
    } else if (opt.task == "reduce") {
        BitTensor3 t = need_tensor();
        ReduceResult res = reduce_to_union_jack(t, lat);
        rep.add("measured", static_cast<uint64_t>(res.record.measured.size()));
        rep.add("residual-qubits", res.residual.qubit_count());
        rep.add_bool("byproduct-affine", res.record.byproduct_affine);
        rep.add_verdict("ok", res.ok);
    } else if (opt.task == "embed") {
        BitTensor3 t = need_tensor();
        EmbeddedState e = embed_g3(t, lat);
        rep.add("embedded-qubits", static_cast<uint64_t>(e.embedded_qubit_count()));
        rep.add_verdict("global-symmetric", check_global_symmetry(e));
    } else if (opt.task == "schmidt") {
        if (!doc || !std::holds_alternative<TensorDocument>(*doc))
            throw std::invalid_argument("simulate: schmidt task needs a degree-2 tensor document");
        const TensorDocument& td = std::get<TensorDocument>(*doc);
        if (td.degree != 2) throw std::invalid_argument("simulate: schmidt task needs degree 2");
        BitMatrix t2 = td.as_matrix();
        SignState st = build_state(lat, MultilinearForm(t2), BuildConvention::plain);
        // Pinned cut: the first half of the chain's sites (all layers),
        // a single contiguous block crossing two boundaries.
        std::vector<Qubit> left;
        for (const Qubit& q : st.qubits)
            if (q.site < lat.site_count() / 2) left.push_back(q);
        int log_rank = schmidt_rank_log2(st, left);
        rep.add("schmidt-rank-log2", log_rank);
        int expect = 2 * rank(t2);
        rep.add("2-rank-tau2", expect);
        rep.add_verdict("matches-2-rank", log_rank == expect);
    } else if (opt.task == "sweep") {
        SweepReport sw = symmetry_sweep(lat.degree, opt.m, lat);
        rep.add("m", sw.m);
        rep.add("cocycles", sw.cocycle_count);
        rep.add("symmetric-states", sw.symmetric_state_count);
        rep.add("multilinear-states", sw.multilinear_state_count);
        rep.add_verdict("symmetric-equals-multilinear", sw.symmetric_equals_multilinear);
    } else {
        throw std::invalid_argument("simulate: unknown task '" + opt.task + "'");
    }
    return rep;
}

}  // namespace fracsym
