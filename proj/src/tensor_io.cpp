#include "fracsym/tensor_io.hpp"

#include <charconv>
#include <sstream>

namespace fracsym {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

long parse_int(const std::string& tok, int line, const char* what) {
    long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(line, std::string(what) + ": not an integer: '" + tok + "'");
    return v;
}

struct LineReader {
    std::vector<std::string> lines;
    size_t at = 0;
    explicit LineReader(const std::string& text) {
        std::istringstream in(text);
        std::string l;
        while (std::getline(in, l)) lines.push_back(l);
    }
    // Next non-empty, non-comment line; nullopt at end.
    std::optional<std::pair<int, std::vector<std::string>>> next() {
        while (at < lines.size()) {
            int n = static_cast<int>(at) + 1;
            auto toks = split_ws(lines[at++]);
            if (toks.empty() || toks[0][0] == '#') continue;
            return std::make_pair(n, toks);
        }
        return std::nullopt;
    }
};

TensorDocument parse_tensor(LineReader& rd) {
    TensorDocument doc;
    bool have_dims = false;
    long declared = -1;
    for (;;) {
        auto ln = rd.next();
        if (!ln) throw ParseError(static_cast<int>(rd.lines.size()), "unexpected end of document");
        auto& [n, toks] = *ln;
        const std::string& key = toks[0];
        if (key == "degree") {
            if (toks.size() != 2) throw ParseError(n, "degree: expected one value");
            long d = parse_int(toks[1], n, "degree");
            if (d != 2 && d != 3) throw ParseError(n, "degree: must be 2 or 3");
            doc.degree = static_cast<int>(d);
        } else if (key == "m") {
            if (toks.size() != 2) throw ParseError(n, "m: expected one value");
            long m = parse_int(toks[1], n, "m");
            if (m < 1 || m > 6) throw ParseError(n, "m: out of range 1..6");
            doc.dims = {static_cast<int>(m), static_cast<int>(m), static_cast<int>(m)};
            have_dims = true;
        } else if (key == "dims") {
            if (static_cast<int>(toks.size()) != doc.degree + 1)
                throw ParseError(n, "dims: expected one value per index");
            for (int i = 0; i < doc.degree; ++i) {
                long d = parse_int(toks[i + 1], n, "dims");
                if (d < 1 || d > 6) throw ParseError(n, "dims: out of range 1..6");
                doc.dims[i] = static_cast<int>(d);
            }
            if (doc.degree == 2) doc.dims[2] = 1;
            have_dims = true;
        } else if (key == "name") {
            if (toks.size() != 2) throw ParseError(n, "name: expected one token");
            doc.name = toks[1];
        } else if (key == "seed") {
            if (toks.size() != 2) throw ParseError(n, "seed: expected one value");
            doc.seed = static_cast<uint64_t>(parse_int(toks[1], n, "seed"));
        } else if (key == "entries") {
            if (toks.size() != 2) throw ParseError(n, "entries: expected a count");
            declared = parse_int(toks[1], n, "entries");
            if (!have_dims) throw ParseError(n, "entries: m or dims must come first");
            break;
        } else {
            throw ParseError(n, "unknown field '" + key + "'");
        }
    }
    for (long e = 0; e < declared; ++e) {
        auto ln = rd.next();
        if (!ln) throw ParseError(static_cast<int>(rd.lines.size()), "missing entry lines");
        auto& [n, toks] = *ln;
        if (static_cast<int>(toks.size()) != doc.degree)
            throw ParseError(n, "entry: expected " + std::to_string(doc.degree) + " indices");
        std::array<int, 3> cell{0, 0, 0};
        for (int i = 0; i < doc.degree; ++i) {
            long v = parse_int(toks[i], n, "entry index");
            if (v < 0 || v >= doc.dims[i])
                throw ParseError(n, "entry index out of range: '" + toks[i] + "'");
            cell[i] = static_cast<int>(v);
        }
        if (!doc.entries.empty() && !(doc.entries.back() < cell))
            throw ParseError(n, "entries must be strictly sorted and unique");
        doc.entries.push_back(cell);
    }
    auto ln = rd.next();
    if (!ln || ln->second[0] != "end")
        throw ParseError(ln ? ln->first : static_cast<int>(rd.lines.size()),
                         "expected 'end' after entries");
    if (rd.next()) throw ParseError(static_cast<int>(rd.lines.size()), "trailing content after 'end'");
    return doc;
}

CochainDocument parse_cochain(LineReader& rd) {
    CochainDocument doc;
    bool have_d = false, have_m = false, have_table = false;
    for (;;) {
        auto ln = rd.next();
        if (!ln) break;
        auto& [n, toks] = *ln;
        const std::string& key = toks[0];
        if (key == "degree") {
            if (toks.size() != 2) throw ParseError(n, "degree: expected one value");
            long d = parse_int(toks[1], n, "degree");
            if (d < 0 || d > 4) throw ParseError(n, "degree: out of range 0..4");
            doc.degree = static_cast<int>(d);
            have_d = true;
        } else if (key == "m") {
            if (toks.size() != 2) throw ParseError(n, "m: expected one value");
            long m = parse_int(toks[1], n, "m");
            if (m < 1 || m > 4) throw ParseError(n, "m: out of range 1..4");
            doc.m = static_cast<int>(m);
            have_m = true;
        } else if (key == "form") {
            if (toks.size() != 2 || (toks[1] != "inhomogeneous" && toks[1] != "homogeneous"))
                throw ParseError(n, "form: expected inhomogeneous|homogeneous");
            doc.form = toks[1] == "homogeneous" ? CochainForm::homogeneous
                                                : CochainForm::inhomogeneous;
        } else if (key == "table") {
            if (toks.size() != 2) throw ParseError(n, "table: expected one 0/1 string");
            if (!have_d || !have_m) throw ParseError(n, "table: degree and m must come first");
            doc.table = toks[1];
            uint64_t want = 1ull << (doc.m * doc.degree);
            if (doc.table.size() != want)
                throw ParseError(n, "table: expected exactly " + std::to_string(want) + " bits");
            for (char c : doc.table)
                if (c != '0' && c != '1') throw ParseError(n, "table: bits must be 0 or 1");
            have_table = true;
        } else if (key == "end") {
            if (!have_table) throw ParseError(n, "missing table");
            if (rd.next()) throw ParseError(n + 1, "trailing content after 'end'");
            return doc;
        } else {
            throw ParseError(n, "unknown field '" + key + "'");
        }
    }
    throw ParseError(static_cast<int>(rd.lines.size()), "unexpected end of document");
}

}  // namespace

BitMatrix TensorDocument::as_matrix() const {
    if (degree != 2) throw std::logic_error("as_matrix: document has degree 3");
    BitMatrix m(dims[0], dims[1]);
    for (auto& e : entries) m.set(e[0], e[1], true);
    return m;
}

BitTensor3 TensorDocument::as_tensor() const {
    if (degree != 3) throw std::logic_error("as_tensor: document has degree 2");
    BitTensor3 t(dims[0], dims[1], dims[2]);
    for (auto& e : entries) t.set(e[0], e[1], e[2], true);
    return t;
}

TensorDocument TensorDocument::from_matrix(const BitMatrix& m) {
    TensorDocument doc;
    doc.degree = 2;
    doc.dims = {m.rows(), m.cols(), 1};
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) doc.entries.push_back({i, j, 0});
    return doc;
}

TensorDocument TensorDocument::from_tensor(const BitTensor3& t) {
    TensorDocument doc;
    doc.degree = 3;
    doc.dims = {t.dim_a(), t.dim_b(), t.dim_c()};
    for (auto& c : t.cells()) doc.entries.push_back(c);
    return doc;
}

std::string TensorDocument::serialize() const {
    std::ostringstream out;
    out << "tensor\n";
    out << "degree " << degree << "\n";
    bool square = degree == 2 ? dims[0] == dims[1] : cubic();
    if (square) {
        out << "m " << dims[0] << "\n";
    } else {
        out << "dims";
        for (int i = 0; i < degree; ++i) out << " " << dims[i];
        out << "\n";
    }
    if (name) out << "name " << *name << "\n";
    if (seed) out << "seed " << *seed << "\n";
    out << "entries " << entries.size() << "\n";
    for (auto& e : entries) {
        out << e[0] << " " << e[1];
        if (degree == 3) out << " " << e[2];
        out << "\n";
    }
    out << "end\n";
    return out.str();
}

Cochain CochainDocument::as_cochain() const {
    Cochain x(m, degree, form);
    for (size_t i = 0; i < table.size(); ++i)
        if (table[i] == '1') x.table().set(i, true);
    return x;
}

CochainDocument CochainDocument::from_cochain(const Cochain& x) {
    CochainDocument doc;
    doc.degree = x.degree();
    doc.m = x.m();
    doc.form = x.form();
    doc.table = x.table().str();
    return doc;
}

std::string CochainDocument::serialize() const {
    std::ostringstream out;
    out << "cochain\n";
    out << "degree " << degree << "\n";
    out << "m " << m << "\n";
    out << "form " << (form == CochainForm::homogeneous ? "homogeneous" : "inhomogeneous") << "\n";
    out << "table " << table << "\n";
    out << "end\n";
    return out.str();
}

Document parse_document(const std::string& text) {
    LineReader rd(text);
    auto first = rd.next();
    if (!first) throw ParseError(1, "empty document");
    if (first->second[0] == "tensor") return parse_tensor(rd);
    if (first->second[0] == "cochain") return parse_cochain(rd);
    throw ParseError(first->first, "expected 'tensor' or 'cochain' header");
}

std::string serialize_document(const Document& doc) {
    return std::visit([](const auto& d) { return d.serialize(); }, doc);
}

}  // namespace fracsym
