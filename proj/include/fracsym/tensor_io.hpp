#pragma once

// Line-delimited interchange documents for component tensors and cochain
// tables. Canonical serialization is byte-stable: fixed field order,
// entries sorted lexicographically; the parser rejects anything that
// would not round-trip.

#include <optional>
#include <string>
#include <variant>

#include "fracsym/cochain.hpp"

namespace fracsym {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct TensorDocument {
    int degree = 3;            // 2 (matrix) or 3 (tensor)
    std::array<int, 3> dims{}; // dims[2] ignored for degree 2
    std::optional<std::string> name;
    std::optional<uint64_t> seed;
    std::vector<std::array<int, 3>> entries;  // third index 0 for degree 2

    bool cubic() const {
        return degree == 2 ? dims[0] == dims[1] : (dims[0] == dims[1] && dims[1] == dims[2]);
    }
    BitMatrix as_matrix() const;
    BitTensor3 as_tensor() const;
    static TensorDocument from_matrix(const BitMatrix& m);
    static TensorDocument from_tensor(const BitTensor3& t);
    std::string serialize() const;
};

struct CochainDocument {
    int degree = 0;
    int m = 1;
    CochainForm form = CochainForm::inhomogeneous;
    std::string table;  // 2^(m*degree) chars of 0/1, index ascending

    Cochain as_cochain() const;
    static CochainDocument from_cochain(const Cochain& x);
    std::string serialize() const;
};

using Document = std::variant<TensorDocument, CochainDocument>;

// Throws ParseError with a line number and the offending field.
Document parse_document(const std::string& text);

std::string serialize_document(const Document& doc);

}  // namespace fracsym
