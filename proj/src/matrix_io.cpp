#include "icode/matrix_io.hpp"

#include <json.hpp>

#include <sstream>

namespace icode {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw invalid_parameters("bad integer in list: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw invalid_parameters("empty integer list");
    return out;
}

} // namespace

std::string variant_tag(const AntidotePattern& pattern) {
    return std::visit(
        [](const auto& pat) -> std::string {
            using T = std::decay_t<decltype(pat)>;
            if constexpr (std::is_same_v<T, Neighboring>) return "neighboring";
            if constexpr (std::is_same_v<T, UniformShift>) {
                return "shift:" + std::to_string(pat.t);
            }
            if constexpr (std::is_same_v<T, PerReceiverShifts>) {
                std::string tag = "shifts:";
                for (std::size_t i = 0; i < pat.shifts.size(); ++i) {
                    if (i) tag += ',';
                    tag += std::to_string(pat.shifts[i]);
                }
                return tag;
            }
            if constexpr (std::is_same_v<T, Permuted>) {
                return "permuted:" + std::to_string(pat.multiplier);
            }
        },
        pattern);
}

AntidotePattern parse_variant_tag(const std::string& tag) {
    if (tag == "neighboring") return Neighboring{};
    const auto colon = tag.find(':');
    if (colon != std::string::npos) {
        const std::string head = tag.substr(0, colon);
        const std::string body = tag.substr(colon + 1);
        if (head == "shift") return UniformShift{parse_int_list(body).at(0)};
        if (head == "shifts") return PerReceiverShifts{parse_int_list(body)};
        if (head == "permuted") return Permuted{parse_int_list(body).at(0)};
    }
    throw invalid_parameters("unknown variant tag: " + tag);
}

MatrixDocument make_document(const ProblemSpec& spec, const Matrix& l) {
    MatrixDocument doc;
    doc.k = spec.k();
    doc.d = spec.d();
    doc.variant = variant_tag(spec.pattern());
    doc.field = l.field().modulus();
    doc.rows.resize(static_cast<std::size_t>(l.rows()));
    for (int i = 0; i < l.rows(); ++i) {
        auto& row = doc.rows[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(l.cols()));
        for (int j = 0; j < l.cols(); ++j) row[static_cast<std::size_t>(j)] = l.at(i, j);
    }
    return doc;
}

ProblemSpec spec_of(const MatrixDocument& doc) {
    return ProblemSpec(doc.k, doc.d, parse_variant_tag(doc.variant));
}

Matrix matrix_of(const MatrixDocument& doc) {
    const FieldSpec field(doc.field);
    if (static_cast<int>(doc.rows.size()) != doc.k) {
        throw invalid_dimension("document must carry K rows");
    }
    const int n = doc.k - doc.d;
    std::vector<std::uint64_t> entries;
    entries.reserve(static_cast<std::size_t>(doc.k) * static_cast<std::size_t>(n));
    for (const auto& row : doc.rows) {
        if (static_cast<int>(row.size()) != n) {
            throw invalid_dimension("document rows must have K-D entries");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(field, doc.k, n, std::move(entries));
}

std::string to_json(const MatrixDocument& doc) {
    nlohmann::ordered_json j;
    j["k"] = doc.k;
    j["d"] = doc.d;
    j["variant"] = doc.variant;
    j["field"] = doc.field;
    j["rows"] = doc.rows;
    return j.dump() + "\n";
}

MatrixDocument document_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_parameters(std::string("bad matrix document: ") + e.what());
    }
    MatrixDocument doc;
    try {
        doc.k = j.at("k").get<int>();
        doc.d = j.at("d").get<int>();
        doc.variant = j.at("variant").get<std::string>();
        doc.field = j.at("field").get<std::uint64_t>();
        doc.rows = j.at("rows").get<std::vector<std::vector<std::uint64_t>>>();
    } catch (const nlohmann::json::exception& e) {
        throw invalid_parameters(std::string("bad matrix document: ") + e.what());
    }
    return doc;
}

std::string to_csv(const MatrixDocument& doc) {
    std::string out;
    for (const auto& row : doc.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

std::string to_pretty(const MatrixDocument& doc) {
    std::size_t width = 1;
    for (const auto& row : doc.rows) {
        for (std::uint64_t e : row) width = std::max(width, std::to_string(e).size());
    }
    const int n = doc.k - doc.d;
    std::string out;
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        std::string line;
        for (std::size_t j = 0; j < doc.rows[i].size(); ++j) {
            if (j) line += ' ';
            std::string e = std::to_string(doc.rows[i][j]);
            line.insert(line.size(), width - e.size(), ' ');
            line += e;
        }
        out += line;
        out += '\n';
        if (static_cast<int>(i + 1) == n && i + 1 < doc.rows.size()) {
            out.append(line.size(), '-');
            out += '\n';
        }
    }
    return out;
}

} // namespace icode
