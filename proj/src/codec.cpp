#include "icode/codec.hpp"

#include <algorithm>
#include <random>

#include "icode/errors.hpp"

namespace icode {

const char* const kMessageGeneratorDescriptor =
    "minstd(48271, 2147483647), one draw per message, reduced mod p";

IndexCode::IndexCode(ProblemSpec spec, Matrix l) : spec_(std::move(spec)), l_(std::move(l)) {
    if (l_.rows() != spec_.k()) {
        throw invalid_dimension("encoding matrix must have one row per message");
    }
    if (l_.cols() != spec_.k() - spec_.d()) {
        throw invalid_dimension("encoding matrix must have K-D columns");
    }
}

Codeword encode(const IndexCode& code, const Vector& x) {
    if (x.size() != code.spec().k()) {
        throw invalid_dimension("message vector must have K entries");
    }
    return Codeword{x * code.matrix()};
}

DecodeResult receiver_decode(const IndexCode& code, int rcv, const Codeword& y,
                             const std::map<int, std::uint64_t>& knowns) {
    const ProblemSpec& spec = code.spec();
    const Matrix& l = code.matrix();
    const FieldSpec& f = code.field();
    if (rcv < 1 || rcv > spec.k()) throw invalid_index("receiver index out of range");
    if (y.symbols.size() != code.length() || y.symbols.field() != f) {
        throw invalid_dimension("codeword length/field mismatch");
    }

    const std::vector<int> antidotes = antidote_set(spec, rcv);
    if (knowns.size() != antidotes.size() ||
        !std::ranges::equal(antidotes, knowns, {}, {},
                            [](const auto& kv) { return kv.first; })) {
        throw invalid_side_information("knowns must cover exactly the antidote set");
    }
    for (const auto& [i, v] : knowns) {
        if (v >= f.modulus()) throw invalid_parameters("known value out of field range");
    }

    // z = y - x_K L_K carries only the unknown rows' contribution.
    Vector z = y.symbols;
    for (const auto& [i, v] : knowns) {
        if (v == 0) continue;
        for (int j = 0; j < code.length(); ++j) {
            z.set(j, f.sub(z[j], f.mul(v, l.at(i - 1, j))));
        }
    }

    std::vector<int> unknowns = interference_set(spec, rcv);
    unknowns.push_back(rcv);
    std::ranges::sort(unknowns);
    if (static_cast<int>(unknowns.size()) != code.length()) {
        throw invalid_dimension("unknown count does not match code length");
    }
    std::vector<int> rows0;
    rows0.reserve(unknowns.size());
    for (int i : unknowns) rows0.push_back(i - 1);

    Vector solution = Vector::zeros(f, 0);
    try {
        solution = solve(transpose(select_rows(l, rows0)), z);
    } catch (const singular_system&) {
        throw not_decodable("receiver " + std::to_string(rcv) +
                            ": unknown-row system is singular");
    }

    DecodeResult result;
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
        const int msg = unknowns[i];
        if (msg == rcv) {
            result.wanted = solution[static_cast<int>(i)];
        } else {
            result.interference[msg] = solution[static_cast<int>(i)];
        }
    }
    return result;
}

bool symbols_suffice(const IndexCode& code, int rcv, const std::vector<int>& symbols) {
    const ProblemSpec& spec = code.spec();
    if (rcv < 1 || rcv > spec.k()) throw invalid_index("receiver index out of range");
    std::vector<int> cols0;
    cols0.reserve(symbols.size());
    for (int s : symbols) {
        if (s < 1 || s > code.length()) throw invalid_index("symbol index out of range");
        cols0.push_back(s - 1);
    }
    const Matrix restricted = select_cols(code.matrix(), cols0);
    std::vector<int> rows0;
    for (int i : interference_set(spec, rcv)) rows0.push_back(i - 1);
    const int interference_rank = rank(select_rows(restricted, rows0));
    rows0.push_back(rcv - 1);
    return rank(select_rows(restricted, rows0)) > interference_rank;
}

Vector sample_messages(const FieldSpec& field, int k, std::uint64_t seed) {
    std::minstd_rand gen(static_cast<std::uint32_t>(seed % 2147483647ull));
    std::vector<std::uint64_t> x(static_cast<std::size_t>(k));
    for (auto& v : x) v = gen() % field.modulus();
    return Vector(field, std::move(x));
}

int SimulationReport::successes() const {
    return static_cast<int>(std::ranges::count(decoded, true));
}

SimulationReport simulate_round(const IndexCode& code, std::uint64_t seed) {
    const ProblemSpec& spec = code.spec();
    const FieldSpec& f = code.field();
    SimulationReport report{spec.k(),       code.length(),
                            f.modulus(),    seed,
                            kMessageGeneratorDescriptor,
                            std::vector<bool>(static_cast<std::size_t>(spec.k()), false)};

    const Vector x = sample_messages(f, spec.k(), seed);
    const Codeword y = encode(code, x);
    for (int rcv = 1; rcv <= spec.k(); ++rcv) {
        std::map<int, std::uint64_t> knowns;
        for (int i : antidote_set(spec, rcv)) knowns[i] = x[i - 1];
        bool ok = false;
        try {
            const DecodeResult res = receiver_decode(code, rcv, y, knowns);
            ok = res.wanted == x[rcv - 1];
            for (const auto& [i, v] : res.interference) ok = ok && v == x[i - 1];
        } catch (const std::exception&) {
            ok = false; // a failed receiver never aborts the round
        }
        report.decoded[static_cast<std::size_t>(rcv - 1)] = ok;
    }
    return report;
}

} // namespace icode
