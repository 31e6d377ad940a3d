#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "icode/matrix.hpp"
#include "icode/problem.hpp"

namespace icode {

/// A problem instance bound to its K x N encoding matrix, N = K - D.
/// Dimensions and field consistency are validated here; whether the matrix
/// actually satisfies the decodability condition for the spec is a property
/// of its provenance (the construction guarantees it) and can be audited
/// with check_decodability. Decoding surfaces not_decodable otherwise.
class IndexCode {
public:
    IndexCode(ProblemSpec spec, Matrix l);

    const ProblemSpec& spec() const { return spec_; }
    const Matrix& matrix() const { return l_; }
    const FieldSpec& field() const { return l_.field(); }
    int length() const { return l_.cols(); }

private:
    ProblemSpec spec_;
    Matrix l_;
};

/// The N broadcast symbols y = x L.
struct Codeword {
    Vector symbols;
};

/// What one receiver recovers: its wanted message and, per the linear-system
/// decoding procedure, every interfering message as well.
struct DecodeResult {
    std::uint64_t wanted = 0;
    std::map<int, std::uint64_t> interference; // keyed by message index
};

Codeword encode(const IndexCode& code, const Vector& x);

/// Decodes receiver rcv from the codeword and its declared side information
/// (exactly the antidote set, keyed by message index). Subtracts the known
/// contribution and solves the N x N system over the unknown rows
/// {rcv} + interference set. Throws not_decodable when that system is
/// singular and invalid_side_information when knowns do not match the spec.
DecodeResult receiver_decode(const IndexCode& code, int rcv, const Codeword& y,
                             const std::map<int, std::uint64_t>& knowns);

/// True when receiver rcv can recover its wanted message from the code
/// symbols listed in `symbols` (1-based column indices) plus its antidotes:
/// the column-restricted row of rcv must leave the span of the
/// column-restricted interference rows.
bool symbols_suffice(const IndexCode& code, int rcv, const std::vector<int>& symbols);

struct SimulationReport {
    int k = 0;
    int n = 0;
    std::uint64_t field = 0;
    std::uint64_t seed = 0;
    std::string generator;      // pinned message-sampling stream
    std::vector<bool> decoded;  // per receiver, 1-based receiver i at [i-1]

    int successes() const;
    bool all_decoded() const { return successes() == k; }
};

/// Draws one message vector from the seed, encodes it once, and runs every
/// receiver's decoder. Decode errors count as that receiver's failure; the
/// round always completes.
SimulationReport simulate_round(const IndexCode& code, std::uint64_t seed);

/// Deterministic message sampling used by simulate_round: one draw per
/// message from a minstd stream (x <- 48271 x mod 2^31-1), reduced mod p.
Vector sample_messages(const FieldSpec& field, int k, std::uint64_t seed);

extern const char* const kMessageGeneratorDescriptor;

} // namespace icode
