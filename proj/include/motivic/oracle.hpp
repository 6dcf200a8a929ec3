#ifndef MOTIVIC_ORACLE_HPP
#define MOTIVIC_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motivic/lring.hpp"

namespace motivic {

bool is_prime(unsigned q);

/// n x n matrix over F_p, entries reduced residues in [0, p).
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(unsigned p, unsigned n); // zero matrix; checks p prime
    /// Matrix whose row-major entry string is the base-p numeral of index
    /// (entry (n-1, n-1) least significant).
    static PrimeFieldMatrix from_index(unsigned p, unsigned n, std::uint64_t index);

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint8_t at(unsigned i, unsigned j) const { return entries_[i * n_ + j]; }
    void set(unsigned i, unsigned j, unsigned v) {
        entries_[i * n_ + j] = static_cast<std::uint8_t>(v % p_);
    }
    std::span<const std::uint8_t> entries() const { return entries_; }

    friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);
    bool commutes_with(const PrimeFieldMatrix& other) const;
    bool is_nilpotent() const; // A^n = 0

    bool operator==(const PrimeFieldMatrix&) const = default;

private:
    unsigned p_, n_;
    std::vector<std::uint8_t> entries_;
};

/// An F_q-point count of a quotient stack [Y/GL_n]: the number of tuples,
/// the group order, and their exact ratio.
struct GroupoidCount {
    Integer raw_count;
    Integer group_order;
    Rational value; // raw_count / group_order exactly

    static GroupoidCount of(Integer raw, Integer group);
    /// True when group_order divides raw_count (free actions).
    bool is_integral() const;
};

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i).
Integer gl_order(unsigned n, unsigned q);

struct OracleConfig {
    /// Cap on estimated tuple/closure evaluations; requests above it are
    /// refused up front with the estimate.
    std::uint64_t work_budget = 1'000'000'000;
    /// 0 = one worker per hardware thread.
    unsigned threads = 0;
    /// Dimension bound for count_coh_a1.
    unsigned coh_a1_n_bound = 3;
};

/// Estimated enumeration cost for a space, in evaluations:
///   coh-a1             q^{n^2}            (enumeration self-test)
///   coh-a2             q^{2n^2}           (full pair scan)
///   coh-a1-punctual    q^{n^2}
///   coh-a2-punctual    q^{n^2} (1 + q^{n^2-n})
///   quot-a1[-punctual] q^{n^2} q^n        (per-matrix vector closures)
///   quot-a2            q^{2n^2} + 2 q^{n^2+2n}
///   quot-a2-punctual   q^{n^2} (1 + q^{n^2-n}) + 2 q^{n^2-n+2n}
std::uint64_t estimated_cost(std::string_view space, unsigned n, unsigned q, unsigned r = 1);

/// [Coh^n(A^1)] over F_q: every n x n matrix, modulo GL_n. The raw count is
/// q^{n^2} in closed form; re-derive it with enumerate_matrix_count to
/// self-test the enumerator.
GroupoidCount count_coh_a1(unsigned n, unsigned q, const OracleConfig& cfg = {});

/// [Coh^n(A^2)] over F_q: commuting pairs (A, B), modulo GL_n, by exhaustive
/// scan of all q^{2n^2} pairs.
GroupoidCount count_coh_a2(unsigned n, unsigned q, const OracleConfig& cfg = {});

/// Punctual counts at the origin: d = 1 nilpotent matrices, d = 2 commuting
/// nilpotent pairs, modulo GL_n.
GroupoidCount count_nilpotent_coh(unsigned d, unsigned n, unsigned q,
                                  const OracleConfig& cfg = {});

/// Quot scheme points: tuples (A, v_1..v_r) (resp. (A, B, v_1..v_r) with
/// AB = BA) where the vectors generate F_q^n under the matrix action; GL_n
/// acts freely, so the value is an integer. Punctual variants restrict the
/// matrices to nilpotent ones.
GroupoidCount count_quot_a1(unsigned r, unsigned n, unsigned q, const OracleConfig& cfg = {});
GroupoidCount count_quot_a2(unsigned r, unsigned n, unsigned q, const OracleConfig& cfg = {});
GroupoidCount count_quot_a1_punctual(unsigned r, unsigned n, unsigned q,
                                     const OracleConfig& cfg = {});
GroupoidCount count_quot_a2_punctual(unsigned r, unsigned n, unsigned q,
                                     const OracleConfig& cfg = {});

/// Length-2 sheaves on A^1 supported at two distinct geometric points
/// (Galois-conjugate pairs included): 2 x 2 matrices with squarefree
/// characteristic polynomial, modulo GL_2.
GroupoidCount count_coh_a1_two_point_stratum(unsigned q, const OracleConfig& cfg = {});

/// Krylov generation test: breadth-first closure of the spans of the given
/// vectors under the matrix actions, by explicit row reduction over F_p;
/// true when the closure is all of F_p^n. All matrices must share p and n.
bool tuple_generates(std::span<const PrimeFieldMatrix> mats,
                     std::span<const std::vector<std::uint8_t>> vectors);

/// Exhaustive count of n x n matrices over F_q satisfying a predicate
/// (budget-checked). Used for enumerator self-tests.
Integer enumerate_matrix_count(unsigned n, unsigned q,
                               const std::function<bool(const PrimeFieldMatrix&)>& pred,
                               const OracleConfig& cfg = {});

/// A labelled count with timing, as written to JSON/CSV.
struct CountRecord {
    std::string space;
    unsigned n = 0;
    unsigned q = 0;
    std::optional<unsigned> r;
    GroupoidCount count;
    double elapsed_ms = 0.0;
};

/// Dispatch by space name ("coh-a1", "coh-a2", "coh-a1-punctual",
/// "coh-a2-punctual", "quot-a1", "quot-a2", "quot-a1-punctual",
/// "quot-a2-punctual"), with wall-clock timing.
CountRecord run_count(std::string_view space, unsigned n, unsigned q,
                      std::optional<unsigned> r = std::nullopt, const OracleConfig& cfg = {});

} // namespace motivic

#endif
