#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nv/expr.hpp"

namespace nv {

/// One relation of a named family: two words asserted to spell the same
/// element.  R1 placeholders carry check = false; they are counted but not
/// evaluated (they stand in for an external symmetric-group presentation).
struct RelationInstance {
    std::string family;
    std::string params;
    GenExpr lhs, rhs;
    bool check = true;
};

struct VerificationFailure {
    std::uint64_t index = 0;
    std::string params;
    std::string lhs, rhs;
    std::string detail;
};

/// Outcome of checking one family at fixed bounds.  failed counts every
/// failing instance; the failures list is capped so floods stay readable.
struct VerificationReport {
    std::string family;
    int n = 0;
    std::string bounds;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::uint64_t failed = 0;
    std::vector<VerificationFailure> failures;
    double seconds = 0.0;

    bool pass() const { return failed == 0; }
};

struct VerifyOptions {
    int threads = 0;                 // 0: hardware concurrency
    std::size_t max_failures = 20;   // per family
};

/// Evaluates both sides of every instance and compares; one report per
/// family, in order of first appearance.  Evaluation errors inside an
/// instance are recorded as that instance's failure.
std::vector<VerificationReport> verify(std::span<const RelationInstance> instances, int n,
                                       const VerifyOptions& options = {});

// -- Infinite presentation -------------------------------------------------

/// Materializes the SYMM / ORDER / CONJ / SPLIT families with every address
/// drawn from enumerate_addresses(n, L).  CONJ is quartic in the pool size;
/// keep L small here and use sweep_infinite for large bounds.
std::vector<RelationInstance> enumerate_infinite_relations(int n, int L);

/// Streams the same instances in the same order without materializing
/// them, evaluating elements directly.
std::vector<VerificationReport> sweep_infinite(int n, int L, const VerifyOptions& options = {});

// -- Hennig-Matucci presentation --------------------------------------------

/// The eighteen relation families HM1..HM18 instantiated over
/// 0 <= m <= m_max, m < q <= q_max and the per-family dimension ranges and
/// side conditions.  HM18 is empty unless n >= 3.
std::vector<RelationInstance> enumerate_hm_relations(int n, int m_max, int q_max);

std::vector<VerificationReport> sweep_hm(int n, int m_max, int q_max,
                                         const VerifyOptions& options = {});

// -- Finite presentation -----------------------------------------------------

/// The relations R1..R7 of the three-generator presentation; exactly
/// 2n^2 + 3n + 11 instances, of which the 8 R1 placeholders are counted
/// but not checked.
std::vector<RelationInstance> enumerate_finite_relations(int n);

/// Verifies R2..R7 on the concrete elements plus a structural check that
/// the cycle a and the transposition b generate the full symmetric group
/// of the grid (reported as family "R1-semantic").
std::vector<VerificationReport> sweep_finite(int n, const VerifyOptions& options = {});

// -- Baker's-map lemma suites -------------------------------------------------

/// Element identities satisfied by the transposition-word baker's maps:
/// conjugation covariance, disjoint commutation, splitting, helper-address
/// independence, and the full-support conjugation identities.  Instances
/// are enumerated from addresses of total length <= L.
std::vector<VerificationReport> sweep_lemmas(int n, int L, const VerifyOptions& options = {});

// -- Transposition reconstruction ---------------------------------------------

/// Checks rebuild_transposition against the direct construction over every
/// incomparable pair of weight <= wmax, plus `samples` random pairs with
/// coordinates of length <= random_coord_len.
std::vector<VerificationReport> sweep_rebuild(int n, Weight wmax, int samples,
                                              int random_coord_len, std::uint64_t seed,
                                              const VerifyOptions& options = {});

// -- Conjugacy-instance taxonomy ------------------------------------------------

/// The relative configurations a conjugacy relation instance can land in,
/// after normalizing by the symmetry of both transpositions:
///   A  all four addresses pairwise incomparable
///   B  the conjugator's first entry reaches one side only
///   C  the conjugator's entries reach opposite sides
///   D  the conjugator's first entry reaches both sides
///   SelfConjugate  conjugation of a transposition by itself
enum class ConjCase { A, B, C, D, SelfConjugate };

/// Classifies a conjugacy instance; requires a, b incomparable, g, d
/// incomparable, and both bullet actions defined (throws otherwise).
ConjCase classify_conj_case(const Address& a, const Address& b, const Address& g,
                            const Address& d);

// -- Reporting ----------------------------------------------------------------

std::string reports_to_json(std::span<const VerificationReport> reports);
std::string reports_to_table(std::span<const VerificationReport> reports);

} // namespace nv
