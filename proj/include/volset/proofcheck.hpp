#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "volset/exact.hpp"
#include "volset/field.hpp"
#include "volset/grassmann.hpp"
#include "volset/pointset.hpp"
#include "volset/sets.hpp"

namespace volset {

struct SearchOptions {
    /// Cap on wedge evaluations (sampled plus swept).
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    /// Uniformly sampled (d-1)-tuples tried before the deterministic sweep.
    std::uint64_t samples = 4096;
};

/// Witnessed volumes of a point set. A witness for t is a d-tuple of points
/// of E whose determinant is t.
struct CoverageCertificate {
    FieldSpec field;
    std::size_t dim = 0;
    std::size_t set_size = 0;
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;
    std::map<std::uint32_t, std::vector<Vector>> witnesses;
    std::vector<Elem> missing;
    /// Every (d-1)-tuple was examined, so `missing` is exact.
    bool exhaustive = false;
    /// |E| >= (d-1) q^{d-1}.
    bool hypothesis_met = false;
    /// q > d, the range the inductive argument covers.
    bool in_proof_range = false;

    bool covered() const { return missing.empty(); }
    /// The hypothesis holds but some value has no witness.
    bool red_flag() const { return hypothesis_met && !missing.empty(); }
    ScalarSet covered_values() const;
};

CoverageCertificate verify_theorem(const PointSet& e, const SearchOptions& options = {});

/// Recomputes every witness as a determinant (not through the wedge path).
bool recheck(const CoverageCertificate& cert);

struct HeavyMember {
    Subspace plane;
    std::size_t count = 0;
};

/// Hyperplanes H with |E cap H| > threshold.
struct HeavyFamily {
    std::uint64_t threshold = 0;
    std::vector<HeavyMember> members;

    std::uint64_t total_count() const;
};

/// q when d = 3, (d-2) q^{d-2} when d >= 4.
std::uint64_t default_heavy_threshold(std::uint32_t q, std::size_t d);

HeavyFamily heavy_hyperplanes(const PointSet& e, std::optional<std::uint64_t> threshold = std::nullopt);

/// q (1 - (q + q^{3/2}) / (n + q^{3/2})), the lower bound on |B*(E)| for
/// |E| = n in F_q^2.
Surd bstar_lower_bound(std::uint32_t q, std::uint64_t n);

enum class Relation { eq, gt, ge, lt, le };
std::string to_string(Relation r);

struct TraceStep {
    std::string label;
    Surd lhs;
    Relation rel = Relation::eq;
    Surd rhs;
    bool pass = false;
};

TraceStep make_step(std::string label, Surd lhs, Relation rel, Surd rhs);

/// Evaluated inequality chain. Only `steps` decide the outcome;
/// `observations` record intermediate quantities that are not gating.
struct ProofTrace {
    std::string name;
    std::vector<TraceStep> steps;
    std::vector<TraceStep> observations;
    std::vector<std::string> notes;
    std::optional<CoverageCertificate> coverage;

    bool passed() const;
};

/// d = 3 counting chain: plane incidences, heavy planes, D* sums, |F*_E|,
/// and the coverage conclusion.
ProofTrace trace_base_case(const PointSet& e, const SearchOptions& options = {});

/// d >= 4 chain: incidence identity, heavy family size, full D* on heavy
/// hyperplanes, |F*_E| and the coverage conclusion.
ProofTrace trace_induction_step(const PointSet& e, const SearchOptions& options = {});

enum class SubsetFamily { uniform, hyperplane };
std::string to_string(SubsetFamily f);
SubsetFamily parse_subset_family(const std::string& s);

struct ScanRow {
    std::size_t size = 0;
    std::uint32_t trials = 0;
    std::uint32_t covered = 0;
    /// Trials whose search stopped at the budget before certifying a gap.
    std::uint32_t inconclusive = 0;
};

struct ScanResult {
    FieldSpec field;
    std::size_t dim = 0;
    std::uint64_t seed = 0;
    SubsetFamily family = SubsetFamily::uniform;
    std::vector<ScanRow> rows;
};

/// Fraction of random subsets of each size whose volume set is all of F_q.
/// Trial i of the whole run uses sub-seed derive_seed(seed, i).
ScanResult scan_threshold(const Field& f, std::size_t d, std::span<const std::size_t> sizes, std::uint32_t trials,
                          std::uint64_t seed, SubsetFamily family = SubsetFamily::uniform,
                          const SearchOptions& options = {});

struct SharpnessResult {
    CoverageCertificate certificate;
    /// Exhaustive search found vol(E) = {0}.
    bool confirmed = false;
};

/// E = {y : y_d = 0}.
SharpnessResult sharpness_demo(const Field& f, std::size_t d, const SearchOptions& options = {});

/// Same check for any point set.
SharpnessResult sharpness_check(const PointSet& e, const SearchOptions& options = {});

} // namespace volset
