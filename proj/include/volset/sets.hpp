#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "volset/exact.hpp"
#include "volset/field.hpp"
#include "volset/grassmann.hpp"
#include "volset/linalg.hpp"
#include "volset/pointset.hpp"

namespace volset {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

/// Thrown when an exact enumeration would visit more tuples than allowed.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what + ": needs " + std::to_string(required) + " tuple evaluations, budget is " +
                             std::to_string(budget)),
          required_(required), budget_(budget)
    {
    }

    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

enum class VolumeMode { naive, wedge, decomposed };
enum class CrossMode { brute, decomposed };

std::string to_string(VolumeMode mode);
VolumeMode parse_volume_mode(const std::string& s);

/// vol(E) = {det(x^1..x^d) : x^j in E}. The three modes compute the same set:
///  - naive enumerates all |E|^d row tuples;
///  - wedge collects the wedge image of E^{d-1} and dots it against E;
///  - decomposed builds F*_E hyperplane by hyperplane, then returns
///    (E . F*_E) with 0 added.
ScalarSet volume_set(const PointSet& e, VolumeMode mode, std::uint64_t budget = kDefaultBudget);

/// D*: nonzero determinants of k x k matrices whose rows are drawn from the
/// given k-dimensional coordinate vectors.
ScalarSet determinant_set_star(const Field& f, std::span<const Vector> coords, std::size_t k,
                               std::uint64_t budget = kDefaultBudget);

/// D*_{P,k} with coordinates taken in the canonical RREF basis of h.
ScalarSet determinant_set_star(const PointSet& p, const Subspace& h, std::uint64_t budget = kDefaultBudget);

/// D*_{P,k} with coordinates taken in an arbitrary basis of the span.
ScalarSet determinant_set_star(const PointSet& p, std::span<const Vector> basis,
                               std::uint64_t budget = kDefaultBudget);

/// g_E: multiplicity of each wedge value over ordered (d-1)-tuples of E.
struct WedgeCounter {
    std::size_t dim = 0;
    std::map<Vector, std::uint64_t> counts;

    std::uint64_t at(const Vector& x) const;
    std::uint64_t total() const;
};

WedgeCounter wedge_counter(const PointSet& e, std::uint64_t budget = kDefaultBudget);

/// One term of the hyperplane decomposition of F*_E.
struct HyperplaneTerm {
    Subspace plane;
    /// Wedge of the plane's canonical basis; spans the plane's normal line.
    Vector normal;
    std::size_t intersection = 0;
    ScalarSet dstar;
};

/// For every H in G(d-1, d): |E cap H| and D*_{E cap H, d-1}. Then
/// F*_E cap span(normal_H) = { delta * normal_H : delta in D* }.
std::vector<HyperplaneTerm> hyperplane_decomposition(const PointSet& e, std::uint64_t budget = kDefaultBudget);

/// F*_E: nonzero wedge values of (d-1)-tuples of E.
VectorSet cross_product_set(const PointSet& e, CrossMode mode, std::uint64_t budget = kDefaultBudget);

/// E . F = {u . v}; zero is kept.
ScalarSet dot_product_set(const PointSet& e, const PointSet& f);

/// nu_{t,B}(E, F) for every t, with deviations stored as q*nu_t - |E||F|.
struct CountTable {
    Matrix gram;
    std::uint32_t q = 0;
    std::size_t dim = 0;
    std::uint64_t e_size = 0;
    std::uint64_t f_size = 0;
    std::vector<std::uint64_t> counts;
    std::vector<std::int64_t> scaled_deviation;

    /// |E||F| / q.
    Rational main_term() const;
    std::uint64_t total() const;
    /// (q nu_t - |E||F|)^2 <= |E||F| q^{d+1}, the scaled incidence bound.
    bool deviation_bound_holds(Elem t) const;
};

CountTable incidence_count(const PointSet& e, const PointSet& f, const BilinearForm& b);

/// B*(E) = {B(x, y) : x, y in E} \ {0}, for E in F_q^2.
ScalarSet bstar(const PointSet& e, const BilinearForm& b);

} // namespace volset
