#ifndef SQZERO_PROJECTIVE_HPP
#define SQZERO_PROJECTIVE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqzero/poly.hpp"

namespace sqz {

/// A point of P^{r-1}, scaled so its first nonzero coordinate is 1.
class ProjectivePoint {
public:
    /// Normalizes; throws InputError on the all-zero tuple.
    ProjectivePoint(std::vector<Scalar> coords, const FieldSpec& field);

    const std::vector<Scalar>& coords() const { return coords_; }
    std::string to_string() const;  // "(0:1)"

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    std::vector<Scalar> coords_;
};

/// Bound on p^(r-1) points scanned in one search.
inline constexpr std::int64_t kMaxProjectiveScan = 100'000'000;

/// Scans P^{r-1}(F_p) for a common zero of homogeneous nonconstant polynomials.
///
/// Points are visited by position of the leading one, then lexicographically.
/// An empty result only means no root exists over F_p; it says nothing about
/// the algebraic closure. Requires r <= 4 and p <= 10^4.
std::optional<ProjectivePoint> find_common_projective_root(std::span<const Poly> fs, const FieldSpec& field);

} // namespace sqz

#endif // SQZERO_PROJECTIVE_HPP
