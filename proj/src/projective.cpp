#include "sqzero/projective.hpp"

#include "sqzero/error.hpp"

namespace sqz {

ProjectivePoint::ProjectivePoint(std::vector<Scalar> coords, const FieldSpec& field) : coords_(std::move(coords)) {
    std::size_t lead = 0;
    while (lead < coords_.size() && field.normalize(coords_[lead]) == 0)
        ++lead;
    if (lead == coords_.size())
        throw InputError("projective point needs a nonzero coordinate");
    const Scalar s = field.inv(field.normalize(coords_[lead]));
    for (Scalar& c : coords_)
        c = field.mul(c, s);
}

std::string ProjectivePoint::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out += (i ? ":" : "") + sqz::to_string(coords_[i]);
    return out + ")";
}

std::optional<ProjectivePoint> find_common_projective_root(std::span<const Poly> fs, const FieldSpec& field) {
    if (!field.is_prime())
        throw Unsupported("projective root search over Q: no finite enumeration");
    if (fs.empty())
        throw InputError("no polynomials given");
    const int r = fs.front().n_vars();
    for (const Poly& f : fs) {
        if (!(f.field() == field) || f.n_vars() != r)
            throw InputError("polynomials must share the field and variable count");
        const Homogeneity h = f.homogeneity();
        if (h.kind != Homogeneity::Kind::Degree)
            throw InputError("root search needs homogeneous input, got " + f.to_string());
        if (h.degree == 0)
            throw InputError("root search needs nonconstant input, got " + f.to_string());
    }
    if (r < 1 || r > 4)
        throw InputError("root search needs 1 <= r <= 4, got " + std::to_string(r));
    if (field.p() > 10'000)
        throw InputError("root search needs p <= 10^4");
    std::int64_t total = 0;
    for (int lead = 0; lead < r; ++lead) {
        std::int64_t block = 1;
        for (int k = lead + 1; k < r; ++k)
            block *= field.p();
        total += block;
    }
    if (total > kMaxProjectiveScan)
        throw InputError("projective scan of " + std::to_string(total) + " points exceeds the limit");

    const PrimeField pf = field.prime_field();
    std::vector<ModpPoly> compiled;
    for (const Poly& f : fs)
        compiled.emplace_back(f, pf);

    std::vector<std::int64_t> pt(static_cast<std::size_t>(r));
    for (int lead = 0; lead < r; ++lead) {
        std::fill(pt.begin(), pt.end(), 0);
        pt[static_cast<std::size_t>(lead)] = 1;
        for (;;) {
            bool all_zero = true;
            for (const ModpPoly& f : compiled) {
                if (f.eval(pt, pf) != 0) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) {
                std::vector<Scalar> coords;
                for (std::int64_t v : pt)
                    coords.emplace_back(static_cast<long>(v));
                return ProjectivePoint(std::move(coords), field);
            }
            // odometer over coordinates after the leading one, last fastest
            int k = r - 1;
            while (k > lead && ++pt[static_cast<std::size_t>(k)] == pf.p()) {
                pt[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k == lead)
                break;
        }
    }
    return std::nullopt;
}

} // namespace sqz
