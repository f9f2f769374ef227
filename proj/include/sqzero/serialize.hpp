#ifndef SQZERO_SERIALIZE_HPP
#define SQZERO_SERIALIZE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sqzero/conjecture.hpp"
#include "sqzero/involution.hpp"
#include "sqzero/poset.hpp"
#include "sqzero/poly_matrix.hpp"

namespace sqz {

using json = nlohmann::json;

/// Key-sorted, two-space indented, newline-terminated.
std::string dump(const json& j);

json to_json(const PartialPermutationMatrix& p);
PartialPermutationMatrix partial_permutation_from_json(const json& j);

json to_json(const Scalar& s);
json to_json(const std::vector<Involution>& list);

/// {"n":N, "r":r, "field":{"kind":"Fp","p":101}|{"kind":"Q"}, "entries":[...], "d":[...]?}
struct MatrixFile {
    PolyMatrix matrix;
    std::optional<std::vector<int>> degrees;
};
MatrixFile matrix_file_from_json(const json& j);
json to_json(const PolyMatrix& m, const std::optional<std::vector<int>>& degrees = std::nullopt);

/// Constant prime-field matrix from a matrix file with constant entries.
ModMatrix constant_mod_matrix(const PolyMatrix& m);

json to_json(const ConditionResult& c);
json to_json(const InequalityResult& q);
json to_json(const FlagReport& f);
json to_json(const ConditionReport& r);
/// Consolidated report; counterexample candidates carry a "replay" bundle.
json to_json(const Verification& v, const ConjectureInstance& inst);

/// Hand transcription of a Hasse diagram: {"levels": [[...], ...], "edges": [[parent, child], ...]}.
struct GoldenHasse {
    std::vector<std::vector<Involution>> levels;
    std::vector<std::pair<Involution, Involution>> edges;
};
GoldenHasse golden_from_json(const json& j);

struct GoldenComparison {
    bool levels_match = false;
    std::vector<std::string> level_diffs;
    bool maximal_match = false;
    bool ancestors_unique = false;
    std::size_t ancestor_violations = 0;
    std::size_t golden_edges = 0;
    std::size_t computed_covers = 0;
    /// Golden edges that are not covers of the computed order.
    std::vector<std::pair<Involution, Involution>> golden_only;
    /// Of those, edges that are not even relations of the order.
    std::vector<std::pair<Involution, Involution>> golden_not_related;
    /// Computed covers absent from the golden drawing.
    std::vector<std::pair<Involution, Involution>> computed_only;

    /// Level sets, maximal set and ancestor uniqueness; the edge diff is diagnostic.
    bool hard_pass() const { return levels_match && maximal_match && ancestors_unique; }
};
GoldenComparison compare_with_golden(const PosetDag& dag_iii, const GoldenHasse& golden);
json to_json(const GoldenComparison& c);

} // namespace sqz

#endif // SQZERO_SERIALIZE_HPP
