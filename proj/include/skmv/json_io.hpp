#pragma once

// JSON serialization for every library object, plus the payload builders the
// command-line tool dispatches to.  All output is deterministic: object keys
// are emitted in sorted order and every container is canonically ordered
// upstream.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skmv/cluster.hpp"
#include "skmv/coalgebra.hpp"
#include "skmv/galleries.hpp"
#include "skmv/hall.hpp"
#include "skmv/paths.hpp"
#include "skmv/polytopes.hpp"
#include "skmv/weights.hpp"

namespace skmv {

using json = nlohmann::json;

// --- elementary serializers ------------------------------------------------

/// Fundamental-weight coordinates as a plain integer array.
[[nodiscard]] json weight_json(const Weight& v);

/// {"n": rank, "vertices": [[ints]]} with vertices sorted lexicographically.
[[nodiscard]] json polytope_json(const LatticePolytope& P);

/// {"level", "vertices", "arrows"}; arrows carry 0-based vertex indices.
[[nodiscard]] json chain_json(const Chain& c);

/// {"face", "pi", "rank", "word"} with pi as its 1-based image list.
[[nodiscard]] json quadruple_json(const Quadruple& X);

/// [{"folded": bool, "root": [ints]}] in step order.
[[nodiscard]] json gallery_steps_json(const FoldedGallery& g);

// --- CLI payloads ------------------------------------------------------------

/// All fundamental chains: {"chains": [...], "n": n}.
[[nodiscard]] json chains_payload(int n);

/// Path polytope of a path literal, in the polytope format.
[[nodiscard]] json pol_payload(int n, const std::string& path_text);

/// Minkowski sum of the path polytopes of two path literals.
[[nodiscard]] json minkowski_payload(int n, const std::string& path_text_a,
                                     const std::string& path_text_b);

/// Comultiplication of a monomial literal: {"n", "terms"} with terms
/// {"coeff", "left", "right"}, sides as sorted matrix-label lists [[i,j]].
[[nodiscard]] json comult_payload(int n, const std::string& monomial_text);

/// Hall product of two object literals: {"n", "terms"} with terms
/// {"coeff", "object"} in canonical object order.
[[nodiscard]] json hall_product_payload(int n, const std::string& text_a,
                                        const std::string& text_b);

/// {"n", "serre": bool}.
[[nodiscard]] json hall_serre_payload(int n);

/// Dual comultiplication of an interval literal "[h,j]": {"interval", "n",
/// "terms"} with terms {"coeff", "left", "right"}, absent sides null.
[[nodiscard]] json hall_delta_payload(int n, const std::string& interval_text);

/// Standard-quadruple gallery: {"character_quiver", "n", "quadruple",
/// "steps"}; with positions given, adds a "projection" block holding the
/// span-closure flat of those positions, its transported simple roots, the
/// projected steps, and the decoded quadruple.
[[nodiscard]] json gallery_payload(int n,
                                   const std::optional<std::vector<int>>& project_positions);

/// Seed data: {"edges", "matrix", "n"}; edges in canonical order, each
/// {"kind", "label", "level", "polytope", "weight"}; matrix rows follow the
/// edge order.  Requires n >= 2 (BoundsError otherwise).
[[nodiscard]] json cluster_payload(int n);

/// Write the fixture documents for rank n into a directory (created when
/// missing); returns the file names written, in write order.
std::vector<std::string> write_fixtures(int n, const std::string& out_dir);

}  // namespace skmv
