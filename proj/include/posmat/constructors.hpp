#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "posmat/matroid.hpp"

namespace posmat {

class LinearOrder;

// "1", "2", ..., "n" (offset by start-1).
std::vector<std::string> numeric_labels(int n, int start = 1);

// Builds the rank table by evaluating rank on every subset.
Matroid from_rank_function(std::vector<std::string> labels, const std::function<int(Mask)>& rank);
// Builds the rank table from an independence predicate (must be a matroid).
Matroid from_independence(std::vector<std::string> labels, const std::function<bool(Mask)>& independent);

Matroid uniform(int r, int n);
Matroid uniform(int r, std::vector<std::string> labels);

// Edge i joins vertices edges[i].first and edges[i].second.
Matroid cycle_matroid(int vertices, const std::vector<std::pair<int, int>>& edges,
                      std::vector<std::string> labels = {});
// Wheel with n spokes. Label 2i-1 is the i-th spoke and 2i the rim edge after it,
// so {2i-1, 2i, 2i+1} (indices mod 2n) are the triangles.
Matroid wheel(int n);
Mask wheel_rim(int n);
Matroid whirl(int n);

// Transversal matroid of a set system given as masks over `labels`.
Matroid transversal(std::vector<std::string> labels, const std::vector<Mask>& sets);
// Nested matroid: bases are the sets Gale-above `lower` in `ord`.
Matroid nested(std::vector<std::string> labels, Mask lower, const LinearOrder& ord);

// Checks Z0..Z3; throws AxiomError naming the violated axiom and pair.
void validate_cyclic_flats(int n, const std::vector<RankedSet>& family);
Matroid from_cyclic_flats(std::vector<std::string> labels, const std::vector<RankedSet>& family);

// Removes x from the cyclic-flat family (loopless, coloopless M; x a proper nonempty
// cyclic flat comparable to no other proper nonempty cyclic flat).
Matroid relax(const Matroid& m, Mask x);
Matroid truncate(const Matroid& m, int k);

Matroid principal_extension(const Matroid& m, Mask x, const std::string& e);
Matroid free_extension(const Matroid& m, const std::string& e);
Matroid parallel_extension(const Matroid& m, int f, const std::string& e);
Matroid series_extension(const Matroid& m, int f, const std::string& e);

// Parallel and series connection along the single common label.
Matroid parallel_connection(const Matroid& m, const Matroid& n);
Matroid series_connection(const Matroid& m, const Matroid& n);

}  // namespace posmat
