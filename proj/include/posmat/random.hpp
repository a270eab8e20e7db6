#pragma once

#include <random>
#include <string>
#include <vector>

#include "posmat/matroid.hpp"
#include "posmat/order.hpp"

namespace posmat {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);  // inclusive
Mask random_subset(Rng& rng, int n, double p = 0.5);
Mask random_k_subset(Rng& rng, int n, int k);
LinearOrder random_order(Rng& rng, int n);

// Grows a cyclic-flat family one random set at a time, keeping only insertions that
// satisfy the axioms. The least cyclic flat is empty, so the result is loopless.
Matroid random_cyclic_flat_matroid(Rng& rng, int n);
Matroid random_transversal(Rng& rng, int n);
// Column matroid of a random matrix over GF(p), p prime.
Matroid random_gfp(Rng& rng, int n, int p);
// Transversal matroid of intervals [a_i, b_i] with both ends increasing; a positroid
// under the natural order.
Matroid random_lattice_path(Rng& rng, int n);
// Necklace matroid of a random matroid along a random order; always a positroid.
Matroid random_positroid(Rng& rng, int n);
// Mixture of the generators above plus uniform matroids and direct sums.
Matroid random_matroid(Rng& rng, int n);

// Relabels so that `shared` gets labels t1..tk (in increasing index order) and every
// other element gets prefix followed by a running number.
Matroid label_with_shared(const Matroid& m, Mask shared, const std::string& prefix);

// Loopless positroid with k independent clones, labelled t1..tk; the rest are
// labelled prefix1, prefix2, ... Retries until the sample qualifies.
Matroid positroid_with_clones(Rng& rng, int n, int k, const std::string& prefix);

}  // namespace posmat
