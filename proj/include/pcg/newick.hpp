#pragma once

#include "pcg/weighted_tree.hpp"

#include <string>

namespace pcg {

// Newick with branch lengths. Leaf labels are v<k> and map to graph vertex
// k; branch lengths are integers or p/q fractions (no decimals). A label
// after the outermost group marks the root itself as a leaf, which is how
// two-node trees are written: "(v1:2)v0;".
WeightedTree newick_parse(const std::string& text);

// Serializes rooted at tree.root(). Weights come out as integers or p/q;
// parse(serialize(t)) has the same leaf metric as t, and
// serialize(parse(s)) == s up to whitespace.
std::string newick_serialize(const WeightedTree& tree);

}  // namespace pcg
