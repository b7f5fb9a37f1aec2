#pragma once

#include <string>

#include "loopcoprod/homology.hpp"
#include "loopcoprod/loopspace.hpp"
#include "loopcoprod/maps.hpp"

namespace loopcoprod {

// Group table document: {"name": string, "order": N, "table": N x N row-major}.
// The identity may sit at any index; loading renormalizes it to g0.
GroupPtr group_from_json(const std::string& text);
std::string group_to_json(const FiniteGroup& g);
GroupPtr load_group_file(const std::string& path);

// Textual group selector: trivial | cyclic:M | quaternion:4M | file:PATH.
// "infinite" yields a null pointer, standing for a declared-infinite
// fundamental group.
GroupPtr group_from_spec(const std::string& spec);

// Map document: {"kind": "covering" | "sphere_self_map",
//                "source_n": N, "target_group": spec, "degree": D}.
// target_group only for coverings, degree only for self maps.
MapData map_from_json(const std::string& text);
MapData load_map_file(const std::string& path);

// Stable JSON renderings; keys sorted, terms in canonical order, integers
// that can exceed machine words carried as strings.
std::string space_to_json(const SpaceSpec& space);
std::string coproduct_to_json(const LoopClass& a, const TensorClass& t);
std::string laurent_coproduct_to_json(const std::string& variant, const LaurentClass& a,
                                      const LaurentTensor& t);
std::string graded_to_json(const GradedAbelianGroup& h);
std::string loop_table_to_json(const LoopSpaceTable& t);

std::string graded_to_markdown(const GradedAbelianGroup& h);
std::string loop_table_to_markdown(const LoopSpaceTable& t);

}  // namespace loopcoprod
