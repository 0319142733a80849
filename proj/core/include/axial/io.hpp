#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/axet.hpp"
#include "axial/fusion.hpp"
#include "axial/permutation.hpp"

namespace axial {

struct AxisRecord {
  std::string law_tag;  // "m:1/4:1/32", "j:1/4", "assoc" or "custom"
  Vec vector;
};

// Line-oriented algebra file:
//
//   axial-algebra 1
//   name 3C            (optional)
//   dim 3
//   labels a b c       (optional)
//   products           i j k value, 1-based, i <= j
//   1 2 3 -1/32
//   end
//   gram               lower triangle, one row per line (optional)
//   1
//   1/64 1
//   end
//   unit 1 1 1         (optional)
//   axes               law tag then coordinates (optional)
//   m:1/4:1/32 1 0 0
//   end
//   law custom         (optional; fusion table for the tag "custom")
//   values 1 0 1/4
//   star 1 1/4 : 1/4   (a b : values of a*b; nothing after ':' is empty)
//   end
//
// '#' starts a comment. Errors are ValidationError with the line number.
struct AlgebraFile {
  std::optional<std::string> name;
  Algebra algebra;
  std::vector<AxisRecord> axes;
  std::optional<FusionLaw> law;
};

AlgebraFile parse_algebra(std::string_view text);
AlgebraFile read_algebra_file(const std::string& path);
std::string emit_algebra(const AlgebraFile& f);
std::string emit_algebra(const Algebra& alg);

// "m:a:b", "j:e", "assoc", "custom" (the file's law) or a path to a file
// holding a single law section.
FusionLaw parse_law_spec(const std::string& spec, const std::optional<FusionLaw>& file_law = std::nullopt);
FusionLaw parse_law_text(std::string_view text);
std::string emit_law(const FusionLaw& law);

// Axis records verified through check_axis (primitivity not required).
std::vector<Axis> load_axes(const AlgebraFile& f);

// Group file: "degree N", one or more "gen <cycles>", one "class <cycles>"
// naming a representative of the class of 3-transpositions.
struct GroupFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  Permutation representative;
};

GroupFile parse_group(std::string_view text);
GroupFile read_group_file(const std::string& path);

// Pair reference rows, one per line:
//   pair 2A dim 3 order 2 form 1/8 length 12/5 zero 0
// Every key after the label is optional.
std::vector<PairRow> parse_pair_reference(std::string_view text);
std::vector<PairRow> read_pair_reference(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace axial
