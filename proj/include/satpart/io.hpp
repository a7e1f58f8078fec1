#ifndef SATPART_IO_HPP
#define SATPART_IO_HPP

#include <string>

#include "satpart/instance.hpp"
#include "satpart/reductions.hpp"

namespace satpart {

// Instance text format, one directive per line ('c' lines are comments):
//   p <n> <m>        header, first
//   e <u> <v>        m edge lines (0-based)
//   tri <v>          vertex forced to V1
//   sq <v>           vertex forced to V2
//   pair <a> <b>     complementary pair
// MMO instances use 'e <u> <v> <w>' and one 'r <bound>' line instead of the
// constraint directives. Orientations are 'o <tail> <head>' lines, one per
// instance edge in any order.

FscInstance parse_instance(const std::string& text);
std::string serialize_instance(const FscInstance& inst);  // canonical: sorted directives

MmoInstance parse_mmo(const std::string& text);
std::string serialize_mmo(const MmoInstance& m);  // edges in stored order

Orientation parse_orientation(const std::string& text, const MmoInstance& m);
std::string serialize_orientation(const MmoInstance& m, const Orientation& o);

// Witness JSON: {"one":[...],"two":[...]} with sorted vertex lists.
std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& text, int n);

// Name-table sidecar JSON for reductions.
std::string reduction_map_to_json(const ReductionMap& map);
ReductionMap reduction_map_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace satpart

#endif
