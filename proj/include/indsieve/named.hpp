#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "indsieve/graph.hpp"

namespace indsieve {

namespace named {

struct Empty { int n = 0; };
struct Complete { int n = 0; };
struct Path { int n = 0; };
/// n = 0 or n >= 3.
struct Cycle { int n = 0; };
struct CompleteBipartite { int a = 0; int b = 0; };
struct Petersen {};
struct HoffmanSingleton {};
/// k disjoint copies of K_{r,r}; r >= 1.
struct KRRCopies { int k = 0; int r = 1; };
struct DisjointUnion;

}  // namespace named

struct NamedGraph;

namespace named {
struct DisjointUnion { std::vector<NamedGraph> parts; };
}  // namespace named

struct NamedGraph {
  std::variant<named::Empty, named::Complete, named::Path, named::Cycle, named::CompleteBipartite, named::Petersen,
               named::HoffmanSingleton, named::DisjointUnion, named::KRRCopies>
      kind;
};

/// Builds the graph; Petersen and Hoffman-Singleton are validated (regularity,
/// girth 5, diameter 2) and a failed check throws std::logic_error.
Graph build_named(const NamedGraph& spec);

/// Parses the command-line grammar:
///   empty:N  complete:N  path:N  cycle:N  kbip:A,B  kAB (two digits)
///   petersen  hoffman-singleton  krr-copies:K,R  and  X+Y+... for disjoint unions.
/// Throws std::invalid_argument on anything else.
NamedGraph parse_named(std::string_view text);

/// Canonical text form accepted by parse_named.
std::string describe(const NamedGraph& spec);

}  // namespace indsieve
