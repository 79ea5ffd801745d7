#pragma once

// Text formats.
//
// Instance:
//   udg 1
//   # free-form comment lines (seed=..., spec=...)
//   n <count>
//   s <x> <y>
//   t <x> <y>
//   <x> <y>            (n lines)
//
// Result:
//   udg-result 1
//   kind sssp | separation
//   sssp:        root <r>, then n lines "<dist> <parent>" (-1 for none)
//   separation:  size <k> | size INFEASIBLE
//                witness <root> <p> <q>        (when feasible)
//                cycle <v0> <v1> ...           (when feasible)
//
// Numbers use the shortest decimal that round-trips.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "udg/datagen.hpp"
#include "udg/geom.hpp"
#include "udg/separation.hpp"
#include "udg/sssp.hpp"

namespace udg {

std::string format_double(double v);

struct Instance {
    PointSet points;
    Point s;
    Point t;
    std::vector<std::string> comments;  // without the leading "# "
};

Instance to_instance(const GeneratedInstance& gen);

void write_instance(std::ostream& out, const Instance& inst);
/// Throws ParseError.
Instance read_instance(std::istream& in);
Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Instance& inst);

struct ResultFile {
    enum class Kind { sssp, separation } kind = Kind::sssp;
    ShortestPathResult tree;                 // kind == sssp
    SeparationAnswer separation;             // kind == separation
    std::vector<index_type> cycle;           // kind == separation
};

void write_result(std::ostream& out, const ResultFile& result);
/// Throws ParseError.
ResultFile read_result(std::istream& in);

// One benchmark row:
//   algorithm,instance,n,preprocess_s,per_root_s,roots,answer_digest
struct BenchRecord {
    std::string algorithm;
    std::string instance;
    std::size_t n = 0;
    double preprocess_seconds = 0.0;
    double per_root_seconds = 0.0;
    std::size_t roots = 0;
    std::uint64_t answer_digest = 0;
};

const char* bench_csv_header() noexcept;
std::string to_csv_row(const BenchRecord& rec);

/// Order-independent digest of a multiset of values: sum of mixed hashes.
std::uint64_t digest_value(std::uint64_t value) noexcept;
std::uint64_t digest_distances(const ShortestPathResult& spr) noexcept;
std::uint64_t digest_separation(const SeparationAnswer& answer) noexcept;

}  // namespace udg
