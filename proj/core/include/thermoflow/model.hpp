#pragma once

#include "thermoflow/potential.hpp"
#include "thermoflow/suspension.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thermoflow {

// Parsed model file: one shift plus named potential, roof and fiber blocks.
//
// Line format (blank lines and '#' comments are ignored):
//   sft n <N>
//   row <b1> ... <bN>            (N lines, 0/1 entries)
//   potential <name> depth <k>
//   <word> <value>               (one line per admissible k-word)
//   roof <name> depth <k>        (same layout, values must be positive)
//   fiber <name> depth <k>
//   <word> <c0> [c1 ...]         (polynomial coefficients in the flow time)
// Words are written with 1-based symbols: digit strings for alphabets up to
// 9 symbols, dot-separated numbers beyond that.
struct ModelFile {
    std::optional<Sft> sft;
    std::vector<std::pair<std::string, LcPotential>> potentials;
    std::vector<std::pair<std::string, Roof>> roofs;
    std::vector<std::pair<std::string, FiberPotential>> fibers;

    const LcPotential& potential(const std::string& name) const;
    const Roof& roof(const std::string& name) const;
    const FiberPotential& fiber(const std::string& name) const;
};

// Throws ParseError (with a line number) on malformed input and propagates
// validation errors (bad matrices, non-positive roofs, ...) unchanged.
ModelFile parse_model(const std::string& text);

// Canonical text form; parse_model(print_model(m)) reproduces m exactly.
std::string print_model(const ModelFile& m);

// FNV-1a 64-bit digest of the raw model text, used in report headers.
std::uint64_t fnv1a64(const std::string& data);

// Formatting used everywhere a real is printed: 17 significant digits,
// round-half-even, so the text reparses to the identical double.
std::string format17(double x);

} // namespace thermoflow
