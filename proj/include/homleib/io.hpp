#pragma once

#include "homleib/cohomology.hpp"
#include "homleib/deform.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace homleib {

// Everything a single instance file can carry. The cochain and pair default
// to adjoint-shaped coefficients when no rep section is present.
struct Instance {
    QLMObject object;
    std::optional<QLMRepresentation> rep;
    std::optional<Cochain2> cochain;
    std::optional<NijenhuisPair> pair;
    std::uint64_t digest = 0; // FNV-1a over the canonical serialization
};

// Strict parse: unknown keys, shape mismatches and malformed rationals all
// throw InputError naming the offending field.
Instance parseInstance(const std::string &path);
Instance parseInstanceText(const std::string &text, const std::string &where);

// The representation a command should use: the file's rep section when
// present, the adjoint representation otherwise.
QLMRepresentation effectiveRep(const Instance &inst);

std::string digestToHex(std::uint64_t d);

} // namespace homleib
