#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace coulomb {

// Interned polynomial variable. Identity is the intern id; the id order is
// the creation order, which fixes the monomial order deterministically for
// a given program run.
using VarId = std::uint32_t;
inline constexpr VarId kNoVar = 0xffffffffu;

namespace vars {

// Interns `name`, returning the existing id if already present.
VarId intern(std::string_view name);

// Id of an already-interned name, if any.
std::optional<VarId> lookup(std::string_view name);

const std::string& name(VarId id);

std::size_t count();

}  // namespace vars

}  // namespace coulomb
