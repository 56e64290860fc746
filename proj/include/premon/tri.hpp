#pragma once

#include <cstdint>
#include <string_view>

namespace premon {

/// Bounded truth value. `Unknown` means the search budget ran out before a
/// certificate was found either way; `True` and `False` are always certified.
enum class Tri : std::uint8_t { False, True, Unknown };

constexpr Tri to_tri(bool b) noexcept { return b ? Tri::True : Tri::False; }

constexpr bool is_definite(Tri t) noexcept { return t != Tri::Unknown; }

constexpr Tri operator!(Tri t) noexcept {
  switch (t) {
    case Tri::True: return Tri::False;
    case Tri::False: return Tri::True;
    default: return Tri::Unknown;
  }
}

// Kleene conjunction / disjunction.
constexpr Tri operator&&(Tri a, Tri b) noexcept {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::True && b == Tri::True) return Tri::True;
  return Tri::Unknown;
}

constexpr Tri operator||(Tri a, Tri b) noexcept {
  if (a == Tri::True || b == Tri::True) return Tri::True;
  if (a == Tri::False && b == Tri::False) return Tri::False;
  return Tri::Unknown;
}

constexpr std::string_view to_string(Tri t) noexcept {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "unknown";
  }
}

Tri tri_from_string(std::string_view s);

}  // namespace premon
