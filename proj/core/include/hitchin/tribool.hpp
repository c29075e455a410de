#pragma once

#include <string_view>

namespace hitchin {

/// Three-valued truth for statements that can run out of working precision.
enum class Tribool { False, True, Unknown };

constexpr Tribool to_tribool(bool b) noexcept { return b ? Tribool::True : Tribool::False; }

constexpr Tribool operator&&(Tribool a, Tribool b) noexcept {
    if (a == Tribool::False || b == Tribool::False) {
        return Tribool::False;
    }
    if (a == Tribool::Unknown || b == Tribool::Unknown) {
        return Tribool::Unknown;
    }
    return Tribool::True;
}

constexpr Tribool operator||(Tribool a, Tribool b) noexcept {
    if (a == Tribool::True || b == Tribool::True) {
        return Tribool::True;
    }
    if (a == Tribool::Unknown || b == Tribool::Unknown) {
        return Tribool::Unknown;
    }
    return Tribool::False;
}

constexpr Tribool operator!(Tribool a) noexcept {
    switch (a) {
        case Tribool::False: return Tribool::True;
        case Tribool::True: return Tribool::False;
        default: return Tribool::Unknown;
    }
}

constexpr std::string_view to_string(Tribool t) noexcept {
    switch (t) {
        case Tribool::False: return "false";
        case Tribool::True: return "true";
        default: return "unknown";
    }
}

}  // namespace hitchin
