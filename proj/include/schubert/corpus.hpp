#pragma once

#include <array>
#include <string_view>

namespace schubert {

/// A Thom polynomial as printed, in the expression grammar.
struct ThomTableEntry {
    std::string_view name;
    std::string_view polynomial;
    std::string_view source;
};

/// Thom polynomials of stable singularities between equal-dimensional manifolds, in c_i(R_n - R_m).
inline constexpr std::array<ThomTableEntry, 6> kClassicalThomTable{{
    {"A_3", "c1^3 + 3*c1*c2 + 2*c3", "morin"},
    {"A_4", "c1^4 + 6*c1^2*c2 + 2*c2^2 + 9*c1*c3 + 6*c4", "morin"},
    {"A_5", "c1^5 + 10*c1^3*c2 + 25*c1^2*c3 + 10*c1*c2^2 + 38*c1*c4 + 12*c2*c3 + 24*c5", "morin"},
    {"I_{2,2}", "c2^2 - c1*c3", "i_pq"},
    {"I_{2,3}", "2*c1*c2^2 - 2*c1^2*c3 + 2*c2*c3 - 2*c1*c4", "i_pq"},
    {"I_{2,4}", "2*c1^2*c2^2 + 3*c2^3 - 2*c1^3*c3 + 2*c1*c2*c3 - 3*c3^2 - 5*c1^2*c4 + 9*c2*c4 - 6*c1*c5", "i_pq"},
}};

/// Legendrian Thom polynomials in the basis Q~_mu v1^a v2^b, with the Lagrangian (v = 0) part as printed.
struct LegendrianTableEntry {
    std::string_view name;
    std::string_view expression;
    std::string_view lagrangian;
};

inline constexpr int kLegendrianTableRank = 4;

inline constexpr std::array<LegendrianTableEntry, 8> kLegendrianThomTable{{
    {"A_2", "q[1]", "q[1]"},
    {"A_3", "3*q[2] + v2*q[1]", "3*q[2]"},
    {"A_4", "12*q[3] + 3*q[2,1] + (3*v1 + 7*v2)*q[2] + (v1*v2 + v2^2)*q[1]", "12*q[3] + 3*q[2,1]"},
    {"D_4", "q[2,1]", "q[2,1]"},
    {"P_8", "q[3,2,1]", "q[3,2,1]"},
    {"A_5",
     "60*q[4] + 27*q[3,1] + (6*v1 + 16*v2)*q[2,1] + (39*v1 + 47*v2)*q[3] + (6*v1^2 + 22*v1*v2 + 12*v2^2)*q[2] + "
     "(2*v1^2*v2 + 3*v1*v2^2 + v2^3)*q[1]",
     "60*q[4] + 27*q[3,1]"},
    {"D_5", "6*q[3,1] + 4*v2*q[2,1]", "6*q[3,1]"},
    {"P_9", "12*q[4,2,1] + 12*v2*q[3,2,1]", "12*q[4,2,1]"},
}};

} // namespace schubert
