#ifndef GARNIER_VARS_HPP
#define GARNIER_VARS_HPP

#include <array>
#include <string_view>

namespace garnier {

// Fixed ring: Q[q1,p1,q2,p2,t,s,k0,k1,kinf,th1,th2].
// The index order below is global and immutable; every Monomial, every
// substitution map and every evaluation point uses it.
inline constexpr int kNumVars = 11;

namespace var {
inline constexpr int q1 = 0;
inline constexpr int p1 = 1;
inline constexpr int q2 = 2;
inline constexpr int p2 = 3;
inline constexpr int t = 4;
inline constexpr int s = 5;
inline constexpr int k0 = 6;
inline constexpr int k1 = 7;
inline constexpr int kinf = 8;
inline constexpr int th1 = 9;
inline constexpr int th2 = 10;
} // namespace var

inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "q1", "p1", "q2", "p2", "t", "s", "k0", "k1", "kinf", "th1", "th2"};

// -1 if the name is not a variable.
int var_index(std::string_view name);

// Phase variables q1,p1,q2,p2.
inline constexpr std::array<int, 4> kPhaseVars = {var::q1, var::p1, var::q2,
                                                  var::p2};
// Parameter slots in catalog order (k0,k1,kinf,th1,th2).
inline constexpr std::array<int, 5> kParamVars = {var::k0, var::k1, var::kinf,
                                                  var::th1, var::th2};

} // namespace garnier

#endif
