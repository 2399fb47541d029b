// The alternating group A5 in a fixed canonical listing.
//
// Generators a = (0 1)(2 3) and b = (0 2 4) of the natural action satisfy
// a^2 = b^3 = (ab)^5 = 1. Element i is the value of the shortlex-least word
// in {a, b} that reaches it, where the word x1...xk denotes x1∘...∘xk.
// Index 0 is the identity, 1 is a, 2 is b. The tables below were produced
// by derive_a5() and are frozen.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cfpo {

namespace a5_const {

inline constexpr std::array<std::array<std::uint8_t, 5>, 60> kA5Natural{{
    {0,1,2,3,4}, {1,0,3,2,4}, {2,1,4,3,0}, {3,0,4,2,1},
    {1,2,3,4,0}, {4,1,0,3,2}, {0,3,2,4,1}, {4,0,1,2,3},
    {3,2,0,4,1}, {1,4,3,0,2}, {2,3,1,4,0}, {0,4,2,1,3},
    {2,3,4,0,1}, {0,2,1,4,3}, {3,4,2,0,1}, {3,2,4,1,0},
    {1,3,0,4,2}, {2,4,3,1,0}, {4,3,1,0,2}, {2,0,4,1,3},
    {4,3,0,2,1}, {2,4,1,0,3}, {4,2,0,1,3}, {3,1,4,0,2},
    {4,2,1,3,0}, {3,4,0,1,2}, {1,3,2,0,4}, {4,0,3,1,2},
    {0,3,1,2,4}, {0,2,3,1,4}, {4,1,2,0,3}, {1,2,0,3,4},
    {3,1,0,2,4}, {0,4,1,3,2}, {3,0,2,1,4}, {1,3,4,2,0},
    {2,0,1,3,4}, {1,4,0,2,3}, {2,1,3,0,4}, {0,2,4,3,1},
    {0,1,4,2,3}, {1,4,2,3,0}, {3,1,2,4,0}, {1,0,4,3,2},
    {0,4,3,2,1}, {2,0,3,4,1}, {1,0,2,4,3}, {4,1,3,2,0},
    {2,4,0,3,1}, {2,1,0,4,3}, {0,1,3,4,2}, {4,0,2,3,1},
    {3,4,1,2,0}, {3,0,1,4,2}, {4,2,3,0,1}, {1,2,4,0,3},
    {4,3,2,1,0}, {0,3,4,1,2}, {3,2,1,0,4}, {2,3,0,1,4},
}};

inline constexpr std::array<std::string_view, 60> kA5Words{
    "", "a", "b", "ab", "ba", "bb",
    "aba", "abb", "bab", "bba", "abab", "abba",
    "baba", "babb", "bbab", "ababa", "ababb", "abbab",
    "babab", "babba", "bbaba", "bbabb", "ababab", "ababba",
    "abbaba", "abbabb", "bababb", "babbab", "bbabab", "abababb",
    "ababbab", "abbabab", "bababba", "babbaba", "babbabb", "bbababb",
    "abababba", "ababbaba", "ababbabb", "abbababb", "bababbab", "babbabab",
    "bbababba", "abababbab", "ababbabab", "abbababba", "bababbaba", "bababbabb",
    "babbababb", "bbababbab", "abababbaba", "abababbabb", "ababbababb", "abbababbab",
    "babbababba", "bbababbaba", "ababbababba", "abbababbaba", "babbababbab", "ababbababbab",
};

inline constexpr std::array<std::array<std::uint8_t, 60>, 60> kA5Table{{
    {0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,47,48,49,50,51,52,53,54,55,56,57,58,59},
    {1,0,3,2,6,7,4,5,10,11,8,9,15,16,17,12,13,14,22,23,24,25,18,19,20,21,29,30,31,26,27,28,36,37,38,39,32,33,34,35,43,44,45,40,41,42,50,51,52,53,46,47,48,49,56,57,54,55,59,58},
    {2,4,5,8,9,0,12,13,14,1,18,19,20,21,3,25,26,27,28,22,6,7,11,32,33,34,35,29,10,17,40,41,42,36,15,16,24,46,47,48,49,43,23,31,45,54,55,50,51,30,38,39,53,58,44,37,57,59,52,56},
    {3,6,7,10,11,1,15,16,17,0,22,23,24,25,2,21,29,30,31,18,4,5,9,36,37,38,39,26,8,14,43,44,45,32,12,13,20,50,51,52,53,40,19,28,42,56,57,46,47,27,34,35,49,59,41,33,55,58,48,54},
    {4,2,8,5,12,13,9,0,18,19,14,1,25,26,27,20,21,3,11,32,33,34,28,22,6,7,17,40,41,35,29,10,24,46,47,48,42,36,15,16,31,45,54,49,43,23,38,39,53,58,55,50,51,30,57,59,44,37,56,52},
    {5,9,0,14,1,2,20,21,3,4,28,22,6,7,8,34,35,29,10,11,12,13,19,42,36,15,16,17,18,27,49,43,23,24,25,26,33,55,50,51,30,31,32,41,54,44,37,38,39,40,47,48,58,52,45,46,59,56,53,57},
    {6,3,10,7,15,16,11,1,22,23,17,0,21,29,30,24,25,2,9,36,37,38,31,18,4,5,14,43,44,39,26,8,20,50,51,52,45,32,12,13,28,42,56,53,40,19,34,35,49,59,57,46,47,27,55,58,41,33,54,48},
    {7,11,1,17,0,3,24,25,2,6,31,18,4,5,10,38,39,26,8,9,15,16,23,45,32,12,13,14,22,30,53,40,19,20,21,29,37,57,46,47,27,28,36,44,56,41,33,34,35,43,51,52,59,48,42,50,58,54,49,55},
    {8,12,13,18,19,4,25,26,27,2,11,32,33,34,5,7,17,40,41,28,9,0,1,24,46,47,48,35,14,3,31,45,54,42,20,21,6,38,39,53,58,49,22,10,23,57,59,55,50,29,15,16,30,56,43,36,37,52,51,44},
    {9,5,14,0,20,21,1,2,28,22,3,4,34,35,29,6,7,8,19,42,36,15,10,11,12,13,27,49,43,16,17,18,33,55,50,51,23,24,25,26,41,54,44,30,31,32,47,48,58,52,37,38,39,40,59,56,45,46,57,53},
    {10,15,16,22,23,6,21,29,30,3,9,36,37,38,7,5,14,43,44,31,11,1,0,20,50,51,52,39,17,2,28,42,56,45,24,25,4,34,35,49,59,53,18,8,19,55,58,57,46,26,12,13,27,54,40,32,33,48,47,41},
    {11,7,17,1,24,25,0,3,31,18,2,6,38,39,26,4,5,10,23,45,32,12,8,9,15,16,30,53,40,13,14,22,37,57,46,47,19,20,21,29,44,56,41,27,28,36,51,52,59,48,33,34,35,43,58,54,42,50,55,49},
    {12,8,18,13,25,26,19,4,11,32,27,2,7,17,40,33,34,5,1,24,46,47,41,28,9,0,3,31,45,48,35,14,6,38,39,53,54,42,20,21,10,23,57,58,49,22,15,16,30,56,59,55,50,29,37,52,43,36,44,51},
    {13,19,4,27,2,8,33,34,5,12,41,28,9,0,18,47,48,35,14,1,25,26,32,54,42,20,21,3,11,40,58,49,22,6,7,17,46,59,55,50,29,10,24,45,57,43,36,15,16,31,39,53,56,51,23,38,52,44,30,37},
    {14,20,21,28,22,9,34,35,29,5,19,42,36,15,0,13,27,49,43,10,1,2,4,33,55,50,51,16,3,8,41,54,44,23,6,7,12,47,48,58,52,30,11,18,32,59,56,37,38,17,25,26,40,57,31,24,46,53,39,45},
    {15,10,22,16,21,29,23,6,9,36,30,3,5,14,43,37,38,7,0,20,50,51,44,31,11,1,2,28,42,52,39,17,4,34,35,49,56,45,24,25,8,19,55,59,53,18,12,13,27,54,58,57,46,26,33,48,40,32,41,47},
    {16,23,6,30,3,10,37,38,7,15,44,31,11,1,22,51,52,39,17,0,21,29,36,56,45,24,25,2,9,43,59,53,18,4,5,14,50,58,57,46,26,8,20,42,55,40,32,12,13,28,35,49,54,47,19,34,48,41,27,33},
    {17,24,25,31,18,11,38,39,26,7,23,45,32,12,1,16,30,53,40,8,0,3,6,37,57,46,47,13,2,10,44,56,41,19,4,5,15,51,52,59,48,27,9,22,36,58,54,33,34,14,21,29,43,55,28,20,50,49,35,42},
    {18,25,26,11,32,12,7,17,40,8,1,24,46,47,13,0,3,31,45,41,19,4,2,6,38,39,53,48,27,5,10,23,57,54,33,34,9,15,16,30,56,58,28,14,22,37,52,59,55,35,20,21,29,44,49,42,36,51,50,43},
    {19,13,27,4,33,34,2,8,41,28,5,12,47,48,35,9,0,18,32,54,42,20,14,1,25,26,40,58,49,21,3,11,46,59,55,50,22,6,7,17,45,57,43,29,10,24,39,53,56,51,36,15,16,31,52,44,23,38,37,30},
    {20,14,28,21,34,35,22,9,19,42,29,5,13,27,49,36,15,0,4,33,55,50,43,10,1,2,8,41,54,51,16,3,12,47,48,58,44,23,6,7,18,32,59,52,30,11,25,26,40,57,56,37,38,17,46,53,31,24,45,39},
    {21,22,9,29,5,14,36,15,0,20,43,10,1,2,28,50,51,16,3,4,34,35,42,44,23,6,7,8,19,49,52,30,11,12,13,27,55,56,37,38,17,18,33,54,59,31,24,25,26,41,48,58,57,39,32,47,53,45,40,46},
    {22,21,29,9,36,15,5,14,43,10,0,20,50,51,16,1,2,28,42,44,23,6,3,4,34,35,49,52,30,7,8,19,55,56,37,38,11,12,13,27,54,59,31,17,18,33,48,58,57,39,24,25,26,41,53,45,32,47,46,40},
    {23,16,30,6,37,38,3,10,44,31,7,15,51,52,39,11,1,22,36,56,45,24,17,0,21,29,43,59,53,25,2,9,50,58,57,46,18,4,5,14,42,55,40,26,8,20,35,49,54,47,32,12,13,28,48,41,19,34,33,27},
    {24,17,31,25,38,39,18,11,23,45,26,7,16,30,53,32,12,1,6,37,57,46,40,8,0,3,10,44,56,47,13,2,15,51,52,59,41,19,4,5,22,36,58,48,27,9,21,29,43,55,54,33,34,14,50,49,28,20,42,35},
    {25,18,11,26,7,17,32,12,1,24,40,8,0,3,31,46,47,13,2,6,38,39,45,41,19,4,5,10,23,53,48,27,9,15,16,30,57,54,33,34,14,22,37,56,58,28,20,21,29,44,52,59,55,35,36,51,49,42,43,50},
    {26,32,12,40,8,18,46,47,13,25,45,41,19,4,11,39,53,48,27,2,7,17,24,57,54,33,34,5,1,31,56,58,28,9,0,3,38,52,59,55,35,14,6,23,37,49,42,20,21,10,16,30,44,50,22,15,51,43,29,36},
    {27,33,34,41,28,19,47,48,35,13,32,54,42,20,4,26,40,58,49,14,2,8,12,46,59,55,50,21,5,18,45,57,43,22,9,0,25,39,53,56,51,29,1,11,24,52,44,36,15,3,7,17,31,37,10,6,38,30,16,23},
    {28,34,35,19,42,20,13,27,49,14,4,33,55,50,21,2,8,41,54,43,22,9,5,12,47,48,58,51,29,0,18,32,59,44,36,15,1,25,26,40,57,52,10,3,11,46,53,56,37,16,6,7,17,45,30,23,24,39,38,31},
    {29,36,15,43,10,22,50,51,16,21,42,44,23,6,9,35,49,52,30,3,5,14,20,55,56,37,38,7,0,28,54,59,31,11,1,2,34,48,58,57,39,17,4,19,33,53,45,24,25,8,13,27,41,46,18,12,47,40,26,32},
    {30,37,38,44,31,23,51,52,39,16,36,56,45,24,6,29,43,59,53,17,3,10,15,50,58,57,46,25,7,22,42,55,40,18,11,1,21,35,49,54,47,26,0,9,20,48,41,32,12,2,5,14,28,33,8,4,34,27,13,19},
    {31,38,39,23,45,24,16,30,53,17,6,37,57,46,25,3,10,44,56,40,18,11,7,15,51,52,59,47,26,1,22,36,58,41,32,12,0,21,29,43,55,48,8,2,9,50,49,54,33,13,4,5,14,42,27,19,20,35,34,28},
    {32,26,40,12,46,47,8,18,45,41,13,25,39,53,48,19,4,11,24,57,54,33,27,2,7,17,31,56,58,34,5,1,38,52,59,55,28,9,0,3,23,37,49,35,14,6,16,30,44,50,42,20,21,10,51,43,22,15,36,29},
    {33,27,41,34,47,48,28,19,32,54,35,13,26,40,58,42,20,4,12,46,59,55,49,14,2,8,18,45,57,50,21,5,25,39,53,56,43,22,9,0,11,24,52,51,29,1,7,17,31,37,44,36,15,3,38,30,10,6,23,16},
    {34,28,19,35,13,27,42,20,4,33,49,14,2,8,41,55,50,21,5,12,47,48,54,43,22,9,0,18,32,58,51,29,1,25,26,40,59,44,36,15,3,11,46,57,52,10,6,7,17,45,53,56,37,16,24,39,30,23,31,38},
    {35,42,20,49,14,28,55,50,21,34,54,43,22,9,19,48,58,51,29,5,13,27,33,59,44,36,15,0,4,41,57,52,10,1,2,8,47,53,56,37,16,3,12,32,46,30,23,6,7,18,26,40,45,38,11,25,39,31,17,24},
    {36,29,43,15,50,51,10,22,42,44,16,21,35,49,52,23,6,9,20,55,56,37,30,3,5,14,28,54,59,38,7,0,34,48,58,57,31,11,1,2,19,33,53,39,17,4,13,27,41,46,45,24,25,8,47,40,18,12,32,26},
    {37,30,44,38,51,52,31,23,36,56,39,16,29,43,59,45,24,6,15,50,58,57,53,17,3,10,22,42,55,46,25,7,21,35,49,54,40,18,11,1,9,20,48,47,26,0,5,14,28,33,41,32,12,2,34,27,8,4,19,13},
    {38,31,23,39,16,30,45,24,6,37,53,17,3,10,44,57,46,25,7,15,51,52,56,40,18,11,1,22,36,59,47,26,0,21,29,43,58,41,32,12,2,9,50,55,48,8,4,5,14,42,49,54,33,13,20,35,27,19,28,34},
    {39,45,24,53,17,31,57,46,25,38,56,40,18,11,23,52,59,47,26,7,16,30,37,58,41,32,12,1,6,44,55,48,8,0,3,10,51,49,54,33,13,2,15,36,50,27,19,4,5,22,29,43,42,34,9,21,35,28,14,20},
    {40,46,47,45,41,32,39,53,48,26,24,57,54,33,12,17,31,56,58,27,8,18,25,38,52,59,55,34,13,11,23,37,49,28,19,4,7,16,30,44,50,35,2,1,6,51,43,42,20,5,0,3,10,36,14,9,15,29,21,22},
    {41,47,48,32,54,33,26,40,58,27,12,46,59,55,34,8,18,45,57,49,28,19,13,25,39,53,56,50,35,4,11,24,52,43,42,20,2,7,17,31,37,51,14,5,1,38,30,44,36,21,9,0,3,23,29,22,6,16,15,10},
    {42,35,49,20,55,50,14,28,54,43,21,34,48,58,51,22,9,19,33,59,44,36,29,5,13,27,41,57,52,15,0,4,47,53,56,37,10,1,2,8,32,46,30,16,3,12,26,40,45,38,23,6,7,18,39,31,11,25,24,17},
    {43,50,51,42,44,36,35,49,52,29,20,55,56,37,15,14,28,54,59,30,10,22,21,34,48,58,57,38,16,9,19,33,53,31,23,6,5,13,27,41,46,39,3,0,4,47,40,45,24,7,1,2,8,32,17,11,12,26,25,18},
    {44,51,52,36,56,37,29,43,59,30,15,50,58,57,38,10,22,42,55,53,31,23,16,21,35,49,54,46,39,6,9,20,48,40,45,24,3,5,14,28,33,47,17,7,0,34,27,41,32,25,11,1,2,19,26,18,4,13,12,8},
    {45,39,53,24,57,46,17,31,56,40,25,38,52,59,47,18,11,23,37,58,41,32,26,7,16,30,44,55,48,12,1,6,51,49,54,33,8,0,3,10,36,50,27,13,2,15,29,43,42,34,19,4,5,22,35,28,9,21,20,14},
    {46,40,45,47,39,53,41,32,24,57,48,26,17,31,56,54,33,12,25,38,52,59,58,27,8,18,11,23,37,55,34,13,7,16,30,44,49,28,19,4,1,6,51,50,35,2,0,3,10,36,43,42,20,5,15,29,14,9,22,21},
    {47,41,32,48,26,40,54,33,12,46,58,27,8,18,45,59,55,34,13,25,39,53,57,49,28,19,4,11,24,56,50,35,2,7,17,31,52,43,42,20,5,1,38,37,51,14,9,0,3,23,30,44,36,21,6,16,29,22,10,15},
    {48,54,33,58,27,41,59,55,34,47,57,49,28,19,32,53,56,50,35,13,26,40,46,52,43,42,20,4,12,45,37,51,14,2,8,18,39,30,44,36,21,5,25,24,38,29,22,9,0,11,17,31,23,15,1,7,16,10,3,6},
    {49,55,50,54,43,42,48,58,51,35,33,59,44,36,20,27,41,57,52,29,14,28,34,47,53,56,37,15,21,19,32,46,30,10,22,9,13,26,40,45,38,16,5,4,12,39,31,23,6,0,2,8,18,24,3,1,25,17,7,11},
    {50,43,42,51,35,49,44,36,20,55,52,29,14,28,54,56,37,15,21,34,48,58,59,30,10,22,9,19,33,57,38,16,5,13,27,41,53,31,23,6,0,4,47,46,39,3,1,2,8,32,40,45,24,7,12,26,17,11,18,25},
    {51,44,36,52,29,43,56,37,15,50,59,30,10,22,42,58,57,38,16,21,35,49,55,53,31,23,6,9,20,54,46,39,3,5,14,28,48,40,45,24,7,0,34,33,47,17,11,1,2,19,27,41,32,25,4,13,26,18,8,12},
    {52,56,37,59,30,44,58,57,38,51,55,53,31,23,36,49,54,46,39,16,29,43,50,48,40,45,24,6,15,42,33,47,17,3,10,22,35,27,41,32,25,7,21,20,34,26,18,11,1,9,14,28,19,12,0,5,13,8,2,4},
    {53,57,46,56,40,45,52,59,47,39,37,58,41,32,24,30,44,55,48,26,17,31,38,51,49,54,33,12,25,23,36,50,27,8,18,11,16,29,43,42,34,13,7,6,15,35,28,19,4,1,3,10,22,20,2,0,21,14,5,9},
    {54,48,58,33,59,55,27,41,57,49,34,47,53,56,50,28,19,32,46,52,43,42,35,13,26,40,45,37,51,20,4,12,39,30,44,36,14,2,8,18,24,38,29,21,5,25,17,31,23,15,22,9,0,11,16,10,1,7,6,3},
    {55,49,54,50,48,58,43,42,33,59,51,35,27,41,57,44,36,20,34,47,53,56,52,29,14,28,19,32,46,37,15,21,13,26,40,45,30,10,22,9,4,12,39,38,16,5,2,8,18,24,31,23,6,0,25,17,3,1,11,7},
    {56,52,59,37,58,57,30,44,55,53,38,51,49,54,46,31,23,36,50,48,40,45,39,16,29,43,42,33,47,24,6,15,35,27,41,32,17,3,10,22,20,34,26,25,7,21,14,28,19,12,18,11,1,9,13,8,0,5,4,2},
    {57,53,56,46,52,59,40,45,37,58,47,39,30,44,55,41,32,24,38,51,49,54,48,26,17,31,23,36,50,33,12,25,16,29,43,42,27,8,18,11,6,15,35,34,13,7,3,10,22,20,28,19,4,1,21,14,2,0,9,5},
    {58,59,55,57,49,54,53,56,50,48,46,52,43,42,33,40,45,37,51,35,27,41,47,39,30,44,36,20,34,32,24,38,29,14,28,19,26,17,31,23,15,21,13,12,25,16,10,22,9,4,8,18,11,6,5,2,7,3,0,1},
    {59,58,57,55,53,56,49,54,46,52,50,48,40,45,37,43,42,33,47,39,30,44,51,35,27,41,32,24,38,36,20,34,26,17,31,23,29,14,28,19,12,25,16,15,21,13,8,18,11,6,10,22,9,4,7,3,5,2,1,0},
}};

}  // namespace a5_const

inline constexpr std::size_t kA5Order = 60;

struct A5Model {
  using Index = std::uint8_t;
  static constexpr Index identity = 0, a = 1, b = 2;

  std::array<std::array<Index, 60>, 60> table{};  // table[i][j] = k iff e_i e_j = e_k
  std::array<std::array<std::uint8_t, 5>, 60> natural{};
  std::array<std::string, 60> words;
  std::array<Index, 60> inverse{};
  std::array<std::uint8_t, 60> order{};
  std::array<Index, 60> parent{};  // e_i = e_parent[i] * (letter[i] ? b : a), for i > 0
  std::array<std::uint8_t, 60> letter{};

  Index mul(Index i, Index j) const { return table[i][j]; }
};

namespace detail {

inline void fill_derived(A5Model& m) {
  for (std::size_t i = 0; i < 60; ++i) {
    for (std::size_t j = 0; j < 60; ++j)
      if (m.table[i][j] == A5Model::identity) m.inverse[i] = static_cast<A5Model::Index>(j);
    std::size_t k = 1;
    for (auto p = static_cast<A5Model::Index>(i); p != A5Model::identity; p = m.table[p][i]) ++k;
    m.order[i] = static_cast<std::uint8_t>(k);
    if (i == 0) continue;
    const std::string& w = m.words[i];
    std::size_t parent = 0;
    for (std::size_t q = 0; q < 60; ++q)
      if (m.words[q] == w.substr(0, w.size() - 1)) parent = q;
    m.parent[i] = static_cast<A5Model::Index>(parent);
    m.letter[i] = w.back() == 'b' ? 1 : 0;
  }
}

}  // namespace detail

/// Recomputes the listing from the presentation; used to pin the frozen tables.
inline A5Model derive_a5() {
  using P = std::array<std::uint8_t, 5>;
  auto mul = [](const P& x, const P& y) {
    P r{};
    for (int i = 0; i < 5; ++i) r[i] = x[y[i]];
    return r;
  };
  const P id{0, 1, 2, 3, 4}, a{1, 0, 3, 2, 4}, b{2, 1, 4, 3, 0};
  std::vector<P> el{id};
  std::vector<std::string> words{""};
  std::map<P, std::size_t> index{{id, 0}};
  for (std::size_t h = 0; h < el.size(); ++h)
    for (int l = 0; l < 2; ++l) {
      P n = mul(el[h], l ? b : a);
      if (index.emplace(n, el.size()).second) {
        el.push_back(n);
        words.push_back(words[h] + (l ? 'b' : 'a'));
      }
    }
  A5Model m;
  for (std::size_t i = 0; i < el.size(); ++i) {
    m.natural[i] = el[i];
    m.words[i] = words[i];
    for (std::size_t j = 0; j < el.size(); ++j) m.table[i][j] = static_cast<A5Model::Index>(index.at(mul(el[i], el[j])));
  }
  detail::fill_derived(m);
  return m;
}

inline const A5Model& canonical_a5() {
  static const A5Model model = [] {
    A5Model m;
    m.table = a5_const::kA5Table;
    m.natural = a5_const::kA5Natural;
    for (std::size_t i = 0; i < 60; ++i) m.words[i] = std::string(a5_const::kA5Words[i]);
    detail::fill_derived(m);
    return m;
  }();
  return model;
}

/// Elements of the subgroup generated by the given indices.
inline std::vector<A5Model::Index> a5_subgroup(const A5Model& m, std::vector<A5Model::Index> gens) {
  std::vector<bool> in(60, false);
  std::vector<A5Model::Index> out{A5Model::identity};
  in[A5Model::identity] = true;
  for (std::size_t h = 0; h < out.size(); ++h)
    for (auto g : gens) {
      auto n = m.mul(out[h], g);
      if (!in[n]) in[n] = true, out.push_back(n);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cfpo
