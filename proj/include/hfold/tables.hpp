#pragma once

// Embedded reference tables: fiber tables of the foldings, the standard
// parity maps for H3 and H4, the E8 twist set, and the homotopy cycle for
// the longest word of H3. These copies are test oracles for the computed
// results; the computation never reads them as input.

#include "hfold/golden.hpp"

#include <array>
#include <string>
#include <vector>

namespace hfold::tables {

struct FiberRowH3 {
    std::array<const char*, 3> beta; // H3 base coordinates
    std::array<const char*, 2> alpha; // D6 roots, "e1-e2" style
};

inline const std::vector<FiberRowH3>& fiber_h3()
{
    static const std::vector<FiberRowH3> t = {
        {{"1", "0", "0"}, {"e1-e2", "e5+e6"}},
        {{"0", "1", "0"}, {"e2-e3", "e4-e5"}},
        {{"0", "0", "1"}, {"e5-e6", "e3-e4"}},
        {{"1", "1", "0"}, {"e1-e3", "e4+e6"}},
        {{"1", "1", "tau"}, {"e1-e4", "e3+e5"}},
        {{"1", "tau^2", "tau"}, {"e1-e5", "e2+e4"}},
        {{"1", "tau^2", "tau^2"}, {"e1-e6", "e2+e3"}},
        {{"0", "1", "tau"}, {"e2-e4", "e3-e6"}},
        {{"tau", "tau^2", "tau"}, {"e2+e6", "e1+e4"}},
        {{"tau", "2tau", "tau^2"}, {"e3+e4", "e1+e2"}},
        {{"0", "tau", "tau"}, {"e3-e5", "e2-e6"}},
        {{"tau", "tau", "tau"}, {"e3+e6", "e1+e5"}},
        {{"tau", "tau", "1"}, {"e4+e5", "e1+e6"}},
        {{"0", "tau", "1"}, {"e4-e6", "e2-e5"}},
        {{"tau", "tau^2", "tau^2"}, {"e2+e5", "e1+e3"}},
    };
    return t;
}

struct FiberRowH4 {
    std::array<const char*, 4> beta;   // H4 base coordinates
    std::array<std::array<int, 8>, 2> alpha; // E8 base coordinates
};

inline const std::vector<FiberRowH4>& fiber_h4()
{
    static const std::vector<FiberRowH4> t = {
        {{"0", "0", "0", "1"}, {{{0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0}}}},
        {{"0", "0", "1", "0"}, {{{0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0}}}},
        {{"0", "1", "0", "0"}, {{{1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0}}}},
        {{"1", "0", "0", "0"}, {{{0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1}}}},
        {{"0", "0", "tau", "1"}, {{{0, 0, 0, 1, 1, 0, 0, 0}, {0, 1, 1, 1, 0, 0, 0, 0}}}},
        {{"0", "0", "tau", "tau"}, {{{0, 0, 1, 1, 0, 0, 0, 0}, {0, 1, 1, 1, 1, 0, 0, 0}}}},
        {{"0", "0", "1", "tau"}, {{{0, 1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 0, 0, 0}}}},
        {{"0", "1", "1", "0"}, {{{1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1, 0, 0}}}},
        {{"1", "1", "0", "0"}, {{{1, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1, 0, 1}}}},
        {{"0", "tau", "tau", "1"}, {{{0, 0, 0, 1, 1, 1, 0, 0}, {1, 1, 1, 1, 0, 1, 0, 0}}}},
        {{"0", "tau", "tau", "tau"}, {{{0, 0, 1, 1, 0, 1, 0, 0}, {1, 1, 1, 1, 1, 1, 0, 0}}}},
        {{"0", "1", "1", "tau"}, {{{1, 1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0}}}},
        {{"1", "1", "1", "0"}, {{{1, 1, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 1, 0, 1}}}},
        {{"tau", "tau", "tau", "1"}, {{{0, 0, 0, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 0, 1, 1, 1}}}},
        {{"tau", "tau", "tau", "tau"}, {{{0, 0, 1, 1, 0, 1, 0, 1}, {1, 1, 1, 1, 1, 1, 1, 1}}}},
        {{"0", "tau", "tau^2", "tau"}, {{{0, 1, 1, 1, 0, 1, 0, 0}, {1, 1, 1, 2, 1, 1, 0, 0}}}},
        {{"0", "1", "tau^2", "tau"}, {{{1, 1, 1, 1, 0, 0, 0, 0}, {0, 1, 1, 2, 1, 1, 0, 0}}}},
        {{"1", "1", "1", "tau"}, {{{1, 1, 1, 0, 0, 0, 1, 0}, {0, 0, 1, 1, 1, 1, 0, 1}}}},
        {{"tau", "tau", "tau^2", "tau"}, {{{0, 1, 1, 1, 0, 1, 0, 1}, {1, 1, 1, 2, 1, 1, 1, 1}}}},
        {{"0", "tau", "2tau", "tau^2"}, {{{0, 0, 1, 2, 1, 1, 0, 0}, {1, 2, 2, 2, 1, 1, 0, 0}}}},
        {{"0", "tau", "tau^2", "tau^2"}, {{{0, 1, 1, 1, 1, 1, 0, 0}, {1, 1, 2, 2, 1, 1, 0, 0}}}},
        {{"0", "1", "tau^2", "tau^2"}, {{{1, 1, 1, 1, 1, 0, 0, 0}, {0, 1, 2, 2, 1, 1, 0, 0}}}},
        {{"1", "1", "tau^2", "tau"}, {{{1, 1, 1, 1, 0, 0, 1, 0}, {0, 1, 1, 2, 1, 1, 0, 1}}}},
        {{"tau", "tau", "2tau", "tau^2"}, {{{0, 0, 1, 2, 1, 1, 0, 1}, {1, 2, 2, 2, 1, 1, 1, 1}}}},
        {{"tau", "tau", "tau^2", "tau^2"}, {{{0, 1, 1, 1, 1, 1, 0, 1}, {1, 1, 2, 2, 1, 1, 1, 1}}}},
        {{"tau", "tau^2", "tau^2", "tau"}, {{{1, 1, 1, 1, 0, 1, 0, 1}, {1, 1, 1, 2, 1, 2, 1, 1}}}},
        {{"1", "1", "tau^2", "tau^2"}, {{{1, 1, 1, 1, 1, 0, 1, 0}, {0, 1, 2, 2, 1, 1, 0, 1}}}},
        {{"1", "tau^2", "tau^2", "tau"}, {{{1, 1, 1, 1, 0, 1, 1, 0}, {1, 1, 1, 2, 1, 2, 0, 1}}}},
        {{"tau", "2tau", "2tau", "tau^2"}, {{{0, 0, 1, 2, 1, 2, 0, 1}, {2, 2, 2, 2, 1, 2, 1, 1}}}},
        {{"tau", "tau^2", "tau^2", "tau^2"}, {{{1, 1, 1, 1, 1, 1, 0, 1}, {1, 1, 2, 2, 1, 2, 1, 1}}}},
        {{"1", "tau^2", "tau^2", "tau^2"}, {{{1, 1, 1, 1, 1, 1, 1, 0}, {1, 1, 2, 2, 1, 2, 0, 1}}}},
        {{"tau", "2tau", "2tau+1", "tau^2"}, {{{0, 1, 1, 2, 1, 2, 0, 1}, {2, 2, 2, 3, 1, 2, 1, 1}}}},
        {{"tau", "tau^2", "2tau+1", "tau^2"}, {{{1, 1, 1, 2, 1, 1, 0, 1}, {1, 2, 2, 3, 1, 2, 1, 1}}}},
        {{"1", "tau^2", "2tau+1", "tau^2"}, {{{1, 1, 1, 2, 1, 1, 1, 0}, {1, 2, 2, 3, 1, 2, 0, 1}}}},
        {{"tau", "2tau", "2tau+1", "2tau+1"}, {{{0, 1, 2, 2, 1, 2, 0, 1}, {2, 2, 3, 3, 2, 2, 1, 1}}}},
        {{"tau", "tau^2", "2tau+1", "2tau+1"}, {{{1, 1, 2, 2, 1, 1, 0, 1}, {1, 2, 3, 3, 2, 2, 1, 1}}}},
        {{"1", "tau^2", "2tau+1", "2tau+1"}, {{{1, 1, 2, 2, 1, 1, 1, 0}, {1, 2, 3, 3, 2, 2, 0, 1}}}},
        {{"tau", "2tau", "3tau+1", "2tau+1"}, {{{0, 1, 2, 3, 1, 2, 0, 1}, {2, 3, 3, 4, 2, 2, 1, 1}}}},
        {{"tau", "tau^2", "2tau+2", "2tau+1"}, {{{1, 2, 2, 2, 1, 1, 0, 1}, {1, 2, 3, 4, 2, 2, 1, 1}}}},
        {{"1", "tau^2", "2tau+2", "2tau+1"}, {{{1, 2, 2, 2, 1, 1, 1, 0}, {1, 2, 3, 4, 2, 2, 0, 1}}}},
        {{"tau", "2tau", "3tau+1", "2tau+2"}, {{{0, 1, 2, 3, 2, 2, 0, 1}, {2, 3, 4, 4, 2, 2, 1, 1}}}},
        {{"tau", "2tau+1", "3tau+1", "2tau+1"}, {{{1, 1, 2, 3, 1, 2, 0, 1}, {2, 3, 3, 4, 2, 3, 1, 1}}}},
        {{"tau", "2tau+1", "2tau+2", "2tau+1"}, {{{1, 2, 2, 2, 1, 2, 0, 1}, {2, 2, 3, 4, 2, 3, 1, 1}}}},
        {{"1", "tau+2", "2tau+2", "2tau+1"}, {{{2, 2, 2, 2, 1, 1, 1, 0}, {1, 2, 3, 4, 2, 3, 0, 1}}}},
        {{"tau", "2tau+1", "3tau+1", "2tau+2"}, {{{1, 1, 2, 3, 2, 2, 0, 1}, {2, 3, 4, 4, 2, 3, 1, 1}}}},
        {{"tau^2", "2tau+1", "3tau+1", "2tau+1"}, {{{1, 1, 2, 3, 1, 2, 1, 1}, {2, 3, 3, 4, 2, 3, 1, 2}}}},
        {{"tau^2", "2tau+1", "2tau+2", "2tau+1"}, {{{1, 2, 2, 2, 1, 2, 1, 1}, {2, 2, 3, 4, 2, 3, 1, 2}}}},
        {{"tau^2", "tau+2", "2tau+2", "2tau+1"}, {{{2, 2, 2, 2, 1, 1, 1, 1}, {1, 2, 3, 4, 2, 3, 1, 2}}}},
        {{"tau", "2tau+1", "3tau+2", "2tau+2"}, {{{1, 2, 2, 3, 2, 2, 0, 1}, {2, 3, 4, 5, 2, 3, 1, 1}}}},
        {{"tau^2", "2tau+1", "3tau+1", "2tau+2"}, {{{1, 1, 2, 3, 2, 2, 1, 1}, {2, 3, 4, 4, 2, 3, 1, 2}}}},
        {{"tau", "2tau+1", "3tau+2", "3tau+1"}, {{{1, 2, 3, 3, 1, 2, 0, 1}, {2, 3, 4, 5, 3, 3, 1, 1}}}},
        {{"tau^2", "2tau+1", "3tau+2", "2tau+2"}, {{{1, 2, 2, 3, 2, 2, 1, 1}, {2, 3, 4, 5, 2, 3, 1, 2}}}},
        {{"tau^2", "2tau+1", "3tau+2", "3tau+1"}, {{{1, 2, 3, 3, 1, 2, 1, 1}, {2, 3, 4, 5, 3, 3, 1, 2}}}},
        {{"tau^2", "2tau+2", "3tau+2", "2tau+2"}, {{{2, 2, 2, 3, 2, 2, 1, 1}, {2, 3, 4, 5, 2, 4, 1, 2}}}},
        {{"tau^2", "2tau+2", "3tau+2", "3tau+1"}, {{{2, 2, 3, 3, 1, 2, 1, 1}, {2, 3, 4, 5, 3, 4, 1, 2}}}},
        {{"tau^2", "2tau+2", "3tau+3", "3tau+1"}, {{{2, 3, 3, 3, 1, 2, 1, 1}, {2, 3, 4, 6, 3, 4, 1, 2}}}},
        {{"2tau", "3tau+1", "4tau+2", "3tau+2"}, {{{1, 2, 3, 4, 2, 3, 0, 2}, {3, 4, 5, 6, 3, 4, 2, 2}}}},
        {{"tau^2", "3tau+1", "4tau+2", "3tau+2"}, {{{1, 2, 3, 4, 2, 3, 1, 1}, {3, 4, 5, 6, 3, 4, 1, 2}}}},
        {{"tau^2", "2tau+2", "4tau+2", "3tau+2"}, {{{2, 2, 3, 4, 2, 2, 1, 1}, {2, 4, 5, 6, 3, 4, 1, 2}}}},
        {{"tau^2", "2tau+2", "3tau+3", "3tau+2"}, {{{2, 3, 3, 3, 2, 2, 1, 1}, {2, 3, 5, 6, 3, 4, 1, 2}}}},
    };
    return t;
}

struct ParityRowH3 {
    std::array<const char*, 3> root;
    std::array<std::array<int, 2>, 3> eta; // for rho1, rho2, rho3
};

inline const std::vector<ParityRowH3>& parity_h3()
{
    static const std::vector<ParityRowH3> t = {
        {{"0", "0", "1"}, {{{1, 1}, {-1, -1}, {-1, -1}}}},
        {{"0", "tau", "1"}, {{{1, 1}, {1, -1}, {1, 1}}}},
        {{"0", "tau", "tau"}, {{{-1, -1}, {1, 1}, {1, -1}}}},
        {{"tau", "tau", "1"}, {{{-1, 1}, {1, 1}, {-1, -1}}}},
        {{"0", "1", "tau"}, {{{-1, 1}, {1, -1}, {-1, -1}}}},
        {{"tau", "tau", "tau"}, {{{1, -1}, {-1, -1}, {-1, 1}}}},
        {{"0", "1", "0"}, {{{-1, -1}, {-1, -1}, {1, -1}}}},
        {{"1", "1", "tau"}, {{{1, -1}, {1, 1}, {-1, 1}}}},
        {{"tau", "tau^2", "tau"}, {{{-1, 1}, {1, 1}, {-1, -1}}}},
        {{"1", "1", "0"}, {{{1, 1}, {-1, -1}, {1, 1}}}},
        {{"1", "tau^2", "tau"}, {{{-1, -1}, {-1, 1}, {1, -1}}}},
        {{"tau", "tau^2", "tau^2"}, {{{1, 1}, {-1, -1}, {1, 1}}}},
        {{"1", "0", "0"}, {{{-1, -1}, {1, 1}, {1, 1}}}},
        {{"1", "tau^2", "tau^2"}, {{{1, -1}, {1, 1}, {-1, 1}}}},
        {{"tau", "2tau", "tau^2"}, {{{1, 1}, {-1, 1}, {1, 1}}}},
    };
    return t;
}

struct ParityRowH4 {
    std::array<const char*, 4> root;
    std::array<std::array<int, 2>, 4> eta; // for rho0, rho1, rho2, rho3
};

inline const std::vector<ParityRowH4>& parity_h4()
{
    static const std::vector<ParityRowH4> t = {
        {{"0", "0", "0", "1"}, {{{1, 1}, {1, 1}, {-1, -1}, {-1, -1}}}},
        {{"0", "0", "1", "0"}, {{{1, 1}, {-1, -1}, {-1, -1}, {1, -1}}}},
        {{"0", "1", "0", "0"}, {{{-1, -1}, {-1, -1}, {1, 1}, {1, 1}}}},
        {{"1", "0", "0", "0"}, {{{-1, -1}, {1, 1}, {1, 1}, {1, 1}}}},
        {{"0", "0", "tau", "1"}, {{{1, 1}, {1, 1}, {1, -1}, {1, 1}}}},
        {{"0", "0", "tau", "tau"}, {{{1, 1}, {-1, -1}, {1, 1}, {1, -1}}}},
        {{"0", "0", "1", "tau"}, {{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}}},
        {{"0", "1", "1", "0"}, {{{-1, 1}, {1, 1}, {-1, -1}, {1, 1}}}},
        {{"1", "1", "0", "0"}, {{{1, 1}, {-1, -1}, {1, -1}, {1, 1}}}},
        {{"0", "tau", "tau", "1"}, {{{-1, -1}, {-1, 1}, {1, 1}, {-1, -1}}}},
        {{"0", "tau", "tau", "tau"}, {{{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}}},
        {{"0", "1", "1", "tau"}, {{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}}},
        {{"1", "1", "1", "0"}, {{{1, -1}, {1, 1}, {-1, 1}, {1, -1}}}},
        {{"tau", "tau", "tau", "1"}, {{{1, -1}, {1, 1}, {1, 1}, {1, 1}}}},
        {{"tau", "tau", "tau", "tau"}, {{{-1, 1}, {1, 1}, {-1, -1}, {1, -1}}}},
        {{"0", "tau", "tau^2", "tau"}, {{{1, 1}, {-1, 1}, {1, 1}, {-1, -1}}}},
        {{"0", "1", "tau^2", "tau"}, {{{-1, -1}, {-1, -1}, {-1, 1}, {1, -1}}}},
        {{"1", "1", "1", "tau"}, {{{1, 1}, {1, 1}, {1, 1}, {-1, -1}}}},
        {{"tau", "tau", "tau^2", "tau"}, {{{-1, 1}, {-1, -1}, {1, 1}, {1, -1}}}},
        {{"0", "tau", "2tau", "tau^2"}, {{{-1, 1}, {1, 1}, {-1, 1}, {1, 1}}}},
        {{"0", "tau", "tau^2", "tau^2"}, {{{-1, 1}, {1, 1}, {-1, -1}, {1, 1}}}},
        {{"0", "1", "tau^2", "tau^2"}, {{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}}},
        {{"1", "1", "tau^2", "tau"}, {{{1, 1}, {-1, 1}, {-1, 1}, {1, -1}}}},
        {{"tau", "tau", "2tau", "tau^2"}, {{{1, 1}, {-1, 1}, {-1, 1}, {1, 1}}}},
        {{"tau", "tau", "tau^2", "tau^2"}, {{{1, 1}, {-1, -1}, {-1, -1}, {-1, 1}}}},
        {{"tau", "tau^2", "tau^2", "tau"}, {{{1, 1}, {1, 1}, {1, 1}, {1, -1}}}},
        {{"1", "1", "tau^2", "tau^2"}, {{{1, 1}, {-1, 1}, {1, 1}, {-1, 1}}}},
        {{"1", "tau^2", "tau^2", "tau"}, {{{1, -1}, {1, 1}, {1, 1}, {1, -1}}}},
        {{"tau", "2tau", "2tau", "tau^2"}, {{{1, 1}, {1, 1}, {-1, -1}, {1, 1}}}},
        {{"tau", "tau^2", "tau^2", "tau^2"}, {{{1, 1}, {1, 1}, {-1, 1}, {-1, 1}}}},
        {{"1", "tau^2", "tau^2", "tau^2"}, {{{1, -1}, {1, 1}, {-1, 1}, {-1, 1}}}},
        {{"tau", "2tau", "2tau+1", "tau^2"}, {{{1, 1}, {-1, 1}, {1, 1}, {-1, 1}}}},
        {{"tau", "tau^2", "2tau+1", "tau^2"}, {{{1, 1}, {-1, -1}, {1, 1}, {-1, 1}}}},
        {{"1", "tau^2", "2tau+1", "tau^2"}, {{{1, -1}, {1, 1}, {1, 1}, {-1, 1}}}},
        {{"tau", "2tau", "2tau+1", "2tau+1"}, {{{1, 1}, {-1, 1}, {-1, 1}, {1, 1}}}},
        {{"tau", "tau^2", "2tau+1", "2tau+1"}, {{{1, 1}, {-1, -1}, {-1, -1}, {1, 1}}}},
        {{"1", "tau^2", "2tau+1", "2tau+1"}, {{{1, -1}, {1, 1}, {-1, -1}, {1, 1}}}},
        {{"tau", "2tau", "3tau+1", "2tau+1"}, {{{1, 1}, {-1, 1}, {1, 1}, {-1, -1}}}},
        {{"tau", "tau^2", "2tau+2", "2tau+1"}, {{{1, 1}, {-1, -1}, {1, 1}, {1, 1}}}},
        {{"1", "tau^2", "2tau+2", "2tau+1"}, {{{1, -1}, {-1, 1}, {1, 1}, {1, 1}}}},
        {{"tau", "2tau", "3tau+1", "2tau+2"}, {{{1, 1}, {-1, 1}, {1, 1}, {1, 1}}}},
        {{"tau", "2tau+1", "3tau+1", "2tau+1"}, {{{-1, -1}, {1, -1}, {-1, 1}, {-1, -1}}}},
        {{"tau", "2tau+1", "2tau+2", "2tau+1"}, {{{-1, -1}, {1, -1}, {-1, -1}, {1, 1}}}},
        {{"1", "tau+2", "2tau+2", "2tau+1"}, {{{1, 1}, {1, -1}, {1, 1}, {1, 1}}}},
        {{"tau", "2tau+1", "3tau+1", "2tau+2"}, {{{-1, -1}, {1, -1}, {-1, -1}, {1, 1}}}},
        {{"tau^2", "2tau+1", "3tau+1", "2tau+1"}, {{{1, 1}, {1, 1}, {-1, 1}, {-1, -1}}}},
        {{"tau^2", "2tau+1", "2tau+2", "2tau+1"}, {{{1, 1}, {-1, 1}, {-1, -1}, {1, 1}}}},
        {{"tau^2", "tau+2", "2tau+2", "2tau+1"}, {{{-1, 1}, {-1, -1}, {1, 1}, {1, 1}}}},
        {{"tau", "2tau+1", "3tau+2", "2tau+2"}, {{{-1, -1}, {1, 1}, {1, 1}, {-1, 1}}}},
        {{"tau^2", "2tau+1", "3tau+1", "2tau+2"}, {{{1, 1}, {1, 1}, {-1, -1}, {1, 1}}}},
        {{"tau", "2tau+1", "3tau+2", "3tau+1"}, {{{-1, -1}, {1, 1}, {1, 1}, {-1, -1}}}},
        {{"tau^2", "2tau+1", "3tau+2", "2tau+2"}, {{{1, 1}, {-1, 1}, {1, 1}, {-1, 1}}}},
        {{"tau^2", "2tau+1", "3tau+2", "3tau+1"}, {{{1, 1}, {-1, 1}, {1, 1}, {-1, -1}}}},
        {{"tau^2", "2tau+2", "3tau+2", "2tau+2"}, {{{1, 1}, {1, -1}, {1, 1}, {-1, 1}}}},
        {{"tau^2", "2tau+2", "3tau+2", "3tau+1"}, {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}}},
        {{"tau^2", "2tau+2", "3tau+3", "3tau+1"}, {{{1, 1}, {1, 1}, {1, -1}, {-1, 1}}}},
        {{"2tau", "3tau+1", "4tau+2", "3tau+2"}, {{{-1, -1}, {1, 1}, {1, 1}, {1, 1}}}},
        {{"tau^2", "3tau+1", "4tau+2", "3tau+2"}, {{{-1, 1}, {1, -1}, {1, 1}, {1, 1}}}},
        {{"tau^2", "2tau+2", "4tau+2", "3tau+2"}, {{{1, 1}, {1, 1}, {-1, -1}, {1, 1}}}},
        {{"tau^2", "2tau+2", "3tau+3", "3tau+2"}, {{{1, 1}, {1, 1}, {-1, 1}, {1, -1}}}},
    };
    return t;
}

/// Reference twist set for the E8 Chevalley model (base coordinates).
/// Tied to a specific external Chevalley basis; the library resolves its
/// own twist by search and records the result next to this set.
inline const std::vector<std::array<int, 8>>& twist_e8()
{
    static const std::vector<std::array<int, 8>> t = {
        {0, 0, 0, 1, 1, 1, 0, 0}, {0, 1, 1, 1, 1, 1, 0, 0}, {0, 0, 1, 2, 1, 1, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0}, {1, 1, 1, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0},
        {1, 1, 1, 2, 1, 1, 0, 0}, {0, 1, 1, 2, 1, 1, 0, 0}, {0, 1, 2, 2, 1, 1, 0, 0},
        {1, 1, 2, 2, 1, 1, 0, 0}, {1, 2, 2, 2, 1, 1, 0, 0},
    };
    return t;
}

/// Homotopy cycle for the longest word of H3: 63 reduced words of length
/// 15 over the letters 1,2,3; consecutive words differ by one elementary
/// braid move, and the first equals the last.
inline const std::vector<std::string>& homotopy_cycle()
{
    static const std::vector<std::string> t = {
        "32323" "1232312321",
        "2323" "212" "32312321",
        "232312" "13" "2312321",
        "232312312" "31" "2321",
        "2323123" "121" "32321",
        "232312321" "23232" "1",
        "232" "31" "2321323231",
        "23213232" "13" "23231",
        "2321" "32323" "123231",
        "23" "212" "3232123231",
        "23121323" "212" "3231",
        "2312" "13" "231213231",
        "2312312312" "13" "231",
        "2312312" "31" "231231",
        "2" "31" "231213231231",
        "21323" "121" "3231231",
        "2132321232312" "31",
        "21323212323" "121" "3",
        "2132321" "23232" "123",
        "213232" "13" "2323123",
        "21" "32323" "12323123",
        "212" "323212323123",
        "121323" "212" "323123",
        "12" "13" "23121323123",
        "12312" "31" "21323123",
        "123" "121" "321323123",
        "12321232" "13" "23123",
        "12321232312" "31" "23",
        "123212323" "121" "323",
        "12321" "23232" "12323",
        "1232" "13" "232312323",
        "123231232" "31" "2323",
        "1232312321" "32323",
        "12323123" "212" "3232",
        "1232312" "31" "213232",
        "12323" "121" "3213232",
        "1" "23232" "123213232",
        "13" "2323123213232",
        "31232" "31" "23213232",
        "3123213232" "13" "232",
        "312321" "32323" "1232",
        "3123" "212" "32321232",
        "312" "31" "2132321232",
        "3" "121" "32132321232",
        "321232" "13" "2321232",
        "3212323123" "212" "32",
        "321232312" "31" "2132",
        "3212323" "121" "32132",
        "321" "23232" "1232132",
        "32" "13" "23231232132",
        "3231232" "31" "232132",
        "323123213232" "13" "2",
        "32312321" "32323" "12",
        "323123" "212" "323212",
        "32312" "31" "21323212",
        "323" "121" "321323212",
        "32321232" "13" "23212",
        "323212323123" "212",
        "32321232312" "31" "21",
        "323212323" "121" "321",
        "32321" "23232" "12321",
        "3232" "13" "232312321",
        "323231232312321",
    };
    return t;
}

} // namespace hfold::tables
