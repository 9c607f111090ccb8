#pragma once

// Loaders turning the embedded reference tables into live objects keyed by
// root indices of the cached root systems.

#include "hfold/parity.hpp"
#include "hfold/rootsys.hpp"
#include "hfold/tables.hpp"

#include <stdexcept>
#include <vector>

namespace hfold {

template <size_t N>
int root_from_coords(const RootSystem& s, const std::array<const char*, N>& coords)
{
    std::vector<GoldenRat> v;
    v.reserve(N);
    for (const char* c : coords)
        v.emplace_back(parse_golden(c));
    int idx = s.index_of(v);
    if (idx < 0)
        throw std::domain_error("root_from_coords: unknown root");
    return idx;
}

inline int d6_root_from_name(const RootSystem& d6, const std::string& name)
{
    // "e1-e2", "e5+e6"
    if (name.size() != 5 || name[0] != 'e' || name[3] != 'e')
        throw std::domain_error("bad D6 root name: " + name);
    int i = name[1] - '1', j = name[4] - '1';
    int sign = name[2] == '+' ? 1 : -1;
    std::vector<GoldenRat> v(6);
    v[i] = GoldenRat(1);
    v[j] = GoldenRat(sign);
    int idx = d6.index_of(v);
    if (idx < 0)
        throw std::domain_error("bad D6 root name: " + name);
    return idx;
}

inline int e8_root_from_coords(const RootSystem& e8, const std::array<int, 8>& coords)
{
    std::vector<GoldenRat> v;
    v.reserve(8);
    for (int c : coords)
        v.emplace_back(c);
    int idx = e8.index_of(v);
    if (idx < 0)
        throw std::domain_error("bad E8 root coordinates");
    return idx;
}

/// The standard parity map for H3 or H4, loaded from the embedded tables
/// (negative roots filled in through eta(-a,d) = eta(a,d)).
inline const ParityTable& standard_parity(Kind k)
{
    static ParityTable h3, h4;
    if (k == Kind::H3) {
        if (!h3.sys) {
            const auto& s = RootSystem::get(Kind::H3);
            h3 = ParityTable(s);
            for (const auto& row : tables::parity_h3()) {
                int r = root_from_coords(s, row.root);
                for (int d = 0; d < 3; ++d)
                    h3.set(r, d, ParityValue{row.eta[d][0], row.eta[d][1]});
            }
        }
        return h3;
    }
    if (k == Kind::H4) {
        if (!h4.sys) {
            const auto& s = RootSystem::get(Kind::H4);
            h4 = ParityTable(s);
            for (const auto& row : tables::parity_h4()) {
                int r = root_from_coords(s, row.root);
                for (int d = 0; d < 4; ++d)
                    h4.set(r, d, ParityValue{row.eta[d][0], row.eta[d][1]});
            }
        }
        return h4;
    }
    throw std::domain_error("standard_parity: only H3 and H4 have embedded tables");
}

} // namespace hfold
