// compdof - degrees-of-freedom toolkit for interference channels with cooperating transmit/receive sets
// Copyright 2026 compdof contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "compdof/bounds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "compdof/errors.hpp"

namespace compdof
{

static bool subset_of_mask(const IndexSet &s, std::uint32_t mask)
{
    for (int v : s)
        if (!(mask & (1u << (v - 1))))
            return false;
    return true;
}

static IndexSet mask_to_set(std::uint32_t mask, int K)
{
    IndexSet s;
    for (int v = 1; v <= K; ++v)
        if (mask & (1u << (v - 1)))
            s.push_back(v);
    return s;
}

static int popcount32(std::uint32_t m) { return __builtin_popcount(m); }

static RegionConstraint constraint_from_masks(const CooperationPattern &pattern,
                                              const std::vector<std::uint32_t> &tx_masks,
                                              const std::vector<std::uint32_t> &rx_masks,
                                              std::uint32_t A, std::uint32_t B)
{
    RegionConstraint c;
    for (int k = 1; k <= pattern.K; ++k)
    {
        std::uint32_t tk = tx_masks[static_cast<size_t>(k - 1)];
        std::uint32_t rk = rx_masks[static_cast<size_t>(k - 1)];
        if ((tk & ~A) == 0 || (rk & ~B) == 0)
            c.users.push_back(k);
    }
    c.bound = std::max(popcount32(A), popcount32(B));
    c.set_a = mask_to_set(A, pattern.K);
    c.set_b = mask_to_set(B, pattern.K);
    return c;
}

static std::vector<std::uint32_t> window_masks(const CooperationPattern &pattern, bool transmit)
{
    std::vector<std::uint32_t> masks(static_cast<size_t>(pattern.K));
    for (int k = 1; k <= pattern.K; ++k)
    {
        IndexSet s = transmit ? pattern.transmit_set(k) : pattern.receive_set(k);
        std::uint32_t m = 0;
        for (int v : s)
            m |= 1u << (v - 1);
        masks[static_cast<size_t>(k - 1)] = m;
    }
    return masks;
}

RegionConstraint region_constraint_for(const CooperationPattern &pattern, const IndexSet &A, const IndexSet &B)
{
    std::uint32_t am = 0, bm = 0;
    for (int v : A)
    {
        if (v < 1 || v > pattern.K)
            throw std::invalid_argument("region_constraint_for: A contains index outside 1..K");
        am |= 1u << (v - 1);
    }
    for (int v : B)
    {
        if (v < 1 || v > pattern.K)
            throw std::invalid_argument("region_constraint_for: B contains index outside 1..K");
        bm |= 1u << (v - 1);
    }
    return constraint_from_masks(pattern, window_masks(pattern, true), window_masks(pattern, false), am, bm);
}

std::vector<RegionConstraint> region_constraints(const CooperationPattern &pattern, int max_set_size,
                                                 bool symmetric_only)
{
    if (pattern.K > 12)
        throw resource_error("region_constraints: enumeration limited to K <= 12");
    if (max_set_size < 0 || max_set_size > pattern.K)
        throw std::invalid_argument("region_constraints: max_set_size outside 0..K");

    auto tx = window_masks(pattern, true);
    auto rx = window_masks(pattern, false);

    std::uint32_t all = (pattern.K == 32) ? ~0u : ((1u << pattern.K) - 1u);

    // users-set -> constraint with smallest bound seen
    std::map<std::vector<int>, RegionConstraint> best;
    for (std::uint32_t A = 0; A <= all; ++A)
    {
        int na = popcount32(A);
        if (na > max_set_size)
            continue;
        for (std::uint32_t B = 0; B <= all; ++B)
        {
            int nb = popcount32(B);
            if (nb > max_set_size)
                continue;
            if (symmetric_only && na != nb)
                continue;
            RegionConstraint c = constraint_from_masks(pattern, tx, rx, A, B);
            auto it = best.find(c.users);
            if (it == best.end() || c.bound < it->second.bound)
                best[c.users] = std::move(c);
        }
    }

    std::vector<RegionConstraint> out;
    out.reserve(best.size());
    for (auto &kv : best)
        out.push_back(std::move(kv.second));
    return out;
}

bool check_dof_vector(const CooperationPattern &pattern, const std::vector<Rational> &d)
{
    if (static_cast<int>(d.size()) != pattern.K)
        throw std::invalid_argument("check_dof_vector: |d| must equal K");
    for (const Rational &v : d)
        if (v < Rational(0))
            throw std::invalid_argument("check_dof_vector: negative DoF entry");

    // The |A| = |B| enumeration is exact here: every asymmetric constraint is
    // implied by a symmetric one under d >= 0.
    for (const RegionConstraint &c : region_constraints(pattern, pattern.K, true))
    {
        Rational s(0);
        for (int k : c.users)
            s = s + d[static_cast<size_t>(k - 1)];
        if (s > Rational(c.bound))
            return false;
    }
    return true;
}

Rational sum_dof_outer_bound(int K, int Mt, int Mr)
{
    CooperationPattern check(K, Mt, Mr); // validates
    if (Mt + Mr >= K + 1)
        return Rational(K);
    int s = K + Mt + Mr;
    if (s % 2 == 0)
        return min(Rational(K), Rational(s - 2, 2));
    return min(Rational(K), Rational(K, K - 1) * Rational(s - 3, 2));
}

bool full_dof_condition(int K, int Mt, int Mr)
{
    CooperationPattern check(K, Mt, Mr);
    return Mt + Mr >= K + 1;
}

std::optional<Rational> known_dof(int K, int Mt, int Mr)
{
    CooperationPattern check(K, Mt, Mr);
    if (Mt == K || Mr == K || Mt + Mr >= K + 1)
        return Rational(K);
    if (Mt == 1 && Mr == 1)
        return Rational(K, 2);
    if ((Mt == K - 1 && Mr == 1) || (Mt == 1 && Mr == K - 1))
        return Rational(K - 1);
    if (Mt == K - 2 && Mr == 1)
        return Rational(K * (K - 2), K - 1);
    if (Mr == 1 && (K + Mt) % 2 == 1 && K < 10)
        return Rational(K + Mt - 1, 2);
    return std::nullopt;
}

Rational miso_reference_dof(int K, int Mt)
{
    if (Mt >= K || Mt < 1)
        throw std::invalid_argument("miso_reference_dof: requires 1 <= Mt < K");
    return Rational(K * Mt, Mt + 1);
}

} // namespace compdof
