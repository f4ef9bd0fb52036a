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

#ifndef COMPDOF_BOUNDS_HPP
#define COMPDOF_BOUNDS_HPP

#include <optional>
#include <vector>

#include "compdof/channel.hpp"
#include "compdof/rational.hpp"

namespace compdof
{

// One linear outer-bound constraint sum_{k in users} d_k <= bound, generated
// by a pair of index sets (A, B): users = {k : T_k subset A or R_k subset B},
// bound = max(|A|, |B|).
struct RegionConstraint
{
    IndexSet users;
    int bound = 0;
    IndexSet set_a;
    IndexSet set_b;
};

// Constraint induced by one explicit (A, B) pair.
RegionConstraint region_constraint_for(const CooperationPattern &pattern, const IndexSet &A, const IndexSet &B);

// Enumerate region constraints over all (A, B) with |A|,|B| <= max_set_size.
// By default only |A| = |B| pairs are generated: any asymmetric constraint is
// implied by a symmetric one (grow the smaller set; the left side gains terms
// while the bound is unchanged). Pass symmetric_only = false for the full
// enumeration. Duplicate user sets are deduplicated keeping the smallest bound.
std::vector<RegionConstraint> region_constraints(const CooperationPattern &pattern, int max_set_size,
                                                 bool symmetric_only = true);

// Exact membership test of a DoF vector in the outer-bound region.
bool check_dof_vector(const CooperationPattern &pattern, const std::vector<Rational> &d);

// Tightest closed-form sum-DoF outer bound for the pattern: K itself once
// Mt+Mr >= K+1; otherwise ceil((K+Mt+Mr-2)/2), improved to
// K/(K-1)*(K+Mt+Mr-3)/2 when K+Mt+Mr is odd (both clamped at K).
Rational sum_dof_outer_bound(int K, int Mt, int Mr);

// True iff the full K DoF are achievable: Mt + Mr >= K + 1.
bool full_dof_condition(int K, int Mt, int Mr);

// Exact DoF where settled; absent where only conjectured (notably transmit
// cooperation orders 2 < Mt < K-2 with K >= 10).
std::optional<Rational> known_dof(int K, int Mt, int Mr);

// DoF of the K-user MISO interference channel with Mt transmit antennas per
// transmitter; the no-cost-of-distribution reference value K*Mt/(Mt+1).
Rational miso_reference_dof(int K, int Mt);

} // namespace compdof

#endif
