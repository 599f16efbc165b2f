#!/usr/bin/env python3
# Copyright 2026 The mmwcg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Scalar reference values frozen into the C++ unit tests.

Straight-line evaluation of the link budget with no shared code: every
number printed here is pasted into tests/unit/*.cpp.
"""

import itertools
import math

LAMBDA = 0.005
PT = 10 ** (30 / 10) * 1e-3
N0 = 10 ** (-134 / 10) * 1e-3 / 1e6
W0 = 540e6
ETA = 0.5
RHO = 1.0
N_EXP = 2.0
HPBW_DEG = 30.0


def k0():
    return (LAMBDA / (4 * math.pi)) ** 2


def g0(hpbw_deg):
    return (1.6162 / math.sin(math.radians(hpbw_deg) / 2)) ** 2


def gsl(hpbw_deg):
    return 10 ** ((-0.4111 * math.log(hpbw_deg) - 10.579) / 10)


def gain(hpbw_deg, offset):
    th = math.radians(hpbw_deg)
    if abs(offset) <= 1.3 * th:
        return max(g0(hpbw_deg) * 10 ** (-0.301 * (2 * offset / th) ** 2), gsl(hpbw_deg))
    return gsl(hpbw_deg)


def offset(owner, aim, target):
    b = math.atan2(aim[1] - owner[1], aim[0] - owner[0])
    t = math.atan2(target[1] - owner[1], target[0] - owner[0])
    d = (t - b) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def dist(a, b):
    return math.hypot(a[0] - b[0], a[1] - b[1])


def signal(tx, rx):
    return k0() * g0(HPBW_DEG) ** 2 * dist(tx, rx) ** -N_EXP * PT


def interference(itx, irx, vtx, vrx, rho=RHO):
    gt = gain(HPBW_DEG, offset(itx, irx, vrx))
    gr = gain(HPBW_DEG, offset(vrx, vtx, itx))
    return rho * k0() * gt * gr * dist(itx, vrx) ** -N_EXP * PT


def rate(links, members, v):
    tx, rx = links[v]
    i = sum(interference(links[u][0], links[u][1], tx, rx) for u in members if u != v)
    return ETA * W0 * math.log2(1 + signal(tx, rx) / (N0 * W0 + i))


def value(links, members):
    return sum(rate(links, members, v) for v in members)


def utility(links, assign, nslots):
    return sum(value(links, [v for v in range(len(links)) if assign[v] == s]) for s in range(nslots))


print("k0", repr(k0()))
print("g0(30)", repr(g0(30)))
print("gsl(30)", repr(gsl(30)))
print("noise", repr(N0 * W0))
print("edge gain(30)", repr(gain(30, 1.3 * math.radians(30))))

# generic four-node interference: link A (0,0)->(10,0), link B (3,4)->(-5,12)
print("interference B->A", repr(interference((3, 4), (-5, 12), (0, 0), (10, 0))))

# two-link coalition: D2D (0,0)->(4,0), access UE (2,3) -> BS (20,10)
two = [((0, 0), (4, 0)), ((2, 3), (20, 10))]
print("pair rate d2d", repr(rate(two, [0, 1], 0)))
print("pair rate access", repr(rate(two, [0, 1], 1)))
print("pair value", repr(value(two, [0, 1])))

# three D2D links crowded in one slot of two
three = [((0, 0), (4, 0)), ((4.5, 0.5), (8.5, 0.5)), ((1, 2), (1, 6))]
before = value(three, [0, 1, 2]) + value(three, [])
after = value(three, [0, 2]) + value(three, [1])
print("three before", repr(before), "after", repr(after), "prefers", after > before)

# two mutually interfering D2D links facing each other, |C| = 2
duel = [((0, 0), (3, 0)), ((6, 0.2), (3.5, 0.2))]
for a in itertools.product(range(2), repeat=2):
    print("duel", a, repr(utility(duel, a, 2)))
