# Copyright 2026 The symtest Authors
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

import math
import os
import pathlib

import numpy as np
import pytest

import symtest

SCENARIOS = pathlib.Path(os.environ.get("SYMTEST_SCENARIO_DIR", pathlib.Path(__file__).parents[2] / "scenarios"))
PLUS = np.full((2, 2), 0.5, dtype=complex)


def diag(*v):
    return np.diag(np.array(v, dtype=complex))


def test_psi_unrestricted_pure_vs_mixed():
    a, s = 0.3, 0.25
    want = math.log((a ** (1 - s) + (1 - a) ** (1 - s)) / 2)
    assert symtest.psi(PLUS, diag(a, 1 - a), s) == pytest.approx(want, abs=1e-12)


def test_twirl_torus_and_z2():
    x = np.kron(PLUS, PLUS)
    t = symtest.twirl(x, weights=[0, 1], n=2)
    assert t[1, 2] == pytest.approx(0.25)
    assert abs(t[0, 3]) == 0.0
    z = symtest.twirl(PLUS, unitaries=[np.eye(2), diag(1, -1)])
    assert np.allclose(z, np.eye(2) / 2)


def test_alpha_star_and_closed_form():
    a = symtest.solve_alpha_star()
    assert abs(a - 0.11) < 0.01
    v = symtest.closed_form_psi("TorusPureVsMixed", {"alpha": a}, 0.5)
    assert v == pytest.approx(-0.5 * math.log(2))


def test_tests_and_fidelity():
    sc = symtest.torus_pure_vs_mixed(0.5, 10)
    r0, r1 = sc.twirled_pair(4)
    assert symtest.p_min(r0, r1, 0.0, 4) == pytest.approx(5 / 16)
    assert symtest.beta_eps(np.eye(2) / 2, np.eye(2) / 2, 0.25) == pytest.approx(0.75)
    l, m = 0.3, 0.6
    sc65 = symtest.torus_two_pure(l, m)
    f = symtest.fidelity(sc65.rho0, sc65.rho1)
    assert f == pytest.approx(math.sqrt(l * m) + math.sqrt((1 - l) * (1 - m)))


def test_scenario_files_round_trip_and_verify():
    for name in ["ex61.json", "ex62.json", "ex65.json", "remark63.json"]:
        sc = symtest.load_scenario(str(SCENARIOS / name))
        again = symtest.parse_scenario(sc.serialize())
        assert again.serialize() == sc.serialize()
        assert sc.violations() == 0


def test_errors_are_typed():
    with pytest.raises(symtest.ParseError):
        symtest.parse_scenario("{ not json")
    with pytest.raises(symtest.DomainError):
        symtest.psi(diag(0.5, 0.4), diag(0.5, 0.5), 0.5)


def test_run_cli_in_process():
    code, out, err = symtest.run("psi", scenario=str(SCENARIOS / "ex62.json"), n_max=2, s_grid="0:1:3")
    assert code == 0
    assert out.splitlines()[0] == "s,value,n,label"
    code, _, err = symtest.run("psi", scenario="/nonexistent.json")
    assert code == 2
