import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from colorful.model import NCP, Instance

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


# Small planar instances, ordered so that the halves split as intended.
PLANE_P = [
    ["2", "4/5"], ["-3/2", "1"], ["-2", "-9/5"],  # p2, p3, p1
]
PLANE_Q = [["-3/2", "-1"], ["7/10", "-6/5"], ["-3/10", "6/5"]]  # q1, q2, q3
PLANE_R = [["6/5", "-9/10"], ["11/10", "1"], ["-9/5", "3/10"]]  # r2, r3, r1

PAIR_P = [["11/10", "-11/10"], ["17/10", "11/5"], ["-6/5", "0"]]  # p2, p3, p1
PAIR_Q = [["-19/10", "-9/5"], ["-13/5", "13/10"]]  # q1, q2


@pytest.fixture
def plane_three():
    return Instance.from_points([PLANE_P, PLANE_Q, PLANE_R])


@pytest.fixture
def ncp_pair():
    # only Q's hull meets the origin after projection; as an instance it is NCP-kind
    return Instance.from_points([PAIR_P, PAIR_Q], kind=NCP)


def pytest_report_header(config):
    return "exact arithmetic: gmpy2.mpq"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        for line in mod.RESULTS[n]:
            terminalreporter.write_line(line)
