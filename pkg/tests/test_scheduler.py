import numpy as np
import pytest

import gen
from tropsched.exceptions import InfeasibleError, PreconditionError, ShapeError
from tropsched.inequality import star
from tropsched.linalg import TropMatrix, TropVector, collinear, drop_columns, mat_mul, scalar_mul
from tropsched.oracle import GridSpec, grid_min_span
from tropsched.scheduler import (
    AnchorPolicy,
    ProjectSpec,
    Schedule,
    alpha_policy,
    anchor,
    due_date,
    earliest_nonnegative,
    solve,
    solve_constrained,
    solve_unconstrained,
    span,
    validate,
)
from tropsched.semifield import MAX_PLUS, SemifieldValue
from tropsched.span import solve_symmetric

N = -np.inf


def v(entries):
    return TropVector(MAX_PLUS, entries)


def test_span_values():
    assert span(v([0, 0, 0])) == 0
    assert span(v([0, 0, -2])) == 2
    assert span(v([5, 5, 5])) == 0
    with pytest.raises(PreconditionError):
        span(v([0, N]))


def test_constrained_example(project):
    fam = solve_constrained(project)
    assert fam.delta == 2
    assert fam.x_direction == v([-4, -3, -5])
    assert fam.y_direction == v([0, 0, -2])
    assert fam.constrained


def test_unconstrained_example(project):
    fam = solve_unconstrained(project)
    assert fam.delta == 0
    assert fam.x_direction == v([-4, -3, -3])
    assert fam.y_direction == v([0, 0, 0])
    assert not fam.constrained


def test_identity_project():
    I = TropMatrix.identity(MAX_PLUS, 3)
    fam = solve_constrained(ProjectSpec(I, TropMatrix.zeros(MAX_PLUS, 3)))
    assert fam.delta == 0
    assert fam.x_direction == fam.y_direction == v([0, 0, 0])
    fam = solve_unconstrained(ProjectSpec(I))
    assert fam.x_direction == fam.y_direction == v([0, 0, 0])


def test_diagonal_project():
    P = ProjectSpec(TropMatrix(MAX_PLUS, [[2, N], [N, 5]]))
    fam = solve_unconstrained(P)
    assert fam.delta == 0
    assert fam.x_direction == v([-2, -5])
    assert fam.y_direction == v([0, 0])
    assert grid_min_span(P.C, None, GridSpec(2, -8, 8)).value == 0


def test_positive_start_start_cycle_is_infeasible(C, D):
    Dp = np.array(D.entries)
    Dp[1, 0] = 3  # cycle A -> B -> A weighs 3 - 2 = 1
    P = ProjectSpec(C, TropMatrix(MAX_PLUS, Dp))
    with pytest.raises(InfeasibleError) as info:
        solve_constrained(P)
    assert info.value.tr_value == 1
    assert info.value.cycle_length == 2
    report = solve(P)
    assert report.status == "infeasible"
    assert "cycle of 2 activities" in report.message
    # the reduced problem is still solvable
    assert solve(P, ignore_start_start=True).ok


def test_irregular_C_names_activity(D):
    C = TropMatrix(MAX_PLUS, [[4, 0, N], [2, 3, 1], [N, N, N]])
    P = ProjectSpec(C, D, ("A", "B", "C"))
    with pytest.raises(PreconditionError) as info:
        solve_unconstrained(P)
    assert "'C'" in str(info.value)
    assert info.value.index == 2
    assert solve(P).status == "precondition"


def test_negative_diagonal_warns():
    C = TropMatrix(MAX_PLUS, [[-1, 0], [0, 1]])
    with pytest.warns(UserWarning, match="negative"):
        solve_unconstrained(ProjectSpec(C))


def test_anchor_due_date(project):
    S = anchor(solve_constrained(project), due_date(10))
    assert S.alpha == 10
    assert S.x == v([6, 7, 5])
    assert S.y == v([10, 10, 8])
    assert validate(project, S).ok


def test_anchor_earliest(project):
    S = anchor(solve_unconstrained(project), earliest_nonnegative())
    assert S.alpha == 4
    assert S.x == v([0, 1, 1])
    assert S.y == v([4, 4, 4])
    assert validate(project.without_start_start(), S).ok


def test_anchor_alpha_zero(project):
    fam = solve_constrained(project)
    S = anchor(fam, alpha_policy(0))
    assert S.x == fam.x_direction and S.y == fam.y_direction
    assert anchor(fam, "alpha=0").y == S.y


@pytest.mark.parametrize("text", ["", "due", "due=", "alpha=x", "late=3", "earliest=1", "due=inf"])
def test_anchor_policy_parse_errors(text):
    with pytest.raises(ValueError):
        AnchorPolicy.parse(text)


def test_anchor_policy_roundtrip():
    for text in ("earliest", "due=10", "alpha=-2.5"):
        assert str(AnchorPolicy.parse(text)) == text


def test_validate_detects_violations(project):
    fam = solve_constrained(project)
    S = anchor(fam, alpha_policy(0))
    y = np.array(S.y.entries)
    y[1] += 1
    bad = Schedule(S.x, v(y), S.delta, 0.0)
    rep = validate(project, bad)
    assert rep.start_finish_violations == [1]
    assert not rep.ok


def test_validate_start_start_violation(project):
    x = v([0, 0, 0])
    S = Schedule(x, mat_mul(project.C, x), SemifieldValue(MAX_PLUS, 1), 0.0)
    rep = validate(project, S)
    # row 2: d_23 + x_3 = 2 > 0; row 1 also fails (d_13 + x_3 = 1 > 0)
    assert 1 in rep.start_start_violations
    assert rep.start_start_violations == [0, 1]
    assert rep.start_finish_violations == []
    assert rep.span_ok


def test_validate_span_mismatch(project):
    S = anchor(solve_constrained(project), alpha_policy(0))
    rep = validate(project, Schedule(S.x, S.y, SemifieldValue(MAX_PLUS, 0), 0.0))
    assert not rep.span_ok and not rep.ok


def test_zero_D_matches_unconstrained(rng):
    for _ in range(50):
        n = int(rng.integers(1, 6))
        C = TropMatrix(MAX_PLUS, gen.lag_matrix_C(rng, n))
        a = solve_constrained(ProjectSpec(C, TropMatrix.zeros(MAX_PLUS, n)))
        b = solve_unconstrained(ProjectSpec(C))
        assert a.delta == b.delta
        assert a.x_direction == b.x_direction and a.y_direction == b.y_direction


def test_column_drop_regression(C, D):
    Ds = star(D).star
    assert collinear(TropVector(MAX_PLUS, Ds[:, 2]), TropVector(MAX_PLUS, Ds[:, 0])) is not None
    reduced = drop_columns(Ds, [2])
    sol = solve_symmetric(mat_mul(C, reduced))
    assert sol.direction == v([-4, -3])
    assert sol.delta == 2
    assert mat_mul(reduced, sol.direction) == v([-4, -3, -5])
    assert mat_mul(mat_mul(C, reduced), sol.direction) == v([0, 0, -2])


def test_oracle_agrees_and_schedules_validate(rng):
    for _ in range(40):
        n = int(rng.integers(1, 4))
        C = gen.lag_matrix_C(rng, n)
        D = gen.square_by_trace(rng, n, True)
        P = ProjectSpec(C, D)
        fam = solve_constrained(P)
        assert grid_min_span(C, D, GridSpec(n, -15, 15)).value == fam.delta.value
        for policy in ("earliest", "due=7", "alpha=-3"):
            S = anchor(fam, policy)
            assert validate(P, S).ok
            assert span(S.y) == fam.delta


def test_span_shift_invariant(rng):
    for _ in range(50):
        y = gen.regular_vector(rng, int(rng.integers(1, 6)))
        shift = SemifieldValue(MAX_PLUS, float(rng.integers(-50, 51)))
        assert span(scalar_mul(shift, y)) == span(y)


def test_project_spec_checks(C):
    with pytest.raises(ValueError):
        ProjectSpec(C, None, ("a", "a", "b"))
    with pytest.raises(ShapeError):
        ProjectSpec(C, TropMatrix.zeros(MAX_PLUS, 2))
    P = ProjectSpec([[0, N], [1, 2]])
    assert P.names == ("a1", "a2")
