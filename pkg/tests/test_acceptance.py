"""Acceptance suite: every shipped claim, checked end to end at fixed tolerances.

Each criterion prints one pass/fail line (visible with `pytest -rP` or `-s`).
Criterion 4 is split: 4a is the five-row walkthrough; 4b preserves a
six-row expectation that simulation, the recursion, and the restricted
period all contradict, so 4b fails by design; see its docstring.
"""

import json
import time

from lightchase.cli import main
from lightchase.engine import BoardSpec, new_uniform, one_pass
from lightchase.fib import (
    FibPairState,
    alpha_direct,
    alpha_factored,
    alpha_prime_power,
    fib_pair,
    fib_pair_mod,
    pisano_direct,
)
from lightchase.recurrence import iter_s_mod, s_closed, s_exact, s_mod
from lightchase.solvability import (
    characterize,
    cross_validate,
    is_one_pass_solvable,
    solvable_rows_up_to,
    sufficient_by_alpha,
)


def _pass(criterion, message):
    print(f"[criterion {criterion}] PASS  {message}")


def _fail(criterion, message):
    print(f"[criterion {criterion}] FAIL  {message}")


EXACT_STATES_Q1 = (0, -1, 2, -6, 15, -40, 104, -273, 714, -1870, 4895)


def test_c01_first_eleven_exact_states_under_1ms():
    s_exact(1, 10)  # warm-up outside the timed window
    start = time.perf_counter()
    values = tuple(s_exact(1, i) for i in range(11))
    elapsed = time.perf_counter() - start
    assert values == EXACT_STATES_Q1
    assert elapsed < 0.001, f"took {elapsed * 1000:.3f} ms"
    _pass(1, f"exact states S(0)..S(10) for q=1 in {elapsed * 1e6:.0f} us")


FIB_MOD_3 = [0, 1, 1, 2, 0, 2, 2, 1, 0, 1, 1, 2, 0, 2, 2, 1]
FIB_MOD_4 = [0, 1, 1, 2, 3, 1, 0, 1, 1, 2, 3, 1, 0, 1, 1, 2]


def test_c02_fibonacci_mod_3_and_4_prefixes():
    for k, expected in ((3, FIB_MOD_3), (4, FIB_MOD_4)):
        # fast doubling and the stepwise pair map must both reproduce the rows
        assert [fib_pair_mod(i, k)[0] for i in range(16)] == expected
        state = FibPairState.start(k)
        for i in range(16):
            assert state.pair[0] == expected[i]
            state = state.advance()
    assert alpha_direct(3).alpha == 4
    assert alpha_direct(4).alpha == 6
    _pass(2, "Fibonacci prefixes mod 3 and mod 4; alpha(3)=4, alpha(4)=6")


def test_c03_alpha_examples_and_full_method_agreement():
    start = time.perf_counter()
    assert alpha_direct(5).alpha == 5
    assert alpha_factored(12).alpha == 12
    assert alpha_factored(1200).alpha == 300
    for s in range(1, 7):
        assert alpha_prime_power(5, s) == 5**s
    for k in range(2, 10_001):
        assert alpha_factored(k).alpha == alpha_direct(k).alpha, k
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"took {elapsed:.1f} s"
    _pass(3, f"alpha examples plus factored == direct for k <= 10000 in {elapsed:.1f} s")


def _simulate_json(rows):
    argv = ["simulate", "--rows", str(rows), "--cols", "5", "--k", "4", "--q", "1",
            "--json", "--quiet-meta"]
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    assert code == 0
    return json.loads(buf.getvalue())


def test_c04a_five_row_walkthrough_reproduced():
    result = _simulate_json(5)
    assert [vec[0] for vec in result["presses"]] == [1, 2, 2, 1]
    assert all(len(set(vec)) == 1 for vec in result["presses"])
    assert result["solved"] is True
    _pass("4a", "five-row board: presses 1,2,2,1 and SOLVED")


def test_c04b_six_row_game_claimed_unsolvable():
    """Asserts the six-row, four-state, brightest-start game does NOT chase out.

    Deliberately failing.  Simulation ends all-dark, the recursion gives
    S(6) = 104 = 0 (mod 4), and 6 = 0 (mod alpha(4) = 6) makes six rows
    solvable for every start offset; the first taller unsolvable board has
    seven rows (S(7) = -273 = 3 mod 4).  The stated expectation looks like
    an off-by-one, and it cannot hold at the same time as criteria 5, 7,
    and 8, so it is kept as written and allowed to fail rather than
    silently flipped.
    """
    result = _simulate_json(6)
    if result["solved"]:
        _fail("4b", "six-row board chases out (S(6) = 104 = 0 mod 4); "
                    "seven rows is the first unsolvable height")
    assert result["solved"] is False


def test_c05_five_state_rows_and_two_state_failures():
    assert solvable_rows_up_to(5, 1, 10) == [4, 5, 9, 10]
    assert is_one_pass_solvable(2, 1, 4) is False
    assert is_one_pass_solvable(2, 1, 7) is False
    _pass(5, "k=5 solvable rows up to 10 are 4,5,9,10; k=2 fails at 4 and 7 rows")


def test_c06_zero_divisor_counterexample():
    assert is_one_pass_solvable(6, 3, 6) is True
    assert sufficient_by_alpha(6, 6) is False
    pair = fib_pair_mod(6, 6)
    assert 0 not in pair  # neither F(6) nor F(7) vanishes mod 6
    _pass(6, "k=6, q=3, rows=6 solvable although no Fibonacci factor vanishes")


def test_c07_simulation_formula_agreement_suite():
    start = time.perf_counter()
    cases = 0
    for k in range(2, 11):
        for q in range(k):
            for rows in range(1, 41):
                for cols in (3, 4, 5):
                    cases += 1
                    assert cross_validate(k, q, rows, cols), (k, q, rows, cols)
    elapsed = time.perf_counter() - start
    assert cases >= 5000
    assert elapsed < 60.0, f"took {elapsed:.1f} s"
    _pass(7, f"{cases} simulation-vs-formula cases agreed in {elapsed:.1f} s")


def test_c08_alpha_class_rows_always_solve():
    checked = 0
    for k in range(2, 61):
        alpha = alpha_direct(k).alpha
        period = pisano_direct(k)
        horizon = 2 * period
        for q in range(1, k):
            it = iter_s_mod(q, k)
            for i in range(horizon + 1):
                value = next(it)
                if i >= 1 and i % alpha in (0, alpha - 1):
                    assert value == 0, (k, q, i)
                    checked += 1
    _pass(8, f"{checked} (k, q, i) cells with i = 0 or -1 mod alpha(k) all solve")


def test_c09_prime_modulus_classes_are_exactly_alpha_classes():
    primes = [k for k in range(2, 60) if all(k % d for d in range(2, k))]
    checked = 0
    for k in primes:
        for q in range(1, k):
            report = characterize(k, q)
            predicted = tuple(
                r for r in range(report.period) if r % report.alpha in (0, report.alpha - 1)
            )
            assert report.residues == predicted, (k, q)
            assert report.complete, (k, q)
            checked += 1
    _pass(9, f"residue classes match the alpha prediction for {checked} prime (k, q) pairs")


def test_c10_identity_suites():
    # Cassini, exact, i <= 300
    prev, cur = 0, 1  # F(0), F(1)
    for i in range(1, 301):
        nxt = prev + cur
        assert prev * nxt - cur * cur == (-1) ** i
        assert fib_pair(i) == (cur, nxt)
        prev, cur = cur, nxt

    # Cassini as a congruence, i <= 10^4, k = 2..50
    for k in range(2, 51):
        prev, cur = 0, 1 % k
        sign = -1
        for i in range(1, 10_001):
            nxt = (prev + cur) % k
            assert (prev * nxt - cur * cur) % k == sign % k
            sign = -sign
            prev, cur = cur, nxt

    # closed form == recursion, exact, i <= 60
    for q in range(11):
        for i in range(61):
            assert s_closed(q, i) == s_exact(q, i)

    # closed form (fast doubling) == recursion (iterative), mod k, i <= 10^5
    for q, k in ((2, 997), (7, 360)):
        it = iter_s_mod(q, k)
        for i in range(100_001):
            assert next(it) == s_closed(q, i, k), (q, k, i)

    _pass(10, "Cassini exact/mod-k and closed-form-vs-recursion sweeps, zero exceptions")
