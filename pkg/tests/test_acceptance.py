"""Formal acceptance suite: one test per criterion, one printed line each.

Run with::

    pytest tests/test_acceptance.py -v -s

Every check is exact (rational or quadratic-extension arithmetic); there are
no numerical tolerances anywhere.  Criterion 5 documents a known discrepancy
between the advertised generator count for the module {1, x, x^3} and the
dimension of the full preserving-operator solution space; see its docstring.
"""

import random
from fractions import Fraction as Fr
from itertools import product

import sympy

from sl2deform.algebra import (
    AlgebraParams,
    build_classic_sl2_diffops,
    build_classic_sl2_matrices,
    casimir_matrix,
    check_deformed_relations,
    classic_norm_squares,
)
from sl2deform.cases import CaseId
from sl2deform.diffops import (
    MonomialSpace,
    V3,
    build_case_realization,
    closure_check,
    enumerate_preserving_operators,
    lie_closure_probe,
)
from sl2deform.matrices import Matrix, is_scalar_multiple_of_identity
from sl2deform.reps import (
    RepSpec,
    build_new_rep_matrices,
    case_rep_spec,
    constraint_residuals,
    decompose_rep,
    intrinsic_gamma_and_product,
    solve_case,
)
from sl2deform.scalars import scalar_is_zero

from conftest import rand_fraction


def announce(number: int, description: str, ok: bool, detail: str = "") -> bool:
    status = "PASS" if ok else "FAIL"
    suffix = f" [{detail}]" if detail else ""
    print(f"ACCEPTANCE {number}: {status} - {description}{suffix}")
    return ok


CLASSIC = AlgebraParams(0, 0, 2, 0)

# closed forms of the bracket constant and the casimir scalar per case,
# valid on the intrinsic locus
BRACKET_CONSTANT = {
    CaseId.CASE1: lambda a, b: Fr(15, 32) * a - Fr(31, 48) * b + b**3 / (27 * a**2),
    CaseId.CASE2: lambda a, b: Fr(-3, 16) * a - Fr(5, 24) * b + b**3 / (27 * a**2),
    CaseId.CASE3: lambda a, b: Fr(-1, 32) * a - Fr(55, 432) * b + b**3 / (27 * a**2),
}
CASIMIR_SCALAR = {
    CaseId.CASE1: lambda a, b: (
        Fr(315, 1024) * a - Fr(23, 48) * b + Fr(23, 288) * b**2 / a
        + b**3 / (54 * a**2) - b**4 / (324 * a**3)
    ),
    CaseId.CASE2: lambda a, b: (
        -b / 24 + b**2 / (144 * a) + b**3 / (54 * a**2) - b**4 / (324 * a**3)
    ),
    CaseId.CASE3: lambda a, b: (
        Fr(-23, 432) * b - Fr(17, 2592) * b**2 / a + b**3 / (54 * a**2)
        - b**4 / (324 * a**3) - Fr(1045, 82944) * a
    ),
}
LADDER_PRODUCT = {
    CaseId.CASE1: lambda a: Fr(3, 2) * a,
    CaseId.CASE2: lambda a: Fr(3, 16) * a,
    CaseId.CASE3: lambda a: Fr(-1, 18) * a,
}
SEPARATED_INDEX = {CaseId.CASE1: 2, CaseId.CASE2: 0, CaseId.CASE3: 1}
SINGLETON_LABEL = {
    CaseId.CASE1: lambda a, b: Fr(5, 4) - b / (3 * a),
    CaseId.CASE2: lambda a, b: Fr(-1, 2) - b / (3 * a),
    CaseId.CASE3: lambda a, b: Fr(-1, 12) - b / (3 * a),
}
RADICAND_COLLAPSE = {
    CaseId.CASE1: lambda a: (Fr(3, 2) * a) ** 2,
    CaseId.CASE2: lambda a: (3 * a) ** 2,
    CaseId.CASE3: lambda a: Fr(243, 4) * a**2,
}


def test_criterion_1_classic_baseline():
    """Spin matrices satisfy the undeformed relations; the first-order
    realization reproduces the spin-1 matrices on the normalized basis."""
    ok = True
    for two_j in range(0, 7):
        triple = build_classic_sl2_matrices(two_j)
        ok = ok and check_deformed_relations(triple, CLASSIC).all_zero
    ops = build_classic_sl2_diffops(2)
    space = MonomialSpace((0, 1, 2))
    norms = classic_norm_squares(2)
    built = [op.matrix_on_space(space, norm_squares=norms) for op in ops]
    classic = build_classic_sl2_matrices(2)
    entrywise = built == [classic.j0, classic.jplus, classic.jminus]
    ok = ok and entrywise
    assert announce(1, "classic baseline, spins 0..3 and the spin-1 realization", ok)


def test_criterion_2_case_reproduction():
    """50 random (alpha, beta) per case on the intrinsic locus: rational
    solution, zero residuals, closed-form products, intrinsic closure,
    casimir scalars, and the block decomposition."""
    rng = random.Random(101)
    ok = True
    detail = ""
    for trial in range(50):
        alpha = rand_fraction(rng, nonzero=True)
        beta = rand_fraction(rng)
        for case in CaseId:
            intr = intrinsic_gamma_and_product(case, alpha, beta)
            sol = solve_case(case, alpha, beta, intr.gamma, intr.branch_for(alpha))
            params = AlgebraParams(alpha, beta, intr.gamma, sol.delta)
            spec = case_rep_spec(case, sol)

            # (a) rational labels, exactly zero constraint residuals
            part_a = isinstance(sol.c, Fr) and isinstance(sol.delta, Fr) and all(
                scalar_is_zero(r) for r in constraint_residuals(spec, params)
            )
            # (b) ladder product closed form
            part_b = sol.fg == LADDER_PRODUCT[case](alpha) == intr.fg
            # (c) intrinsic closure against the solved bracket, whose constant
            #     must equal the printed closed form
            ops = build_case_realization(case, alpha, beta, f=spec.f, g=spec.g, c=sol.c)
            part_c = sol.delta == BRACKET_CONSTANT[case](alpha, beta) and closure_check(
                ops, params, None
            ).passed
            # (d) casimir is the closed-form multiple of the identity
            triple = build_new_rep_matrices(spec)
            lam = is_scalar_multiple_of_identity(casimir_matrix(triple, params))
            part_d = lam == CASIMIR_SCALAR[case](alpha, beta)
            # (e) decomposition: sizes {2, 1}, the right separated state, its label
            blocks = decompose_rep(triple)
            sizes = sorted(len(b.indices) for b in blocks)
            singles = [b for b in blocks if len(b.indices) == 1]
            part_e = (
                sizes == [1, 2]
                and len(singles) == 1
                and singles[0].indices[0] == SEPARATED_INDEX[case]
                and singles[0].c_label == SINGLETON_LABEL[case](alpha, beta)
            )
            if not (part_a and part_b and part_c and part_d and part_e):
                ok = False
                detail = (f"case {case.value} at alpha={alpha}, beta={beta}: "
                          f"a={part_a} b={part_b} c={part_c} d={part_d} e={part_e}")
    assert announce(2, "three solved cases on the intrinsic locus, 50 points", ok, detail)


def test_criterion_3_alpha_zero_branch():
    """20 random (beta, gamma) with beta != 0: the quadratic-branch solution
    zeroes the residuals and the triple closes on the module."""
    rng = random.Random(202)
    ok = True
    for trial in range(20):
        beta = rand_fraction(rng, nonzero=True)
        gamma = rand_fraction(rng)
        for case in CaseId:
            sol = solve_case(case, 0, beta, gamma)
            params = AlgebraParams(0, beta, gamma, sol.delta)
            spec = case_rep_spec(case, sol)
            residuals_zero = all(
                scalar_is_zero(r) for r in constraint_residuals(spec, params)
            )
            ops = build_case_realization(case, 0, beta, f=spec.f, g=spec.g, c=sol.c)
            on_space = closure_check(ops, params, V3).passed
            ok = ok and residuals_zero and on_space
    assert announce(3, "alpha = 0 closed forms, 20 points per case", ok)


def test_criterion_4_intrinsic_vs_on_space_separation():
    """20 random points off the intrinsic locus with nonnegative radicand:
    on-module closure holds while some intrinsic shift polynomial survives."""
    rng = random.Random(303)
    cases = list(CaseId)
    ok = True
    done = 0
    while done < 20:
        case = cases[done % 3]
        alpha = rand_fraction(rng, nonzero=True)
        beta = rand_fraction(rng)
        # dial the radicand directly: gamma is linear in it
        target = Fr(rng.choice([0, 1, 4, 9, 25, 2, 3, 5, 7, 11, 18, 49]))
        ra, rb, rc = case.data.radicand
        gamma = (target - ra * alpha**2 - rb * beta**2) / (rc * alpha)
        if gamma == case.intrinsic_gamma(alpha, beta):
            continue
        branch = rng.choice(["upper", "lower"])
        sol = solve_case(case, alpha, beta, gamma, branch)
        params = AlgebraParams(alpha, beta, gamma, sol.delta)
        ops = build_case_realization(case, alpha, beta, f=1, g=sol.fg, c=sol.c)
        on_space = closure_check(ops, params, V3)
        intrinsic = closure_check(ops, params, None)
        survives = any(not act.is_zero() for _, act in intrinsic.residuals)
        ok = ok and on_space.passed and not intrinsic.passed and survives
        done += 1
    assert announce(4, "off-locus points close on the module but not intrinsically", ok)


def _sympy_preserving_dimension(space: MonomialSpace, max_order: int) -> int:
    """Independent brute-force null-space count over the same term lattice."""
    exps = space.exponents
    lo, hi = -max_order, max(exps) + max_order
    keys = [(m, n) for n in range(max_order + 1) for m in range(lo, hi + 1)]
    rows = []
    for k in exps:
        images: dict[int, list[tuple[int, int]]] = {}
        for idx, (m, n) in enumerate(keys):
            weight = 1
            for i in range(n):
                weight *= k - i
            if weight:
                images.setdefault(k + m - n, []).append((idx, weight))
        for e, contribs in images.items():
            if e in exps:
                continue
            row = [0] * len(keys)
            for idx, weight in contribs:
                row[idx] = weight
            rows.append(row)
    if not rows:
        return len(keys)
    return len(keys) - sympy.Matrix(rows).rank()


def test_criterion_5_preserving_operator_count():
    """The stated count of preserving generators for {1, x, x^3} at order <= 3
    is eleven.  The full solution space of the windowed null-space problem has
    dimension 18: every one of the nine linear maps of the three-dimensional
    module is realized (all by operators of order <= 2, one of them with a
    1/x coefficient), and the window admits the nine independent annihilators
    x^(s+3) D^3 - x^(s+2) D^2 for shifts s in -5..3, each of which kills all
    three basis monomials.  The count of eleven tallies a particular
    independent generating list (the seven preserving monomials x^m D^n of
    orders 1..3 plus the four multi-term elementary ladder operators); no
    windowed solution space both contains the published ladder operators and
    has dimension eleven, so this check records the computed value and fails
    honestly.  Both the implementation and the independent brute-force oracle
    agree on 18.
    """
    computed = len(enumerate_preserving_operators(V3, 3))
    oracle = _sympy_preserving_dimension(V3, 3)
    stated = 11
    ok = computed == oracle == stated
    announce(
        5,
        "preserving-operator count for {1, x, x^3} at order <= 3",
        ok,
        f"computed {computed}, brute-force oracle {oracle}, stated {stated}",
    )
    assert computed == oracle, "main path and independent oracle disagree"
    assert computed == stated, (
        f"the windowed null space has dimension {computed}, not {stated}; "
        "the stated count tallies a generating list, not the solution space "
        "(see this test's docstring)"
    )


def _matrix_span(mats: list[Matrix]):
    rows: list[list[Fr]] = []
    n = mats[0].dimension

    def reduce(vec):
        vec = list(vec)
        for row in rows:
            piv = next(i for i, v in enumerate(row) if v)
            if vec[piv]:
                f = vec[piv]
                vec = [a - f * b for a, b in zip(vec, row)]
        return vec

    def add(mat):
        vec = reduce([mat.rows[i][j] for i in range(n) for j in range(n)])
        piv = next((i for i, v in enumerate(vec) if v), None)
        if piv is None:
            return False
        rows.append([v / vec[piv] for v in vec])
        return True

    def contains(mat):
        return all(v == 0 for v in reduce([mat.rows[i][j] for i in range(n) for j in range(n)]))

    return rows, add, contains


def test_criterion_6_ladders_generate_but_do_not_close():
    """The six ladder operators do not close under the bracket even allowing
    cubic diagonal corrections; adjoined to two case diagonals their matrices
    generate at least the traceless 3 x 3 algebra."""
    ladders = []
    for case in CaseId:
        _, jp, jm = build_case_realization(case, 1, 0, f=1, g=1)
        ladders.extend([jp, jm])
    op_report = lie_closure_probe(ladders, V3)
    not_closed = not op_report.closed_as_operators

    with_diagonals = list(ladders)
    for case in (CaseId.CASE1, CaseId.CASE2):
        j0, _, _ = build_case_realization(case, 1, 0, f=1, g=1)
        with_diagonals.append(j0)
    full_report = lie_closure_probe(with_diagonals, V3)
    dim_ok = full_report.matrix_lie_span_dimension >= 8

    # saturate the matrix span in-test and check sl(3) containment directly
    mats = [op.matrix_on_space(V3) for op in with_diagonals]
    rows, add, contains = _matrix_span(mats)
    basis = []
    for m in mats:
        if add(m):
            basis.append(m)
    for _ in range(4):
        grew = False
        snapshot = list(basis)
        for a, b in product(snapshot, snapshot):
            br = (a @ b) - (b @ a)
            if add(br):
                basis.append(br)
                grew = True
        if not grew:
            break
    sl3 = []
    for i in range(3):
        for j in range(3):
            if i != j:
                sl3.append(Matrix([[int(r == i and cix == j) for cix in range(3)]
                                   for r in range(3)]))
    sl3.append(Matrix.diagonal([1, -1, 0]))
    sl3.append(Matrix.diagonal([0, 1, -1]))
    traceless_contained = all(contains(m) for m in sl3)

    ok = not_closed and dim_ok and traceless_contained
    assert announce(
        6,
        "six ladders: no operator closure; matrices span >= sl(3)",
        ok,
        f"matrix span dimension {full_report.matrix_lie_span_dimension}",
    )


def _random_spec(rng) -> RepSpec:
    two_j = rng.choice([1, 2, 2, 3, 4])
    q = rng.randint(1, two_j)
    two_m1 = rng.choice(range(-two_j, two_j - 2 * q + 1, 2))
    return RepSpec(
        two_j=two_j, q=q, two_m1=two_m1,
        a=rand_fraction(rng), c=rand_fraction(rng),
        f=rand_fraction(rng), g=rand_fraction(rng),
    )


def test_criterion_7_equivalence_oracle():
    """On 100 mixed samples the scalar constraint residuals vanish exactly
    when the matrix relation residuals do."""
    rng = random.Random(707)
    samples = []
    # satisfying: solved cases with assorted product splits
    for case in CaseId:
        for _ in range(5):
            alpha = rand_fraction(rng, nonzero=True)
            beta = rand_fraction(rng)
            intr = intrinsic_gamma_and_product(case, alpha, beta)
            sol = solve_case(case, alpha, beta, intr.gamma, intr.branch_for(alpha))
            f = rand_fraction(rng, nonzero=True)
            samples.append(
                (case_rep_spec(case, sol, f=f),
                 AlgebraParams(alpha, beta, intr.gamma, sol.delta))
            )
    # satisfying: two-dimensional ladders closed by the choice of delta
    for _ in range(15):
        a, c = rand_fraction(rng), rand_fraction(rng)
        alpha, beta, gamma = (rand_fraction(rng) for _ in range(3))
        probe = RepSpec(two_j=1, q=1, two_m1=-1, a=a, c=c, f=1, g=1)
        poly = lambda t: alpha * t**3 + beta * t**2 + gamma * t
        h_hi, h_lo = probe.diagonal_value(Fr(1, 2)), probe.diagonal_value(Fr(-1, 2))
        delta = -(poly(h_hi) + poly(h_lo)) / 2
        fg = poly(h_hi) + delta
        samples.append(
            (RepSpec(two_j=1, q=1, two_m1=-1, a=a, c=c, f=1, g=fg),
             AlgebraParams(alpha, beta, gamma, delta))
        )
    # generic, almost surely violating
    while len(samples) < 100:
        samples.append(
            (_random_spec(rng),
             AlgebraParams(*(rand_fraction(rng) for _ in range(4))))
        )
    ok = True
    satisfied = violated = 0
    for spec, params in samples:
        by_scalars = all(scalar_is_zero(r) for r in constraint_residuals(spec, params))
        by_matrices = check_deformed_relations(
            build_new_rep_matrices(spec), params
        ).all_zero
        ok = ok and (by_scalars == by_matrices)
        satisfied += by_scalars
        violated += not by_scalars
    ok = ok and satisfied >= 20 and violated >= 20
    assert announce(
        7, "constraint residuals match matrix relations on 100 mixed samples",
        ok, f"{satisfied} satisfying / {violated} violating",
    )


def test_criterion_8_radicand_collapse():
    """On the intrinsic locus the case radicands collapse to perfect squares
    (9/4, 9, 243/4 times alpha squared) and the solved c is always rational."""
    rng = random.Random(808)
    ok = True
    for trial in range(20):
        alpha = rand_fraction(rng, nonzero=True)
        beta = rand_fraction(rng)
        for case in CaseId:
            gamma = case.intrinsic_gamma(alpha, beta)
            ra, rb, rc = case.data.radicand
            radicand = ra * alpha**2 + rb * beta**2 + rc * alpha * gamma
            collapse_ok = radicand == RADICAND_COLLAPSE[case](alpha)
            sol = solve_case(case, alpha, beta, gamma, case.valid_branch(alpha))
            ok = ok and collapse_ok and isinstance(sol.c, Fr)
    assert announce(8, "intrinsic radicands are perfect squares, c rational", ok)
